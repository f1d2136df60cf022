#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "lefcalc/error.hpp"
#include "lefcalc/ladder.hpp"
#include "lefcalc/rank_expr.hpp"

namespace lefcalc {

/// Ladders addressable by name from LadderSuffix terms.
using LadderRegistry = std::map<std::string, LefschetzLadder>;

/// Symbolic category term. Only its rank and printed form are ever inspected.
class CategoryExpr {
 public:
  struct Atom {
    Block block;
    friend bool operator==(const Atom&, const Atom&) = default;
  };
  struct Tensor {
    std::vector<CategoryExpr> factors;
    friend bool operator==(const Tensor&, const Tensor&) = default;
  };
  /// A_i of a ladder: the right component for start >= 0, the left one for start <= 0.
  struct LadderSuffix {
    std::string ladder_id;
    Side side = Side::right;
    int start = 0;
    friend bool operator==(const LadderSuffix&, const LadderSuffix&) = default;
  };
  struct Unknown {
    std::string name;
    friend bool operator==(const Unknown&, const Unknown&) = default;
  };
  struct Zero {
    friend bool operator==(const Zero&, const Zero&) = default;
  };

  using Node = std::variant<Zero, Atom, Tensor, LadderSuffix, Unknown>;

  CategoryExpr() = default;

  static CategoryExpr zero() { return CategoryExpr(Zero{}); }
  static CategoryExpr atom(Block b) { return CategoryExpr(Atom{std::move(b)}); }
  static CategoryExpr unknown(std::string name) { return CategoryExpr(Unknown{std::move(name)}); }

  /// Flattens nested tensors; a Zero factor makes the product Zero and a single
  /// factor is returned as is.
  static CategoryExpr tensor(const std::vector<CategoryExpr>& factors) {
    std::vector<CategoryExpr> flat;
    for (const auto& f : factors) {
      if (f.is_zero()) return zero();
      if (const auto* t = std::get_if<Tensor>(&f.node_))
        flat.insert(flat.end(), t->factors.begin(), t->factors.end());
      else
        flat.push_back(f);
    }
    if (flat.empty()) throw InvalidInput("tensor of no factors");
    if (flat.size() == 1) return flat.front();
    return CategoryExpr(Tensor{std::move(flat)});
  }

  /// Component A_start of `ladder`; normalizes to Zero past the end of the ladder.
  static CategoryExpr suffix(const LefschetzLadder& ladder, Side side, int start) {
    if (side == Side::right ? start < 0 : start > 0)
      throw InvalidInput("component index " + std::to_string(start) + " on the wrong side of the center");
    int dist = side == Side::right ? start : -start;
    if (dist >= ladder.length()) return zero();
    return CategoryExpr(LadderSuffix{ladder.name, side, start});
  }

  /// Unchecked reference, resolved only by rank_of.
  static CategoryExpr suffix_ref(std::string ladder_id, Side side, int start) {
    return CategoryExpr(LadderSuffix{std::move(ladder_id), side, start});
  }

  const Node& node() const noexcept { return node_; }
  bool is_zero() const noexcept { return std::holds_alternative<Zero>(node_); }

  std::string str() const {
    struct Printer {
      std::string operator()(const Zero&) const { return "0"; }
      std::string operator()(const Atom& a) const { return a.block.label; }
      std::string operator()(const Tensor& t) const {
        std::string s;
        for (std::size_t i = 0; i < t.factors.size(); ++i) s += (i ? " (x) " : "") + t.factors[i].str();
        return s;
      }
      std::string operator()(const LadderSuffix& l) const {
        return l.ladder_id + "_" + std::to_string(l.start);
      }
      std::string operator()(const Unknown& u) const { return u.name; }
    };
    return std::visit(Printer{}, node_);
  }

  friend bool operator==(const CategoryExpr&, const CategoryExpr&) = default;

 private:
  explicit CategoryExpr(Node n) : node_(std::move(n)) {}
  Node node_{Zero{}};
};

/// Rank of the primitive at `pos` on `side`: the sum of its block ranks when the
/// ladder is decorated there, else the primitive rank itself.
inline Rank decorated_primitive_rank(const LefschetzLadder& l, Side side, int pos) {
  const auto& blocks = l.blocks(side);
  if (auto it = blocks.find(pos); it != blocks.end()) {
    Rank r = 0;
    for (const auto& b : it->second) r += b.rank;
    return r;
  }
  return l.primitives(side)[static_cast<std::size_t>(pos)];
}

/// Additive over semiorthogonal pieces, multiplicative over tensor products.
inline RankExpr rank_of(const CategoryExpr& e, const LadderRegistry& registry = {}) {
  struct Visitor {
    const LadderRegistry& reg;
    RankExpr operator()(const CategoryExpr::Zero&) const { return 0; }
    RankExpr operator()(const CategoryExpr::Atom& a) const { return a.block.rank; }
    RankExpr operator()(const CategoryExpr::Tensor& t) const {
      RankExpr acc = 1;
      for (const auto& f : t.factors) acc = acc * rank_of(f, reg);
      return acc;
    }
    RankExpr operator()(const CategoryExpr::LadderSuffix& s) const {
      auto it = reg.find(s.ladder_id);
      if (it == reg.end()) throw UnresolvedReference(s.ladder_id);
      const auto& l = it->second;
      int dist = s.side == Side::right ? s.start : -s.start;
      if (dist < 0) throw InvalidInput("component index on the wrong side of the center");
      Rank r = 0;
      for (int k = dist; k < l.length(); ++k) r += decorated_primitive_rank(l, s.side, k);
      return r;
    }
    RankExpr operator()(const CategoryExpr::Unknown& u) const { return RankExpr::unknown(u.name); }
  };
  return std::visit(Visitor{registry}, e.node());
}

struct SodComponent {
  CategoryExpr expr;
  TwistVector twist;
  std::string origin;

  friend bool operator==(const SodComponent&, const SodComponent&) = default;
};

/// Ordered semiorthogonal decomposition <C_1, ..., C_k>.
struct SodPresentation {
  std::vector<SodComponent> components;
  std::string ambient;

  std::size_t size() const noexcept { return components.size(); }

  friend bool operator==(const SodPresentation&, const SodPresentation&) = default;
};

inline RankExpr rank_of(const SodPresentation& p, const LadderRegistry& registry = {}) {
  RankExpr total;
  for (const auto& c : p.components) total += rank_of(c.expr, registry);
  return total;
}

inline SodPresentation concat(SodPresentation a, const SodPresentation& b) {
  a.components.insert(a.components.end(), b.components.begin(), b.components.end());
  return a;
}

/// Components are shape-equal iff their ranks and twists agree.
inline bool shape_equal(const SodComponent& a, const SodComponent& b, const LadderRegistry& reg_a,
                        const LadderRegistry& reg_b) {
  return a.twist == b.twist && rank_of(a.expr, reg_a) == rank_of(b.expr, reg_b);
}

inline bool shape_equal(const SodPresentation& a, const SodPresentation& b, const LadderRegistry& reg_a,
                        const LadderRegistry& reg_b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!shape_equal(a.components[i], b.components[i], reg_a, reg_b)) return false;
  return true;
}

/// All pairwise products <A_i (x) B_j>, row-major; twists add.
inline SodPresentation sod_tensor(const SodPresentation& a, const SodPresentation& b) {
  SodPresentation out;
  if (!a.ambient.empty() || !b.ambient.empty()) out.ambient = a.ambient + " x " + b.ambient;
  out.components.reserve(a.size() * b.size());
  for (const auto& ca : a.components)
    for (const auto& cb : b.components)
      out.components.push_back({CategoryExpr::tensor({ca.expr, cb.expr}), ca.twist + cb.twist,
                                ca.origin.empty() && cb.origin.empty() ? "" : ca.origin + "(x)" + cb.origin});
  return out;
}

/// Presentation <a_0, ..., a_{m-1}> of the center of a ladder by its right primitives.
inline SodPresentation center_by_primitives(const LefschetzLadder& l) {
  SodPresentation p;
  p.ambient = l.name + "_0";
  for (int i = 0; i < l.length(); ++i) {
    CategoryExpr e;
    if (auto it = l.right_blocks.find(i); it != l.right_blocks.end() && it->second.size() == 1)
      e = CategoryExpr::atom(it->second.front());
    else
      e = CategoryExpr::atom({l.name + ".a" + std::to_string(i), decorated_primitive_rank(l, Side::right, i)});
    if (rank_of(e).is_zero()) e = CategoryExpr::zero();
    p.components.push_back({e, {}, "primitive"});
  }
  return p;
}

}  // namespace lefcalc
