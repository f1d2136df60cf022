#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lefcalc/category.hpp"
#include "lefcalc/error.hpp"
#include "lefcalc/identity.hpp"
#include "lefcalc/ladder.hpp"

namespace lefcalc {

/// Tensor products of primitive components a1[i1] (x) a2[i2] laid out on a grid.
/// Positions are distances from the center, so on the left side cell (k1, k2)
/// stands for a1[-k1] (x) a2[-k2]. Each cell lies on the diagonal j_{+-(k1+k2+1)}.
struct PrimitiveGrid {
  struct Cell {
    RankExpr rank;
    std::string label;
    friend bool operator==(const Cell&, const Cell&) = default;
  };

  Side side = Side::right;
  int rows = 0;  // m1
  int cols = 0;  // m2
  std::map<std::pair<int, int>, Cell> cells;

  /// Signed index i of the diagonal j_i containing cell (k1, k2).
  int diagonal(int k1, int k2) const { return side == Side::right ? k1 + k2 + 1 : -(k1 + k2 + 1); }

  const Cell* cell(int k1, int k2) const {
    auto it = cells.find({k1, k2});
    return it == cells.end() ? nullptr : &it->second;
  }

  /// Total rank of the diagonal j_i at distance d = |i| from the center.
  RankExpr diagonal_rank(int d) const {
    RankExpr r;
    for (const auto& [pos, c] : cells)
      if (pos.first + pos.second + 1 == d) r += c.rank;
    return r;
  }

  friend bool operator==(const PrimitiveGrid&, const PrimitiveGrid&) = default;
};

namespace detail {

inline std::string primitive_label(const LefschetzLadder& l, Side side, int k, int factor) {
  const auto& blocks = l.blocks(side);
  if (auto it = blocks.find(k); it != blocks.end()) {
    std::string s = "<";
    for (std::size_t i = 0; i < it->second.size(); ++i) s += (i ? "," : "") + it->second[i].label;
    return s + ">";
  }
  int idx = side == Side::right ? k : -k;
  return "a" + std::to_string(factor) + "[" + std::to_string(idx) + "]";
}

inline PrimitiveGrid make_grid(const LefschetzLadder& l1, const LefschetzLadder& l2, Side side) {
  PrimitiveGrid g;
  g.side = side;
  g.rows = l1.length();
  g.cols = l2.length();
  const auto& p1 = l1.primitives(side);
  const auto& p2 = l2.primitives(side);
  for (int a = 0; a < g.rows; ++a)
    for (int b = 0; b < g.cols; ++b) {
      Rank r = p1[static_cast<std::size_t>(a)] * p2[static_cast<std::size_t>(b)];
      g.cells[{a, b}] = {r, primitive_label(l1, side, a, 1) + " (x) " + primitive_label(l2, side, b, 2)};
    }
  return g;
}

inline bool fully_decorated(const LefschetzLadder& l, Side side) {
  const auto& prims = l.primitives(side);
  const auto& blocks = l.blocks(side);
  for (std::size_t k = 0; k < prims.size(); ++k)
    if (prims[k] != 0 && !blocks.contains(static_cast<int>(k))) return false;
  return true;
}

// Product blocks for the join when both factors carry blocks on `side`.
inline BlockMap join_blocks(const LefschetzLadder& l1, const LefschetzLadder& l2, Side side) {
  BlockMap out;
  if (!fully_decorated(l1, side) || !fully_decorated(l2, side)) return out;
  for (const auto& [a, b1s] : l1.blocks(side))
    for (const auto& [b, b2s] : l2.blocks(side))
      for (const auto& x : b1s)
        for (const auto& y : b2s) out[a + b + 1].push_back({x.label + "(x)" + y.label, x.rank * y.rank});
  return out;
}

inline Rank at(const std::vector<Rank>& v, int k) {
  return k >= 0 && k < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(k)] : 0;
}

// Rank of the alternate presentation of J_i (d = |i| >= 1) that walks the
// primitives of the second factor: < A1_{d-1} (x) a2_0, ..., A1_1 (x) a2_{d-2},
// A1_0 (x) A2_{d-1} > when d <= m2, and < A1_{d-1} (x) a2_0, ..., A1_{d-m2} (x)
// a2_{m2-1} > otherwise. Swapping the factors gives the other presentation.
inline Rank alternate_rank(const std::vector<Rank>& p1, const std::vector<Rank>& p2, int d) {
  auto r1 = suffix_sums(p1);
  auto r2 = suffix_sums(p2);
  int m2 = static_cast<int>(p2.size());
  Rank total = 0;
  if (d <= m2) {
    for (int t = 0; t <= d - 2; ++t) total += at(r1, d - 1 - t) * at(p2, t);
    total += at(r1, 0) * at(r2, d - 1);
  } else {
    for (int t = 0; t <= m2 - 1; ++t) total += at(r1, d - 1 - t) * at(p2, t);
  }
  return total;
}

}  // namespace detail

/// Grids and diagonal ranks j_i of the join of two ladders.
struct JoinPrimitives {
  PrimitiveGrid right_grid;
  PrimitiveGrid left_grid;
  std::vector<Rank> right_diagonals;  // rank j_0, ..., j_{m-1}
  std::vector<Rank> left_diagonals;   // rank j_0, j_{-1}, ..., j_{1-m}
};

inline JoinPrimitives join_primitives(const LefschetzLadder& l1, const LefschetzLadder& l2) {
  require_valid(l1);
  require_valid(l2);
  JoinPrimitives out;
  out.right_grid = detail::make_grid(l1, l2, Side::right);
  out.left_grid = detail::make_grid(l1, l2, Side::left);
  const int m = l1.length() + l2.length();
  for (int d = 0; d < m; ++d) {
    out.right_diagonals.push_back(*out.right_grid.diagonal_rank(d).as_constant());
    out.left_diagonals.push_back(*out.left_grid.diagonal_rank(d).as_constant());
  }
  return out;
}

struct JoinResult {
  LefschetzLadder ladder;
  PrimitiveGrid grid;
  PrimitiveGrid left_grid;
  SodPresentation resolved_presentation;
  std::vector<IdentityRecord> diagnostics;
};

inline std::string join_name(const std::string& a, const std::string& b) { return "J(" + a + "," + b + ")"; }

/// Ladder of the categorical join only (no diagnostics).
inline LefschetzLadder join_ladder(const LefschetzLadder& l1, const LefschetzLadder& l2) {
  auto prims = join_primitives(l1, l2);
  LefschetzLadder j;
  j.name = join_name(l1.name, l2.name);
  j.ambient_rank = l1.ambient_rank + l2.ambient_rank;
  j.right = std::move(prims.right_diagonals);
  j.left = std::move(prims.left_diagonals);
  j.right_blocks = detail::join_blocks(l1, l2, Side::right);
  j.left_blocks = detail::join_blocks(l1, l2, Side::left);
  j.strong = {l1.strong.right && l2.strong.right, l1.strong.left && l2.strong.left};
  return j;
}

/// <J, eps1!(A1 (x) A2_i(iH2)) for 1 <= i < m2, eps2!(A1_i(iH1) (x) A2) for 1 <= i < m1>.
/// Ranks are plain component ranks; block weights are not applied here.
inline SodPresentation resolved_join_presentation(const LefschetzLadder& l1, const LefschetzLadder& l2) {
  require_valid(l1);
  require_valid(l2);
  const auto j = join_ladder(l1, l2);
  const auto r1 = suffix_sums(l1.right);
  const auto r2 = suffix_sums(l2.right);
  auto whole = [](const LefschetzLadder& l) { return CategoryExpr::atom({l.name, total_rank(l)}); };
  auto comp = [](const LefschetzLadder& l, const std::vector<Rank>& r, int i) {
    return CategoryExpr::atom({l.name + "_" + std::to_string(i), r[static_cast<std::size_t>(i)]});
  };

  SodPresentation p;
  p.ambient = "Jtilde(" + l1.name + "," + l2.name + ")";
  p.components.push_back({whole(j), {}, "J"});
  for (int i = 1; i < l2.length(); ++i)
    p.components.push_back({CategoryExpr::tensor({whole(l1), comp(l2, r2, i)}), twist("H2", i), "eps1!"});
  for (int i = 1; i < l1.length(); ++i)
    p.components.push_back({CategoryExpr::tensor({comp(l1, r1, i), whole(l2)}), twist("H1", i), "eps2!"});
  return p;
}

/// Rank of J_i computed from the grid tail and from both alternate presentations.
inline IdentityRecord ji_alternate_check(const LefschetzLadder& l1, const LefschetzLadder& l2, int i) {
  require_valid(l1);
  require_valid(l2);
  const int m = l1.length() + l2.length();
  const int d = i < 0 ? -i : i;
  if (d < 1 || d > m - 1)
    throw InvalidInput("ji_alternate_check: index " + std::to_string(i) + " outside 1 <= |i| <= " +
                       std::to_string(m - 1));
  const Side side = i > 0 ? Side::right : Side::left;
  const auto grid = detail::make_grid(l1, l2, side);
  RankExpr tail;
  for (const auto& [pos, c] : grid.cells)
    if (pos.first + pos.second >= d - 1) tail += c.rank;
  const auto& p1 = l1.primitives(side);
  const auto& p2 = l2.primitives(side);
  const Rank via_second = detail::alternate_rank(p1, p2, d);
  const Rank via_first = detail::alternate_rank(p2, p1, d);
  IdentityRecord rec;
  rec.name = "rank J_" + std::to_string(i) + ": grid tail = alternate presentations";
  rec.lhs = tail.str();
  rec.rhs = via_second == via_first ? show(via_second) : show(via_second) + " / " + show(via_first);
  rec.pass = tail == RankExpr(via_second) && via_second == via_first;
  return rec;
}

inline std::vector<IdentityRecord> join_identities(const LefschetzLadder& l1, const LefschetzLadder& l2,
                                                   const LefschetzLadder& j, const SodPresentation& resolved) {
  std::vector<IdentityRecord> out;
  out.push_back(check_equal("length(J) = length(A1) + length(A2)", j.length(), l1.length() + l2.length()));
  out.push_back(check_equal("J moderate iff A1 or A2 moderate", is_moderate(j), is_moderate(l1) || is_moderate(l2)));
  for (Side side : {Side::right, Side::left}) {
    const std::string tag = std::string(" (") + to_string(side) + ")";
    const auto r1 = suffix_sums(l1.primitives(side));
    const auto r2 = suffix_sums(l2.primitives(side));
    const auto rj = suffix_sums(j.primitives(side));
    Rank diag_sum = 0;
    for (Rank p : j.primitives(side)) diag_sum += p;
    out.push_back(check_equal("sum of rank j_i = r1_0 * r2_0" + tag, diag_sum, r1.front() * r2.front()));

    const Rank t1 = detail::weighted_total(l1.primitives(side));
    const Rank t2 = detail::weighted_total(l2.primitives(side));
    Rank s1 = 0, s2 = 0;
    for (std::size_t k = 1; k < r1.size(); ++k) s1 += r1[k];
    for (std::size_t k = 1; k < r2.size(); ++k) s2 += r2[k];
    Rank comp_sum = 0;
    for (Rank r : rj) comp_sum += r;
    out.push_back(check_equal("total_rank(J) = 2 r1 r2 - r1 S2 - r2 S1" + tag, comp_sum,
                              2 * t1 * t2 - t1 * s2 - t2 * s1));
  }
  out.push_back(check_equal("sum of rank J_i = total_rank(J)", [&] {
    Rank s = 0;
    for (Rank r : suffix_sums(j.right)) s += r;
    return s;
  }(), total_rank(j)));
  out.push_back(check_equal("rank(resolved join) = 2 r1 r2", rank_of(resolved),
                            RankExpr(2 * total_rank(l1) * total_rank(l2))));
  const int m = j.length();
  for (int i = 1; i < m; ++i) {
    out.push_back(ji_alternate_check(l1, l2, i));
    out.push_back(ji_alternate_check(l1, l2, -i));
  }
  return out;
}

/// Categorical join over P(V1 + V2) with its diagnostics.
inline JoinResult categorical_join(const LefschetzLadder& l1, const LefschetzLadder& l2) {
  JoinResult res;
  res.ladder = join_ladder(l1, l2);
  auto prims = join_primitives(l1, l2);
  res.grid = std::move(prims.right_grid);
  res.left_grid = std::move(prims.left_grid);
  res.resolved_presentation = resolved_join_presentation(l1, l2);
  res.diagnostics = join_identities(l1, l2, res.ladder, res.resolved_presentation);
  require_valid(res.ladder);
  return res;
}

/// Left fold J(J(...J(A1, A2)...), A_l).
inline JoinResult iterated_join(const std::vector<LefschetzLadder>& ladders) {
  if (ladders.size() < 2) throw InvalidInput("iterated_join needs at least two ladders");
  JoinResult acc = categorical_join(ladders[0], ladders[1]);
  int expected_length = ladders[0].length() + ladders[1].length();
  for (std::size_t k = 2; k < ladders.size(); ++k) {
    auto next = categorical_join(acc.ladder, ladders[k]);
    next.diagnostics.insert(next.diagnostics.begin(), acc.diagnostics.begin(), acc.diagnostics.end());
    acc = std::move(next);
    expected_length += ladders[k].length();
  }
  acc.diagnostics.push_back(check_equal("length(iterated join) = sum of lengths", acc.ladder.length(), expected_length));
  return acc;
}

}  // namespace lefcalc
