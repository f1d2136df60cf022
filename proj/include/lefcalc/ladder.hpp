#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "lefcalc/error.hpp"
#include "lefcalc/partition.hpp"
#include "lefcalc/rank_expr.hpp"

namespace lefcalc {

enum class Side { right, left };

inline const char* to_string(Side s) { return s == Side::right ? "right" : "left"; }

/// Atomic generator decorating a primitive component, e.g. "O", "U^v", "Cl0".
struct Block {
  std::string label;
  Rank rank = 1;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Primitive position on one side -> blocks generating that primitive component.
/// On the left side position k stands for the primitive of index -k.
using BlockMap = std::map<int, std::vector<Block>>;

struct Strongness {
  bool right = true;
  bool left = true;

  friend bool operator==(const Strongness&, const Strongness&) = default;
};

/// Numerical shadow of a Lefschetz category over P(V).
///
/// `right[i]` is the rank of the right primitive component a_i (i = 0..m-1) and
/// `left[k]` the rank of the left primitive a_{-k} (k = 0..m-1), so both vectors
/// are indexed by distance from the center.
struct LefschetzLadder {
  std::string name;
  Rank ambient_rank = 1;
  std::vector<Rank> right;
  std::vector<Rank> left;
  BlockMap right_blocks;
  BlockMap left_blocks;
  Strongness strong;

  int length() const noexcept { return static_cast<int>(right.size()); }

  const std::vector<Rank>& primitives(Side s) const noexcept { return s == Side::right ? right : left; }
  const BlockMap& blocks(Side s) const noexcept { return s == Side::right ? right_blocks : left_blocks; }

  /// Same shape: ambient rank and both primitive sequences.
  bool same_shape(const LefschetzLadder& o) const {
    return ambient_rank == o.ambient_rank && right == o.right && left == o.left;
  }

  friend bool operator==(const LefschetzLadder&, const LefschetzLadder&) = default;
};

/// Builds a ladder with left primitives mirroring the right ones.
inline LefschetzLadder make_symmetric_ladder(std::string name, Rank ambient_rank, std::vector<Rank> right) {
  LefschetzLadder l;
  l.name = std::move(name);
  l.ambient_rank = ambient_rank;
  l.left = right;
  l.right = std::move(right);
  return l;
}

/// Builds a ladder from its left primitives listed as q_{1-m}, ..., q_0 and mirrors
/// them onto the right side.
inline LefschetzLadder make_left_ladder(std::string name, Rank ambient_rank, std::vector<Rank> left_by_index) {
  std::vector<Rank> left(left_by_index.rbegin(), left_by_index.rend());
  return make_symmetric_ladder(std::move(name), ambient_rank, std::move(left));
}

/// Fills the left side from the right one (or vice versa) when it is empty.
inline LefschetzLadder symmetric_completion(LefschetzLadder l) {
  if (l.left.empty()) {
    l.left = l.right;
    if (l.left_blocks.empty()) l.left_blocks = l.right_blocks;
  } else if (l.right.empty()) {
    l.right = l.left;
    if (l.right_blocks.empty()) l.right_blocks = l.left_blocks;
  }
  return l;
}

/// Heights of the Lefschetz components from the primitive ranks: suffix sums.
inline std::vector<Rank> suffix_sums(const std::vector<Rank>& prims) {
  std::vector<Rank> out(prims.size());
  Rank acc = 0;
  for (std::size_t i = prims.size(); i-- > 0;) {
    acc += prims[i];
    out[i] = acc;
  }
  return out;
}

struct ValidationReport {
  std::vector<std::string> violations;
  bool moderate = false;
  Strongness strong;
  Rank total_rank_right = 0;
  Rank total_rank_left = 0;

  bool valid() const noexcept { return violations.empty(); }
};

namespace detail {

inline void check_side(const LefschetzLadder& l, Side side, std::vector<std::string>& out) {
  const auto& prims = l.primitives(side);
  const std::string tag = to_string(side);
  for (std::size_t i = 0; i < prims.size(); ++i)
    if (prims[i] < 0)
      out.push_back(tag + " primitive " + std::to_string(i) + " is negative (" + std::to_string(prims[i]) + ")");
  if (!prims.empty() && prims.back() <= 0)
    out.push_back(tag + " primitive at distance " + std::to_string(prims.size() - 1) +
                  " must be positive (length is exact)");
  for (const auto& [pos, blocks] : l.blocks(side)) {
    if (pos < 0 || pos >= static_cast<int>(prims.size())) {
      out.push_back(tag + " blocks at position " + std::to_string(pos) + " lie outside the ladder");
      continue;
    }
    if (static_cast<Rank>(blocks.size()) != prims[static_cast<std::size_t>(pos)])
      out.push_back(tag + " blocks at position " + std::to_string(pos) + " count " +
                    std::to_string(blocks.size()) + " but the primitive rank is " +
                    std::to_string(prims[static_cast<std::size_t>(pos)]));
    for (const auto& b : blocks) {
      if (b.label.empty()) out.push_back(tag + " block at position " + std::to_string(pos) + " has an empty label");
      if (b.rank < 0) out.push_back(tag + " block '" + b.label + "' has negative rank");
    }
  }
}

inline Rank weighted_total(const std::vector<Rank>& prims) {
  Rank t = 0;
  for (std::size_t i = 0; i < prims.size(); ++i) t += static_cast<Rank>(i + 1) * prims[i];
  return t;
}

}  // namespace detail

/// Lists every violated invariant; an empty list means the ladder is valid.
inline ValidationReport validate_ladder(const LefschetzLadder& l) {
  ValidationReport rep;
  rep.strong = l.strong;
  if (l.ambient_rank < 1) rep.violations.push_back("ambient_rank must be >= 1");
  if (l.right.empty()) rep.violations.push_back("length must be >= 1 (no right primitives)");
  if (l.left.size() != l.right.size())
    rep.violations.push_back("left and right sides have different lengths (" + std::to_string(l.left.size()) +
                             " vs " + std::to_string(l.right.size()) + ")");
  detail::check_side(l, Side::right, rep.violations);
  detail::check_side(l, Side::left, rep.violations);
  if (!l.right.empty() && !l.left.empty() && l.right.front() != l.left.front())
    rep.violations.push_back("q0 != p0 (" + std::to_string(l.left.front()) + " vs " +
                             std::to_string(l.right.front()) + ")");
  // A_0 is one category seen from both sides
  Rank center_right = 0, center_left = 0;
  for (Rank x : l.right) center_right += x;
  for (Rank x : l.left) center_left += x;
  if (center_right != center_left)
    rep.violations.push_back("left/right center ranks differ (" + std::to_string(center_right) + " vs " +
                             std::to_string(center_left) + ")");
  rep.total_rank_right = detail::weighted_total(l.right);
  rep.total_rank_left = detail::weighted_total(l.left);
  if (rep.total_rank_right != rep.total_rank_left)
    rep.violations.push_back("left/right total ranks differ (" + std::to_string(rep.total_rank_right) + " vs " +
                             std::to_string(rep.total_rank_left) + ")");
  rep.moderate = l.length() < l.ambient_rank;
  return rep;
}

inline void require_valid(const LefschetzLadder& l) {
  auto rep = validate_ladder(l);
  if (rep.valid()) return;
  std::string msg = "invalid ladder '" + l.name + "': ";
  for (std::size_t i = 0; i < rep.violations.size(); ++i) msg += (i ? "; " : "") + rep.violations[i];
  throw InvalidInput(msg);
}

inline bool is_moderate(const LefschetzLadder& l) { return l.length() < l.ambient_rank; }

/// (r_0, ..., r_{m-1}) on the right; (r_0, r_{-1}, ..., r_{1-m}) on the left.
inline std::vector<Rank> component_ranks(const LefschetzLadder& l, Side side) {
  require_valid(l);
  return suffix_sums(l.primitives(side));
}

/// Left component ranks listed by index, r_{1-m}, ..., r_0.
inline std::vector<Rank> left_heights_by_index(const LefschetzLadder& l) {
  auto r = component_ranks(l, Side::left);
  return {r.rbegin(), r.rend()};
}

inline Rank total_rank(const LefschetzLadder& l) {
  require_valid(l);
  return detail::weighted_total(l.right);
}

inline Rank center_rank(const LefschetzLadder& l) {
  require_valid(l);
  return std::accumulate(l.right.begin(), l.right.end(), Rank{0});
}

/// Young-diagram view of the component ranks: lambda_k = #{ i : r_i >= k }.
inline Partition shape_rows(const LefschetzLadder& l, Side side) {
  return transpose(component_ranks(l, side));
}

/// Number of i >= 0 with A_i = A_0, decided structurally: p_j = 0 for all j < i.
inline int count_components_equal_to_center(const LefschetzLadder& l) {
  require_valid(l);
  int count = 0;
  for (Rank p : l.right) {
    ++count;
    if (p != 0) break;
  }
  return count;
}

/// Reinterprets a ladder over a larger ambient rank (V inside V + O^k).
inline LefschetzLadder embed(LefschetzLadder l, Rank new_ambient_rank) {
  require_valid(l);
  if (new_ambient_rank < l.ambient_rank)
    throw InvalidInput("embed: new ambient rank " + std::to_string(new_ambient_rank) + " is smaller than " +
                       std::to_string(l.ambient_rank));
  l.ambient_rank = new_ambient_rank;
  return l;
}

/// Standard Lefschetz structure on P(W) inside P(V), rank W = m, rank V = N.
inline LefschetzLadder proj_space(int m, Rank n) {
  if (m < 1) throw InvalidInput("proj_space: m must be >= 1");
  if (n < m) throw InvalidInput("proj_space: need m <= N");
  std::vector<Rank> p(static_cast<std::size_t>(m), 0);
  p.back() = 1;
  return make_symmetric_ladder("proj_space(" + std::to_string(m) + "," + std::to_string(n) + ")", n, std::move(p));
}

}  // namespace lefcalc
