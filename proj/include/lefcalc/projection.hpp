#pragma once

#include <string>
#include <vector>

#include "lefcalc/error.hpp"
#include "lefcalc/hpd.hpp"
#include "lefcalc/identity.hpp"
#include "lefcalc/join.hpp"
#include "lefcalc/ladder.hpp"
#include "lefcalc/rank_expr.hpp"

namespace lefcalc {

/// Lefschetz structure of a linear projection Bl_P(K)(A) over P(V), with the
/// rank u of the base change A_P(K) left as an unknown.
struct ProjectedLadder {
  std::string name;
  LefschetzLadder source;
  Rank source_rank = 0;  // rank of Vtilde
  Rank target_rank = 0;  // rank of V
  std::string unknown;
  std::vector<RankExpr> right;  // component ranks Bl_0, ..., Bl_{N_V - 2}
  std::vector<RankExpr> left;   // Bl_0, Bl_{-1}, ...
  Strongness strong;

  int length() const noexcept { return static_cast<int>(right.size()); }

  RankExpr total_rank() const {
    RankExpr t;
    for (const auto& r : right) t += r;
    return t;
  }

  /// Primitive pieces Bl_i / Bl_{i+1} on one side.
  std::vector<RankExpr> primitives(Side side) const {
    const auto& c = side == Side::right ? right : left;
    std::vector<RankExpr> out;
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back(i + 1 < c.size() ? c[i] - c[i + 1] : c[i]);
    return out;
  }
};

/// Substitutes a value for the unknown and trims the vanishing tail.
inline LefschetzLadder specialize(const ProjectedLadder& p, Rank value) {
  LefschetzLadder out;
  out.name = p.source.name;
  out.ambient_rank = p.source_rank;
  out.strong = p.strong;
  for (Side side : {Side::right, Side::left}) {
    std::vector<Rank> prims;
    for (const auto& e : p.primitives(side)) {
      auto v = e.substitute(p.unknown, value).as_constant();
      if (!v) throw InvalidInput("specialize: component rank depends on more than '" + p.unknown + "'");
      prims.push_back(*v);
    }
    while (!prims.empty() && prims.back() == 0) prims.pop_back();
    (side == Side::right ? out.right : out.left) = std::move(prims);
  }
  return out;
}

/// Structural count #{ i >= 0 : Bl_i = Bl_0 }: primitives before i vanish.
inline int count_components_equal_to_center(const ProjectedLadder& p) {
  int count = 0;
  for (const auto& prim : p.primitives(Side::right)) {
    ++count;
    if (!prim.is_zero()) break;
  }
  return count;
}

/// Bl_i = < A_i, u > for 0 <= i < m and Bl_i = u for m <= i <= N_V - 2.
inline ProjectedLadder blowup_lefschetz(const LefschetzLadder& l, Rank source_rank, Rank target_rank,
                                        std::string unknown = "") {
  require_valid(l);
  if (source_rank != l.ambient_rank)
    throw InvalidInput("source ambient rank " + std::to_string(source_rank) + " differs from the ladder's " +
                       std::to_string(l.ambient_rank));
  if (target_rank > source_rank)
    throw InvalidInput("target rank " + std::to_string(target_rank) + " exceeds source rank " +
                       std::to_string(source_rank) + " (projection must be a surjection)");
  if (l.length() >= target_rank)
    throw InvalidInput("projection requires length(A) < rank(V): " + std::to_string(l.length()) +
                       " >= " + std::to_string(target_rank));
  ProjectedLadder p;
  p.name = "Bl(" + l.name + ")";
  p.source = l;
  p.source_rank = source_rank;
  p.target_rank = target_rank;
  p.unknown = unknown.empty() ? "rank(" + l.name + "_P(K))" : std::move(unknown);
  p.strong = l.strong;
  const RankExpr u = RankExpr::unknown(p.unknown);
  for (Side side : {Side::right, Side::left}) {
    const auto r = suffix_sums(l.primitives(side));
    auto& out = side == Side::right ? p.right : p.left;
    for (Rank i = 0; i <= target_rank - 2; ++i)
      out.push_back(i < static_cast<Rank>(r.size()) ? RankExpr(r[static_cast<std::size_t>(i)]) + u : u);
  }
  return p;
}

inline std::vector<IdentityRecord> projection_identities(const ProjectedLadder& p) {
  std::vector<IdentityRecord> out;
  out.push_back(check_equal("length = rank(V) - 1", static_cast<Rank>(p.length()), p.target_rank - 1));
  out.push_back(check_equal("moderate over P(V)", p.length() < p.target_rank, true));
  const RankExpr expected = RankExpr(total_rank(p.source)) + RankExpr::unknown(p.unknown, p.target_rank - 1);
  out.push_back(check_equal("total rank = rank(source) + (N_V - 1) u", p.total_rank(), expected));
  const auto recovered = specialize(p, 0);
  out.push_back({"u := 0 recovers the source", show_shape(recovered), show_shape(p.source),
                 recovered.same_shape(p.source)});
  return out;
}

/// Projected categorical join J_V(A1, A2) = Bl_P(K)(J(A1, A2)).
inline ProjectedLadder projected_join(const LefschetzLadder& l1, const LefschetzLadder& l2, Rank target_rank) {
  require_valid(l1);
  require_valid(l2);
  if (l1.length() + l2.length() >= target_rank)
    throw InvalidInput("projected join requires length(A1) + length(A2) < rank(V): " +
                       std::to_string(l1.length() + l2.length()) + " >= " + std::to_string(target_rank));
  const auto j = join_ladder(l1, l2);
  const bool same_ambient = l1.ambient_rank == target_rank && l2.ambient_rank == target_rank;
  std::string u = same_ambient ? "rank(" + l1.name + " (x)_P(V) " + l2.name + ")" : "rank(" + j.name + "_P(K))";
  auto p = blowup_lefschetz(j, j.ambient_rank, target_rank, u);
  p.name = "J_V(" + l1.name + "," + l2.name + ")";
  return p;
}

/// The HPD statement for a projected join, with every side's computable data.
struct ProjectedJoinHpd {
  std::string lhs;
  std::string rhs;
  bool same_ambient = false;
  int lhs_hpd_length = 0;
  std::vector<int> factor_hpd_lengths;
  int dual_join_length = 0;
  Rank base_change_corank = 0;
  std::vector<IdentityRecord> identities;
};

inline ProjectedJoinHpd projected_join_hpd(const LefschetzLadder& l1, const LefschetzLadder& l2, Rank target_rank) {
  require_hpd_input(l1);
  require_hpd_input(l2);
  const auto p = projected_join(l1, l2, target_rank);
  ProjectedJoinHpd st;
  st.same_ambient = l1.ambient_rank == target_rank && l2.ambient_rank == target_rank;
  const std::string n1 = l1.name, n2 = l2.name;
  st.lhs = "J_V(" + n1 + "," + n2 + ")^hpd";
  if (st.same_ambient)
    st.rhs = hpd_name(n1) + " (x)_Perf(P(V^v)) " + hpd_name(n2);
  else
    st.rhs = "J(" + hpd_name(n1) + "," + hpd_name(n2) + ") (x)_Perf(P(V1^v + V2^v)) Perf(P(V^v))";
  st.lhs_hpd_length = static_cast<int>(target_rank) - count_components_equal_to_center(p);
  st.factor_hpd_lengths = {hpd_length(l1), hpd_length(l2)};
  st.dual_join_length = st.factor_hpd_lengths[0] + st.factor_hpd_lengths[1];
  st.base_change_corank = l1.ambient_rank + l2.ambient_rank - target_rank;
  st.identities = projection_identities(p);
  // The left section of J(hpd A1, hpd A2) along V^v has n' - s' twisted components.
  st.identities.push_back(check_equal("length(J_V^hpd) = length(J(hpd A1, hpd A2)) - corank(V^v)",
                                      static_cast<Rank>(st.lhs_hpd_length),
                                      static_cast<Rank>(st.dual_join_length) - st.base_change_corank));
  return st;
}

}  // namespace lefcalc
