#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefcalc/category.hpp"
#include "lefcalc/error.hpp"
#include "lefcalc/hpd.hpp"
#include "lefcalc/identity.hpp"
#include "lefcalc/join.hpp"
#include "lefcalc/ladder.hpp"

namespace lefcalc {

/// Two section decompositions whose distinguished components K and K' are
/// identified by an HPD theorem. Only the tails are computable; K and K' stay
/// unknowns.
struct SectionPair {
  struct Parameters {
    Rank s = 0;  // corank on the lhs, rank of the orthogonal on the rhs
    Rank r = 0;  // rank of the section subspace
    int m = 0;   // length of the lhs ladder
    int n = 0;   // length of the rhs (dual) ladder
  };

  SodPresentation lhs;
  SodPresentation rhs;
  std::string lhs_unknown;
  std::string rhs_unknown;
  Parameters params;
  LadderRegistry ladders;
  std::vector<IdentityRecord> identities;

  /// The identification rank(K) = rank(K').
  std::pair<RankExpr, RankExpr> equation() const {
    return {RankExpr::unknown(lhs_unknown), RankExpr::unknown(rhs_unknown)};
  }

  std::size_t lhs_tail_size() const { return lhs.size() - 1; }
  std::size_t rhs_tail_size() const { return rhs.size() - 1; }
  bool is_pure_equivalence() const { return lhs.size() == 1 && rhs.size() == 1; }
};

namespace detail {

// < K, A_s(H), ..., A_{m-1}((m-s)H) >
inline SodPresentation right_section(const LefschetzLadder& l, Rank s, const std::string& unknown,
                                     const std::string& hyperplane, const std::string& origin) {
  SodPresentation p;
  p.ambient = l.name + "_P(L)";
  p.components.push_back({CategoryExpr::unknown(unknown), {}, "K-unknown"});
  for (Rank i = s; i < l.length(); ++i)
    p.components.push_back({CategoryExpr::suffix(l, Side::right, static_cast<int>(i)), twist(hyperplane, i - s + 1), origin});
  return p;
}

// < A_{1-n}((r-n)H'), ..., A_{-r}(-H'), K' > with n = length(l).
inline SodPresentation left_section(const LefschetzLadder& l, Rank r, const std::string& unknown,
                                    const std::string& hyperplane, const std::string& origin) {
  SodPresentation p;
  p.ambient = l.name + "_P(L^perp)";
  const int n = l.length();
  for (Rank j = 1 - n; j <= -r; ++j)
    p.components.push_back({CategoryExpr::suffix(l, Side::left, static_cast<int>(j)), twist(hyperplane, j + r - 1), origin});
  p.components.push_back({CategoryExpr::unknown(unknown), {}, "K-unknown"});
  return p;
}

inline std::vector<IdentityRecord> section_identities(const SectionPair& sp) {
  std::vector<IdentityRecord> out;
  const Rank lhs_tail = std::max<Rank>(0, sp.params.m - sp.params.s);
  const Rank rhs_tail = std::max<Rank>(0, sp.params.n - sp.params.r);
  out.push_back(check_equal("lhs tail count = max(0, m - s)", static_cast<Rank>(sp.lhs_tail_size()), lhs_tail));
  out.push_back(check_equal("rhs tail count = max(0, n - r)", static_cast<Rank>(sp.rhs_tail_size()), rhs_tail));
  std::vector<Rank> lhs_twists, rhs_twists, want_lhs, want_rhs;
  for (std::size_t i = 1; i < sp.lhs.size(); ++i) lhs_twists.push_back(sp.lhs.components[i].twist["H"]);
  for (std::size_t i = 0; i + 1 < sp.rhs.size(); ++i) rhs_twists.push_back(sp.rhs.components[i].twist["H'"]);
  for (Rank t = 1; t <= lhs_tail; ++t) want_lhs.push_back(t);
  for (Rank t = -rhs_tail; t <= -1; ++t) want_rhs.push_back(t);
  out.push_back(check_equal("lhs twists = H, ..., (m-s)H", lhs_twists, want_lhs));
  out.push_back(check_equal("rhs twists = -(n-r)H', ..., -H'", rhs_twists, want_rhs));
  bool nonneg = true;
  for (const auto* pres : {&sp.lhs, &sp.rhs})
    for (const auto& c : pres->components) {
      auto r = rank_of(c.expr, sp.ladders);
      if (r.is_constant() && r.constant() < 0) nonneg = false;
    }
  out.push_back(check_equal("component ranks are nonnegative", nonneg, true));
  return out;
}

inline LefschetzLadder checked_dual(const LefschetzLadder& l, const std::optional<LefschetzLadder>& dual) {
  auto computed = hpd_shape(l).ladder;
  if (!dual) return computed;
  require_valid(*dual);
  if (!dual->same_shape(computed))
    throw InvalidInput("supplied dual '" + dual->name + "' does not have the HPD shape of '" + l.name +
                       "': " + show_shape(*dual) + " vs " + show_shape(computed));
  return *dual;
}

}  // namespace detail

/// Decomposition of the base change along a corank-s subspace L; the tail is
/// made of the components with |i| >= s.
inline SodPresentation linear_section(const LefschetzLadder& l, Rank s, Side side = Side::right) {
  require_valid(l);
  if (s < 1 || s > l.ambient_rank - 1)
    throw InvalidInput("corank " + std::to_string(s) + " outside 1 <= s <= " + std::to_string(l.ambient_rank - 1));
  if (side == Side::right) return detail::right_section(l, s, "K_L(" + l.name + ")", "H", "restriction");
  // < A_{1-m}((s-m)H), ..., A_{-s}(-H), K'_L >
  SodPresentation p;
  p.ambient = l.name + "_P(L)";
  for (Rank j = 1 - l.length(); j <= -s; ++j)
    p.components.push_back({CategoryExpr::suffix(l, Side::left, static_cast<int>(j)), twist("H", j + s - 1), "restriction"});
  p.components.push_back({CategoryExpr::unknown("K'_L(" + l.name + ")"), {}, "K-unknown"});
  return p;
}

/// Linear section of `l` along L of rank r paired with the section of its HPD
/// along L^perp. `dual` may supply a decorated HPD ladder of the same shape.
inline SectionPair hpd_section_pair(const LefschetzLadder& l, Rank r,
                                    const std::optional<LefschetzLadder>& dual = std::nullopt) {
  require_hpd_input(l);
  if (r < 1 || r > l.ambient_rank - 1)
    throw InvalidInput("subspace rank " + std::to_string(r) + " outside 1 <= r <= " + std::to_string(l.ambient_rank - 1));
  const auto d = detail::checked_dual(l, dual);
  SectionPair sp;
  sp.params = {l.ambient_rank - r, r, l.length(), d.length()};
  sp.lhs_unknown = "K_L(" + l.name + ")";
  sp.rhs_unknown = "K'_Lperp(" + d.name + ")";
  sp.lhs = detail::right_section(l, sp.params.s, sp.lhs_unknown, "H", "restriction");
  sp.rhs = detail::left_section(d, r, sp.rhs_unknown, "H'", "restriction");
  sp.ladders = {{l.name, l}, {d.name, d}};
  sp.identities = detail::section_identities(sp);
  return sp;
}

/// Section of the join J(A1, A2) along L of rank r against the section of
/// J(hpd A1, hpd A2) along L^perp.
inline SectionPair join_section_pair(const LefschetzLadder& l1, const LefschetzLadder& l2, Rank r,
                                     const std::optional<LefschetzLadder>& dual1 = std::nullopt,
                                     const std::optional<LefschetzLadder>& dual2 = std::nullopt) {
  require_hpd_input(l1);
  require_hpd_input(l2);
  const auto j = join_ladder(l1, l2);
  const auto jd = join_ladder(detail::checked_dual(l1, dual1), detail::checked_dual(l2, dual2));
  if (r < 1 || r > j.ambient_rank - 1)
    throw InvalidInput("subspace rank " + std::to_string(r) + " outside 1 <= r <= " + std::to_string(j.ambient_rank - 1));
  SectionPair sp;
  sp.params = {j.ambient_rank - r, r, j.length(), jd.length()};
  sp.lhs_unknown = "K_L(" + j.name + ")";
  sp.rhs_unknown = "K'_Lperp(" + jd.name + ")";
  sp.lhs = detail::right_section(j, sp.params.s, sp.lhs_unknown, "H", "restriction");
  sp.rhs = detail::left_section(jd, r, sp.rhs_unknown, "H'", "restriction");
  sp.ladders = {{j.name, j}, {jd.name, jd}};
  sp.identities = detail::section_identities(sp);
  sp.identities.push_back(check_equal("J(hpd A1, hpd A2) has the shape of hpd J(A1, A2)", show_shape(jd),
                                      show_shape(hpd_shape(j).ladder)));
  return sp;
}

/// Iterated nonlinear HPD: fiber product of the A_k over P(W), rank W = r, against
/// the section of J(hpd A_1, ..., hpd A_l) along W^perp.
inline SectionPair iterated_nonlinear(const std::vector<LefschetzLadder>& ladders, Rank r,
                                      const std::vector<std::optional<LefschetzLadder>>& duals = {}) {
  if (ladders.size() < 2) throw InvalidInput("iterated_nonlinear needs at least two ladders");
  Rank total_ambient = 0;
  for (const auto& l : ladders) {
    require_hpd_input(l);
    total_ambient += l.ambient_rank;
    if (r < 1 || r > l.ambient_rank)
      throw InvalidInput("rank(W) = " + std::to_string(r) + " must satisfy 1 <= r <= rank(V_k) = " +
                         std::to_string(l.ambient_rank) + " for '" + l.name + "'");
  }
  std::vector<LefschetzLadder> hpds;
  for (std::size_t k = 0; k < ladders.size(); ++k)
    hpds.push_back(detail::checked_dual(ladders[k], k < duals.size() ? duals[k] : std::nullopt));
  const auto j = iterated_join(ladders).ladder;
  const auto jd = iterated_join(hpds).ladder;

  SectionPair sp;
  sp.params = {total_ambient - r, r, j.length(), jd.length()};
  sp.lhs_unknown = "K_W(" + j.name + ")";
  sp.rhs_unknown = "K'_Wperp(" + jd.name + ")";
  sp.lhs = detail::right_section(j, sp.params.s, sp.lhs_unknown, "H", "J-component");
  sp.lhs.ambient = "fiber product over P(W)";
  sp.rhs = detail::left_section(jd, r, sp.rhs_unknown, "H'", "Jhpd-component");
  sp.rhs.ambient = jd.name + "_P(W^perp)";
  sp.ladders = {{j.name, j}, {jd.name, jd}};
  sp.identities = detail::section_identities(sp);
  return sp;
}

/// Nonlinear HPD for V1 = V2 = W of rank N: s = r = N.
inline SectionPair nonlinear_pair(const LefschetzLadder& l1, const LefschetzLadder& l2,
                                  const std::optional<LefschetzLadder>& dual1 = std::nullopt,
                                  const std::optional<LefschetzLadder>& dual2 = std::nullopt) {
  require_hpd_input(l1);
  require_hpd_input(l2);
  if (l1.ambient_rank != l2.ambient_rank)
    throw InvalidInput("nonlinear_pair needs equal ambient ranks (" + std::to_string(l1.ambient_rank) + " vs " +
                       std::to_string(l2.ambient_rank) + ")");
  auto sp = iterated_nonlinear({l1, l2}, l1.ambient_rank, {dual1, dual2});
  sp.rhs.ambient = "fiber product over P(W^v)";
  sp.rhs_unknown = "K'_Wv(" +
                   join_name(detail::checked_dual(l1, dual1).name, detail::checked_dual(l2, dual2).name) + ")";
  sp.rhs.components.back().expr = CategoryExpr::unknown(sp.rhs_unknown);
  return sp;
}

}  // namespace lefcalc
