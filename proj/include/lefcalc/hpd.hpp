#pragma once

#include <string>
#include <vector>

#include "lefcalc/error.hpp"
#include "lefcalc/identity.hpp"
#include "lefcalc/join.hpp"
#include "lefcalc/ladder.hpp"
#include "lefcalc/partition.hpp"

namespace lefcalc {

/// Dual ladder over P(V^v). The rule produces left components; the right side
/// is filled by symmetric completion, which `notes` records.
struct HpdResult {
  LefschetzLadder ladder;
  int length = 0;
  Rank rank = 0;
  std::string shape_source = "dual-partition rule";
  std::vector<std::string> notes;
};

inline void require_hpd_input(const LefschetzLadder& l) {
  require_valid(l);
  if (!is_moderate(l))
    throw InvalidInput("HPD requires a moderate ladder (length < ambient rank); '" + l.name + "' has length " +
                       std::to_string(l.length()) + " over ambient rank " + std::to_string(l.ambient_rank));
  if (!l.strong.right) throw InvalidInput("HPD requires a right strong ladder; '" + l.name + "' is not flagged strong");
}

/// N - #{ i >= 0 : A_i = A_0 }.
inline int hpd_length(const LefschetzLadder& l) {
  require_hpd_input(l);
  return static_cast<int>(l.ambient_rank) - count_components_equal_to_center(l);
}

/// (N - 1) * rank(A) - N * sum_{i >= 1} r_i.
inline Rank hpd_rank(const LefschetzLadder& l) {
  require_hpd_input(l);
  const auto r = suffix_sums(l.right);
  Rank tail = 0;
  for (std::size_t i = 1; i < r.size(); ++i) tail += r[i];
  return (l.ambient_rank - 1) * total_rank(l) - l.ambient_rank * tail;
}

inline std::string hpd_name(const std::string& name) { return name + "^hpd"; }

/// Rotated complement of the right shape inside the r_0 x N rectangle, read off
/// as the component ranks of the dual's left side.
inline HpdResult hpd_shape(const LefschetzLadder& l) {
  require_hpd_input(l);
  const Partition rows = shape_rows(l, Side::right);  // r_0 rows, lambda_1 = m
  const Partition dual_rows = rectangle_complement(rows, l.ambient_rank);
  const Partition heights = transpose(dual_rows);  // r^hpd_0, r^hpd_{-1}, ...

  std::vector<Rank> left(heights.size());
  for (std::size_t j = 0; j < heights.size(); ++j)
    left[j] = heights[j] - (j + 1 < heights.size() ? heights[j + 1] : 0);

  HpdResult res;
  res.ladder.name = hpd_name(l.name);
  res.ladder.ambient_rank = l.ambient_rank;
  res.ladder.left = left;
  res.ladder.right = std::move(left);
  res.ladder.strong = {true, true};
  res.length = res.ladder.length();
  res.rank = box_count(dual_rows);
  res.notes.push_back("right side filled by symmetric completion of the left ladder");
  if (center_rank(l) > l.ambient_rank)
    res.notes.push_back("center rank " + std::to_string(center_rank(l)) + " exceeds ambient rank " +
                        std::to_string(l.ambient_rank));
  require_valid(res.ladder);
  return res;
}

/// hpd_shape applied twice returns the original shape.
inline IdentityRecord check_hpd_involution(const LefschetzLadder& l) {
  const auto once = hpd_shape(l).ladder;
  const auto twice = hpd_shape(once).ladder;
  LefschetzLadder original = l;
  return {"hpd(hpd(" + l.name + ")) = " + l.name, show_shape(twice), show_shape(original), twice.same_shape(original)};
}

struct CommuteCheck {
  IdentityRecord record;
  LefschetzLadder hpd_of_join;
  LefschetzLadder join_of_hpds;
};

/// hpd(J(A1, A2)) against J(hpd A1, hpd A2) as ladders over P(V1^v + V2^v).
inline CommuteCheck check_hpd_join_commute(const LefschetzLadder& l1, const LefschetzLadder& l2) {
  require_hpd_input(l1);
  require_hpd_input(l2);
  CommuteCheck c;
  c.hpd_of_join = hpd_shape(join_ladder(l1, l2)).ladder;
  c.join_of_hpds = join_ladder(hpd_shape(l1).ladder, hpd_shape(l2).ladder);
  c.record = {"hpd(J(" + l1.name + "," + l2.name + ")) = J(hpd " + l1.name + ", hpd " + l2.name + ")",
              show_shape(c.hpd_of_join), show_shape(c.join_of_hpds), c.hpd_of_join.same_shape(c.join_of_hpds)};
  return c;
}

/// Identities every HPD output satisfies; used by the CLI and the catalog verifier.
inline std::vector<IdentityRecord> hpd_identities(const LefschetzLadder& l, const HpdResult& h) {
  std::vector<IdentityRecord> out;
  out.push_back(check_equal("length(hpd) = N - #{i >= 0 : A_i = A_0}", h.length, hpd_length(l)));
  out.push_back(check_equal("total_rank(hpd) = hpd_rank", total_rank(h.ladder), hpd_rank(l)));
  out.push_back(check_equal("hpd_rank = N r_0 - total_rank", hpd_rank(l),
                            l.ambient_rank * center_rank(l) - total_rank(l)));
  out.push_back(check_equal("center rank preserved", center_rank(h.ladder), center_rank(l)));
  out.push_back(check_hpd_involution(l));
  return out;
}

}  // namespace lefcalc
