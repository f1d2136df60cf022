#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "lefcalc/error.hpp"
#include "lefcalc/rank_expr.hpp"

namespace lefcalc {

/// Weakly decreasing sequence of positive integers (a Young diagram by rows).
using Partition = std::vector<Rank>;

inline bool is_partition(std::span<const Rank> rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] <= 0) return false;
    if (i > 0 && rows[i] > rows[i - 1]) return false;
  }
  return true;
}

/// Conjugate partition: column k has length #{ i : rows[i] >= k }. Also accepts a
/// weakly decreasing sequence with trailing zeros.
inline Partition transpose(std::span<const Rank> rows) {
  Partition out;
  if (rows.empty()) return out;
  Rank width = *std::max_element(rows.begin(), rows.end());
  out.reserve(static_cast<std::size_t>(std::max<Rank>(width, 0)));
  for (Rank k = 1; k <= width; ++k) {
    Rank count = 0;
    for (Rank r : rows)
      if (r >= k) ++count;
    out.push_back(count);
  }
  return out;
}

inline Rank box_count(std::span<const Rank> rows) {
  Rank total = 0;
  for (Rank r : rows) total += r;
  return total;
}

/// Complement of `rows` inside the (rows.size() x width) rectangle, rotated by
/// 180 degrees: mu_k = width - rows[h-k]. Zero rows are kept.
inline Partition rectangle_complement(std::span<const Rank> rows, Rank width) {
  Partition out;
  out.reserve(rows.size());
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (*it > width) throw InvalidInput("partition does not fit in the rectangle");
    out.push_back(width - *it);
  }
  return out;
}

}  // namespace lefcalc
