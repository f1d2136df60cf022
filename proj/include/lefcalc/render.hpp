#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lefcalc/join.hpp"

namespace lefcalc {

namespace detail {

inline std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

inline std::string diagonal_name(int i) { return "j" + std::to_string(i); }

}  // namespace detail

/// ASCII picture of a primitive grid: rows are i1, columns i2, each cell shows
/// the diagonal it belongs to and its rank. A legend lists the members of
/// every diagonal.
inline std::string render_grid(const PrimitiveGrid& g) {
  std::ostringstream os;
  const char* sign = g.side == Side::right ? "" : "-";
  auto range = [&](int n) { return n > 1 ? "0.." + std::string(sign) + std::to_string(n - 1) : std::string("0"); };
  os << to_string(g.side) << " grid: rows i1 = " << range(g.rows) << ", columns i2 = " << range(g.cols) << "\n";
  if (g.rows == 0 || g.cols == 0) {
    os << "+--+\n+--+\n";
    return os.str();
  }

  std::vector<std::vector<std::string>> text(static_cast<std::size_t>(g.rows),
                                             std::vector<std::string>(static_cast<std::size_t>(g.cols)));
  std::size_t w = 0;
  for (int a = 0; a < g.rows; ++a)
    for (int b = 0; b < g.cols; ++b) {
      const auto* c = g.cell(a, b);
      std::string s = detail::diagonal_name(g.diagonal(a, b)) + ":" + (c ? c->rank.str() : "0");
      w = std::max(w, s.size());
      text[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::move(s);
    }
  std::vector<std::string> col_heads, row_heads;
  for (int b = 0; b < g.cols; ++b) col_heads.push_back("i2=" + std::string(b ? sign : "") + std::to_string(b));
  for (int a = 0; a < g.rows; ++a) row_heads.push_back("i1=" + std::string(a ? sign : "") + std::to_string(a));
  for (const auto& h : col_heads) w = std::max(w, h.size());
  std::size_t hw = 0;
  for (const auto& h : row_heads) hw = std::max(hw, h.size());

  std::string rule = std::string(hw + 1, '-');
  for (int b = 0; b < g.cols; ++b) rule += "+" + std::string(w + 2, '-');
  rule += "+\n";

  os << std::string(hw + 1, ' ');
  for (const auto& h : col_heads) os << "| " << detail::pad(h, w) << " ";
  os << "|\n" << rule;
  for (int a = 0; a < g.rows; ++a) {
    os << detail::pad(row_heads[static_cast<std::size_t>(a)], hw) << " ";
    for (int b = 0; b < g.cols; ++b) os << "| " << detail::pad(text[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)], w) << " ";
    os << "|\n" << rule;
  }

  // legend, ordered by distance from the center
  std::map<int, std::vector<std::pair<int, int>>> diagonals;
  for (const auto& [pos, c] : g.cells) diagonals[pos.first + pos.second + 1].push_back(pos);
  for (auto& [d, members] : diagonals) {
    std::sort(members.begin(), members.end());
    os << detail::diagonal_name(g.side == Side::right ? d : -d) << " (rank " << g.diagonal_rank(d).str() << ") = ";
    for (std::size_t k = 0; k < members.size(); ++k) {
      const auto* c = g.cell(members[k].first, members[k].second);
      os << (k ? " | " : "") << (c->label.empty() ? c->rank.str() : c->label);
    }
    os << "\n";
  }
  return os.str();
}

inline std::string render_join(const JoinResult& j) {
  return j.ladder.name + "\n" + render_grid(j.grid) + "\n" + render_grid(j.left_grid);
}

}  // namespace lefcalc
