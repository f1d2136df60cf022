#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "lefcalc/ladder.hpp"
#include "lefcalc/rank_expr.hpp"

namespace lefcalc {

/// One checked equation: both sides rendered as text plus the verdict.
struct IdentityRecord {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool pass = false;

  friend bool operator==(const IdentityRecord&, const IdentityRecord&) = default;
};

inline std::string show(Rank v) { return std::to_string(v); }
inline std::string show(int v) { return std::to_string(v); }
inline std::string show(bool v) { return v ? "true" : "false"; }
inline std::string show(const std::string& s) { return s; }
inline std::string show(const RankExpr& e) { return e.str(); }

inline std::string show(const std::vector<Rank>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

inline std::string show(const std::vector<RankExpr>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
  os << ')';
  return os.str();
}

/// Shape summary used when comparing ladders: ambient rank and both component
/// rank sequences, each read outward from the center.
inline std::string show_shape(const LefschetzLadder& l) {
  return "N=" + std::to_string(l.ambient_rank) + " right=" + show(suffix_sums(l.right)) +
         " left=" + show(suffix_sums(l.left));
}

template <class L, class R>
IdentityRecord check_equal(std::string name, const L& lhs, const R& rhs) {
  return {std::move(name), show(lhs), show(rhs), lhs == rhs};
}

inline bool all_pass(const std::vector<IdentityRecord>& records) {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

}  // namespace lefcalc
