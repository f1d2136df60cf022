#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "lefcalc/error.hpp"

namespace lefcalc {

using Rank = std::int64_t;

/// Sparse integer vector keyed by name. Zero entries are never stored, so
/// structural equality is equality of the canonical form.
template <class Key = std::string, class Coeff = Rank>
class SparseVector {
 public:
  using map_type = std::map<Key, Coeff>;

  SparseVector() = default;
  SparseVector(std::initializer_list<std::pair<const Key, Coeff>> init) {
    for (const auto& [k, v] : init) add(k, v);
  }

  Coeff operator[](const Key& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? Coeff{0} : it->second;
  }

  void add(const Key& key, Coeff delta) {
    if (delta == Coeff{0}) return;
    auto [it, inserted] = entries_.try_emplace(key, Coeff{0});
    it->second += delta;
    if (it->second == Coeff{0}) entries_.erase(it);
  }

  void set(const Key& key, Coeff value) {
    if (value == Coeff{0})
      entries_.erase(key);
    else
      entries_[key] = value;
  }

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const map_type& entries() const noexcept { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  SparseVector& operator+=(const SparseVector& o) {
    for (const auto& [k, v] : o.entries_) add(k, v);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    for (const auto& [k, v] : o.entries_) add(k, -v);
    return *this;
  }
  SparseVector& operator*=(Coeff c) {
    if (c == Coeff{0}) {
      entries_.clear();
      return *this;
    }
    for (auto& [k, v] : entries_) v *= c;
    return *this;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(SparseVector a, Coeff c) { return a *= c; }
  friend SparseVector operator*(Coeff c, SparseVector a) { return a *= c; }
  friend SparseVector operator-(SparseVector a) { return a *= Coeff{-1}; }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  map_type entries_;
};

/// Twist by a combination of hyperplane classes, e.g. 2H - H1.
using TwistVector = SparseVector<std::string, Rank>;

inline TwistVector twist(const std::string& cls, Rank n) {
  TwistVector t;
  t.add(cls, n);
  return t;
}

namespace detail {

// "3H", "-H'", "H1+2H2"; "0" for the empty vector.
inline std::string format_terms(Rank constant, const SparseVector<>& terms, bool show_zero_constant,
                                const char* mult) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](Rank c, const std::string& name) {
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? '-' : '+');
    }
    Rank a = c < 0 ? -c : c;
    if (name.empty())
      os << a;
    else if (a != 1)
      os << a << mult << name;
    else
      os << name;
    first = false;
  };
  if (constant != 0 || (terms.empty() && show_zero_constant)) emit(constant, "");
  for (const auto& [name, c] : terms) emit(c, name);
  return os.str();
}

}  // namespace detail

inline std::string to_string(const TwistVector& t) {
  return t.empty() ? std::string("0") : detail::format_terms(0, t, false, "");
}

/// Integer linear expression over named unknowns: the value type of the K0-rank
/// model. Equality is canonical-form equality.
class RankExpr {
 public:
  RankExpr() = default;
  RankExpr(Rank constant) : constant_(constant) {}  // NOLINT: implicit by intent

  static RankExpr unknown(const std::string& name, Rank coeff = 1) {
    RankExpr e;
    e.terms_.add(name, coeff);
    return e;
  }

  Rank constant() const noexcept { return constant_; }
  const SparseVector<>& terms() const noexcept { return terms_; }
  Rank coefficient(const std::string& name) const { return terms_[name]; }

  bool is_constant() const noexcept { return terms_.empty(); }
  bool is_zero() const noexcept { return constant_ == 0 && terms_.empty(); }

  std::optional<Rank> as_constant() const {
    if (!is_constant()) return std::nullopt;
    return constant_;
  }

  /// Replaces `name` by `value` everywhere.
  RankExpr substitute(const std::string& name, const RankExpr& value) const {
    RankExpr out = *this;
    Rank c = terms_[name];
    if (c == 0) return out;
    out.terms_.set(name, 0);
    out += value * c;
    return out;
  }

  RankExpr& operator+=(const RankExpr& o) {
    constant_ += o.constant_;
    terms_ += o.terms_;
    return *this;
  }
  RankExpr& operator-=(const RankExpr& o) {
    constant_ -= o.constant_;
    terms_ -= o.terms_;
    return *this;
  }
  RankExpr& operator*=(Rank c) {
    constant_ *= c;
    terms_ *= c;
    return *this;
  }

  friend RankExpr operator+(RankExpr a, const RankExpr& b) { return a += b; }
  friend RankExpr operator-(RankExpr a, const RankExpr& b) { return a -= b; }
  friend RankExpr operator-(RankExpr a) { return a *= -1; }
  friend RankExpr operator*(RankExpr a, Rank c) { return a *= c; }
  friend RankExpr operator*(Rank c, RankExpr a) { return a *= c; }

  /// Product; defined only when at least one side is constant.
  friend RankExpr operator*(const RankExpr& a, const RankExpr& b) {
    if (a.is_constant()) return b * a.constant_;
    if (b.is_constant()) return a * b.constant_;
    throw InvalidInput("product of two non-constant ranks is not linear: (" + a.str() + ")*(" +
                       b.str() + ")");
  }

  friend bool operator==(const RankExpr&, const RankExpr&) = default;

  std::string str() const { return detail::format_terms(constant_, terms_, true, "*"); }

  friend std::ostream& operator<<(std::ostream& os, const RankExpr& e) { return os << e.str(); }

 private:
  Rank constant_ = 0;
  SparseVector<> terms_;
};

}  // namespace lefcalc
