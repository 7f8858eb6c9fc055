#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>

#include "weyl/rational.hpp"

namespace weyl {

/// Exponent pair (x, y). Reads as X^x Y^y for polynomials and p^x q^y for
/// Weyl elements.
struct Monomial {
  int x = 0;
  int y = 0;

  int total() const { return x + y; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Graded-lex order with X > Y: total degree first, then the X exponent.
inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
  if (a.total() != b.total()) return a.total() < b.total();
  return a.x < b.x;
}

/// Finite map from exponent pairs to nonzero rationals. The tag fixes the
/// multiplication (commutative polynomials vs. the Weyl algebra); only the
/// vector-space structure lives here.
template <class Tag>
class TermMap {
 public:
  using container = std::map<Monomial, Rational>;
  using const_iterator = typename container::const_iterator;

  TermMap() = default;

  static TermMap constant(const Rational& c) { return term(c, 0, 0); }

  static TermMap term(const Rational& c, int x, int y) {
    TermMap out;
    out.add({x, y}, c);
    return out;
  }

  /// Adds c to the coefficient of m; drops the entry if it cancels.
  void add(const Monomial& m, const Rational& c) {
    if (m.x < 0 || m.y < 0) {
      throw std::invalid_argument("negative exponent (" + std::to_string(m.x) + "," +
                                  std::to_string(m.y) + ")");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const container& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
  }
  Rational constant_term() const { return coeff({0, 0}); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Largest single exponent appearing; 0 for the zero element.
  int max_exponent() const {
    int out = 0;
    for (const auto& [m, c] : terms_) out = std::max({out, m.x, m.y});
    return out;
  }

  TermMap& operator+=(const TermMap& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  TermMap& operator-=(const TermMap& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  TermMap& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend TermMap operator+(TermMap a, const TermMap& b) { return a += b; }
  friend TermMap operator-(TermMap a, const TermMap& b) { return a -= b; }
  friend TermMap operator-(TermMap a) { return a *= Rational(-1); }
  friend TermMap operator*(const Rational& s, TermMap a) { return a *= s; }
  friend TermMap operator*(TermMap a, const Rational& s) { return a *= s; }
  friend bool operator==(const TermMap& a, const TermMap& b) { return a.terms_ == b.terms_; }

 private:
  container terms_;
};

}  // namespace weyl
