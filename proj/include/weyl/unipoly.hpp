#pragma once

#include <initializer_list>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

/// Dense univariate polynomial c0 + c1 X + ... + cn X^n over Q, trailing
/// zeros trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly monomial(const Rational& c, unsigned degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// f(X + k).
  UniPoly shifted(const Rational& k) const;
  UniPoly derivative() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Horner evaluation of f at x in any ring whose elements support
/// x * y, + and construction of constants via Ring::constant.
template <class Ring>
Ring evaluate(const UniPoly& f, const Ring& x) {
  Ring acc;
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * x;
    acc += Ring::constant(f.coeff(static_cast<unsigned>(i)));
  }
  return acc;
}

}  // namespace weyl
