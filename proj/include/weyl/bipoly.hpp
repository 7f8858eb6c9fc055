#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "weyl/rational.hpp"
#include "weyl/term_map.hpp"
#include "weyl/unipoly.hpp"

namespace weyl {

struct PoissonTag {};

/// Exact bivariate polynomial in K[X, Y], K = Q.
using BiPoly = TermMap<PoissonTag>;

BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly pow(const BiPoly& f, unsigned n);
BiPoly diff_x(const BiPoly& f);
BiPoly diff_y(const BiPoly& f);

inline BiPoly poly_x() { return BiPoly::term(1, 1, 0); }
inline BiPoly poly_y() { return BiPoly::term(1, 0, 1); }

/// f(Y) as an element of K[X, Y].
BiPoly in_y(const UniPoly& f);
/// f(X) as an element of K[X, Y].
BiPoly in_x(const UniPoly& f);

/// Weight vector (rho, sigma) != (0, 0), stored primitive: positive multiples
/// give the same leading forms, so they are identified.
class Direction {
 public:
  Direction(std::int64_t rho, std::int64_t sigma);

  std::int64_t rho() const { return rho_; }
  std::int64_t sigma() const { return sigma_; }
  std::int64_t weight(const Monomial& m) const { return rho_ * m.x + sigma_ * m.y; }
  /// rho + sigma; the Weyl-side theory needs it positive.
  std::int64_t sum() const { return rho_ + sigma_; }
  Direction swapped() const { return {sigma_, rho_}; }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  std::int64_t rho_;
  std::int64_t sigma_;
};

/// (rho, sigma)-degree; the zero polynomial has degree -infinity.
class Degree {
 public:
  explicit Degree(std::int64_t v) : finite_(true), value_(v) {}
  static Degree neg_infinity() { return Degree(); }

  bool is_neg_infinity() const { return !finite_; }
  std::int64_t value() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b);

 private:
  Degree() = default;
  bool finite_ = false;
  std::int64_t value_ = 0;
};

std::set<Monomial> support(const BiPoly& f);

Degree v_deg(const BiPoly& f, const Direction& d);

/// Sum of the terms attaining v_deg. Throws std::invalid_argument on 0.
BiPoly leading_form(const BiPoly& f, const Direction& d);

struct HomogComponent {
  std::int64_t degree;
  BiPoly component;
};

/// Components ordered by strictly decreasing degree; parts[0] is the
/// leading form.
struct HomogDecomp {
  std::vector<HomogComponent> parts;
};

HomogDecomp homog_decomp(const BiPoly& f, const Direction& d);

/// Degree when every support point has the same weight; 0 for the zero
/// polynomial; nullopt otherwise.
std::optional<std::int64_t> is_homogeneous(const BiPoly& f, const Direction& d);

/// Graded-lex leading monomial of a nonzero polynomial.
Monomial leading_monomial(const BiPoly& f);
Rational leading_coefficient(const BiPoly& f);

/// Coefficient 1 on the graded-lex leading monomial.
bool is_monic(const BiPoly& f);

struct PowerRoot {
  Rational lambda;
  BiPoly root;
};

/// (lambda, h) with f = lambda * h^m and h monic, or nullopt when f is not a
/// scalar multiple of an m-th power.
std::optional<PowerRoot> mth_root(const BiPoly& f, unsigned m);

struct PowerDecomposition {
  Rational lambda;
  BiPoly base;
  unsigned exponent;
};

/// f = lambda * base^exponent with base monic and not a proper power.
/// Throws std::invalid_argument for constant f.
PowerDecomposition power_decomposition(const BiPoly& f);

}  // namespace weyl
