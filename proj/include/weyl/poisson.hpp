#pragma once

#include <optional>

#include "weyl/bipoly.hpp"
#include "weyl/geometry.hpp"

namespace weyl {

/// {f, g} = f_X g_Y - f_Y g_X, via the monomial rule
/// {X^i Y^j, X^k Y^l} = (il - jk) X^(i+k-1) Y^(j+l-1).
BiPoly poisson_bracket(const BiPoly& f, const BiPoly& g);

struct LemmaCheck {
  bool bracket_zero;
  bool power_relation_holds;
};

/// Evaluates {f,g} = 0 and f^u = lambda g^v independently for nonconstant f, g
/// homogeneous at d of degrees v, u. Throws InvariantViolation if they
/// disagree, std::invalid_argument on bad input.
LemmaCheck lemma_fu_gv_check(const BiPoly& f, const BiPoly& g, const Direction& d);

enum class CommutingCase { Monomials, DegreeZero, CommonPower };

struct CommutingPairClass {
  CommutingCase tag;
  Point ray{0, 0};  ///< DegreeZero: primitive direction carrying both supports
  // CommonPower: f = gamma h^v0, g = beta h^u0, f^u0 = lambda g^v0.
  Rational lambda;
  BiPoly h;
  int v0 = 0;
  int u0 = 0;
  Rational gamma;
  Rational beta;
};

/// Requires f, g nonconstant, homogeneous at d, {f, g} = 0.
CommutingPairClass classify_commuting_pair(const BiPoly& f, const BiPoly& g, const Direction& d);

/// Direction-free form: a pair of monomials is tagged Monomials; anything
/// else needs a direction.
CommutingPairClass classify_commuting_pair(const BiPoly& f, const BiPoly& g);

struct CentralizerGenerator {
  BiPoly h;
  unsigned m;
};

/// C(f) = K[h] for f homogeneous at d of nonzero degree; C(f) = K[f] iff m = 1.
CentralizerGenerator centralizer_generator(const BiPoly& f, const Direction& d);

/// Whether E(g) lies in Cone(Convex(E(f))). Requires f homogeneous at d of
/// nonzero degree and {f, g} = 0.
bool cone_containment_check(const BiPoly& f, const BiPoly& g, const Direction& d);

}  // namespace weyl
