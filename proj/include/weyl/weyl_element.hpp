#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weyl/bipoly.hpp"
#include "weyl/term_map.hpp"
#include "weyl/unipoly.hpp"

namespace weyl {

struct WeylTag {};

/// Element of the first Weyl algebra A1 in normal order: the entry (i, j)
/// is the coefficient of p^i q^j, with [p, q] = pq - qp = 1.
using WeylElement = TermMap<WeylTag>;

inline WeylElement weyl_p() { return WeylElement::term(1, 1, 0); }
inline WeylElement weyl_q() { return WeylElement::term(1, 0, 1); }

/// Product via the closed-form reordering formula
///   p^s1 q^i1 . p^s2 q^i2 = sum_j (-1)^j j! C(i1,j) C(s2,j) p^(s1+s2-j) q^(i1+i2-j).
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement operator*(const WeylElement& a, const WeylElement& b);
WeylElement pow(const WeylElement& z, unsigned n);

WeylElement commutator(const WeylElement& a, const WeylElement& b);

/// Linear (not multiplicative) identification p^i q^j <-> X^i Y^j.
BiPoly phi(const WeylElement& z);
WeylElement phi_inv(const BiPoly& f);

/// f(q), f(p) as Weyl elements.
WeylElement in_q(const UniPoly& f);
WeylElement in_p(const UniPoly& f);

/// ad(pq)-eigenvalue of p^i q^j, i.e. j - i.
inline std::int64_t grade_of(const Monomial& m) { return static_cast<std::int64_t>(m.y) - m.x; }

struct GradedComponent {
  std::int64_t grade;
  WeylElement component;
};

/// Components in D_k ordered by strictly decreasing k.
struct GradedDecomp {
  std::vector<GradedComponent> parts;
};

GradedDecomp graded_decomp(const WeylElement& z);

/// Membership in D_{>=k} / D_{<=k}; 0 belongs to all of them.
bool in_D_geq(const WeylElement& z, std::int64_t k);
bool in_D_leq(const WeylElement& z, std::int64_t k);

/// Some D_k containing z, when z is nonzero and graded-homogeneous.
std::optional<std::int64_t> homogeneous_grade(const WeylElement& z);

Degree v_deg_weyl(const WeylElement& z, const Direction& d);
BiPoly leading_form_weyl(const WeylElement& z, const Direction& d);

enum class BracketCase { Eq, StrictDrop };

struct DixmierCheck {
  bool product_ok;        ///< f(zw) = f(z) f(w)
  BracketCase bracket_case;
  bool bracket_ok;        ///< the degree identity (Eq) or strict drop (StrictDrop) held
};

/// Evaluates both sides of Dixmier's leading-form identities for z, w at d.
/// Requires z, w != 0 and rho + sigma > 0.
DixmierCheck dixmier_leading_check(const WeylElement& z, const WeylElement& w,
                                   const Direction& d);

/// f(pq) as a Weyl element.
WeylElement eval_at_pq(const UniPoly& f);

/// Checks q^k f(pq) = f(pq - k) q^k in A1, k >= 0.
bool shift_identity_check(const UniPoly& f, unsigned k);

/// Searches C(z) within D_j for grades |j| <= bound and exponents <= bound
/// for an element outside K[z]. Requires z graded-homogeneous of nonzero
/// grade. Returns the first witness found, if any.
std::optional<WeylElement> centralizer_falsifier(const WeylElement& z, int bound = 6);

}  // namespace weyl
