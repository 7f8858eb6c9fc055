#pragma once

// Independent reference implementations used to check the library.

#include <optional>
#include <set>
#include <vector>

#include "weyl/bipoly.hpp"
#include "weyl/geometry.hpp"
#include "weyl/unipoly.hpp"
#include "weyl/weyl_element.hpp"

namespace oracle {

using weyl::BiPoly;
using weyl::Rational;
using weyl::WeylElement;

/// Product by rewriting words in p, q with qp -> pq - 1 until normal.
WeylElement rewrite_product(const WeylElement& a, const WeylElement& b);
WeylElement rewrite_commutator(const WeylElement& a, const WeylElement& b);
WeylElement rewrite_power(const WeylElement& a, unsigned n);

/// f_X g_Y - f_Y g_X with derivatives taken term by term here.
BiPoly det_bracket(const BiPoly& f, const BiPoly& g);

/// Whether some w with all exponents <= max_exp satisfies [z, w] = 1, by
/// Gaussian elimination over Q on the coefficients of w.
bool partner_exists(const WeylElement& z, int max_exp);

/// Vertices of Convex(E) maximizing rho x + sigma y for some rho + sigma > 0,
/// found by sweeping integer directions with |rho|, |sigma| <= bound.
std::set<weyl::Point> roof_sweep(const std::vector<weyl::Point>& pts, int bound);

/// Leading form of f at (rho, sigma) straight from the definition.
BiPoly leading_form(const BiPoly& f, long rho, long sigma);

/// Sum of c_i (pq)^i, built with rewrite_product.
WeylElement at_pq(const weyl::UniPoly& f);

}  // namespace oracle
