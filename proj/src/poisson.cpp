#include "weyl/poisson.hpp"

#include <numeric>
#include <stdexcept>

#include "weyl/errors.hpp"

namespace weyl {

namespace {

std::int64_t homogeneous_degree(const BiPoly& f, const Direction& d, const char* what) {
  const auto deg = is_homogeneous(f, d);
  if (!deg) throw std::invalid_argument(std::string(what) + " is not homogeneous for the direction");
  return *deg;
}

std::vector<Point> points_of(const BiPoly& f) {
  std::vector<Point> out;
  for (const auto& [m, c] : f) out.push_back({m.x, m.y});
  return out;
}

}  // namespace

BiPoly poisson_bracket(const BiPoly& f, const BiPoly& g) {
  BiPoly out;
  for (const auto& [a, ca] : f) {
    for (const auto& [b, cb] : g) {
      const long coeff = static_cast<long>(a.x) * b.y - static_cast<long>(a.y) * b.x;
      if (coeff == 0) continue;
      if (a.x + b.x == 0 || a.y + b.y == 0) {
        throw InvariantViolation("bracket term with exponent -1 has nonzero coefficient");
      }
      out.add({a.x + b.x - 1, a.y + b.y - 1}, ca * cb * Rational(coeff));
    }
  }
  return out;
}

LemmaCheck lemma_fu_gv_check(const BiPoly& f, const BiPoly& g, const Direction& d) {
  if (f.is_constant() || g.is_constant()) {
    throw std::invalid_argument("lemma_fu_gv_check needs nonconstant f and g");
  }
  const std::int64_t v = homogeneous_degree(f, d, "f");
  const std::int64_t u = homogeneous_degree(g, d, "g");

  LemmaCheck out{};
  out.bracket_zero = poisson_bracket(f, g).is_zero();

  // f^u = lambda g^v read in K(X, Y): with both degrees zero it is 1 = 1;
  // with one degree zero or opposite signs it would make a nonconstant
  // polynomial (or product of two) a constant.
  if (v == 0 || u == 0) {
    out.power_relation_holds = v == 0 && u == 0;
  } else if ((v > 0) != (u > 0)) {
    out.power_relation_holds = false;
  } else {
    const std::int64_t c = std::gcd(v, u);
    const BiPoly lhs = pow(f, static_cast<unsigned>(std::abs(u / c)));
    const BiPoly rhs = pow(g, static_cast<unsigned>(std::abs(v / c)));
    const Monomial lm = leading_monomial(rhs);
    const Rational lambda = lhs.coeff(lm) / rhs.coeff(lm);
    out.power_relation_holds = lambda != 0 && lhs == rhs * lambda;
  }
  if (out.bracket_zero != out.power_relation_holds) {
    throw InvariantViolation("{f,g} = 0 and f^u = lambda g^v disagree");
  }
  return out;
}

CommutingPairClass classify_commuting_pair(const BiPoly& f, const BiPoly& g, const Direction& d) {
  if (f.is_constant() || g.is_constant()) {
    throw std::invalid_argument("classify_commuting_pair needs nonconstant f and g");
  }
  std::int64_t v = homogeneous_degree(f, d, "f");
  std::int64_t u = homogeneous_degree(g, d, "g");
  if (!poisson_bracket(f, g).is_zero()) throw std::invalid_argument("{f, g} != 0");

  CommutingPairClass out{};
  if (v == 0 && u == 0) {
    out.tag = CommutingCase::DegreeZero;
    out.ray = primitive(Point{-d.sigma(), d.rho()});
    if (out.ray.x < 0 || out.ray.y < 0) out.ray = Point{-out.ray.x, -out.ray.y};
    return out;
  }
  if (v < 0 && u < 0) {
    v = -v;
    u = -u;
  }
  if (v <= 0 || u <= 0) {
    throw InvariantViolation("commuting homogeneous pair with mixed-sign degrees");
  }
  const std::int64_t c = std::gcd(v, u);
  out.tag = CommutingCase::CommonPower;
  out.v0 = static_cast<int>(v / c);
  out.u0 = static_cast<int>(u / c);
  const auto root = mth_root(f, static_cast<unsigned>(out.v0));
  if (!root) throw InvariantViolation("commuting pair: f is not gamma h^v0");
  out.h = root->root;
  out.gamma = root->lambda;
  const BiPoly hu = pow(out.h, static_cast<unsigned>(out.u0));
  out.beta = leading_coefficient(g) / leading_coefficient(hu);
  if (g != hu * out.beta) throw InvariantViolation("commuting pair: g is not beta h^u0");
  // f^u0 = gamma^u0 h^(v0 u0) = (gamma^u0 / beta^v0) g^v0.
  Rational gu = 1;
  for (int i = 0; i < out.u0; ++i) gu *= out.gamma;
  Rational bv = 1;
  for (int i = 0; i < out.v0; ++i) bv *= out.beta;
  out.lambda = gu / bv;
  return out;
}

CommutingPairClass classify_commuting_pair(const BiPoly& f, const BiPoly& g) {
  if (f.is_monomial() && g.is_monomial() && !f.is_constant() && !g.is_constant()) {
    if (!poisson_bracket(f, g).is_zero()) throw std::invalid_argument("{f, g} != 0");
    CommutingPairClass out{};
    out.tag = CommutingCase::Monomials;
    return out;
  }
  throw std::invalid_argument("classify_commuting_pair without a direction needs monomials");
}

CentralizerGenerator centralizer_generator(const BiPoly& f, const Direction& d) {
  if (f.is_constant()) throw std::invalid_argument("centralizer_generator of a constant");
  if (homogeneous_degree(f, d, "f") == 0) {
    throw std::invalid_argument("centralizer_generator needs nonzero degree");
  }
  const PowerDecomposition pd = power_decomposition(f);
  return {pd.base, pd.exponent};
}

bool cone_containment_check(const BiPoly& f, const BiPoly& g, const Direction& d) {
  if (f.is_constant()) throw std::invalid_argument("cone_containment_check: constant f");
  if (homogeneous_degree(f, d, "f") == 0) {
    throw std::invalid_argument("cone_containment_check needs nonzero degree");
  }
  if (!poisson_bracket(f, g).is_zero()) throw std::invalid_argument("{f, g} != 0");
  const ConeSector cone = cone_of(points_of(f));
  for (const auto& p : points_of(g)) {
    if (!contains(cone, p)) return false;
  }
  return true;
}

}  // namespace weyl
