#include "weyl/omega.hpp"

#include <stdexcept>

#include "weyl/errors.hpp"
#include "weyl/poisson.hpp"

namespace weyl {

namespace {

void step(AutWord& word, PoissonPair& cur, const AutToken& t) {
  word.push_back(t);
  cur = apply_to_poisson_pair({t}, cur);
}

Direction normalized(std::int64_t r, std::int64_t s) {
  if (r + s < 0 || (r + s == 0 && r < 0)) return {-r, -s};
  return {r, s};
}

}  // namespace

std::string to_string(OmegaCase c) {
  switch (c) {
    case OmegaCase::Case1: return "Case1";
    case OmegaCase::Case2: return "Case2";
    case OmegaCase::Case3: return "Case3";
    case OmegaCase::Case4: return "Case4";
  }
  return "?";
}

std::optional<Direction> homogeneity_direction(const BiPoly& f) {
  if (f.size() < 2) return std::nullopt;
  auto it = f.begin();
  const Monomial a = it->first;
  const Monomial b = (++it)->first;
  const Direction d = normalized(b.y - a.y, a.x - b.x);
  if (!is_homogeneous(f, d)) return std::nullopt;
  return d;
}

OmegaClass omega_classify(const BiPoly& f, const BiPoly& g) {
  if (poisson_bracket(f, g) != BiPoly::constant(1)) {
    throw std::invalid_argument("omega_classify: {f, g} != 1");
  }
  OmegaClass out;
  PoissonPair cur{f, g};
  AutWord& word = out.witness;

  if (f.is_monomial() && g.is_monomial()) {
    const Rational lf = f.begin()->second;
    if (f.begin()->first == Monomial{1, 0}) {
      step(word, cur, Scale{Rational(1 / lf)});
    } else if (f.begin()->first == Monomial{0, 1}) {
      step(word, cur, Rot90{});
      step(word, cur, Scale{Rational(-1 / lf)});
    } else {
      throw InvariantViolation("monomial pair with bracket 1 is not (lX, Y/l) or (lY, -X/l)");
    }
    out.tag = OmegaCase::Case1;
  } else {
    if (cur.first.is_monomial()) step(word, cur, PairSwap{});
    auto d = homogeneity_direction(cur.first);
    if (!d || !is_homogeneous(cur.second, *d)) {
      throw std::invalid_argument("omega_classify: no common homogeneity direction");
    }
    if ((d->rho() == 1 && d->sigma() == 0) || (d->sigma() > 0 && d->rho() < 0)) {
      step(word, cur, Rot90{});
      d = homogeneity_direction(cur.first);
    }
    const std::int64_t r = d->rho();
    const std::int64_t s = d->sigma();
    if (r > 0 && s > 0) {
      if (cur.first.size() != 2) throw InvariantViolation("case (a): f is not a binomial");
      if (cur.first.coeff({1, 0}) == 0) step(word, cur, Rot90{});
      const BiPoly& fa = cur.first;
      const Rational lam = fa.coeff({1, 0});
      Monomial other{1, 0};
      for (const auto& [m, c] : fa) {
        if (m != Monomial{1, 0}) other = m;
      }
      if (lam == 0 || other.x != 0 || other.y < 1) {
        throw InvariantViolation("case (a): f is not lambda X + mu Y^n");
      }
      const Rational mu = fa.coeff(other);
      const int n = other.y;
      if (n > 1) {
        if (!cur.second.is_monomial() || cur.second.begin()->first != Monomial{0, 1}) {
          throw InvariantViolation("case (a), n > 1: g is not gamma Y");
        }
        step(word, cur, Scale{Rational(1 / lam)});
        out.tag = OmegaCase::Case3;
        out.n = n;
        out.lambda = cur.first.coeff({0, n});
      } else {
        const Rational gx = cur.second.coeff({1, 0});
        const Rational gy = cur.second.coeff({0, 1});
        if (gx != 0 && gy != 0) {
          out.tag = OmegaCase::Case2;
          out.alpha = lam;
          out.beta = mu;
          out.gamma = gx;
          out.delta = gy;
        } else {
          if (gx == 0) {
            step(word, cur, Scale{Rational(1 / lam)});
          } else {
            step(word, cur, Rot90{});
            step(word, cur, Scale{Rational(1 / cur.first.coeff({1, 0}))});
          }
          out.tag = OmegaCase::Case3;
          out.n = 1;
          out.lambda = cur.first.coeff({0, 1});
        }
      }
    } else if (r == 0 && s == 1) {
      // A non-monomial (0,1)-homogeneous f with {f, g} = 1 has degree 0:
      // f = X / alpha + r0, g = alpha Y.
      const BiPoly& fb = cur.first;
      const Rational alpha = cur.second.coeff({0, 1});
      if (fb.size() != 2 || fb.coeff({1, 0}) == 0 || fb.constant_term() == 0 ||
          !cur.second.is_monomial() || alpha == 0) {
        throw InvariantViolation("case (b): pair is not (X/alpha + r0, alpha Y)");
      }
      step(word, cur, Scale{alpha});
      out.tag = OmegaCase::Case4;
      out.lambda = cur.first.constant_term();
    } else {
      throw InvariantViolation("case (c): non-monomial f with r > 0 > s");
    }
  }

  switch (out.tag) {
    case OmegaCase::Case1:
      out.canonical = {poly_x(), poly_y()};
      break;
    case OmegaCase::Case2:
      out.canonical = {out.alpha * poly_x() + out.beta * poly_y(),
                       out.gamma * poly_x() + out.delta * poly_y()};
      break;
    case OmegaCase::Case3:
      out.canonical = {poly_x() + BiPoly::term(out.lambda, 0, out.n), poly_y()};
      break;
    case OmegaCase::Case4:
      out.canonical = {poly_x() + BiPoly::constant(out.lambda), poly_y()};
      break;
  }
  if (cur != out.canonical || apply_to_poisson_pair(out.witness, {f, g}) != out.canonical) {
    throw InvariantViolation("omega witness does not reproduce the canonical pair");
  }
  return out;
}

}  // namespace weyl
