#include "weyl/bipoly.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace weyl {

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      out.add({ma.x + mb.x, ma.y + mb.y}, ca * cb);
    }
  }
  return out;
}

BiPoly pow(const BiPoly& f, unsigned n) {
  BiPoly result = BiPoly::constant(1);
  BiPoly base = f;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

BiPoly diff_x(const BiPoly& f) {
  BiPoly out;
  for (const auto& [m, c] : f) {
    if (m.x > 0) out.add({m.x - 1, m.y}, c * m.x);
  }
  return out;
}

BiPoly diff_y(const BiPoly& f) {
  BiPoly out;
  for (const auto& [m, c] : f) {
    if (m.y > 0) out.add({m.x, m.y - 1}, c * m.y);
  }
  return out;
}

BiPoly in_y(const UniPoly& f) {
  BiPoly out;
  for (int i = 0; i <= f.degree(); ++i) out.add({0, i}, f.coeff(static_cast<unsigned>(i)));
  return out;
}

BiPoly in_x(const UniPoly& f) {
  BiPoly out;
  for (int i = 0; i <= f.degree(); ++i) out.add({i, 0}, f.coeff(static_cast<unsigned>(i)));
  return out;
}

Direction::Direction(std::int64_t rho, std::int64_t sigma) {
  if (rho == 0 && sigma == 0) throw std::invalid_argument("direction (0,0)");
  const std::int64_t g = std::gcd(rho, sigma);
  rho_ = rho / g;
  sigma_ = sigma / g;
}

std::int64_t Degree::value() const {
  if (!finite_) throw std::logic_error("value() of -infinity degree");
  return value_;
}

std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
  if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
  return a.value_ <=> b.value_;
}

std::set<Monomial> support(const BiPoly& f) {
  std::set<Monomial> out;
  for (const auto& [m, c] : f) out.insert(m);
  return out;
}

Degree v_deg(const BiPoly& f, const Direction& d) {
  if (f.is_zero()) return Degree::neg_infinity();
  std::int64_t best = d.weight(f.begin()->first);
  for (const auto& [m, c] : f) best = std::max(best, d.weight(m));
  return Degree(best);
}

BiPoly leading_form(const BiPoly& f, const Direction& d) {
  if (f.is_zero()) throw std::invalid_argument("leading_form of the zero polynomial");
  const std::int64_t top = v_deg(f, d).value();
  BiPoly out;
  for (const auto& [m, c] : f) {
    if (d.weight(m) == top) out.add(m, c);
  }
  return out;
}

HomogDecomp homog_decomp(const BiPoly& f, const Direction& d) {
  if (f.is_zero()) throw std::invalid_argument("homog_decomp of the zero polynomial");
  std::map<std::int64_t, BiPoly, std::greater<>> buckets;
  for (const auto& [m, c] : f) buckets[d.weight(m)].add(m, c);
  HomogDecomp out;
  for (auto& [deg, part] : buckets) out.parts.push_back({deg, std::move(part)});
  return out;
}

std::optional<std::int64_t> is_homogeneous(const BiPoly& f, const Direction& d) {
  if (f.is_zero()) return 0;
  const std::int64_t w = d.weight(f.begin()->first);
  for (const auto& [m, c] : f) {
    if (d.weight(m) != w) return std::nullopt;
  }
  return w;
}

Monomial leading_monomial(const BiPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("leading_monomial of the zero polynomial");
  Monomial best = f.begin()->first;
  for (const auto& [m, c] : f) {
    if (graded_lex_less(best, m)) best = m;
  }
  return best;
}

Rational leading_coefficient(const BiPoly& f) { return f.coeff(leading_monomial(f)); }

bool is_monic(const BiPoly& f) { return !f.is_zero() && leading_coefficient(f) == 1; }

std::optional<PowerRoot> mth_root(const BiPoly& f, unsigned m) {
  if (f.is_zero()) throw std::invalid_argument("mth_root of the zero polynomial");
  if (m == 0) throw std::invalid_argument("mth_root with m = 0");
  const Rational lambda = leading_coefficient(f);
  const BiPoly target = f * Rational(1 / lambda);
  if (m == 1) return PowerRoot{lambda, target};

  const Monomial lead = leading_monomial(f);
  const int mi = static_cast<int>(m);
  if (lead.x % mi != 0 || lead.y % mi != 0) return std::nullopt;
  const Monomial head{lead.x / mi, lead.y / mi};
  const Monomial head_pow{head.x * (mi - 1), head.y * (mi - 1)};

  // Each round fixes the next graded-lex term t of h from the leading term of
  // target - h^m, which must equal m * head^(m-1) * t.
  BiPoly h = BiPoly::term(1, head.x, head.y);
  Monomial last = head;
  for (;;) {
    const BiPoly residual = target - pow(h, m);
    if (residual.is_zero()) return PowerRoot{lambda, h};
    const Monomial r_lead = leading_monomial(residual);
    const Monomial next{r_lead.x - head_pow.x, r_lead.y - head_pow.y};
    if (next.x < 0 || next.y < 0 || !graded_lex_less(next, last)) return std::nullopt;
    h.add(next, residual.coeff(r_lead) / Rational(mi));
    last = next;
  }
}

PowerDecomposition power_decomposition(const BiPoly& f) {
  if (f.is_constant()) throw std::invalid_argument("power_decomposition of a constant");
  const Monomial lead = leading_monomial(f);
  const int g = std::gcd(lead.x, lead.y);
  for (int m = g; m >= 1; --m) {
    if (g % m != 0) continue;
    if (auto root = mth_root(f, static_cast<unsigned>(m))) {
      return {root->lambda, root->root, static_cast<unsigned>(m)};
    }
  }
  throw std::logic_error("unreachable: m = 1 always succeeds");
}

}  // namespace weyl
