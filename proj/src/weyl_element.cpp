#include "weyl/weyl_element.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "weyl/errors.hpp"
#include "weyl/linalg.hpp"

namespace weyl {

namespace {

// Coefficient (-1)^j j! C(i1,j) C(s2,j) of the j-th reordering term.
Integer reorder_coeff(unsigned i1, unsigned s2, unsigned j) {
  Integer c = factorial(j) * binomial(i1, j) * binomial(s2, j);
  if (j % 2 == 1) c = -c;
  return c;
}

}  // namespace

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  WeylElement out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      const Rational base = ca * cb;
      const unsigned i1 = static_cast<unsigned>(ma.y);
      const unsigned s2 = static_cast<unsigned>(mb.x);
      const unsigned top = std::min(i1, s2);
      for (unsigned j = 0; j <= top; ++j) {
        const int jj = static_cast<int>(j);
        out.add({ma.x + mb.x - jj, ma.y + mb.y - jj}, base * Rational(reorder_coeff(i1, s2, j)));
      }
    }
  }
  return out;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) { return weyl_mul(a, b); }

WeylElement pow(const WeylElement& z, unsigned n) {
  WeylElement result = WeylElement::constant(1);
  WeylElement base = z;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

BiPoly phi(const WeylElement& z) {
  BiPoly out;
  for (const auto& [m, c] : z) out.add(m, c);
  return out;
}

WeylElement phi_inv(const BiPoly& f) {
  WeylElement out;
  for (const auto& [m, c] : f) out.add(m, c);
  return out;
}

WeylElement in_q(const UniPoly& f) {
  WeylElement out;
  for (int i = 0; i <= f.degree(); ++i) out.add({0, i}, f.coeff(static_cast<unsigned>(i)));
  return out;
}

WeylElement in_p(const UniPoly& f) {
  WeylElement out;
  for (int i = 0; i <= f.degree(); ++i) out.add({i, 0}, f.coeff(static_cast<unsigned>(i)));
  return out;
}

GradedDecomp graded_decomp(const WeylElement& z) {
  if (z.is_zero()) throw std::invalid_argument("graded_decomp of zero");
  std::map<std::int64_t, WeylElement, std::greater<>> buckets;
  for (const auto& [m, c] : z) buckets[grade_of(m)].add(m, c);
  GradedDecomp out;
  for (auto& [k, part] : buckets) out.parts.push_back({k, std::move(part)});
  return out;
}

bool in_D_geq(const WeylElement& z, std::int64_t k) {
  return std::all_of(z.begin(), z.end(), [k](const auto& t) { return grade_of(t.first) >= k; });
}

bool in_D_leq(const WeylElement& z, std::int64_t k) {
  return std::all_of(z.begin(), z.end(), [k](const auto& t) { return grade_of(t.first) <= k; });
}

std::optional<std::int64_t> homogeneous_grade(const WeylElement& z) {
  if (z.is_zero()) return std::nullopt;
  const std::int64_t k = grade_of(z.begin()->first);
  return in_D_geq(z, k) && in_D_leq(z, k) ? std::optional(k) : std::nullopt;
}

Degree v_deg_weyl(const WeylElement& z, const Direction& d) { return v_deg(phi(z), d); }

BiPoly leading_form_weyl(const WeylElement& z, const Direction& d) {
  if (z.is_zero()) throw std::invalid_argument("leading form of zero");
  return leading_form(phi(z), d);
}

WeylElement eval_at_pq(const UniPoly& f) { return evaluate(f, weyl_p() * weyl_q()); }

bool shift_identity_check(const UniPoly& f, unsigned k) {
  const WeylElement qk = pow(weyl_q(), k);
  const WeylElement lhs = qk * eval_at_pq(f);
  const WeylElement rhs = eval_at_pq(f.shifted(-Rational(k))) * qk;
  return lhs == rhs;
}

std::optional<WeylElement> centralizer_falsifier(const WeylElement& z, int bound) {
  const auto k = homogeneous_grade(z);
  if (!k || *k == 0) {
    throw std::invalid_argument("centralizer_falsifier needs z homogeneous of nonzero grade");
  }
  for (int j = -bound; j <= bound; ++j) {
    // Basis of D_j truncated at exponent `bound`: p^i q^(i+j).
    std::vector<Monomial> basis;
    for (int i = 0; i <= bound; ++i) {
      if (i + j >= 0 && i + j <= bound) basis.push_back({i, i + j});
    }
    if (basis.empty()) continue;
    std::vector<WeylElement> images;
    std::map<Monomial, std::size_t> rows;
    for (const auto& m : basis) {
      images.push_back(commutator(z, WeylElement::term(1, m.x, m.y)));
      for (const auto& [mm, c] : images.back()) rows.try_emplace(mm, rows.size());
    }
    RationalMatrix a(rows.size(), std::vector<Rational>(basis.size(), Rational(0)));
    for (std::size_t col = 0; col < images.size(); ++col) {
      for (const auto& [mm, c] : images[col]) a[rows.at(mm)][col] = c;
    }
    const auto kernel = nullspace(a, basis.size());
    // K[z] meets D_j in span(z^(j/k)) when k | j and j/k >= 0.
    std::optional<WeylElement> power;
    if (j % *k == 0 && j / *k >= 0) power = pow(z, static_cast<unsigned>(j / *k));
    for (const auto& v : kernel) {
      WeylElement cand;
      for (std::size_t i = 0; i < basis.size(); ++i) cand.add(basis[i], v[i]);
      if (cand.is_zero()) continue;
      bool in_kz = false;
      if (power && !power->is_zero()) {
        const auto& [pm, pc] = *power->begin();
        const Rational ratio = cand.coeff(pm) / pc;
        in_kz = cand == *power * ratio;
      }
      if (!in_kz) return cand;
    }
  }
  return std::nullopt;
}

DixmierCheck dixmier_leading_check(const WeylElement& z, const WeylElement& w,
                                   const Direction& d) {
  if (z.is_zero() || w.is_zero()) throw std::invalid_argument("dixmier_leading_check on zero");
  if (d.sum() <= 0) throw std::invalid_argument("dixmier_leading_check needs rho + sigma > 0");
  const BiPoly f = leading_form_weyl(z, d);
  const BiPoly g = leading_form_weyl(w, d);
  DixmierCheck out{};
  out.product_ok = leading_form_weyl(z * w, d) == f * g;

  const BiPoly fg_bracket = diff_x(f) * diff_y(g) - diff_y(f) * diff_x(g);
  const WeylElement zw = commutator(z, w);
  const std::int64_t bound = v_deg_weyl(z, d).value() + v_deg_weyl(w, d).value() - d.sum();
  if (!fg_bracket.is_zero()) {
    out.bracket_case = BracketCase::Eq;
    out.bracket_ok = !zw.is_zero() && leading_form_weyl(zw, d) == fg_bracket &&
                     v_deg_weyl(zw, d) == Degree(bound);
  } else {
    out.bracket_case = BracketCase::StrictDrop;
    out.bracket_ok = v_deg_weyl(zw, d) < Degree(bound);
  }
  return out;
}

}  // namespace weyl
