#include "weyl/certificate.hpp"

#include <stdexcept>

namespace weyl {

namespace {

struct Affine {
  Rational a;  // coefficient of the variable
  Rational b;  // constant
};

// x = a v + b with a != 0, where v is p (var_x) or q.
std::optional<Affine> affine_in(const WeylElement& x, bool var_x) {
  const Monomial v = var_x ? Monomial{1, 0} : Monomial{0, 1};
  for (const auto& [m, c] : x) {
    if (m != v && m != Monomial{0, 0}) return std::nullopt;
  }
  if (x.coeff(v) == 0) return std::nullopt;
  return Affine{x.coeff(v), x.constant_term()};
}

struct Triangular {
  Rational alpha;
  UniPoly g;
};

// x = alpha u + g(v) where {u, v} = {q, p} (lead_q) or {p, q}.
std::optional<Triangular> triangular_in(const WeylElement& x, bool lead_q) {
  const Monomial u = lead_q ? Monomial{0, 1} : Monomial{1, 0};
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : x) {
    if (m == u) continue;
    if (lead_q ? m.y != 0 : m.x != 0) return std::nullopt;
    const int k = lead_q ? m.x : m.y;
    if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(k + 1, Rational(0));
    coeffs[k] = c;
  }
  if (x.coeff(u) == 0) return std::nullopt;
  return Triangular{x.coeff(u), UniPoly(coeffs)};
}

bool total_degree_at_most_one(const WeylElement& x) {
  for (const auto& [m, c] : x) {
    if (m.total() > 1) return false;
  }
  return true;
}

}  // namespace

std::string to_string(BaseCase b) {
  switch (b) {
    case BaseCase::PolyP: return "poly_p";
    case BaseCase::PolyQ: return "poly_q";
    case BaseCase::Linear: return "linear";
  }
  return "?";
}

const FieldValue* Certificate::find(const std::string& name) const {
  for (const auto& f : fields) {
    if (f.name == name) return &f.value;
  }
  return nullptr;
}

std::optional<BaseCase> detect_base(const WeylPair& pair) {
  const auto& [z, w] = pair;
  if ((affine_in(z, true) && triangular_in(w, true)) || (affine_in(w, true) && triangular_in(z, true))) {
    return BaseCase::PolyP;
  }
  if ((affine_in(z, false) && triangular_in(w, false)) ||
      (affine_in(w, false) && triangular_in(z, false))) {
    return BaseCase::PolyQ;
  }
  if (total_degree_at_most_one(z) && total_degree_at_most_one(w)) {
    const Rational det = z.coeff({1, 0}) * w.coeff({0, 1}) - z.coeff({0, 1}) * w.coeff({1, 0});
    if (det != 0) return BaseCase::Linear;
  }
  return std::nullopt;
}

std::pair<WeylElement, WeylElement> explicit_generators(const WeylPair& pair, BaseCase base) {
  const auto& [z, w] = pair;
  const auto one = [](const Rational& c) { return WeylElement::constant(c); };
  if (base == BaseCase::PolyP || base == BaseCase::PolyQ) {
    const bool var_x = base == BaseCase::PolyP;
    const bool z_affine = affine_in(z, var_x) && triangular_in(w, var_x);
    const WeylElement& a_slot = z_affine ? z : w;
    const WeylElement& t_slot = z_affine ? w : z;
    const auto aff = affine_in(a_slot, var_x);
    const auto tri = triangular_in(t_slot, var_x);
    if (!aff || !tri) throw std::invalid_argument("pair is not of the recorded base shape");
    // v = (A - b) / a, u = (T - g(v)) / alpha.
    const WeylElement v = (a_slot - one(aff->b)) * Rational(1 / aff->a);
    const WeylElement u = (t_slot - evaluate(tri->g, v)) * Rational(1 / tri->alpha);
    return var_x ? std::pair{v, u} : std::pair{u, v};
  }
  if (!total_degree_at_most_one(z) || !total_degree_at_most_one(w)) {
    throw std::invalid_argument("pair is not affine");
  }
  const Rational a = z.coeff({1, 0}), b = z.coeff({0, 1});
  const Rational d = w.coeff({1, 0}), e = w.coeff({0, 1});
  const Rational det = a * e - b * d;
  if (det == 0) throw std::invalid_argument("affine pair with zero determinant");
  const WeylElement z0 = z - one(z.constant_term());
  const WeylElement w0 = w - one(w.constant_term());
  const WeylElement p = (e * z0 - b * w0) * Rational(1 / det);
  const WeylElement q = (a * w0 - d * z0) * Rational(1 / det);
  return {p, q};
}

ReplayResult replay(const Certificate& cert) {
  ReplayResult out;
  WeylPair cur = cert.initial;
  if (!is_weyl_pair(cur.first, cur.second)) {
    out.failure = "initial pair is not a Weyl pair";
    return out;
  }
  for (std::size_t i = 0; i < cert.trace.size(); ++i) {
    if (const auto* a = std::get_if<AutStep>(&cert.trace[i])) {
      cur = apply_to_pair(a->word, cur);
    } else {
      const auto& s = std::get<SubtractStep>(cert.trace[i]);
      cur.second = cur.second - pow(cur.first, s.exponent) * s.beta;
    }
    if (!is_weyl_pair(cur.first, cur.second)) {
      out.failure = "step " + std::to_string(i) + " broke [z, w] = 1";
      return out;
    }
  }
  if (cur != cert.final_pair) {
    out.failure = "trace does not end at the recorded final pair";
    return out;
  }
  if (detect_base(cur) != cert.base) {
    out.failure = "final pair is not of the recorded base shape";
    return out;
  }
  const auto [p, q] = explicit_generators(cur, cert.base);
  if (p != weyl_p() || q != weyl_q()) {
    out.failure = "explicit generator formulas do not give p and q";
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace weyl
