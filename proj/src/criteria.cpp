#include "weyl/criteria.hpp"

#include <algorithm>
#include <numeric>

#include "weyl/errors.hpp"
#include "weyl/geometry.hpp"
#include "weyl/omega.hpp"
#include "weyl/poisson.hpp"

namespace weyl {

namespace detail {

namespace {

const Direction kQDegree{0, 1};

Work with_aut(Work w, const AutWord& word) {
  if (word.empty()) return w;
  w.cur = apply_to_pair(word, w.cur);
  w.trace.push_back(AutStep{word});
  return w;
}

void add_field(Work& w, std::string name, FieldValue v) { w.fields.push_back({std::move(name), std::move(v)}); }

Certificate finalize(const Work& w) {
  const auto base = detect_base(w.cur);
  if (!base) throw InvariantViolation(w.criterion + ": reduction did not reach a base shape");
  Certificate cert{w.criterion, w.fields, w.trace, w.original, w.cur, *base};
  const ReplayResult r = replay(cert);
  if (!r.ok) throw InvariantViolation(w.criterion + ": certificate does not replay: " + r.failure);
  return cert;
}

int q_degree(const WeylElement& x) {
  int out = 0;
  for (const auto& [m, c] : x) out = std::max(out, m.y);
  return out;
}

int p_degree(const WeylElement& x) {
  int out = 0;
  for (const auto& [m, c] : x) out = std::max(out, m.x);
  return out;
}

// x = alpha u + l(v) with u = q (lead_q) or p, and l a polynomial in the other.
std::optional<std::pair<Rational, UniPoly>> split_triangular(const WeylElement& x, bool lead_q) {
  const Monomial u = lead_q ? Monomial{0, 1} : Monomial{1, 0};
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : x) {
    if (m == u) continue;
    if (lead_q ? m.y != 0 : m.x != 0) return std::nullopt;
    const auto k = static_cast<std::size_t>(lead_q ? m.x : m.y);
    if (coeffs.size() <= k) coeffs.resize(k + 1, Rational(0));
    coeffs[k] = c;
  }
  if (x.coeff(u) == 0) return std::nullopt;
  return std::pair{x.coeff(u), UniPoly(coeffs)};
}

// Polynomial in p alone, as a UniPoly.
std::optional<UniPoly> poly_in_p(const WeylElement& x) {
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : x) {
    if (m.y != 0) return std::nullopt;
    if (coeffs.size() <= static_cast<std::size_t>(m.x)) coeffs.resize(m.x + 1, Rational(0));
    coeffs[m.x] = c;
  }
  return UniPoly(coeffs);
}

// beta with g = beta h, when it exists.
std::optional<Rational> ratio(const BiPoly& g, const BiPoly& h) {
  if (h.is_zero()) return std::nullopt;
  const Monomial lm = leading_monomial(h);
  const Rational beta = g.coeff(lm) / h.coeff(lm);
  if (beta == 0 || g != h * beta) return std::nullopt;
  return beta;
}

std::optional<Rational> ratio(const WeylElement& g, const WeylElement& h) {
  return ratio(phi(g), phi(h));
}

std::optional<Certificate> v01_first(const Work& work, const CriteriaOptions& opts, std::string& why);

// v01 on the first slot or after a swap/rotation; then the grading criterion.
// Used where the proofs say "by the earlier results".
std::optional<Certificate> structural(const Work& work, const CriteriaOptions& opts, std::string& why) {
  const auto& [z, w] = work.cur;
  const std::vector<std::pair<AutWord, bool>> orientations = {
      {{}, q_degree(z) <= 1},
      {{PairSwap{}}, q_degree(w) <= 1},
      {{Rot90{}}, p_degree(z) <= 1},
      {{PairSwap{}, Rot90{}}, p_degree(w) <= 1},
  };
  for (const auto& [word, applies] : orientations) {
    if (!applies) continue;
    if (auto c = v01_first(with_aut(work, word), opts, why)) return c;
  }
  return grading(work, opts, why);
}

std::vector<Direction> merged_fans(const WeylPair& pair) {
  std::vector<Direction> out = fan_directions(roof(pair.first));
  for (const auto& d : fan_directions(roof(pair.second))) {
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  }
  return out;
}

std::optional<Certificate> leading_bracket_at(const Work& work, const Direction& d,
                                              const CriteriaOptions& opts, std::string& why) {
  const BiPoly f = leading_form_weyl(work.cur.first, d);
  const BiPoly g = leading_form_weyl(work.cur.second, d);
  const OmegaClass cls = omega_classify(f, g);
  Work next = with_aut(work, cls.witness);
  add_field(next, "bracket_rho", d.rho());
  add_field(next, "bracket_sigma", d.sigma());
  add_field(next, "omega_case", to_string(cls.tag));

  Direction ds = d;
  for (const auto& t : cls.witness) {
    if (std::holds_alternative<Rot90>(t)) ds = ds.swapped();
  }
  if (leading_form_weyl(next.cur.first, ds) != cls.canonical.first ||
      leading_form_weyl(next.cur.second, ds) != cls.canonical.second) {
    throw InvariantViolation("leading forms do not follow the omega witness");
  }
  if (cls.tag == OmegaCase::Case1) {
    auto c = structural(next, opts, why);
    if (!c) throw InvariantViolation("leading bracket Case1 did not resolve: " + why);
    return c;
  }
  return finalize(next);
}

}  // namespace

std::optional<Certificate> homogeneous(const Work& work, const CriteriaOptions&, std::string& why) {
  for (const AutWord& word : {AutWord{}, AutWord{PairSwap{}}}) {
    const auto k = homogeneous_grade(word.empty() ? work.cur.first : work.cur.second);
    if (!k) continue;
    Work next = with_aut(work, word);
    const auto& [z, w] = next.cur;
    if (*k != 1 && *k != -1) throw InvariantViolation("Weyl pair with z in D_k, k != +-1");
    const bool plus = *k == 1;
    // k = 1: z = lambda q, w = mu p + l(q); k = -1: z = lambda p, w = mu q + l(p).
    const Monomial zm = plus ? Monomial{0, 1} : Monomial{1, 0};
    const auto split = split_triangular(w, !plus);
    if (!z.is_monomial() || z.begin()->first != zm || !split) {
      throw InvariantViolation("homogeneous z without the forced shape");
    }
    const Rational lambda = z.begin()->second;
    const Rational mu = split->first;
    if (lambda * mu != (plus ? -1 : 1)) throw InvariantViolation("homogeneous z: lambda mu wrong");
    add_field(next, "k", *k);
    add_field(next, "lambda", lambda);
    add_field(next, "mu", mu);
    add_field(next, "l", split->second);
    return finalize(next);
  }
  why = "neither z nor w lies in a single D_k";
  return std::nullopt;
}

namespace {

std::optional<Certificate> v01_first(const Work& work, const CriteriaOptions& opts, std::string& why) {
  const WeylElement z = work.cur.first;
  const int zdeg = q_degree(z);
  if (zdeg > 1) {
    why = "q-degree of z is " + std::to_string(zdeg);
    return std::nullopt;
  }
  Work next = work;
  if (zdeg == 0) {
    // z = alpha p + beta, w = q / alpha + g(p).
    const auto zp = poly_in_p(z);
    const auto split = split_triangular(next.cur.second, true);
    if (!zp || zp->degree() != 1 || !split || split->first * zp->coeff(1) != 1) {
      throw InvariantViolation("v01: z in K[p] without the forced shape");
    }
    add_field(next, "alpha", zp->coeff(1));
    add_field(next, "beta", zp->coeff(0));
    add_field(next, "g", split->second);
    return finalize(next);
  }

  const BiPoly fz = leading_form_weyl(z, kQDegree);
  std::vector<Rational> h;
  for (int round = 0;; ++round) {
    if (round > opts.max_steps) throw ResourceError("v01: too many reduction rounds");
    const WeylElement& w = next.cur.second;
    const int j = q_degree(w);
    if (j == 0) break;
    const BiPoly gw = leading_form_weyl(w, kQDegree);
    if (!poisson_bracket(fz, gw).is_zero()) throw InvariantViolation("v01: {f, g} != 0 with j > 0");
    const auto mu = ratio(gw, pow(fz, static_cast<unsigned>(j)));
    if (!mu) throw InvariantViolation("v01: leading form of w is not mu f^j");
    next.cur.second = w - pow(z, static_cast<unsigned>(j)) * *mu;
    next.trace.push_back(SubtractStep{*mu, static_cast<unsigned>(j), kQDegree, j});
    if (h.size() <= static_cast<std::size_t>(j)) h.resize(j + 1, Rational(0));
    h[j] += *mu;
    if (q_degree(next.cur.second) >= j && !next.cur.second.is_zero()) {
      throw InvariantViolation("v01: q-degree did not drop");
    }
  }
  // z = alpha q + g(p), w' = gamma - p / alpha.
  const auto split = split_triangular(z, true);
  const auto l = poly_in_p(next.cur.second);
  if (!split || !l || l->degree() != 1 || l->coeff(1) * split->first != -1) {
    throw InvariantViolation("v01: reduced pair without the forced shape");
  }
  add_field(next, "alpha", split->first);
  add_field(next, "g", split->second);
  add_field(next, "h", UniPoly(h));
  add_field(next, "gamma", l->coeff(0));
  return finalize(next);
}

}  // namespace

std::optional<Certificate> v01(const Work& work, const CriteriaOptions& opts, std::string& why) {
  if (auto c = v01_first(work, opts, why)) return c;
  if (q_degree(work.cur.second) > 1) {
    why = "q-degrees of z and w both exceed 1";
    return std::nullopt;
  }
  return v01_first(with_aut(work, {PairSwap{}}), opts, why);
}

std::optional<Certificate> grading(const Work& work, const CriteriaOptions&, std::string& why) {
  const auto& [z, w] = work.cur;
  const std::vector<std::pair<AutWord, bool>> orientations = {
      {{}, in_D_leq(z, 0)},
      {{Rot90{}}, in_D_geq(z, 0)},
      {{PairSwap{}}, in_D_leq(w, 0)},
      {{PairSwap{}, Rot90{}}, in_D_geq(w, 0)},
  };
  for (const auto& [word, applies] : orientations) {
    if (!applies) continue;
    Work next = with_aut(work, word);
    // z in D_{<=0}: z = lambda p + gamma, w = q / lambda + f(p).
    const auto zp = poly_in_p(next.cur.first);
    const auto split = split_triangular(next.cur.second, true);
    if (!zp || zp->degree() != 1 || !split || split->first * zp->coeff(1) != 1) {
      throw InvariantViolation("grading: D_{<=0} member without the forced shape");
    }
    add_field(next, "lambda", zp->coeff(1));
    add_field(next, "gamma", zp->coeff(0));
    add_field(next, "f", split->second);
    return finalize(next);
  }
  why = "neither z nor w lies in D_{>=0} or D_{<=0}";
  return std::nullopt;
}

std::optional<Certificate> d_ge_minus1(const Work& work, const CriteriaOptions& opts, std::string& why) {
  const auto& [z, w] = work.cur;
  // Lowest grade of the first slot after each orientation; rotation negates grades.
  const auto lowest = [](const WeylElement& x) { return graded_decomp(x).parts.back().grade; };
  const auto highest = [](const WeylElement& x) { return graded_decomp(x).parts.front().grade; };
  const std::vector<std::pair<AutWord, std::int64_t>> orientations = {
      {{}, lowest(z)},
      {{Rot90{}}, -highest(z)},
      {{PairSwap{}}, lowest(w)},
      {{PairSwap{}, Rot90{}}, -highest(w)},
  };
  std::vector<std::string> reasons;
  const auto note = [&](std::string r) {
    if (std::find(reasons.begin(), reasons.end(), r) == reasons.end()) reasons.push_back(std::move(r));
  };
  for (const auto& [word, low] : orientations) {
    Work next = with_aut(work, word);
    if (low >= 0) return grading(next, opts, why);
    const std::int64_t s = -low;
    const WeylElement zs = graded_decomp(next.cur.first).parts.back().component;
    if (s > 1) {
      if (!opts.assume_centralizer_cyclic) {
        note("D_{>=-" + std::to_string(s) + "} needs the centralizer flag");
        continue;
      }
      if (centralizer_falsifier(zs, opts.falsifier_bound)) {
        note("falsifier found C(z_{-" + std::to_string(s) + "}) != K[z_{-" + std::to_string(s) + "}]");
        continue;
      }
    }
    add_field(next, "s", s);
    bool declined = false;
    for (int round = 0; !in_D_geq(next.cur.second, 0); ++round) {
      if (round > opts.max_steps) throw ResourceError("D_{>=-s}: too many reduction rounds");
      const auto part = graded_decomp(next.cur.second).parts.back();
      const std::int64_t k = -part.grade;
      std::optional<Rational> alpha;
      WeylElement zd;
      if (k % s == 0) {
        zd = pow(next.cur.first, static_cast<unsigned>(k / s));
        alpha = ratio(part.component, graded_decomp(zd).parts.back().component);
      }
      if (!alpha) {
        if (s == 1) throw InvariantViolation("D_{>=-1}: lowest part of w is not in K[z_{-1}]");
        note("lowest part of w outside K[z_{-" + std::to_string(s) + "}]");
        declined = true;
        break;
      }
      next.cur.second = next.cur.second - zd * *alpha;
      next.trace.push_back(SubtractStep{*alpha, static_cast<unsigned>(k / s), std::nullopt, -k});
      if (!next.cur.second.is_zero() && lowest(next.cur.second) <= -k) {
        throw InvariantViolation("D_{>=-s}: lowest grade of w did not rise");
      }
    }
    if (declined) continue;
    if (auto c = grading(next, opts, why)) return c;
    throw InvariantViolation("D_{>=-s}: grading criterion failed after reduction: " + why);
  }
  why = "no orientation applies";
  for (std::size_t i = 0; i < reasons.size(); ++i) why = (i ? why + "; " : "") + reasons[i];
  return std::nullopt;
}

std::optional<Certificate> cf_kf_at(const Work& work, const Direction& d, const CriteriaOptions& opts,
                                    std::string& why);

std::optional<Certificate> two_homogeneous(const Work& work, const CriteriaOptions& opts, std::string& why) {
  for (const AutWord& word : {AutWord{}, AutWord{PairSwap{}}}) {
    const WeylElement& x = word.empty() ? work.cur.first : work.cur.second;
    const GradedDecomp gd = graded_decomp(x);
    if (gd.parts.size() > 2) continue;
    Work next = with_aut(work, word);
    if (gd.parts.size() == 1) return homogeneous(next, opts, why);
    // The tops of the two graded lines share one (r, s)-leading line.
    const auto top = [](const WeylElement& part) {
      Monomial best = part.begin()->first;
      for (const auto& [m, c] : part) best = std::max(best, m);
      return best;
    };
    const Monomial p1 = top(gd.parts[0].component);
    const Monomial p2 = top(gd.parts[1].component);
    std::int64_t r = p1.y - p2.y;
    std::int64_t s = p2.x - p1.x;
    if (r + s < 0) {
      r = -r;
      s = -s;
    }
    const Direction d(r, s);
    if (leading_form_weyl(next.cur.first, d).size() != 2) {
      throw InvariantViolation("two_homogeneous: leading form is not a binomial");
    }
    add_field(next, "r", d.rho());
    add_field(next, "s", d.sigma());
    return cf_kf_at(next, d, opts, why);
  }
  why = "z and w both have more than two graded parts";
  return std::nullopt;
}

std::optional<Certificate> support(const Work& work, const CriteriaOptions& opts, std::string& why) {
  for (const AutWord& word : {AutWord{}, AutWord{PairSwap{}}}) {
    const WeylElement& x = word.empty() ? work.cur.first : work.cur.second;
    for (const auto& d : fan_directions(roof(x))) {
      const BiPoly f = leading_form_weyl(x, d);
      bool fits = f.size() == 2;
      if (f.is_monomial()) {
        const Monomial m = f.begin()->first;
        fits = m.x >= 1 && m.y >= 1 && std::gcd(m.x, m.y) == 1;
      }
      if (!fits) continue;
      Work next = with_aut(work, word);
      add_field(next, "support_rho", d.rho());
      add_field(next, "support_sigma", d.sigma());
      if (auto c = cf_kf_at(next, d, opts, why)) return c;
    }
  }
  why = "no leading form is a binomial or a coprime mixed monomial";
  return std::nullopt;
}

std::optional<Certificate> leading_bracket(const Work& work, const CriteriaOptions& opts, std::string& why) {
  const BiPoly one = BiPoly::constant(1);
  for (const auto& d : merged_fans(work.cur)) {
    const BiPoly f = leading_form_weyl(work.cur.first, d);
    const BiPoly g = leading_form_weyl(work.cur.second, d);
    if (poisson_bracket(f, g) == one) return leading_bracket_at(work, d, opts, why);
  }
  why = "no fan direction has {f, g} = 1";
  return std::nullopt;
}

std::optional<Certificate> cf_kf_at(const Work& work, const Direction& d, const CriteriaOptions& opts,
                                    std::string& why) {
  const WeylElement z = work.cur.first;
  const BiPoly f = leading_form_weyl(z, d);
  const std::int64_t a = v_deg_weyl(z, d).value();
  if (a <= 0) {
    auto c = structural(work, opts, why);
    if (!c) throw InvariantViolation("cf_kf: a <= 0 did not resolve: " + why);
    return c;
  }
  const CentralizerGenerator cg = centralizer_generator(f, d);
  if (cg.m != 1) {
    why = "C(f) = K[h] with f = lambda h^" + std::to_string(cg.m);
    return std::nullopt;
  }
  Work next = work;
  add_field(next, "cf_rho", d.rho());
  add_field(next, "cf_sigma", d.sigma());
  const BiPoly one = BiPoly::constant(1);
  for (int round = 0;; ++round) {
    if (round > opts.max_steps) throw ResourceError("cf_kf: too many reduction rounds");
    const WeylElement& w = next.cur.second;
    const std::int64_t b = v_deg_weyl(w, d).value();
    // Nonpositive v-degree: w is already structural.
    if (b <= 0) {
      auto c = structural(next, opts, why);
      if (!c) throw InvariantViolation("cf_kf: b <= 0 did not resolve: " + why);
      return c;
    }
    // Leading forms bracket to 1.
    const BiPoly g = leading_form_weyl(w, d);
    const BiPoly br = poisson_bracket(f, g);
    if (br == one) return leading_bracket_at(next, d, opts, why);
    // Leading forms commute, so g is a multiple of a power of f.
    if (!br.is_zero()) throw InvariantViolation("cf_kf: {f, g} is neither 0 nor 1");
    if (b % a != 0) throw InvariantViolation("cf_kf: a does not divide b although C(f) = K[f]");
    const auto e = static_cast<unsigned>(b / a);
    const auto beta = ratio(g, pow(f, e));
    if (!beta) throw InvariantViolation("cf_kf: g is not beta f^(b/a)");
    next.cur.second = w - pow(z, e) * *beta;
    next.trace.push_back(SubtractStep{*beta, e, d, b});
    if (v_deg_weyl(next.cur.second, d) >= Degree(b)) {
      throw InvariantViolation("cf_kf: v-degree of w did not drop");
    }
  }
}

std::optional<Certificate> cf_kf(const Work& work, const CriteriaOptions& opts, std::string& why) {
  const WeylElement& z = work.cur.first;
  for (const auto& d : fan_directions(roof(z))) {
    const BiPoly f = leading_form_weyl(z, d);
    if (f.is_constant() || v_deg_weyl(z, d).value() == 0) continue;
    if (centralizer_generator(f, d).m != 1) continue;
    if (auto c = cf_kf_at(work, d, opts, why)) return c;
  }
  why = "no fan direction of z has C(f) = K[f]";
  return std::nullopt;
}

}  // namespace detail

namespace {

std::optional<Certificate> run(const char* name, detail::Impl impl, const WeylElement& z,
                               const WeylElement& w, const CriteriaOptions& opts, std::string* why) {
  if (!is_weyl_pair(z, w)) throw NotAWeylPairError("[z, w] != 1");
  detail::Work work{name, {z, w}, {z, w}, {}, {}};
  std::string reason;
  auto out = impl(work, opts, reason);
  if (why) *why = reason;
  return out;
}

}  // namespace

std::optional<Certificate> criterion_homogeneous(const WeylElement& z, const WeylElement& w, std::string* why) {
  return run("homogeneous", detail::homogeneous, z, w, {}, why);
}

std::optional<Certificate> criterion_v01(const WeylElement& z, const WeylElement& w, std::string* why) {
  return run("v01", detail::v01, z, w, {}, why);
}

std::optional<Certificate> criterion_grading(const WeylElement& z, const WeylElement& w, std::string* why) {
  return run("grading", detail::grading, z, w, {}, why);
}

std::optional<Certificate> criterion_D_ge_minus1(const WeylElement& z, const WeylElement& w,
                                                 const CriteriaOptions& opts, std::string* why) {
  return run("D_ge_minus1", detail::d_ge_minus1, z, w, opts, why);
}

std::optional<Certificate> criterion_two_homogeneous(const WeylElement& z, const WeylElement& w,
                                                     std::string* why) {
  return run("two_homogeneous", detail::two_homogeneous, z, w, {}, why);
}

std::optional<Certificate> criterion_support(const WeylElement& z, const WeylElement& w, std::string* why) {
  return run("support", detail::support, z, w, {}, why);
}

std::optional<Certificate> criterion_leading_bracket(const WeylElement& z, const WeylElement& w,
                                                     std::string* why) {
  return run("leading_bracket", detail::leading_bracket, z, w, {}, why);
}

std::optional<Certificate> criterion_cf_kf(const WeylElement& z, const WeylElement& w, std::string* why) {
  return run("cf_kf", detail::cf_kf, z, w, {}, why);
}

}  // namespace weyl
