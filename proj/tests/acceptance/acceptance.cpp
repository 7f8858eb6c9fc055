// One line per acceptance criterion. Usage: acceptance [N ...] [--regen-golden]

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include "../support/oracles.hpp"
#include "../support/random.hpp"
#include "weyl/certificate.hpp"
#include "weyl/cli/app.hpp"
#include "weyl/cli/expr.hpp"
#include "weyl/criteria.hpp"
#include "weyl/dc_check.hpp"
#include "weyl/errors.hpp"
#include "weyl/geometry.hpp"
#include "weyl/omega.hpp"
#include "weyl/poisson.hpp"
#include "weyl/transforms.hpp"

using namespace weyl;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
  std::vector<std::string> info;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string show(const WeylElement& z) { return cli::format(z); }
std::string show(const BiPoly& f) { return cli::format(f); }

std::int64_t vdeg(const BiPoly& f, const Direction& d) {
  std::int64_t best = INT64_MIN;
  for (const auto& [m, c] : f) best = std::max(best, d.weight(m));
  return best;
}

// ---------------------------------------------------------------------------

Result weyl_kernel() {
  Result r;
  gen::Rng rng(101);
  if (commutator(weyl_p(), weyl_q()) != WeylElement::constant(1)) r.fail("[p, q] != 1");
  for (int i = 0; i < 300; ++i) {
    const auto a = rng.weyl(6, 5), b = rng.weyl(6, 5), c = rng.weyl(6, 5);
    if ((a * b) * c != a * (b * c)) {
      r.fail("associativity fails for a = " + show(a));
      break;
    }
  }
  for (int i = 0; i < 500; ++i) {
    const auto m1 = rng.monomial(5), m2 = rng.monomial(5);
    const auto a = WeylElement::term(1, m1.x, m1.y), b = WeylElement::term(1, m2.x, m2.y);
    if (weyl_mul(a, b) != oracle::rewrite_product(a, b)) {
      r.fail("closed form disagrees with rewriting on " + show(a) + " * " + show(b));
      break;
    }
  }
  r.detail = r.ok ? "[p,q]=1; 300 associative triples; 500 monomial products match rewriting" : r.detail;
  return r;
}

Result dixmier() {
  Result r;
  gen::Rng rng(202);
  int eq = 0, drop = 0;
  for (int i = 0; i < 500; ++i) {
    const auto z = rng.weyl(4, 4);
    WeylElement w = rng.weyl(4, 4);
    if (i % 2 == 1) w = z * z * rng.nonzero_rational() + z * rng.rational() + rng.weyl(2, 1);
    if (w.is_zero()) w = weyl_q();
    const Direction d = rng.positive_direction(5);
    const BiPoly f = oracle::leading_form(phi(z), d.rho(), d.sigma());
    const BiPoly g = oracle::leading_form(phi(w), d.rho(), d.sigma());
    const BiPoly fg = oracle::det_bracket(f, g);
    const WeylElement br = oracle::rewrite_commutator(z, w);
    const std::int64_t bound = vdeg(f, d) + vdeg(g, d) - d.sum();
    bool expect_ok;
    BracketCase expect_case;
    if (!fg.is_zero()) {
      expect_case = BracketCase::Eq;
      expect_ok = !br.is_zero() && vdeg(phi(br), d) == bound &&
                  oracle::leading_form(phi(br), d.rho(), d.sigma()) == fg;
      ++eq;
    } else {
      expect_case = BracketCase::StrictDrop;
      expect_ok = br.is_zero() || vdeg(phi(br), d) < bound;
      ++drop;
    }
    const bool product_ok = oracle::leading_form(phi(oracle::rewrite_product(z, w)), d.rho(), d.sigma()) == f * g;
    const DixmierCheck lib = dixmier_leading_check(z, w, d);
    if (!product_ok || !expect_ok) {
      r.fail("leading-form identity fails on z = " + show(z) + ", w = " + show(w));
      break;
    }
    if (!lib.product_ok || !lib.bracket_ok || lib.bracket_case != expect_case) {
      r.fail("library check disagrees on z = " + show(z) + ", w = " + show(w));
      break;
    }
  }
  if (r.ok) r.detail = "500 triples (" + std::to_string(eq) + " Eq, " + std::to_string(drop) + " StrictDrop)";
  return r;
}

Result poisson_laws() {
  Result r;
  gen::Rng rng(303);
  const auto pb = [](const BiPoly& a, const BiPoly& b) { return poisson_bracket(a, b); };
  for (int i = 0; i < 500 && r.ok; ++i) {
    const auto f = rng.poly(4, 4), g = rng.poly(4, 4), h = rng.poly(4, 4);
    if (pb(f, g) != oracle::det_bracket(f, g)) r.fail("bracket disagrees with the determinant oracle");
    if (pb(f, g) != -pb(g, f)) r.fail("antisymmetry fails");
    if (pb(f * g, h) != f * pb(g, h) + g * pb(f, h)) r.fail("Leibniz fails");
    if (!(pb(f, pb(g, h)) + pb(g, pb(h, f)) + pb(h, pb(f, g))).is_zero()) r.fail("Jacobi fails");
  }
  for (int i = 0; i < 200 && r.ok; ++i) {
    const Direction d = rng.direction(3);
    const BiPoly f = rng.homogeneous(d, 5, 3), g = rng.homogeneous(d, 5, 3);
    const auto u = is_homogeneous(f, d), v = is_homogeneous(g, d);
    const BiPoly b = oracle::det_bracket(f, g);
    if (!u || !v) {
      r.fail("generator produced a non-homogeneous polynomial");
    } else if (!b.is_zero() && is_homogeneous(b, d) != std::optional<std::int64_t>(*u + *v - d.sum())) {
      r.fail("grading law fails for f = " + show(f) + ", g = " + show(g));
    }
  }
  if (r.ok) r.detail = "500 triples satisfy the laws; 200 homogeneous pairs obey the grading law";
  return r;
}

Result commuting_pairs() {
  Result r;
  gen::Rng rng(404);
  for (int i = 0; i < 200 && r.ok; ++i) {
    const Direction d = rng.direction(3);
    BiPoly h;
    do h = rng.homogeneous(d, 3, 3);
    while (h.is_constant());
    const BiPoly f = pow(h, rng.uniform(1, 3)) * rng.nonzero_rational();
    const BiPoly g = pow(h, rng.uniform(1, 3)) * rng.nonzero_rational();
    if (!oracle::det_bracket(f, g).is_zero()) {
      r.fail("constructed pair does not commute");
      break;
    }
    try {
      const LemmaCheck c = lemma_fu_gv_check(f, g, d);
      if (!c.bracket_zero || !c.power_relation_holds) r.fail("commuting pair reported as non-commuting");
    } catch (const InvariantViolation& e) {
      r.fail(std::string("desynchronized: ") + e.what());
    }
  }
  int controls = 0;
  while (controls < 200 && r.ok) {
    const Direction d = rng.direction(3);
    const BiPoly f = rng.homogeneous(d, 3, 3), g = rng.homogeneous(d, 3, 3);
    if (f.is_constant() || g.is_constant() || oracle::det_bracket(f, g).is_zero()) continue;
    ++controls;
    try {
      const LemmaCheck c = lemma_fu_gv_check(f, g, d);
      if (c.bracket_zero || c.power_relation_holds) r.fail("control reported as commuting: " + show(f));
    } catch (const InvariantViolation& e) {
      r.fail(std::string("desynchronized: ") + e.what());
    }
  }
  if (r.ok) r.detail = "200 commuting pairs and 200 controls, no desynchronization";
  return r;
}

Result pentagon() {
  Result r;
  const WeylElement z = cli::parse_weyl("p + p^2 q^3 + p^3 q + p^4 q^2 + p^5", 64);
  const LatticePolygon expect_ntp{{{0, 0}, {5, 0}, {4, 2}, {2, 3}, {0, 1}}};
  const RoofChain expect_roof{{{5, 0}, {4, 2}, {2, 3}}};
  if (ntp(z) != expect_ntp) r.fail("pentagon differs");
  if (roof(z) != expect_roof) r.fail("roof differs");
  if (ntp_from_roof(roof(z)) != expect_ntp) r.fail("NTP rebuilt from the roof differs");
  if (r.ok) r.detail = "pentagon (0,0),(5,0),(4,2),(2,3),(0,1); roof (5,0)-(4,2)-(2,3)";
  return r;
}

Result geometry() {
  Result r;
  gen::Rng rng(606);
  int plus = 0, minus = 0;
  for (int i = 0; i < 500 && r.ok; ++i) {
    WeylElement z;
    const int kind = i % 4;
    const int n = rng.uniform(1, 5);
    for (int t = 0; t < n; ++t) {
      int a = rng.uniform(0, 5), b = rng.uniform(0, 5);
      if (kind == 0 && b < a) std::swap(a, b);
      if (kind == 1 && a < b) std::swap(a, b);
      if (kind == 2) b = a;
      z.add({a, b}, rng.nonzero_rational());
    }
    if (z.is_zero()) z = weyl_p() * weyl_q();
    bool sup_plus = true, sup_minus = true;
    for (const auto& [m, c] : z) {
      sup_plus = sup_plus && m.y >= m.x;
      sup_minus = sup_minus && m.x >= m.y;
    }
    try {
      const GeometryEquiv gp = grading_geometry_equiv(z);
      const GeometryEquiv gm = grading_geometry_equiv_minus(z);
      if (!gp.all_agree() || !gm.all_agree() || gp.support != sup_plus || gm.support != sup_minus) {
        r.fail("predicates disagree on " + show(z));
      }
      plus += sup_plus;
      minus += sup_minus;
    } catch (const InvariantViolation& e) {
      r.fail(std::string(e.what()) + " on " + show(z));
    }
    const RoofChain top = roof(z);
    const std::set<Point> got(top.points.begin(), top.points.end());
    if (got != oracle::roof_sweep(support_points(z), 40)) r.fail("roof differs from the sweep on " + show(z));
  }
  if (r.ok) {
    r.detail = "500 elements (" + std::to_string(plus) + " in V+, " + std::to_string(minus) +
               " in V-), five predicates agree; roofs match the sweep";
  }
  return r;
}

Result omega() {
  Result r;
  gen::Rng rng(707);
  const BiPoly X = poly_x(), Y = poly_y();
  for (int cs = 1; cs <= 4 && r.ok; ++cs) {
    for (int i = 0; i < 200 && r.ok; ++i) {
      PoissonPair canon;
      if (cs == 1) {
        canon = {X, Y};
      } else if (cs == 2) {
        Rational a, b, c, d;
        do {
          a = rng.nonzero_rational();
          b = rng.nonzero_rational();
          c = rng.nonzero_rational();
          d = (1 + b * c) / a;
        } while (d == 0);
        canon = {a * X + b * Y, c * X + d * Y};
      } else if (cs == 3) {
        canon = {X + BiPoly::term(rng.nonzero_rational(), 0, rng.uniform(1, 4)), Y};
      } else {
        canon = {X + BiPoly::constant(rng.nonzero_rational()), Y};
      }
      const AutWord word = rng.g1_word(rng.uniform(0, 6), true);
      const PoissonPair moved = apply_to_poisson_pair(word, canon);
      const OmegaClass c = omega_classify(moved.first, moved.second);
      if (static_cast<int>(c.tag) + 1 != cs) {
        r.fail("case " + std::to_string(cs) + " classified as " + to_string(c.tag) + " after " + format_word(word));
      } else if (apply_to_poisson_pair(c.witness, moved) != c.canonical) {
        r.fail("witness does not replay after " + format_word(word));
      }
    }
  }
  if (r.ok) r.detail = "800 pairs through random words of length <= 6: tags recovered, witnesses replay";
  return r;
}

UniPoly compose_scaled(const UniPoly& l, const Rational& inv) {
  // l(inv * X)
  std::vector<Rational> c(l.coeffs());
  Rational s = 1;
  for (auto& x : c) {
    x *= s;
    s *= inv;
  }
  return UniPoly(c);
}

Result explicit_generators_criterion() {
  Result r;
  gen::Rng rng(808);
  std::map<std::string, int> seen;
  for (int i = 0; i < 200 && r.ok; ++i) {
    const Rational alpha = rng.nonzero_rational();
    const UniPoly g = i % 10 == 0 ? UniPoly{} : rng.unipoly(rng.uniform(0, 5));
    UniPoly h = i % 7 == 0 ? UniPoly{} : rng.unipoly(rng.uniform(1, 4));
    if (!h.is_zero()) h = h - UniPoly{h.coeff(0)};
    const Rational gamma = i % 5 == 0 ? Rational(0) : rng.rational();
    const WeylElement z = weyl_q() * alpha + in_p(g);
    const WeylElement w = WeylElement::constant(gamma) - weyl_p() * Rational(1 / alpha) + evaluate(h, z);
    if (!is_weyl_pair(z, w)) {
      r.fail("constructed pair is not a Weyl pair");
      break;
    }
    const DCReport rep = dc_check(z, w);
    if (rep.outcome != Outcome::Generates) {
      r.fail("verdict " + to_string(rep.outcome) + " on z = " + show(z) + ", w = " + show(w));
      break;
    }
    const Certificate& cert = *rep.certificate;
    ++seen[cert.criterion];
    const bool swapped = !cert.trace.empty() && std::holds_alternative<AutStep>(cert.trace.front());
    Rational a2, c2;
    UniPoly g2, h2;
    if (cert.criterion == "v01" && !swapped) {
      a2 = std::get<Rational>(*cert.find("alpha"));
      g2 = std::get<UniPoly>(*cert.find("g"));
      h2 = std::get<UniPoly>(*cert.find("h"));
      c2 = std::get<Rational>(*cert.find("gamma"));
    } else if (cert.criterion == "homogeneous") {
      const auto k = std::get<std::int64_t>(*cert.find("k"));
      const auto lambda = std::get<Rational>(*cert.find("lambda"));
      const auto mu = std::get<Rational>(*cert.find("mu"));
      const auto l = std::get<UniPoly>(*cert.find("l"));
      if (k == 1 && !swapped) {
        a2 = lambda;
        c2 = l.coeff(0);
        h2 = compose_scaled(l, Rational(1 / lambda)) - UniPoly{c2};
      } else if (k == -1 && swapped) {
        a2 = -mu;
        g2 = UniPoly{} - l;
      } else {
        r.fail("unexpected homogeneous orientation");
        break;
      }
    } else {
      r.fail("unexpected criterion " + cert.criterion);
      break;
    }
    if (a2 != alpha || g2 != g || h2 != h || c2 != gamma) {
      r.fail("certificate does not recover (alpha, gamma, g, h) for z = " + show(z) + ", w = " + show(w));
    }
    if (!replay(cert).ok) r.fail("certificate does not replay");
  }
  if (r.ok) {
    r.detail = "200 instances generate and recover (alpha, gamma, g, h) exactly";
    for (const auto& [k, v] : seen) r.info.push_back(k + ": " + std::to_string(v));
  }
  return r;
}

Result step_loop() {
  Result r;
  gen::Rng rng(909);
  int subtractions = 0;
  for (int i = 0; i < 200 && r.ok; ++i) {
    const int n = rng.uniform(1, 3);
    const Rational a = rng.nonzero_rational();
    WeylElement z = weyl_q() * a + WeylElement::term(rng.nonzero_rational(), n, 0) + in_p(rng.unipoly(n - 1));
    WeylElement w = weyl_p() * Rational(-1 / a);
    const AutWord word = rng.g1_word(rng.uniform(0, 3), false);
    std::tie(z, w) = apply_to_pair(word, {z, w});
    const int terms = rng.uniform(1, 3);
    for (int t = 0; t < terms; ++t) w += pow(z, rng.uniform(1, 4)) * rng.nonzero_rational();
    if (!is_weyl_pair(z, w)) {
      r.fail("constructed pair is not a Weyl pair");
      break;
    }
    std::string why;
    const auto cert = criterion_cf_kf(z, w, &why);
    if (!cert) {
      r.fail("loop declined on z = " + show(z) + ", w = " + show(w) + ": " + why);
      break;
    }
    // Recompute the v-degree before and after each subtraction.
    WeylPair cur = cert->initial;
    for (const auto& s : cert->trace) {
      if (const auto* au = std::get_if<AutStep>(&s)) {
        cur = apply_to_pair(au->word, cur);
        continue;
      }
      const auto& sub = std::get<SubtractStep>(s);
      WeylElement next = cur.second - pow(cur.first, sub.exponent) * sub.beta;
      if (sub.direction && cert->criterion == "cf_kf") {
        const std::int64_t before = vdeg(phi(cur.second), *sub.direction);
        if (!next.is_zero() && vdeg(phi(next), *sub.direction) >= before) {
          r.fail("v-degree did not drop");
        }
        ++subtractions;
      }
      cur.second = next;
      if (!is_weyl_pair(cur.first, cur.second)) r.fail("a step broke [z, w] = 1");
    }
    if (!replay(*cert).ok) r.fail("trace does not replay");
    if (dc_check(z, w).outcome != Outcome::Generates) r.fail("dc_check verdict is not Generates");
  }
  if (r.ok) r.detail = "200 pairs, " + std::to_string(subtractions) + " subtractions, all strictly decreasing";
  return r;
}

Result no_go() {
  Result r;
  gen::Rng rng(1010);
  std::vector<WeylElement> zs = {cli::parse_weyl("p q", 8), cli::parse_weyl("p^2 q^2", 8),
                                 cli::parse_weyl("p q + p^3 q^3", 8)};
  while (zs.size() < 50) {
    const int i = rng.uniform(1, 3);
    const bool plus = rng.coin();
    WeylElement z = WeylElement::term(rng.nonzero_rational(), i, i);
    for (int t = rng.uniform(0, 3); t > 0; --t) {
      const int a = rng.uniform(0, i - 1), b = a + rng.uniform(0, 2);
      z.add(plus ? Monomial{a, b} : Monomial{b, a}, rng.nonzero_rational());
    }
    zs.push_back(z);
  }
  for (const auto& z : zs) {
    const DCReport rep = dc_check(z, weyl_q());
    if (rep.outcome != Outcome::NoPartnerPossible) {
      r.fail("verdict " + to_string(rep.outcome) + " for z = " + show(z));
      break;
    }
    if (oracle::partner_exists(z, 4)) {
      r.fail("exhaustive search found a partner of " + show(z));
      break;
    }
  }
  if (r.ok) r.detail = "50 diagonal-vertex elements: NoPartnerPossible, no partner with exponents <= 4";
  return r;
}

Result shift_identity() {
  Result r;
  gen::Rng rng(1111);
  for (int i = 0; i < 100 && r.ok; ++i) {
    const UniPoly f = rng.unipoly(rng.uniform(0, 5));
    for (unsigned k = 0; k <= 5 && r.ok; ++k) {
      const WeylElement qk = WeylElement::term(1, 0, static_cast<int>(k));
      const WeylElement lhs = oracle::rewrite_product(qk, oracle::at_pq(f));
      const WeylElement rhs = oracle::rewrite_product(oracle::at_pq(f.shifted(-Rational(k))), qk);
      if (lhs != rhs || !shift_identity_check(f, k)) r.fail("identity fails at k = " + std::to_string(k));
    }
  }
  if (r.ok) r.detail = "100 polynomials, k = 0..5";
  return r;
}

Result automorphisms() {
  Result r;
  gen::Rng rng(1212);
  int equivariant = 0, top_equivariant = 0, scale_only = 0, scale_only_ok = 0;
  std::string first_counterexample;
  for (int i = 0; i < 300; ++i) {
    const AutWord word = rng.aut_word(rng.uniform(1, 3));
    const auto z = rng.weyl(3, 3), w = rng.weyl(3, 3);
    if (apply_aut(word, commutator(z, w)) != commutator(apply_aut(word, z), apply_aut(word, w))) {
      r.fail("commutator not preserved by " + format_word(word));
    }
    const BiPoly f = phi(z), g = phi(w);
    if (apply_poisson_aut(word, poisson_bracket(f, g)) !=
        poisson_bracket(apply_poisson_aut(word, f), apply_poisson_aut(word, g))) {
      r.fail("Poisson bracket not preserved by " + format_word(word));
    }
    if (jacobian_det(word) != 1 ||
        oracle::det_bracket(apply_poisson_aut(word, poly_x()), apply_poisson_aut(word, poly_y())) !=
            BiPoly::constant(1)) {
      r.fail("Jacobian of " + format_word(word) + " is not 1");
    }

    const AutWord g1 = rng.g1_word(rng.uniform(1, 4), false);
    const BiPoly lhs = apply_poisson_aut(g1, phi(z));
    const BiPoly rhs = phi(apply_aut(g1, z));
    const bool has_rot = !std::all_of(g1.begin(), g1.end(), [](const AutToken& t) {
      return std::holds_alternative<Scale>(t);
    });
    if (!has_rot) {
      ++scale_only;
      scale_only_ok += lhs == rhs;
    }
    if (lhs == rhs) {
      ++equivariant;
    } else if (first_counterexample.empty()) {
      first_counterexample = "word " + format_word(g1) + ", z = " + show(z) + ": " + show(lhs) + " vs " + show(rhs);
    }
    if (z.is_zero() || oracle::leading_form(lhs, 1, 1) == oracle::leading_form(rhs, 1, 1)) ++top_equivariant;

    const int k = rng.uniform(-3, 3);
    WeylElement x;
    for (int t = 0; t < 3; ++t) {
      const int a = rng.uniform(std::max(0, -k), 3);
      x.add({a, a + k}, rng.nonzero_rational());
    }
    if (!x.is_zero() && homogeneous_grade(apply_aut({Rot90{}}, x)) != std::optional<std::int64_t>(-k)) {
      r.fail("psi_0 does not map D_" + std::to_string(k) + " into D_" + std::to_string(-k));
    }
  }
  if (equivariant != 300) {
    r.fail("Phi-equivariance holds on " + std::to_string(equivariant) + "/300 G1 words; first failure: " +
           first_counterexample);
  }
  r.info.push_back("Phi-equivariance on Scale-only words: " + std::to_string(scale_only_ok) + "/" +
                   std::to_string(scale_only));
  r.info.push_back("top total-degree parts of both sides agree: " + std::to_string(top_equivariant) + "/300");
  if (r.ok) r.detail = "300 words: brackets preserved, Jacobian 1, Phi-equivariant, psi_0 negates grades";
  return r;
}

// ---------------------------------------------------------------------------

struct Scenario {
  std::string file;
  std::vector<std::string> args;
  int exit_code;
};

const std::vector<Scenario>& scenarios() {
  static const std::vector<Scenario> s = {
      {"01-dc-check-p-q.txt", {"dc-check", "p", "q"}, 0},
      {"02-dc-check-v01.txt", {"dc-check", "p^2 + 2 q + 1", "3 - 1/2 p + (p^2 + 2 q + 1)^2 + 5 (p^2 + 2 q + 1)"}, 0},
      {"03-dc-check-grading.txt", {"dc-check", "q^2 + p", "q^4 + 2 p q^2 + p^2 - q"}, 0},
      {"04-dc-check-no-go.txt", {"dc-check", "p q + p^3 q^3", "q"}, 4},
      {"05-dc-check-not-weyl.txt", {"dc-check", "p^2", "q^2"}, 3},
      {"06-dc-check-inconclusive.txt",
       {"dc-check", "q^4 + 2 p q^2 + p^2 + q^2 + p - q", "q^4 + 2 p q^2 + p^2 - q"},
       2},
      {"07-dc-check-pre-word.txt",
       {"dc-check", "--pre-word", "rot,scale:2", "--", "q + p^2", "-p"}, 0},
      {"08-ntp-pentagon.svg", {"ntp", "p + p^2 q^3 + p^3 q + p^4 q^2 + p^5", "--svg", "-"}, 0},
      {"09-ntp-diagonal.svg", {"ntp", "p^2 q^2 + q^3 + p", "--svg", "-"}, 0},
      {"10-classify-omega.txt", {"classify-omega", "3 Y + 2 X^3", "-1/3 X"}, 0},
  };
  return s;
}

Result golden(const std::string& dir, bool regen) {
  Result r;
  for (const auto& sc : scenarios()) {
    std::ostringstream out, err;
    const int code = cli::run(sc.args, out, err);
    const std::string path = dir + "/" + sc.file;
    if (regen) {
      std::ofstream(path, std::ios::binary) << out.str();
      if (code != sc.exit_code) r.fail(sc.file + ": exit code " + std::to_string(code));
      continue;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      r.fail("missing golden " + path);
      continue;
    }
    const std::string want((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (code != sc.exit_code) r.fail(sc.file + ": exit code " + std::to_string(code) + ", expected " +
                                      std::to_string(sc.exit_code) + " " + err.str());
    if (out.str() != want) r.fail(sc.file + ": output differs from golden");
    if (sc.file.ends_with(".svg") && (want.find("id=\"ntp-hull\"") == std::string::npos ||
                                      want.find("id=\"ntp-roof\"") == std::string::npos)) {
      r.fail(sc.file + ": missing ntp-hull or ntp-roof");
    }
  }
  if (r.ok) r.detail = std::to_string(scenarios().size()) + " scenarios byte-identical";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  bool regen = false;
  std::string dir = GOLDEN_DIR;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--regen-golden") {
      regen = true;
    } else if (a == "--golden-dir" && i + 1 < argc) {
      dir = argv[++i];
    } else {
      selected.push_back(std::stoi(a));
    }
  }
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"weyl kernel", weyl_kernel},
      {"Dixmier leading forms", dixmier},
      {"Poisson laws", poisson_laws},
      {"commuting pairs", commuting_pairs},
      {"pentagon NTP", pentagon},
      {"geometry equivalences", geometry},
      {"omega classification", omega},
      {"explicit generators", explicit_generators_criterion},
      {"subtract-and-compare loop", step_loop},
      {"no-go soundness", no_go},
      {"shift identity", shift_identity},
      {"automorphism contract", automorphisms},
      {"CLI golden files", [&] { return golden(dir, regen); }},
  };
  if (selected.empty()) {
    for (std::size_t i = 1; i <= criteria.size(); ++i) selected.push_back(static_cast<int>(i));
  }
  int failed = 0;
  for (const int n : selected) {
    if (n < 1 || n > static_cast<int>(criteria.size())) {
      std::cerr << "no criterion " << n << '\n';
      return 2;
    }
    const auto& [name, fn] = criteria[n - 1];
    const auto t0 = std::chrono::steady_clock::now();
    Result res;
    try {
      res = fn();
    } catch (const std::exception& e) {
      res.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char num[16];
    std::snprintf(num, sizeof num, "%02d", n);
    std::printf("%s %s %s: %s (%.2fs)\n", res.ok ? "PASS" : "FAIL", num, name.c_str(), res.detail.c_str(), secs);
    for (const auto& line : res.info) std::printf("     info: %s\n", line.c_str());
    failed += !res.ok;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
