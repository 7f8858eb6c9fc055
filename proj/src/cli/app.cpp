#include "weyl/cli/app.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>

#include "CLI11.hpp"
#include "weyl/cli/expr.hpp"
#include "weyl/cli/report.hpp"
#include "weyl/dc_check.hpp"
#include "weyl/errors.hpp"
#include "weyl/omega.hpp"
#include "weyl/poisson.hpp"

namespace weyl::cli {

namespace {

int max_degree() {
  const char* env = std::getenv("WEYL_MAX_DEGREE");
  if (env == nullptr || *env == '\0') return 64;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1000000) {
    throw std::invalid_argument("WEYL_MAX_DEGREE must be a positive integer");
  }
  return static_cast<int>(v);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string point_list(const std::vector<Point>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    s += (i ? " (" : "(") + std::to_string(pts[i].x) + "," + std::to_string(pts[i].y) + ")";
  }
  return s;
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::Generates: return kExitGenerates;
    case Outcome::Inconclusive: return kExitInconclusive;
    case Outcome::NotAWeylPair: return kExitNotAWeylPair;
    case Outcome::NoPartnerPossible: return kExitNoPartner;
  }
  return kExitError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation in the first Weyl algebra A1 = Q<p, q>/(pq - qp - 1)", "weylalg"};
  app.require_subcommand(1);
  app.footer(
      "Automorphism words are comma-separated tokens applied left to right:\n"
      "  scale:L  p -> L p, q -> q/L        rot  p -> q, q -> -p\n"
      "  lin:a,b,c,d  p -> a p + b q, q -> c p + d q  (ad - bc = 1)\n"
      "  triu:[c0,c1,...]  p -> p + sum ci q^i\n"
      "  tril:[c0,c1,...]  q -> q + sum ci p^i\n"
      "  swap  (z, w) -> (w, -z), pairs only\n"
      "dc-check exit codes: 0 Generates, 2 Inconclusive, 3 NotAWeylPair, 4 NoPartnerPossible;\n"
      "1 on any error. WEYL_MAX_DEGREE (default 64) caps exponents.\n"
      "Put -- before expressions that start with a minus sign.");

  std::function<int()> action;
  std::string mode_text = "weyl";
  bool json = false;
  const auto add_mode = [&](CLI::App* sub) {
    sub->add_option("-m,--mode", mode_text, "weyl (p, q) or poly (X, Y)")
        ->check(CLI::IsMember({"weyl", "poly"}))
        ->capture_default_str();
  };
  const auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "JSON output"); };

  // eval
  std::string e1, e2;
  auto* eval = app.add_subcommand("eval", "Print the canonical form of an expression");
  eval->add_option("expr", e1)->required();
  add_mode(eval);
  add_json(eval);
  eval->callback([&] {
    action = [&] {
      const int cap = max_degree();
      Json j = Json::object();
      j["mode"] = mode_text;
      if (parse_mode(mode_text) == Mode::Weyl) {
        const auto z = parse_weyl(e1, cap);
        if (!json) return out << format(z) << '\n', 0;
        j["text"] = format(z);
        j["terms"] = to_json(z);
      } else {
        const auto f = parse_poly(e1, cap);
        if (!json) return out << format(f) << '\n', 0;
        j["text"] = format(f);
        j["terms"] = to_json(f);
      }
      emit(out, j);
      return 0;
    };
  });

  // bracket
  auto* bracket = app.add_subcommand("bracket", "Commutator [a, b] (weyl) or Poisson bracket {a, b} (poly)");
  bracket->add_option("a", e1)->required();
  bracket->add_option("b", e2)->required();
  add_mode(bracket);
  add_json(bracket);
  bracket->callback([&] {
    action = [&] {
      const int cap = max_degree();
      std::string text;
      Json terms;
      if (parse_mode(mode_text) == Mode::Weyl) {
        const auto c = commutator(parse_weyl(e1, cap), parse_weyl(e2, cap));
        text = format(c);
        terms = to_json(c);
      } else {
        const auto c = poisson_bracket(parse_poly(e1, cap), parse_poly(e2, cap));
        text = format(c);
        terms = to_json(c);
      }
      if (!json) return out << text << '\n', 0;
      Json j = Json::object();
      j["mode"] = mode_text;
      j["text"] = text;
      j["terms"] = terms;
      emit(out, j);
      return 0;
    };
  });

  // grade
  auto* grade = app.add_subcommand("grade", "Decomposition into D_k components, k descending");
  grade->add_option("expr", e1)->required();
  add_json(grade);
  grade->callback([&] {
    action = [&] {
      const auto d = graded_decomp(parse_weyl(e1, max_degree()));
      if (!json) {
        for (const auto& part : d.parts) out << part.grade << '\t' << format(part.component) << '\n';
        return 0;
      }
      Json parts = Json::array();
      for (const auto& part : d.parts) {
        Json p = Json::object();
        p["k"] = part.grade;
        p["component"] = format(part.component);
        parts.push_back(std::move(p));
      }
      Json j = Json::object();
      j["parts"] = std::move(parts);
      emit(out, j);
      return 0;
    };
  });

  // leading
  std::int64_t rho = 1, sigma = 1;
  auto* leading = app.add_subcommand("leading", "(rho, sigma)-degree and leading form");
  leading->add_option("expr", e1)->required();
  leading->add_option("-r,--rho", rho)->required();
  leading->add_option("-s,--sigma", sigma)->required();
  add_mode(leading);
  add_json(leading);
  leading->callback([&] {
    action = [&] {
      const int cap = max_degree();
      const BiPoly f = parse_mode(mode_text) == Mode::Weyl ? phi(parse_weyl(e1, cap)) : parse_poly(e1, cap);
      if (f.is_zero()) throw std::invalid_argument("the zero element has no leading form");
      const Direction d(rho, sigma);
      const std::int64_t deg = v_deg(f, d).value();
      const BiPoly lf = leading_form(f, d);
      if (!json) {
        out << "v_deg: " << deg << '\n' << "leading: " << format(lf) << '\n';
        return 0;
      }
      Json j = Json::object();
      j["direction"] = Json::array({d.rho(), d.sigma()});
      j["v_deg"] = deg;
      j["leading"] = format(lf);
      j["terms"] = to_json(lf);
      emit(out, j);
      return 0;
    };
  });

  // ntp
  std::string svg_path;
  auto* ntp_cmd = app.add_subcommand("ntp", "Newton polygon and roof");
  ntp_cmd->add_option("expr", e1)->required();
  ntp_cmd->add_option("--svg", svg_path, "Write an SVG drawing to FILE ('-' for standard output)");
  add_mode(ntp_cmd);
  add_json(ntp_cmd);
  ntp_cmd->callback([&] {
    action = [&] {
      const int cap = max_degree();
      const WeylElement z =
          parse_mode(mode_text) == Mode::Weyl ? parse_weyl(e1, cap) : phi_inv(parse_poly(e1, cap));
      const LatticePolygon poly = ntp(z);
      const RoofChain top = roof(z);
      if (!svg_path.empty()) {
        const std::string svg = render_svg(z);
        if (svg_path == "-") {
          out << svg;
          return 0;
        }
        std::ofstream f(svg_path, std::ios::binary);
        if (!(f << svg)) throw std::runtime_error("cannot write " + svg_path);
      }
      if (!json) {
        out << "vertices: " << point_list(poly.vertices) << '\n';
        out << "roof: " << point_list(top.points) << '\n';
        return 0;
      }
      Json j = Json::object();
      j["vertices"] = to_json(poly);
      j["roof"] = to_json(top);
      emit(out, j);
      return 0;
    };
  });

  // classify-omega
  auto* omega = app.add_subcommand("classify-omega", "Classify a homogeneous pair with {F, G} = 1");
  omega->add_option("f", e1)->required();
  omega->add_option("g", e2)->required();
  add_json(omega);
  omega->callback([&] {
    action = [&] {
      const int cap = max_degree();
      emit(out, to_json(omega_classify(parse_poly(e1, cap), parse_poly(e2, cap))));
      return 0;
    };
  });

  // dc-check
  std::string pre_word_text;
  bool cyclic = false;
  auto* dc = app.add_subcommand("dc-check", "Try to certify that Z and W generate A1");
  dc->add_option("z", e1)->required();
  dc->add_option("w", e2)->required();
  dc->add_option("--pre-word", pre_word_text, "Automorphism word applied before analysis");
  dc->add_flag("--assume-centralizer-cyclic", cyclic,
               "Assume C(z_{-s}) = K[z_{-s}] in the D_{>=-s} criterion for s > 1");
  add_json(dc);
  dc->callback([&] {
    action = [&] {
      const int cap = max_degree();
      const WeylPair input{parse_weyl(e1, cap), parse_weyl(e2, cap)};
      DCOptions opts;
      if (!pre_word_text.empty()) opts.pre_word = parse_word(pre_word_text);
      opts.criteria.assume_centralizer_cyclic = cyclic;
      const DCReport report = dc_check(input.first, input.second, opts);
      emit(out, to_json(report, input, opts.pre_word));
      return exit_code(report.outcome);
    };
  });

  // aut apply
  auto* aut = app.add_subcommand("aut", "Automorphisms");
  aut->require_subcommand(1);
  std::string word_text;
  auto* apply = aut->add_subcommand("apply", "Apply WORD to EXPR");
  apply->add_option("word", word_text)->required();
  apply->add_option("expr", e1)->required();
  add_mode(apply);
  add_json(apply);
  apply->callback([&] {
    action = [&] {
      const int cap = max_degree();
      const AutWord word = parse_word(word_text);
      validate_word(word);
      if (contains_swap(word)) throw std::invalid_argument("swap acts on pairs, not on single elements");
      std::string text;
      Json terms;
      if (parse_mode(mode_text) == Mode::Weyl) {
        const auto z = apply_aut(word, parse_weyl(e1, cap));
        text = format(z);
        terms = to_json(z);
      } else {
        const auto f = apply_poisson_aut(word, parse_poly(e1, cap));
        text = format(f);
        terms = to_json(f);
      }
      if (!json) return out << text << '\n', 0;
      Json j = Json::object();
      j["word"] = format_word(word);
      j["text"] = text;
      j["terms"] = terms;
      emit(out, j);
      return 0;
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }
  try {
    return action();
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace weyl::cli
