#include "weyl/cli/report.hpp"

#include <algorithm>
#include <sstream>

#include "weyl/cli/expr.hpp"

namespace weyl::cli {

namespace {

Json point(const Point& p) { return Json::array({p.x, p.y}); }

Json pair_json(const WeylPair& pair) {
  Json out = Json::object();
  out["z"] = format(pair.first);
  out["w"] = format(pair.second);
  return out;
}

Json field_value(const FieldValue& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, UniPoly>) {
          return to_json(x);
        } else {
          return x;
        }
      },
      v);
}

Json step_json(const TraceStep& s) {
  Json out = Json::object();
  if (const auto* a = std::get_if<AutStep>(&s)) {
    out["kind"] = "aut";
    out["word"] = format_word(a->word);
    return out;
  }
  const auto& sub = std::get<SubtractStep>(s);
  out["kind"] = "subtract";
  out["beta"] = to_json(sub.beta);
  out["exponent"] = sub.exponent;
  if (sub.direction) {
    out["direction"] = Json::array({sub.direction->rho(), sub.direction->sigma()});
  } else {
    out["direction"] = nullptr;
  }
  out["degree"] = sub.degree;
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return to_fraction_string(r); }

Json to_json(const UniPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(to_json(c));
  return out;
}

template <class Ring>
Json terms_json(const Ring& r) {
  std::vector<std::pair<Monomial, Rational>> terms(r.begin(), r.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.total() != b.first.total()) return a.first.total() > b.first.total();
    return a.first.x > b.first.x;
  });
  Json out = Json::array();
  for (const auto& [m, c] : terms) {
    Json t = Json::object();
    t["exponents"] = Json::array({m.x, m.y});
    t["coeff"] = to_json(c);
    out.push_back(std::move(t));
  }
  return out;
}

Json to_json(const WeylElement& z) { return terms_json(z); }
Json to_json(const BiPoly& f) { return terms_json(f); }

Json to_json(const LatticePolygon& poly) {
  Json out = Json::array();
  for (const auto& v : poly.vertices) out.push_back(point(v));
  return out;
}

Json to_json(const RoofChain& roof) {
  Json out = Json::array();
  for (const auto& v : roof.points) out.push_back(point(v));
  return out;
}

Json to_json(const Certificate& cert) {
  Json out = Json::object();
  out["criterion"] = cert.criterion;
  Json fields = Json::object();
  for (const auto& f : cert.fields) fields[f.name] = field_value(f.value);
  out["fields"] = std::move(fields);
  out["base"] = to_string(cert.base);
  out["initial"] = pair_json(cert.initial);
  Json trace = Json::array();
  for (const auto& s : cert.trace) trace.push_back(step_json(s));
  out["trace"] = std::move(trace);
  out["final"] = pair_json(cert.final_pair);
  const ReplayResult r = replay(cert);
  out["replay"] = r.ok ? "ok" : r.failure;
  return out;
}

Json to_json(const DCReport& report, const WeylPair& input, const AutWord& pre_word) {
  Json out = Json::object();
  out["outcome"] = to_string(report.outcome);
  out["criterion"] = report.certificate ? Json(report.certificate->criterion) : Json(nullptr);
  out["input"] = pair_json(input);
  out["pre_word"] = pre_word.empty() ? Json(nullptr) : Json(format_word(pre_word));
  if (!report.reason.empty()) out["reason"] = report.reason;
  Json attempts = Json::array();
  for (const auto& a : report.attempts) {
    Json j = Json::object();
    j["criterion"] = a.criterion;
    j["result"] = a.fired ? "applied" : "declined";
    if (!a.fired) j["reason"] = a.reason;
    attempts.push_back(std::move(j));
  }
  out["attempts"] = std::move(attempts);
  out["certificate"] = report.certificate ? to_json(*report.certificate) : Json(nullptr);
  return out;
}

Json to_json(const OmegaClass& c) {
  Json out = Json::object();
  out["case"] = to_string(c.tag);
  switch (c.tag) {
    case OmegaCase::Case1:
      break;
    case OmegaCase::Case2:
      out["alpha"] = to_json(c.alpha);
      out["beta"] = to_json(c.beta);
      out["gamma"] = to_json(c.gamma);
      out["delta"] = to_json(c.delta);
      break;
    case OmegaCase::Case3:
      out["lambda"] = to_json(c.lambda);
      out["n"] = c.n;
      break;
    case OmegaCase::Case4:
      out["lambda"] = to_json(c.lambda);
      break;
  }
  out["witness"] = format_word(c.witness);
  Json canon = Json::object();
  canon["f"] = format(c.canonical.first);
  canon["g"] = format(c.canonical.second);
  out["canonical"] = std::move(canon);
  return out;
}

std::string render_svg(const WeylElement& z) {
  const auto pts = support_points(z);
  const LatticePolygon hull = ntp(z);
  const RoofChain top = roof(z);
  std::int64_t w = 1, h = 1;
  for (const auto& p : pts) {
    w = std::max(w, p.x);
    h = std::max(h, p.y);
  }
  // Lattice (x, y) is drawn at (x, h - y).
  const auto at = [h](const Point& p) { return std::to_string(p.x) + "," + std::to_string(h - p.y); };
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1 -1 " << w + 2 << ' ' << h + 2
    << "\" width=\"" << 40 * (w + 2) << "\" height=\"" << 40 * (h + 2) << "\">\n";
  s << "<g id=\"grid\" stroke=\"#cccccc\" stroke-width=\"0.02\">\n";
  for (std::int64_t x = 0; x <= w; ++x) {
    s << "<line x1=\"" << x << "\" y1=\"0\" x2=\"" << x << "\" y2=\"" << h << "\"/>\n";
  }
  for (std::int64_t y = 0; y <= h; ++y) {
    s << "<line x1=\"0\" y1=\"" << y << "\" x2=\"" << w << "\" y2=\"" << y << "\"/>\n";
  }
  s << "</g>\n";
  s << "<polygon id=\"ntp-hull\" points=\"";
  for (std::size_t i = 0; i < hull.vertices.size(); ++i) s << (i ? " " : "") << at(hull.vertices[i]);
  s << "\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"#3182bd\" stroke-width=\"0.05\"/>\n";
  s << "<polyline id=\"ntp-roof\" points=\"";
  for (std::size_t i = 0; i < top.points.size(); ++i) s << (i ? " " : "") << at(top.points[i]);
  s << "\" fill=\"none\" stroke=\"#de2d26\" stroke-width=\"0.1\"/>\n";
  s << "<g id=\"support\" font-size=\"0.3\">\n";
  for (const auto& p : pts) {
    s << "<circle cx=\"" << p.x << "\" cy=\"" << h - p.y << "\" r=\"0.08\"/>";
    s << "<text x=\"" << p.x << ".12\" y=\"" << h - p.y << ".3\">(" << p.x << "," << p.y << ")</text>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

}  // namespace weyl::cli
