#include "weyl/dc_check.hpp"

#include <utility>

#include "weyl/geometry.hpp"

namespace weyl {

namespace {

struct Entry {
  const char* name;
  detail::Impl impl;
};

const std::vector<Entry>& battery() {
  static const std::vector<Entry> entries = {
      {"homogeneous", detail::homogeneous},
      {"v01", detail::v01},
      {"grading", detail::grading},
      {"D_ge_minus1", detail::d_ge_minus1},
      {"two_homogeneous", detail::two_homogeneous},
      {"support", detail::support},
      {"leading_bracket", detail::leading_bracket},
      {"cf_kf", detail::cf_kf},
  };
  return entries;
}

// Element-wise application that does not require [z, w] = 1.
WeylPair apply_loose(const AutWord& word, WeylPair pair) {
  validate_word(word);
  for (const auto& t : word) {
    if (std::holds_alternative<PairSwap>(t)) {
      pair = {pair.second, -pair.first};
    } else {
      pair = {apply_aut({t}, pair.first), apply_aut({t}, pair.second)};
    }
  }
  return pair;
}

std::optional<std::string> no_go(const WeylElement& x, const char* name) {
  if (x.is_zero()) return std::nullopt;
  const bool geq = in_D_geq(x, 0);
  const bool leq = in_D_leq(x, 0);
  if (!geq && !leq) return std::nullopt;
  const auto i = diagonal_vertex(x);
  if (!i) return std::nullopt;
  const std::string v = std::to_string(*i);
  return std::string(name) + " lies in " + (geq ? "D_{>=0}" : "D_{<=0}") + " and (" + v + "," + v +
         ") is a vertex of its Newton polygon";
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Generates: return "Generates";
    case Outcome::NoPartnerPossible: return "NoPartnerPossible";
    case Outcome::NotAWeylPair: return "NotAWeylPair";
    case Outcome::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const std::vector<std::string>& criterion_order() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : battery()) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

DCReport dc_check(const WeylElement& z, const WeylElement& w, const DCOptions& opts) {
  DCReport report;
  const WeylPair cur = apply_loose(opts.pre_word, {z, w});

  for (const auto& [x, name] : {std::pair{&cur.first, "z"}, std::pair{&cur.second, "w"}}) {
    if (auto why = no_go(*x, name)) {
      report.outcome = Outcome::NoPartnerPossible;
      report.reason = *why;
      return report;
    }
  }
  if (!is_weyl_pair(cur.first, cur.second)) {
    report.outcome = Outcome::NotAWeylPair;
    report.reason = "[z, w] != 1";
    return report;
  }

  detail::Work base{"", {z, w}, cur, {}, {}};
  if (!opts.pre_word.empty()) base.trace.push_back(AutStep{opts.pre_word});
  for (const auto& e : battery()) {
    detail::Work work = base;
    work.criterion = e.name;
    std::string why;
    auto cert = e.impl(work, opts.criteria, why);
    report.attempts.push_back({e.name, cert.has_value(), cert ? "" : why});
    if (cert) {
      report.outcome = Outcome::Generates;
      report.certificate = std::move(cert);
      return report;
    }
  }
  report.outcome = Outcome::Inconclusive;
  report.reason = "no criterion applied";
  return report;
}

}  // namespace weyl
