#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weyl/certificate.hpp"
#include "weyl/criteria.hpp"
#include "weyl/transforms.hpp"

namespace weyl {

enum class Outcome { Generates, NoPartnerPossible, NotAWeylPair, Inconclusive };

std::string to_string(Outcome o);

struct Attempt {
  std::string criterion;
  bool fired = false;
  std::string reason;  ///< why the criterion declined
};

struct DCOptions {
  /// Applied to (z, w) before anything else; may contain swap.
  AutWord pre_word;
  CriteriaOptions criteria;
};

struct DCReport {
  Outcome outcome = Outcome::Inconclusive;
  std::optional<Certificate> certificate;
  std::string reason;
  std::vector<Attempt> attempts;
};

/// Criterion names in the order dc_check runs them.
const std::vector<std::string>& criterion_order();

/// No-go test first (an element of D_{>=0} or D_{<=0} whose Newton polygon
/// has a vertex (i, i), i >= 1, has no partner), then [z, w] = 1, then the
/// criteria in criterion_order(). The first certificate wins.
DCReport dc_check(const WeylElement& z, const WeylElement& w, const DCOptions& opts = {});

}  // namespace weyl
