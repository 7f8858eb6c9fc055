#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weyl/certificate.hpp"
#include "weyl/transforms.hpp"
#include "weyl/weyl_element.hpp"

namespace weyl {

struct CriteriaOptions {
  /// Allows the D_{>=-s} reduction for s > 1, where C(z_{-s}) = K[z_{-s}]
  /// cannot be decided; the bounded falsifier still runs first.
  bool assume_centralizer_cyclic = false;
  int falsifier_bound = 6;
  /// Cap on reduction rounds in any single loop.
  int max_steps = 10000;
};

// Every criterion requires [z, w] = 1 (NotAWeylPairError otherwise), returns
// a replayable certificate when it applies, and otherwise returns nullopt
// with the reason written to `why` if given. InvariantViolation means a
// proven statement failed to hold.

/// z (or w) in a single D_k: z = lambda q, w = mu p + l(q) or z = lambda p,
/// w = mu q + l(p).
std::optional<Certificate> criterion_homogeneous(const WeylElement& z, const WeylElement& w,
                                                 std::string* why = nullptr);

/// q-degree of z (or of w) at most 1.
std::optional<Certificate> criterion_v01(const WeylElement& z, const WeylElement& w,
                                         std::string* why = nullptr);

/// z or w in D_{>=0} or D_{<=0}.
std::optional<Certificate> criterion_grading(const WeylElement& z, const WeylElement& w,
                                             std::string* why = nullptr);

/// z (up to rotation and swap) in D_{>=-s}; s = 1 unconditionally.
std::optional<Certificate> criterion_D_ge_minus1(const WeylElement& z, const WeylElement& w,
                                                 const CriteriaOptions& opts = {},
                                                 std::string* why = nullptr);

/// z (or w) a sum of at most two graded-homogeneous parts.
std::optional<Certificate> criterion_two_homogeneous(const WeylElement& z, const WeylElement& w,
                                                     std::string* why = nullptr);

/// Some leading form of z (or w) is a binomial or a coprime mixed monomial.
std::optional<Certificate> criterion_support(const WeylElement& z, const WeylElement& w,
                                             std::string* why = nullptr);

/// {f_d(z), f_d(w)} = 1 for some direction d with rho + sigma > 0.
std::optional<Certificate> criterion_leading_bracket(const WeylElement& z, const WeylElement& w,
                                                     std::string* why = nullptr);

/// Subtract-and-compare reduction at a direction where C(f) = K[f].
std::optional<Certificate> criterion_cf_kf(const WeylElement& z, const WeylElement& w,
                                           std::string* why = nullptr);

namespace detail {

/// A pair under reduction together with how it was reached.
struct Work {
  std::string criterion;
  WeylPair original;
  WeylPair cur;
  std::vector<TraceStep> trace;
  std::vector<Field> fields;
};

using Impl = std::optional<Certificate> (*)(const Work&, const CriteriaOptions&, std::string&);

std::optional<Certificate> homogeneous(const Work&, const CriteriaOptions&, std::string&);
std::optional<Certificate> v01(const Work&, const CriteriaOptions&, std::string&);
std::optional<Certificate> grading(const Work&, const CriteriaOptions&, std::string&);
std::optional<Certificate> d_ge_minus1(const Work&, const CriteriaOptions&, std::string&);
std::optional<Certificate> two_homogeneous(const Work&, const CriteriaOptions&, std::string&);
std::optional<Certificate> support(const Work&, const CriteriaOptions&, std::string&);
std::optional<Certificate> leading_bracket(const Work&, const CriteriaOptions&, std::string&);
std::optional<Certificate> cf_kf(const Work&, const CriteriaOptions&, std::string&);

}  // namespace detail

}  // namespace weyl
