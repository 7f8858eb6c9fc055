#pragma once

#include <optional>
#include <string>

#include "weyl/bipoly.hpp"
#include "weyl/transforms.hpp"

namespace weyl {

enum class OmegaCase {
  Case1,  ///< (X, Y)
  Case2,  ///< (alpha X + beta Y, gamma X + delta Y), alpha delta - beta gamma = 1, all nonzero
  Case3,  ///< (X + lambda Y^n, Y), lambda != 0, n >= 1
  Case4,  ///< (X + lambda, Y), lambda != 0
};

std::string to_string(OmegaCase c);

struct OmegaClass {
  OmegaCase tag = OmegaCase::Case1;
  Rational alpha, beta, gamma, delta;  ///< Case2
  Rational lambda;                     ///< Case3, Case4
  int n = 0;                           ///< Case3
  /// Word over Scale, Rot90 and PairSwap taking the input to `canonical`.
  AutWord witness;
  PoissonPair canonical;
};

/// The primitive (r, s) with r + s > 0 (or r + s = 0, r > 0) for which the
/// non-monomial, nonconstant f is homogeneous; nullopt otherwise.
std::optional<Direction> homogeneity_direction(const BiPoly& f);

/// Classifies (f, g) with {f, g} = 1 and f, g homogeneous for a common
/// direction. Throws std::invalid_argument when the input is not such a pair
/// and InvariantViolation if the case analysis breaks down.
OmegaClass omega_classify(const BiPoly& f, const BiPoly& g);

}  // namespace weyl
