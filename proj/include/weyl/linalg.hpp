#pragma once

#include <optional>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

/// Row-major dense matrix over Q; small systems only.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Basis of {x : A x = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a, std::size_t cols);

/// Some x with A x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, std::size_t cols,
                                           const std::vector<Rational>& b);

}  // namespace weyl
