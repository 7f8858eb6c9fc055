#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weyl/bipoly.hpp"
#include "weyl/transforms.hpp"
#include "weyl/unipoly.hpp"
#include "weyl/weyl_element.hpp"

namespace weyl {

/// (z, w) <- word applied to (z, w).
struct AutStep {
  AutWord word;
};

/// w <- w - beta z^exponent. `degree` is the quantity that strictly drops:
/// the v-degree of w at `direction`, or its lowest grade when no direction
/// is given.
struct SubtractStep {
  Rational beta;
  unsigned exponent = 0;
  std::optional<Direction> direction;
  std::int64_t degree = 0;
};

using TraceStep = std::variant<AutStep, SubtractStep>;

/// Shapes whose generators are explicit.
enum class BaseCase {
  PolyP,   ///< one slot a p + b, the other alpha q + g(p)
  PolyQ,   ///< one slot a q + b, the other alpha p + g(q)
  Linear,  ///< both slots affine in p, q
};

std::string to_string(BaseCase b);

using FieldValue = std::variant<Rational, UniPoly, std::int64_t, std::string>;

struct Field {
  std::string name;
  FieldValue value;
};

struct Certificate {
  std::string criterion;
  std::vector<Field> fields;
  std::vector<TraceStep> trace;
  WeylPair initial;
  WeylPair final_pair;
  BaseCase base = BaseCase::Linear;

  const FieldValue* find(const std::string& name) const;
};

/// Base shape of a pair, preferring PolyP, then PolyQ, then Linear.
std::optional<BaseCase> detect_base(const WeylPair& pair);

/// p and q rebuilt from the pair through the base case's explicit formulas.
/// Throws std::invalid_argument if the pair does not have that shape.
std::pair<WeylElement, WeylElement> explicit_generators(const WeylPair& pair, BaseCase base);

struct ReplayResult {
  bool ok = false;
  std::string failure;
};

/// Re-runs the trace from `initial`, checking [z, w] = 1 after each step, that
/// it ends at `final_pair`, that the final pair has the recorded base shape,
/// and that the explicit formulas give back p and q.
ReplayResult replay(const Certificate& cert);

}  // namespace weyl
