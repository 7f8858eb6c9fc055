#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "weyl/bipoly.hpp"
#include "weyl/rational.hpp"
#include "weyl/weyl_element.hpp"

namespace weyl::cli {

enum class Mode { Weyl, Poly };

/// "weyl" or "poly"; throws std::invalid_argument otherwise.
Mode parse_mode(std::string_view text);

/// Syntax or evaluation error at a 1-based column.
class ExprError : public std::invalid_argument {
 public:
  ExprError(std::size_t column, const std::string& what);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Number;
  std::size_t column = 0;
  Rational value;         ///< Number
  char symbol = 0;        ///< Symbol: p, q, X or Y
  unsigned exponent = 0;  ///< Pow
  ExprPtr lhs, rhs;       ///< Neg uses lhs only; Pow uses lhs and exponent
};

/// expr := term (('+'|'-') term)*
/// term := '-'* factor (('*'|'/')? factor)*     juxtaposition multiplies
/// factor := atom ('^' nat)?
/// atom := integer | symbol | '(' expr ')'
/// Division is only by nonzero constants, so "1/2" is a rational.
ExprPtr parse(std::string_view text, Mode mode);

/// Products are taken left to right; in Weyl mode they are normal ordered.
/// Exponents above `max_degree` raise ResourceError.
WeylElement evaluate_weyl(const Expr& e, int max_degree);
BiPoly evaluate_poly(const Expr& e, int max_degree);

/// Descending total degree, then descending first exponent; parses back to
/// the same element.
std::string format(const WeylElement& z);
std::string format(const BiPoly& f);

WeylElement parse_weyl(std::string_view text, int max_degree);
BiPoly parse_poly(std::string_view text, int max_degree);

}  // namespace weyl::cli
