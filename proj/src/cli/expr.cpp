#include "weyl/cli/expr.hpp"

#include <cctype>
#include <vector>

#include "weyl/errors.hpp"

namespace weyl::cli {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Mode mode) : text_(text), mode_(mode) {}

  ExprPtr run() {
    skip_space();
    if (at_end()) throw ExprError(1, "empty expression");
    auto e = expr();
    skip_space();
    if (!at_end()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ExprError(pos_ + 1, what); }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return at_end() ? '\0' : text_[pos_];
  }

  static ExprPtr node(Expr::Kind k, std::size_t col, ExprPtr l, ExprPtr r = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->column = col;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  bool starts_atom(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || std::isalpha(static_cast<unsigned char>(c));
  }

  ExprPtr expr() {
    auto lhs = term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      const std::size_t col = pos_ + 1;
      ++pos_;
      lhs = node(c == '+' ? Expr::Kind::Add : Expr::Kind::Sub, col, lhs, term());
    }
  }

  ExprPtr term() {
    if (peek() == '-') {
      const std::size_t col = pos_ + 1;
      ++pos_;
      return node(Expr::Kind::Neg, col, term());
    }
    auto lhs = factor();
    for (;;) {
      const char c = peek();
      const std::size_t col = pos_ + 1;
      if (c == '*' || c == '/') {
        ++pos_;
        lhs = node(c == '*' ? Expr::Kind::Mul : Expr::Kind::Div, col, lhs, factor());
      } else if (starts_atom(c)) {
        lhs = node(Expr::Kind::Mul, col, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr factor() {
    auto base = atom();
    if (peek() != '^') return base;
    const std::size_t col = pos_ + 1;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural-number exponent");
    if (pos_ - start > 9) throw ExprError(start + 1, "exponent too large");
    auto e = node(Expr::Kind::Pow, col, base);
    std::const_pointer_cast<Expr>(e)->exponent =
        static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    return e;
  }

  ExprPtr atom() {
    const char c = peek();
    const std::size_t col = pos_ + 1;
    if (c == '\0') fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->column = col;
      e->value = parse_rational(text_.substr(start, pos_ - start));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const bool weyl_sym = c == 'p' || c == 'q';
      const bool poly_sym = c == 'X' || c == 'Y';
      if (mode_ == Mode::Weyl && !weyl_sym) {
        fail(std::string("symbol '") + c + "' is not valid in weyl mode (use p, q)");
      }
      if (mode_ == Mode::Poly && !poly_sym) {
        fail(std::string("symbol '") + c + "' is not valid in poly mode (use X, Y)");
      }
      ++pos_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Symbol;
      e->column = col;
      e->symbol = c;
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Mode mode_;
  std::size_t pos_ = 0;
};

template <class Ring>
void check_cap(const Ring& r, int max_degree) {
  if (r.max_exponent() > max_degree) {
    throw ResourceError("exponent " + std::to_string(r.max_exponent()) + " exceeds WEYL_MAX_DEGREE=" +
                        std::to_string(max_degree));
  }
}

template <class Ring>
Ring eval(const Expr& e, int cap) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number:
      return Ring::constant(e.value);
    case K::Symbol:
      return (e.symbol == 'p' || e.symbol == 'X') ? Ring::term(1, 1, 0) : Ring::term(1, 0, 1);
    case K::Neg:
      return -eval<Ring>(*e.lhs, cap);
    case K::Add:
      return eval<Ring>(*e.lhs, cap) + eval<Ring>(*e.rhs, cap);
    case K::Sub:
      return eval<Ring>(*e.lhs, cap) - eval<Ring>(*e.rhs, cap);
    case K::Mul: {
      Ring out = eval<Ring>(*e.lhs, cap) * eval<Ring>(*e.rhs, cap);
      check_cap(out, cap);
      return out;
    }
    case K::Div: {
      const Ring d = eval<Ring>(*e.rhs, cap);
      if (!d.is_constant() || d.is_zero()) {
        throw ExprError(e.column, "division is only by a nonzero constant");
      }
      return eval<Ring>(*e.lhs, cap) * Rational(1 / d.constant_term());
    }
    case K::Pow: {
      const Ring b = eval<Ring>(*e.lhs, cap);
      if (!b.is_constant() && static_cast<long long>(b.max_exponent()) * e.exponent > cap) {
        throw ResourceError("power at column " + std::to_string(e.column) + " exceeds WEYL_MAX_DEGREE=" +
                            std::to_string(cap));
      }
      return pow(b, e.exponent);
    }
  }
  throw std::logic_error("unreachable");
}

template <class Ring>
std::string format_terms(const Ring& r, char x, char y) {
  if (r.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(r.begin(), r.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.total() != b.first.total()) return a.first.total() > b.first.total();
    return a.first.x > b.first.x;
  });
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [m, c] = terms[i];
    const bool neg = c < 0;
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const Rational a = neg ? Rational(-c) : c;
    std::string mono;
    const auto var = [&](char s, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += ' ';
      mono += s;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    var(x, m.x);
    var(y, m.y);
    if (mono.empty()) {
      out += to_display_string(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += to_display_string(a) + " " + mono;
    }
  }
  return out;
}

}  // namespace

ExprError::ExprError(std::size_t column, const std::string& what)
    : std::invalid_argument("column " + std::to_string(column) + ": " + what), column_(column) {}

Mode parse_mode(std::string_view text) {
  if (text == "weyl") return Mode::Weyl;
  if (text == "poly") return Mode::Poly;
  throw std::invalid_argument("mode must be weyl or poly");
}

ExprPtr parse(std::string_view text, Mode mode) { return Parser(text, mode).run(); }

WeylElement evaluate_weyl(const Expr& e, int max_degree) {
  WeylElement out = eval<WeylElement>(e, max_degree);
  check_cap(out, max_degree);
  return out;
}

BiPoly evaluate_poly(const Expr& e, int max_degree) {
  BiPoly out = eval<BiPoly>(e, max_degree);
  check_cap(out, max_degree);
  return out;
}

std::string format(const WeylElement& z) { return format_terms(z, 'p', 'q'); }
std::string format(const BiPoly& f) { return format_terms(f, 'X', 'Y'); }

WeylElement parse_weyl(std::string_view text, int max_degree) {
  return evaluate_weyl(*parse(text, Mode::Weyl), max_degree);
}

BiPoly parse_poly(std::string_view text, int max_degree) {
  return evaluate_poly(*parse(text, Mode::Poly), max_degree);
}

}  // namespace weyl::cli
