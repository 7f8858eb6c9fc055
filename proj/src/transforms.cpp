#include "weyl/transforms.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include "weyl/errors.hpp"
#include "weyl/poisson.hpp"

namespace weyl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

template <class Ring>
struct Images {
  Ring x;
  Ring y;
};

// Images of the two generators under one token, in either ring.
template <class Ring>
Images<Ring> token_images(const AutToken& t, const Ring& x, const Ring& y) {
  return std::visit(
      overloaded{
          [&](const Linear& l) { return Images<Ring>{l.a * x + l.b * y, l.c * x + l.d * y}; },
          [&](const TriU& u) { return Images<Ring>{x + evaluate(u.f, y), y}; },
          [&](const TriL& l) { return Images<Ring>{x, y + evaluate(l.g, x)}; },
          [&](const Scale& s) { return Images<Ring>{s.lambda * x, Rational(1 / s.lambda) * y}; },
          [&](const Rot90&) { return Images<Ring>{y, -x}; },
          [&](const PairSwap&) -> Images<Ring> {
            throw std::invalid_argument("swap acts on pairs, not on elements");
          },
      },
      t);
}

// Sum of c * X^i Y^j with X, Y replaced by the given images.
template <class Ring>
Ring substitute(const Ring& z, const Images<Ring>& img) {
  std::map<int, Ring> xp;
  std::map<int, Ring> yp;
  const auto power = [](std::map<int, Ring>& cache, const Ring& base, int n) -> const Ring& {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Ring r = Ring::constant(1);
    for (int i = 0; i < n; ++i) r = r * base;
    return cache.emplace(n, std::move(r)).first->second;
  };
  Ring out;
  for (const auto& [m, c] : z) {
    out += c * (power(xp, img.x, m.x) * power(yp, img.y, m.y));
  }
  return out;
}

template <class Ring>
Ring apply_word(const AutWord& word, const Ring& z, const Ring& x, const Ring& y) {
  validate_word(word);
  Ring cur = z;
  for (const auto& t : word) cur = substitute(cur, token_images(t, x, y));
  return cur;
}

void skip_spaces(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

Rational read_number(std::string_view s, std::size_t& i) {
  skip_spaces(s, i);
  const std::size_t begin = i;
  while (i < s.size() && s[i] != ',' && s[i] != ']' && !std::isspace(static_cast<unsigned char>(s[i]))) {
    ++i;
  }
  return parse_rational(s.substr(begin, i - begin));
}

void expect(std::string_view s, std::size_t& i, char c) {
  skip_spaces(s, i);
  if (i >= s.size() || s[i] != c) {
    throw std::invalid_argument("word: expected '" + std::string(1, c) + "' at position " +
                                std::to_string(i));
  }
  ++i;
}

UniPoly read_list(std::string_view s, std::size_t& i) {
  expect(s, i, '[');
  std::vector<Rational> coeffs;
  skip_spaces(s, i);
  if (i < s.size() && s[i] == ']') {
    ++i;
    return UniPoly(coeffs);
  }
  for (;;) {
    coeffs.push_back(read_number(s, i));
    skip_spaces(s, i);
    if (i < s.size() && s[i] == ']') {
      ++i;
      return UniPoly(coeffs);
    }
    expect(s, i, ',');
  }
}

std::string format_list(const UniPoly& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) out += ",";
    out += to_display_string(f.coeffs()[i]);
  }
  return out + "]";
}

}  // namespace

AutWord parse_word(std::string_view text) {
  AutWord out;
  std::size_t i = 0;
  skip_spaces(text, i);
  if (i == text.size()) return out;
  for (;;) {
    skip_spaces(text, i);
    const std::size_t begin = i;
    while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    const std::string name(text.substr(begin, i - begin));
    if (name == "rot") {
      out.emplace_back(Rot90{});
    } else if (name == "swap") {
      out.emplace_back(PairSwap{});
    } else if (name == "scale") {
      expect(text, i, ':');
      out.emplace_back(Scale{read_number(text, i)});
    } else if (name == "lin") {
      expect(text, i, ':');
      Linear l;
      l.a = read_number(text, i);
      expect(text, i, ',');
      l.b = read_number(text, i);
      expect(text, i, ',');
      l.c = read_number(text, i);
      expect(text, i, ',');
      l.d = read_number(text, i);
      out.emplace_back(l);
    } else if (name == "triu") {
      expect(text, i, ':');
      out.emplace_back(TriU{read_list(text, i)});
    } else if (name == "tril") {
      expect(text, i, ':');
      out.emplace_back(TriL{read_list(text, i)});
    } else {
      throw std::invalid_argument("word: unknown token '" + name + "' at position " +
                                  std::to_string(begin));
    }
    skip_spaces(text, i);
    if (i == text.size()) break;
    expect(text, i, ',');
  }
  validate_word(out);
  return out;
}

std::string format_word(const AutWord& word) {
  std::string out;
  for (const auto& t : word) {
    if (!out.empty()) out += ",";
    out += std::visit(
        overloaded{
            [](const Linear& l) {
              return "lin:" + to_display_string(l.a) + "," + to_display_string(l.b) + "," +
                     to_display_string(l.c) + "," + to_display_string(l.d);
            },
            [](const TriU& u) { return "triu:" + format_list(u.f); },
            [](const TriL& l) { return "tril:" + format_list(l.g); },
            [](const Scale& s) { return "scale:" + to_display_string(s.lambda); },
            [](const Rot90&) { return std::string("rot"); },
            [](const PairSwap&) { return std::string("swap"); },
        },
        t);
  }
  return out;
}

void validate_word(const AutWord& word) {
  for (const auto& t : word) {
    if (const auto* l = std::get_if<Linear>(&t); l && l->a * l->d - l->b * l->c != 1) {
      throw std::invalid_argument("lin token needs ad - bc = 1");
    }
    if (const auto* s = std::get_if<Scale>(&t); s && s->lambda == 0) {
      throw std::invalid_argument("scale token needs lambda != 0");
    }
  }
}

bool contains_swap(const AutWord& word) {
  for (const auto& t : word) {
    if (std::holds_alternative<PairSwap>(t)) return true;
  }
  return false;
}

bool is_g1_word(const AutWord& word) {
  for (const auto& t : word) {
    if (!std::holds_alternative<Scale>(t) && !std::holds_alternative<Rot90>(t)) return false;
  }
  return true;
}

WeylElement apply_aut(const AutWord& word, const WeylElement& z) {
  return apply_word(word, z, weyl_p(), weyl_q());
}

BiPoly apply_poisson_aut(const AutWord& word, const BiPoly& f) {
  return apply_word(word, f, poly_x(), poly_y());
}

bool is_weyl_pair(const WeylElement& z, const WeylElement& w) {
  return commutator(z, w) == WeylElement::constant(1);
}

WeylPair apply_to_pair(const AutWord& word, const WeylPair& pair) {
  if (!is_weyl_pair(pair.first, pair.second)) throw NotAWeylPairError("[z, w] != 1");
  validate_word(word);
  WeylPair cur = pair;
  for (const auto& t : word) {
    if (std::holds_alternative<PairSwap>(t)) {
      cur = {cur.second, -cur.first};
    } else {
      const auto img = token_images(t, weyl_p(), weyl_q());
      cur = {substitute(cur.first, img), substitute(cur.second, img)};
    }
  }
  if (!is_weyl_pair(cur.first, cur.second)) throw InvariantViolation("automorphism broke [z, w] = 1");
  return cur;
}

PoissonPair apply_to_poisson_pair(const AutWord& word, const PoissonPair& pair) {
  const BiPoly one = BiPoly::constant(1);
  if (poisson_bracket(pair.first, pair.second) != one) throw std::invalid_argument("{f, g} != 1");
  validate_word(word);
  PoissonPair cur = pair;
  for (const auto& t : word) {
    if (std::holds_alternative<PairSwap>(t)) {
      cur = {cur.second, -cur.first};
    } else {
      const auto img = token_images(t, poly_x(), poly_y());
      cur = {substitute(cur.first, img), substitute(cur.second, img)};
    }
  }
  if (poisson_bracket(cur.first, cur.second) != one) {
    throw InvariantViolation("automorphism broke {f, g} = 1");
  }
  return cur;
}

Rational jacobian_det(const AutWord& word) {
  if (contains_swap(word)) throw std::invalid_argument("jacobian_det of a word with swap");
  const BiPoly j = poisson_bracket(apply_poisson_aut(word, poly_x()), apply_poisson_aut(word, poly_y()));
  if (!j.is_constant()) throw InvariantViolation("nonconstant Jacobian");
  return j.constant_term();
}

}  // namespace weyl
