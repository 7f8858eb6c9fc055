#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "weyl/bipoly.hpp"
#include "weyl/unipoly.hpp"
#include "weyl/weyl_element.hpp"

namespace weyl {

/// p -> a p + b q, q -> c p + d q with ad - bc = 1.
struct Linear {
  Rational a, b, c, d;
  friend bool operator==(const Linear&, const Linear&) = default;
};
/// p -> p + f(q).
struct TriU {
  UniPoly f;
  friend bool operator==(const TriU&, const TriU&) = default;
};
/// q -> q + g(p).
struct TriL {
  UniPoly g;
  friend bool operator==(const TriL&, const TriL&) = default;
};
/// p -> lambda p, q -> q / lambda.
struct Scale {
  Rational lambda;
  friend bool operator==(const Scale&, const Scale&) = default;
};
/// p -> q, q -> -p.
struct Rot90 {
  friend bool operator==(const Rot90&, const Rot90&) = default;
};
/// (z, w) -> (w, -z); acts on pairs only.
struct PairSwap {
  friend bool operator==(const PairSwap&, const PairSwap&) = default;
};

using AutToken = std::variant<Linear, TriU, TriL, Scale, Rot90, PairSwap>;

/// Tokens act left to right: the first token is applied first.
using AutWord = std::vector<AutToken>;

using WeylPair = std::pair<WeylElement, WeylElement>;
using PoissonPair = std::pair<BiPoly, BiPoly>;

/// Comma-separated tokens: scale:L, rot, lin:a,b,c,d, triu:[c0,c1,...],
/// tril:[...], swap. Throws std::invalid_argument on bad syntax or parameters.
AutWord parse_word(std::string_view text);
std::string format_word(const AutWord& word);

/// Throws std::invalid_argument when a Linear token has ad - bc != 1 or a
/// Scale token has lambda = 0.
void validate_word(const AutWord& word);

bool contains_swap(const AutWord& word);
/// Words built from Scale and Rot90 only.
bool is_g1_word(const AutWord& word);

WeylElement apply_aut(const AutWord& word, const WeylElement& z);
BiPoly apply_poisson_aut(const AutWord& word, const BiPoly& f);

bool is_weyl_pair(const WeylElement& z, const WeylElement& w);

/// Throws NotAWeylPairError when [z, w] != 1.
WeylPair apply_to_pair(const AutWord& word, const WeylPair& pair);
/// Poisson counterpart; requires {f, g} = 1.
PoissonPair apply_to_poisson_pair(const AutWord& word, const PoissonPair& pair);

Rational jacobian_det(const AutWord& word);

}  // namespace weyl
