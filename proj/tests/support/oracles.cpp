#include "oracles.hpp"

#include <map>
#include <string>

namespace oracle {

namespace {

using Words = std::map<std::string, Rational>;

void add(Words& ws, const std::string& w, const Rational& c) {
  auto& slot = ws[w];
  slot += c;
  if (slot == 0) ws.erase(w);
}

std::string word_of(const weyl::Monomial& m) { return std::string(m.x, 'p') + std::string(m.y, 'q'); }

}  // namespace

WeylElement rewrite_product(const WeylElement& a, const WeylElement& b) {
  Words pending;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) add(pending, word_of(ma) + word_of(mb), ca * cb);
  }
  WeylElement out;
  while (!pending.empty()) {
    const auto it = pending.begin();
    const std::string w = it->first;
    const Rational c = it->second;
    pending.erase(it);
    const auto pos = w.find("qp");
    if (pos == std::string::npos) {
      const int ps = static_cast<int>(std::count(w.begin(), w.end(), 'p'));
      out.add({ps, static_cast<int>(w.size()) - ps}, c);
      continue;
    }
    add(pending, w.substr(0, pos) + "pq" + w.substr(pos + 2), c);
    add(pending, w.substr(0, pos) + w.substr(pos + 2), -c);
  }
  return out;
}

WeylElement rewrite_commutator(const WeylElement& a, const WeylElement& b) {
  return rewrite_product(a, b) - rewrite_product(b, a);
}

WeylElement rewrite_power(const WeylElement& a, unsigned n) {
  WeylElement out = WeylElement::constant(1);
  for (unsigned i = 0; i < n; ++i) out = rewrite_product(out, a);
  return out;
}

BiPoly det_bracket(const BiPoly& f, const BiPoly& g) {
  const auto dx = [](const BiPoly& h) {
    BiPoly out;
    for (const auto& [m, c] : h) {
      if (m.x > 0) out.add({m.x - 1, m.y}, c * m.x);
    }
    return out;
  };
  const auto dy = [](const BiPoly& h) {
    BiPoly out;
    for (const auto& [m, c] : h) {
      if (m.y > 0) out.add({m.x, m.y - 1}, c * m.y);
    }
    return out;
  };
  return dx(f) * dy(g) - dy(f) * dx(g);
}

bool partner_exists(const WeylElement& z, int max_exp) {
  std::vector<weyl::Monomial> unknowns;
  for (int i = 0; i <= max_exp; ++i) {
    for (int j = 0; j <= max_exp; ++j) unknowns.push_back({i, j});
  }
  // Column c holds [z, unknowns[c]]; the right-hand side is the constant 1.
  std::map<weyl::Monomial, std::size_t> row_of;
  std::vector<std::vector<Rational>> rows;
  const std::size_t n = unknowns.size();
  const auto row = [&](const weyl::Monomial& m) -> std::vector<Rational>& {
    auto [it, inserted] = row_of.try_emplace(m, rows.size());
    if (inserted) rows.emplace_back(n + 1, Rational(0));
    return rows[it->second];
  };
  row({0, 0})[n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    const WeylElement br = rewrite_commutator(z, WeylElement::term(1, unknowns[c].x, unknowns[c].y));
    for (const auto& [m, v] : br) row(m)[c] = v;
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k <= n; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r][n] != 0) return false;
  }
  return true;
}

std::set<weyl::Point> roof_sweep(const std::vector<weyl::Point>& pts, int bound) {
  std::set<weyl::Point> out;
  for (int r = -bound; r <= bound; ++r) {
    for (int s = -bound; s <= bound; ++s) {
      if (r + s <= 0) continue;
      std::int64_t best = INT64_MIN;
      for (const auto& p : pts) best = std::max(best, r * p.x + s * p.y);
      std::vector<weyl::Point> face;
      for (const auto& p : pts) {
        if (r * p.x + s * p.y == best) face.push_back(p);
      }
      // The endpoints of the face are hull vertices.
      std::sort(face.begin(), face.end());
      out.insert(face.front());
      out.insert(face.back());
    }
  }
  return out;
}

BiPoly leading_form(const BiPoly& f, long rho, long sigma) {
  long best = LONG_MIN;
  for (const auto& [m, c] : f) best = std::max(best, rho * m.x + sigma * m.y);
  BiPoly out;
  for (const auto& [m, c] : f) {
    if (rho * m.x + sigma * m.y == best) out.add(m, c);
  }
  return out;
}

WeylElement at_pq(const weyl::UniPoly& f) {
  const WeylElement pq = WeylElement::term(1, 1, 1);
  WeylElement out;
  for (int i = 0; i <= f.degree(); ++i) out += rewrite_power(pq, i) * f.coeff(i);
  return out;
}

}  // namespace oracle
