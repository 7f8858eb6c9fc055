#include "weyl/linalg.hpp"

#include <stdexcept>

namespace weyl {

namespace {

struct Echelon {
  RationalMatrix rows;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form of the augmented matrix; the augmented column
// (index cols) is never chosen as a pivot.
Echelon reduce(RationalMatrix m, std::size_t cols) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rows = std::move(m);
  return out;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a, std::size_t cols) {
  for (const auto& r : a) {
    if (r.size() != cols) throw std::invalid_argument("nullspace: ragged matrix");
  }
  const Echelon e = reduce(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, std::size_t cols,
                                           const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
  RationalMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (aug[i].size() != cols) throw std::invalid_argument("solve: ragged matrix");
    aug[i].push_back(b[i]);
  }
  const Echelon e = reduce(std::move(aug), cols);
  for (std::size_t r = e.pivot_cols.size(); r < e.rows.size(); ++r) {
    if (e.rows[r][cols] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = e.rows[i][cols];
  return x;
}

}  // namespace weyl
