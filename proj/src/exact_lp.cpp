#include "kholo/exact_lp.hpp"

#include <utility>
#include <vector>

namespace kholo::lp {

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<Eigen::Index> rref(RationalMatrix& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Rational inv = m(row, col).inverse();
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b) {
  const Eigen::Index n = a.rows();
  RationalMatrix aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const auto pivots = rref(aug);
  if (static_cast<Eigen::Index>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
  return RationalVector(aug.col(n));
}

Eigen::Index rank(RationalMatrix a) { return static_cast<Eigen::Index>(rref(a).size()); }

std::optional<Rational> maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& c) {
  const Eigen::Index cols = a.cols();
  RationalMatrix aug(a.rows(), cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
  const auto m = static_cast<Eigen::Index>(pivots.size());
  const RationalMatrix eq = aug.topLeftCorner(m, cols);
  const RationalVector rhs = aug.col(cols).head(m);

  if (m == 0) {
    // only x = 0 is a vertex of {x >= 0}; bounded feasibility forces it
    return Rational(0);
  }

  std::optional<Rational> best;
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index k = 0; k < m; ++k) basis[static_cast<std::size_t>(k)] = k;
  while (true) {
    RationalMatrix sub(m, m);
    for (Eigen::Index k = 0; k < m; ++k) sub.col(k) = eq.col(basis[static_cast<std::size_t>(k)]);
    if (auto x = solve_square(sub, rhs)) {
      bool feasible = true;
      for (Eigen::Index k = 0; k < m; ++k)
        if ((*x)(k).sign() < 0) {
          feasible = false;
          break;
        }
      if (feasible) {
        Rational value(0);
        for (Eigen::Index k = 0; k < m; ++k) value += c(basis[static_cast<std::size_t>(k)]) * (*x)(k);
        if (!best || value > *best) best = value;
      }
    }
    // next combination in lexicographic order
    Eigen::Index i = m - 1;
    while (i >= 0 && basis[static_cast<std::size_t>(i)] == cols - m + i) --i;
    if (i < 0) break;
    ++basis[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i + 1; j < m; ++j) basis[static_cast<std::size_t>(j)] = basis[static_cast<std::size_t>(j - 1)] + 1;
  }
  return best;
}

}  // namespace kholo::lp
