#include "kholo/resultant.hpp"

#include <utility>

#include "kholo/error.hpp"

namespace kholo {

PolyMatrix sylvester_matrix(const SparsePoly& a, const SparsePoly& b, std::size_t var) {
  if (!(a.space() == b.space())) throw Error(ErrorKind::SpaceMismatch, "resultant operands in different spaces");
  const auto ca = coefficients_in(a, var);
  const auto cb = coefficients_in(b, var);
  const std::size_t m = ca.size() - 1;
  const std::size_t k = cb.size() - 1;
  PolyMatrix s(m + k, a.space());
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t i = 0; i <= m; ++i) s(r, r + i) = ca[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= k; ++i) s(k + r, r + i) = cb[k - i];
  return s;
}

SparsePoly bareiss_determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  const VarSpace& space = m(0, 0).space();
  if (n == 0) return SparsePoly::constant(space, GaussianRational(1));
  bool negate = false;
  SparsePoly previous = SparsePoly::constant(space, GaussianRational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return SparsePoly(space);
      for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(r, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        SparsePoly numer = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = previous.is_constant() ? numer * previous.constant_term().inverse() : divide_exact(numer, previous);
      }
      m(i, k) = SparsePoly(space);
    }
    previous = m(k, k);
  }
  SparsePoly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

SparsePoly sylvester_resultant(const SparsePoly& a, const SparsePoly& b, std::size_t var) {
  if (!(a.space() == b.space())) throw Error(ErrorKind::SpaceMismatch, "resultant operands in different spaces");
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroInput, "resultant of the zero polynomial");
  const auto da = a.degree(var);
  const auto db = b.degree(var);
  if (da == 0 && db == 0)
    throw Error(ErrorKind::DegreeZeroBoth, "neither operand involves '" + a.space()[var].name + "'");
  if (db == 0) return pow(b, da);
  if (da == 0) return pow(a, db);
  return bareiss_determinant(sylvester_matrix(a, b, var));
}

}  // namespace kholo
