#ifndef KHOLO_RESULTANT_HPP
#define KHOLO_RESULTANT_HPP

#include <cstddef>
#include <vector>

#include "kholo/poly.hpp"

namespace kholo {

/// Dense square matrix of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t n, const VarSpace& space) : n_(n), cells_(n * n, SparsePoly(space)) {}

  std::size_t size() const { return n_; }
  SparsePoly& operator()(std::size_t r, std::size_t c) { return cells_[r * n_ + c]; }
  const SparsePoly& operator()(std::size_t r, std::size_t c) const { return cells_[r * n_ + c]; }

 private:
  std::size_t n_;
  std::vector<SparsePoly> cells_;
};

/// Sylvester matrix of A and B as polynomials in `var`: deg_var(B) rows of
/// A's coefficients above deg_var(A) rows of B's, leading coefficient first.
PolyMatrix sylvester_matrix(const SparsePoly& a, const SparsePoly& b, std::size_t var);

/// Fraction-free (Bareiss) determinant over the polynomial ring.
SparsePoly bareiss_determinant(PolyMatrix m);

/// Res_var(A, B) as the Sylvester determinant. The result lives in the
/// input space and does not involve `var`.
///
/// If exactly one input has degree 0 in `var`, say b, the result is
/// b^deg(A) (and a^deg(B) symmetrically). Throws ZeroInput for a zero
/// input and DegreeZeroBoth when neither input involves `var`.
SparsePoly sylvester_resultant(const SparsePoly& a, const SparsePoly& b, std::size_t var);

}  // namespace kholo

#endif  // KHOLO_RESULTANT_HPP
