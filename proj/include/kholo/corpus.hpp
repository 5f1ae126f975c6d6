#ifndef KHOLO_CORPUS_HPP
#define KHOLO_CORPUS_HPP

#include <cstdint>
#include <random>

#include "kholo/simplicial.hpp"
#include "kholo/poly.hpp"

namespace kholo::corpus {

using Rng = std::mt19937_64;

/// Numerator in [-bound, bound], denominator in [1, bound].
Rational random_rational(Rng& rng, long bound);
GaussianRational random_gaussian(Rng& rng, long bound);

struct PolyShape {
  std::uint32_t max_degree = 4;
  std::size_t max_terms = 6;
  long bound = 100;
  bool real_coefficients = false;
  bool zero_constant = false;
};

SparsePoly random_poly(Rng& rng, const VarSpace& space, const PolyShape& shape);

/// Triangulated grid of rows x cols unit squares with random diagonals,
/// jittered interior vertices and a few squares dropped, plus random marked
/// vertices and two endpoints taken from vertices that some triangle uses.
struct GridCase {
  SimplicialComplex complex;
  std::vector<Simplex> marked;
  std::size_t from;
  std::size_t to;
};

GridCase random_grid(Rng& rng, std::size_t max_side = 4);

}  // namespace kholo::corpus

#endif  // KHOLO_CORPUS_HPP
