#ifndef KHOLO_CARTAN_HPP
#define KHOLO_CARTAN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "kholo/poly.hpp"

namespace kholo {

/// Outcome of rebuilding a holomorphic polynomial from a real part u.
///
/// `f` is the candidate 2*u(z/2, z/(2i)) - u(0); `residual` is Re f - u.
/// The candidate always has Im f(0) = 0. `reconstructed` holds exactly when
/// the residual vanishes, which happens exactly when u is pluriharmonic.
struct CartanReport {
  SparsePoly u;         // x1..xn, y1..yn
  SparsePoly f;         // z1..zn
  SparsePoly residual;  // x1..xn, y1..yn
  SparsePoly g;         // z1..zn, w1..wn
  bool pluriharmonic = false;
  bool reconstructed = false;
};

/// g(z, w) = (f(z + i w) + sigma(f)(z - i w)) / 2, sigma conjugating the
/// coefficients. Result lives in VarSpace::doubled(n).
SparsePoly build_g(const SparsePoly& f);

struct IdentityCheck {
  SparsePoly lhs;
  SparsePoly rhs;
  bool equal = false;
};

/// (a): 2 g(z/2, z/(2i)) against f + conj(f(0)), in z1..zn.
/// (b): g(x, y) against Re f, in x1..xn, y1..yn.
struct RestrictionIdentities {
  IdentityCheck halving;
  IdentityCheck real_slice;
};

RestrictionIdentities restrict_g_identity(const SparsePoly& f);

/// A nonvanishing antiholomorphic derivative. `index` runs over the complex
/// coordinates in order (for g: z1..zn then w1..wn).
struct HolomorphyWitness {
  std::size_t index;
  std::string variable;  // e.g. "z1", "w2"
  SparsePoly derivative;
};

struct HolomorphyCheck {
  bool holomorphic = false;
  std::vector<HolomorphyWitness> witnesses;
};

/// Checks d/dzbar_j h = 0 for every pair (x_j, y_j) of a polynomial h in
/// VarSpace::real(m). `names` labels the complex coordinates (size m).
HolomorphyCheck antiholomorphic_witnesses(const SparsePoly& h, const std::vector<std::string>& names);

/// Expands g = build_g(f) in the 4n real coordinates of (z, w) and checks
/// that every d/dzbar_j g and d/dwbar_j g vanishes.
HolomorphyCheck verify_g_holomorphic(const SparsePoly& f);

struct PluriharmonicWitness {
  std::size_t j;
  std::size_t k;
  SparsePoly value;  // d^2 u / dz_j dzbar_k
};

struct PluriharmonicCheck {
  bool pluriharmonic = false;
  std::vector<PluriharmonicWitness> witnesses;
};

/// d^2 u / dz_j dzbar_k = 0 for all j, k. Throws NonRealCoefficients.
PluriharmonicCheck check_pluriharmonic(const SparsePoly& u);

/// u in VarSpace::real(n) with real coefficients. Throws NonRealCoefficients.
CartanReport reconstruct_from_real_part(const SparsePoly& u);

}  // namespace kholo

#endif  // KHOLO_CARTAN_HPP
