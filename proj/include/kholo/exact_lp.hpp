#ifndef KHOLO_EXACT_LP_HPP
#define KHOLO_EXACT_LP_HPP

#include <Eigen/Core>

#include <optional>

#include "kholo/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<kholo::Rational> : GenericNumTraits<kholo::Rational> {
  using Real = kholo::Rational;
  using NonInteger = kholo::Rational;
  using Literal = kholo::Rational;
  using Nested = kholo::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace kholo {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

namespace lp {

/// Unique solution of the square system a x = b, or nullopt when a is singular.
std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b);

/// Rank by exact Gaussian elimination.
Eigen::Index rank(RationalMatrix a);

/// max c.x subject to a x = b, x >= 0, by enumerating basic feasible
/// solutions. The feasible set must be bounded. Returns nullopt when it is
/// empty. Exponential in the number of columns; meant for small systems.
std::optional<Rational> maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& c);

}  // namespace lp

}  // namespace kholo

#endif  // KHOLO_EXACT_LP_HPP
