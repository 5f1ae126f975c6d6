#ifndef KHOLO_BRANCHES_HPP
#define KHOLO_BRANCHES_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kholo/poly.hpp"

namespace kholo {

/// disc_t(P) = (-1)^(d(d-1)/2) Res_t(P, dP/dt) / lc_t(P), d = deg_t(P).
/// The result drops `t` from the space. Throws ZeroDegree when d = 0 and
/// InexactDivision if lc_t(P) fails to divide the resultant.
SparsePoly discriminant(const SparsePoly& p, std::string_view t = "t");

/// D(z0) == 0, evaluated exactly.
bool locus_membership(const SparsePoly& d, const Assignment& z0);

/// Dense univariate polynomial over Q(i); coeffs[k] multiplies t^k.
struct UnivariatePoly {
  std::vector<GaussianRational> coeffs;

  /// -1 for the zero polynomial.
  long degree() const;
  const GaussianRational& leading() const { return coeffs[static_cast<std::size_t>(degree())]; }
};

/// P(z0, t) with every variable except `t` assigned.
UnivariatePoly specialize_univariate(const SparsePoly& p, const Assignment& z0, std::string_view t = "t");
UnivariatePoly derivative(const UnivariatePoly& p);
/// Monic gcd by the Euclidean algorithm over Q(i).
UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b);
/// deg p - deg gcd(p, p'): the number of distinct complex roots.
std::size_t exact_distinct_roots(const UnivariatePoly& p);

struct FiberSample {
  Assignment point;
  bool on_locus = false;
  std::size_t fiber_count = 0;
  std::size_t exact_distinct = 0;
};

/// Fiber counts along user-supplied base points. `covering_degree` is set
/// iff every sample has the same count; `violations` lists samples whose
/// count differs from deg_t(P).
struct BranchReport {
  SparsePoly p;
  SparsePoly d;
  std::string t;
  std::vector<FiberSample> samples;
  std::optional<std::size_t> covering_degree;
  std::vector<std::size_t> violations;
};

/// Floating-point surface. Nothing outside this namespace rounds.
namespace numeric {

inline constexpr double kDefaultTolerance = 1e-8;
inline constexpr int kMaxIterations = 200;

/// All complex roots of sum coeffs[k] t^k by Aberth-Ehrlich iteration,
/// started on a circle of Cauchy-bound radius with fixed angular offsets.
/// Throws NonConvergence after `max_iterations` sweeps and
/// LeadingCoefficientVanishes for a zero leading coefficient.
Eigen::VectorXcd aberth_roots(const Eigen::VectorXcd& coeffs, int max_iterations = kMaxIterations);

/// Number of clusters of `roots` under single linkage at distance < tol.
std::size_t count_clusters(const Eigen::VectorXcd& roots, double tol);

/// Number of distinct roots of P(z0, t). Requires lc_t(P)(z0) != 0
/// (LeadingCoefficientVanishes otherwise) and tol > 0.
std::size_t fiber_count(const SparsePoly& p, const Assignment& z0, double tol = kDefaultTolerance,
                        std::string_view t = "t");

/// Checks every path point is off the discriminant locus (PointOnLocus
/// otherwise), then counts fibers at each.
BranchReport covering_check(const SparsePoly& p, const std::vector<Assignment>& path,
                            double tol = kDefaultTolerance, std::string_view t = "t");

using ComplexPoint = std::map<std::string, std::complex<double>, std::less<>>;

std::complex<double> evaluate(const SparsePoly& p, const ComplexPoint& point);

/// |R(z0, f(z0))| < tol at every sample, for f available only numerically.
bool verify_annihilator_numeric(const SparsePoly& r, const std::function<std::complex<double>(const ComplexPoint&)>& f,
                                const std::vector<ComplexPoint>& samples, double tol, std::string_view t = "t");

}  // namespace numeric

}  // namespace kholo

#endif  // KHOLO_BRANCHES_HPP
