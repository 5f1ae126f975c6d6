#ifndef KHOLO_POLY_HPP
#define KHOLO_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kholo/rational.hpp"
#include "kholo/var_space.hpp"

namespace kholo {

using Exponents = std::vector<std::uint32_t>;

/// Degrees above this bound are rejected with DegreeOverflow.
inline constexpr std::uint64_t kMaxDegree = 1'000'000;

/// Graded lexicographic order: total degree first, ties broken by the first
/// variable where the exponents differ (earlier variables rank higher).
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q(i) in a fixed variable space.
/// Zero coefficients are never stored; the zero polynomial has no terms.
class SparsePoly {
 public:
  using TermMap = std::map<Exponents, GaussianRational, GrlexLess>;

  SparsePoly() = default;
  explicit SparsePoly(VarSpace space) : space_(std::move(space)) {}

  static SparsePoly constant(VarSpace space, const GaussianRational& c);
  static SparsePoly variable(VarSpace space, std::string_view name);
  static SparsePoly variable(VarSpace space, std::size_t index);
  static SparsePoly monomial(VarSpace space, Exponents exps, const GaussianRational& c);

  const VarSpace& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Adds c * x^exps, merging with an existing term.
  void add_term(const Exponents& exps, const GaussianRational& c);
  GaussianRational coefficient(const Exponents& exps) const;
  GaussianRational constant_term() const;

  std::uint32_t degree(std::size_t var) const;
  std::uint32_t degree(std::string_view name) const { return degree(space_.index_of(name)); }
  std::uint32_t total_degree() const;
  bool has_real_coefficients() const;
  bool uses(std::size_t var) const { return degree(var) > 0; }

  /// Greatest term in grlex order. Precondition: nonzero.
  const std::pair<const Exponents, GaussianRational>& leading_term() const { return *terms_.rbegin(); }

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  SparsePoly& operator*=(const GaussianRational& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const GaussianRational& c) { return a *= c; }
  friend SparsePoly operator*(const GaussianRational& c, SparsePoly a) { return a *= c; }
  friend SparsePoly operator-(const SparsePoly& a);

  /// Structural equality; spaces must agree (SpaceMismatch otherwise).
  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

 private:
  void require_same_space(const SparsePoly& o) const;

  VarSpace space_;
  TermMap terms_;
};

enum class PolyOp { Add, Sub, Mul };

/// Ring operation; throws SpaceMismatch when the spaces differ.
SparsePoly poly_arith(const SparsePoly& p, const SparsePoly& q, PolyOp op);

/// True iff p - q is the zero polynomial.
bool poly_equal(const SparsePoly& p, const SparsePoly& q);

SparsePoly pow(const SparsePoly& p, std::uint32_t exponent);

/// Formal partial derivative.
SparsePoly partial(const SparsePoly& p, std::size_t var);
SparsePoly partial(const SparsePoly& p, std::string_view name);

/// Coefficientwise complex conjugation (the map sigma).
SparsePoly conjugate_coefficients(const SparsePoly& p);

SparsePoly real_coefficients_part(const SparsePoly& p);
SparsePoly imag_coefficients_part(const SparsePoly& p);

/// Re-expresses p in `target`, matching variables by name. Variables of p
/// with positive degree must exist in `target` (UnknownVariable otherwise).
SparsePoly change_space(const SparsePoly& p, const VarSpace& target);

/// Affine linear form over a target space: constant + sum coeff * var.
struct AffineForm {
  GaussianRational constant;
  std::vector<std::pair<std::size_t, GaussianRational>> linear;

  static AffineForm of_constant(GaussianRational c) { return {std::move(c), {}}; }
  static AffineForm of_variable(std::size_t var, GaussianRational coeff = GaussianRational(1)) {
    return {GaussianRational(), {{var, std::move(coeff)}}};
  }
  AffineForm& plus(std::size_t var, GaussianRational coeff) {
    linear.emplace_back(var, std::move(coeff));
    return *this;
  }
};

/// Map from variables of a source space to affine forms over a target space.
class LinearSubst {
 public:
  LinearSubst(VarSpace source, VarSpace target);

  LinearSubst& set(std::size_t source_var, AffineForm image);
  LinearSubst& set(std::string_view source_name, AffineForm image);

  const VarSpace& source() const { return source_; }
  const VarSpace& target() const { return target_; }
  bool covers(std::size_t source_var) const { return images_[source_var].has_value(); }
  const AffineForm& image(std::size_t source_var) const { return *images_[source_var]; }

 private:
  VarSpace source_;
  VarSpace target_;
  std::vector<std::optional<AffineForm>> images_;
};

/// Image of p under the substitution. Every variable of p with positive
/// degree must have an image (IncompleteSubstitution otherwise).
SparsePoly substitute(const SparsePoly& p, const LinearSubst& s);

/// Replaces the single variable `var` by the polynomial q (in p's space),
/// by Horner evaluation in that variable.
SparsePoly substitute_polynomial(const SparsePoly& p, std::size_t var, const SparsePoly& q);

using Assignment = std::map<std::string, GaussianRational, std::less<>>;

/// Exact value at a point covering every variable of positive degree.
GaussianRational evaluate(const SparsePoly& p, const Assignment& point);

/// Substitutes the assigned variables by constants; the result stays in p's space.
SparsePoly specialize(const SparsePoly& p, const Assignment& point);

/// Writes every complex variable (kinds Z then W, in space order) as
/// x_j + i*y_j. The result lives in VarSpace::real(m), m the number of
/// complex variables. Throws NonZSpace when p's space holds other kinds.
SparsePoly to_real_coordinates(const SparsePoly& p);

/// f = re + i*im with re, im real-coefficient polynomials in x, y.
struct RealImagParts {
  SparsePoly re;
  SparsePoly im;
};
RealImagParts split_real_imag(const SparsePoly& p);

/// Wirtinger operator on a polynomial in VarSpace::real(n):
/// d/dz_j = (d/dx_j - i d/dy_j)/2, d/dzbar_j = (d/dx_j + i d/dy_j)/2.
SparsePoly wirtinger(const SparsePoly& p, std::size_t j, bool barred);

/// Coefficients of p viewed as univariate in `var`, index = power.
std::vector<SparsePoly> coefficients_in(const SparsePoly& p, std::size_t var);

/// Multivariate division by a single divisor in grlex order.
struct DivisionResult {
  SparsePoly quotient;
  SparsePoly remainder;
};
DivisionResult divide(const SparsePoly& a, const SparsePoly& b);

/// Exact quotient; throws InexactDivision when b does not divide a.
SparsePoly divide_exact(const SparsePoly& a, const SparsePoly& b);

}  // namespace kholo

#endif  // KHOLO_POLY_HPP
