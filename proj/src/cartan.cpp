#include "kholo/cartan.hpp"

#include <algorithm>

#include "kholo/error.hpp"

namespace kholo {

namespace {

const GaussianRational kHalf{Rational(1, 2)};
const GaussianRational kI = GaussianRational::i();

// Brings f into z1..zn, n = number of Z variables.
SparsePoly normalize_complex(const SparsePoly& f) {
  if (!f.space().only_kinds({VarKind::Z}))
    throw Error(ErrorKind::NonZSpace, "expected a polynomial in z variables only");
  return change_space(f, VarSpace::complex(f.space().count(VarKind::Z)));
}

SparsePoly normalize_real(const SparsePoly& u) {
  if (!u.space().only_kinds({VarKind::X, VarKind::Y}))
    throw Error(ErrorKind::SpaceMismatch, "expected a polynomial in x, y variables only");
  if (!u.has_real_coefficients()) throw Error(ErrorKind::NonRealCoefficients, "real part must have real coefficients");
  const auto n = std::max(u.space().count(VarKind::X), u.space().count(VarKind::Y));
  return change_space(u, VarSpace::real(n));
}

// z_j -> z_j / 2, w_j -> z_j / (2i) = -i z_j / 2 on the doubled space.
LinearSubst halving(std::size_t n) {
  LinearSubst s(VarSpace::doubled(n), VarSpace::complex(n));
  for (std::size_t j = 0; j < n; ++j) {
    s.set(j, AffineForm::of_variable(j, kHalf));
    s.set(n + j, AffineForm::of_variable(j, -kI * kHalf));
  }
  return s;
}

}  // namespace

SparsePoly build_g(const SparsePoly& f_in) {
  const SparsePoly f = normalize_complex(f_in);
  const std::size_t n = f.space().size();
  const VarSpace zw = VarSpace::doubled(n);
  LinearSubst plus(f.space(), zw);
  LinearSubst minus(f.space(), zw);
  for (std::size_t j = 0; j < n; ++j) {
    plus.set(j, AffineForm::of_variable(j).plus(n + j, kI));
    minus.set(j, AffineForm::of_variable(j).plus(n + j, -kI));
  }
  return (substitute(f, plus) + substitute(conjugate_coefficients(f), minus)) * kHalf;
}

RestrictionIdentities restrict_g_identity(const SparsePoly& f_in) {
  const SparsePoly f = normalize_complex(f_in);
  const std::size_t n = f.space().size();
  const SparsePoly g = build_g(f);

  RestrictionIdentities out;
  out.halving.lhs = substitute(g, halving(n)) * GaussianRational(2);
  out.halving.rhs = f + SparsePoly::constant(f.space(), conj(f.constant_term()));
  out.halving.equal = poly_equal(out.halving.lhs, out.halving.rhs);

  LinearSubst real_slice(g.space(), VarSpace::real(n));
  for (std::size_t k = 0; k < 2 * n; ++k) real_slice.set(k, AffineForm::of_variable(k));
  out.real_slice.lhs = substitute(g, real_slice);
  out.real_slice.rhs = split_real_imag(f).re;
  out.real_slice.equal = poly_equal(out.real_slice.lhs, out.real_slice.rhs);
  return out;
}

HolomorphyCheck antiholomorphic_witnesses(const SparsePoly& h, const std::vector<std::string>& names) {
  HolomorphyCheck out;
  for (std::size_t j = 1; j <= names.size(); ++j) {
    SparsePoly d = wirtinger(h, j, true);
    if (!d.is_zero()) out.witnesses.push_back({j, names[j - 1], std::move(d)});
  }
  out.holomorphic = out.witnesses.empty();
  return out;
}

HolomorphyCheck verify_g_holomorphic(const SparsePoly& f) {
  const SparsePoly g = build_g(f);
  return antiholomorphic_witnesses(to_real_coordinates(g), g.space().names());
}

PluriharmonicCheck check_pluriharmonic(const SparsePoly& u_in) {
  const SparsePoly u = normalize_real(u_in);
  const std::size_t n = u.space().size() / 2;
  PluriharmonicCheck out;
  for (std::size_t k = 1; k <= n; ++k) {
    const SparsePoly dbar = wirtinger(u, k, true);
    for (std::size_t j = 1; j <= n; ++j) {
      SparsePoly mixed = wirtinger(dbar, j, false);
      if (!mixed.is_zero()) out.witnesses.push_back({j, k, std::move(mixed)});
    }
  }
  out.pluriharmonic = out.witnesses.empty();
  return out;
}

CartanReport reconstruct_from_real_part(const SparsePoly& u_in) {
  const SparsePoly u = normalize_real(u_in);
  const std::size_t n = u.space().size() / 2;

  // u is read as g restricted to the real slice, so f = 2 g(z/2, z/(2i)) - u(0).
  LinearSubst s(u.space(), VarSpace::complex(n));
  for (std::size_t j = 0; j < n; ++j) {
    s.set(j, AffineForm::of_variable(j, kHalf));
    s.set(n + j, AffineForm::of_variable(j, -kI * kHalf));
  }
  CartanReport report;
  report.u = u;
  report.f = substitute(u, s) * GaussianRational(2) - SparsePoly::constant(VarSpace::complex(n), u.constant_term());
  report.residual = split_real_imag(report.f).re - u;
  report.g = build_g(report.f);
  report.pluriharmonic = check_pluriharmonic(u).pluriharmonic;
  report.reconstructed = report.residual.is_zero();
  return report;
}

}  // namespace kholo
