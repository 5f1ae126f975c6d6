#include "kholo/eliminate.hpp"

#include <algorithm>
#include <cstdlib>

#include "kholo/error.hpp"
#include "kholo/resultant.hpp"

namespace kholo {

namespace {

std::size_t real_dimension(const SparsePoly& p) {
  return std::max(p.space().count(VarKind::X), p.space().count(VarKind::Y));
}

// x_j -> z_j + x0_j (or x_j + x0_j), y_j -> y0_j, t -> t_coeff * t.
LinearSubst restriction(const Basepoint& bp, const VarSpace& source, const VarSpace& target,
                        const GaussianRational& t_coeff) {
  const std::size_t n = bp.x0.size();
  LinearSubst s(source, target);
  for (std::size_t j = 0; j < n; ++j) {
    s.set(j, AffineForm{GaussianRational(bp.x0[j]), {{j, GaussianRational(1)}}});
    s.set(n + j, AffineForm::of_constant(GaussianRational(bp.y0[j])));
  }
  s.set(2 * n, AffineForm::of_variable(target.index_of("t"), t_coeff));
  return s;
}

bool restrictions_nonzero(const AnnihilatorPair& pair, const Basepoint& bp) {
  const auto& space = pair.p1().space();
  const auto s = restriction(bp, space, space, GaussianRational(1));
  return !substitute(pair.p1(), s).is_zero() && !substitute(pair.p2(), s).is_zero();
}

}  // namespace

AnnihilatorPair::AnnihilatorPair(const SparsePoly& p1, const SparsePoly& p2) {
  for (const auto* p : {&p1, &p2}) {
    if (p->is_zero()) throw Error(ErrorKind::ZeroInput, "annihilating polynomial must be nonzero");
    if (!p->has_real_coefficients())
      throw Error(ErrorKind::NonRealCoefficients, "annihilators of real functions need real coefficients");
    if (!p->space().only_kinds({VarKind::X, VarKind::Y, VarKind::T}))
      throw Error(ErrorKind::SpaceMismatch, "annihilators must live in x, y, t variables");
  }
  n_ = std::max(real_dimension(p1), real_dimension(p2));
  const VarSpace space = VarSpace::real_t(n_);
  p1_ = change_space(p1, space);
  p2_ = change_space(p2, space);
}

bool Basepoint::is_origin() const {
  return std::all_of(x0.begin(), x0.end(), [](long v) { return v == 0; }) &&
         std::all_of(y0.begin(), y0.end(), [](long v) { return v == 0; });
}

Basepoint search_basepoint(const AnnihilatorPair& pair, unsigned bound) {
  const std::size_t n = pair.dimension();
  const long b = static_cast<long>(bound);
  std::vector<long> coords(2 * n);
  for (long radius = 0; radius <= b; ++radius) {
    // odometer over [-radius, radius]^(2n) in lexicographic order, keeping the shell
    std::fill(coords.begin(), coords.end(), -radius);
    while (true) {
      long norm = 0;
      for (long c : coords) norm = std::max(norm, std::labs(c));
      if (norm == radius) {
        Basepoint bp{{coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(n)},
                     {coords.begin() + static_cast<std::ptrdiff_t>(n), coords.end()}};
        if (restrictions_nonzero(pair, bp)) return bp;
      }
      std::size_t k = coords.size();
      while (k > 0 && coords[k - 1] == radius) {
        coords[k - 1] = -radius;
        --k;
      }
      if (k == 0) break;
      ++coords[k - 1];
    }
  }
  throw Error(ErrorKind::BasepointNotFound,
              "no grid point within bound " + std::to_string(bound) + " keeps both restrictions nonzero");
}

EliminationReport eliminate_annihilator(const AnnihilatorPair& pair, unsigned bound) {
  const std::size_t n = pair.dimension();
  EliminationReport report;
  report.basepoint = search_basepoint(pair, bound);

  const VarSpace zt = VarSpace::complex_t(n);
  const GaussianRational i = GaussianRational::i();
  report.q1 = substitute(pair.p1(), restriction(report.basepoint, pair.p1().space(), zt, GaussianRational(1)));
  report.q2 = substitute(pair.p2(), restriction(report.basepoint, pair.p2().space(), zt, -i));

  // q1(z, w) and q2(z, t - w) over z, t, w
  const VarSpace ztw = VarSpace::complex_t_aux(n);
  const std::size_t t = n;
  const std::size_t w = n + 1;
  LinearSubst to_w(zt, ztw);
  LinearSubst to_t_minus_w(zt, ztw);
  for (std::size_t j = 0; j < n; ++j) {
    to_w.set(j, AffineForm::of_variable(j));
    to_t_minus_w.set(j, AffineForm::of_variable(j));
  }
  to_w.set(t, AffineForm::of_variable(w));
  to_t_minus_w.set(t, AffineForm::of_variable(t).plus(w, GaussianRational(-1)));
  const SparsePoly local =
      change_space(sylvester_resultant(substitute(report.q1, to_w), substitute(report.q2, to_t_minus_w), w), zt);

  LinearSubst back(zt, zt);
  for (std::size_t j = 0; j < n; ++j) {
    const GaussianRational shift(Rational(report.basepoint.x0[j]), Rational(report.basepoint.y0[j]));
    back.set(j, AffineForm{-shift, {{j, GaussianRational(1)}}});
  }
  back.set(t, AffineForm::of_variable(t));
  report.r = report.basepoint.is_origin() ? local : substitute(local, back);
  report.degenerate = report.r.is_zero();
  return report;
}

bool verify_annihilator(const SparsePoly& r, const SparsePoly& f) {
  const std::size_t t = r.space().index_of("t");
  const SparsePoly lifted = change_space(f, r.space());
  if (lifted.uses(t)) throw Error(ErrorKind::SpaceMismatch, "f must not involve t");
  return substitute_polynomial(r, t, lifted).is_zero();
}

}  // namespace kholo
