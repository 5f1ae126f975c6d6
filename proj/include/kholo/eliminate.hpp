#ifndef KHOLO_ELIMINATE_HPP
#define KHOLO_ELIMINATE_HPP

#include <cstddef>
#include <vector>

#include "kholo/poly.hpp"

namespace kholo {

/// Nonzero real-coefficient polynomials P1, P2 in x1..xn, y1..yn, t with
/// P1(x, y, f1) = 0 and P2(x, y, f2) = 0 for f = f1 + i f2.
class AnnihilatorPair {
 public:
  /// Validates and moves both inputs into VarSpace::real_t(n). Throws
  /// ZeroInput, NonRealCoefficients, or SpaceMismatch for foreign variables.
  AnnihilatorPair(const SparsePoly& p1, const SparsePoly& p2);

  const SparsePoly& p1() const { return p1_; }
  const SparsePoly& p2() const { return p2_; }
  std::size_t dimension() const { return n_; }

 private:
  SparsePoly p1_;
  SparsePoly p2_;
  std::size_t n_ = 0;
};

/// Integer translation (x, y) -> (x + x0, y + y0).
struct Basepoint {
  std::vector<long> x0;
  std::vector<long> y0;

  bool is_origin() const;
  friend bool operator==(const Basepoint&, const Basepoint&) = default;
};

/// First grid point of [-bound, bound]^(2n), ordered by max-norm and then
/// lexicographically on (x0, y0), at which both translated restrictions
/// P1(x + x0, y0, t) and P2(x + x0, y0, t) are nonzero. Throws
/// BasepointNotFound when the grid is exhausted.
Basepoint search_basepoint(const AnnihilatorPair& pair, unsigned bound = 5);

/// q1, q2 and r live in z1..zn, t.
///
/// q1(z, t) = P1(z + x0, y0, t) and q2(z, t) = P2(z + x0, y0, -i t) are the
/// restrictions in coordinates centred at the basepoint. r is
/// Res_w(q1(z, w), q2(z, t - w)) translated back to the original
/// coordinates, z -> z - (x0 + i y0), so r(z, f(z)) = 0 for the original f.
struct EliminationReport {
  Basepoint basepoint;
  SparsePoly q1;
  SparsePoly q2;
  SparsePoly r;
  bool degenerate = false;
};

EliminationReport eliminate_annihilator(const AnnihilatorPair& pair, unsigned bound = 5);

/// r(z, f(z)) == 0 as a polynomial identity; f in z variables, r in z and t.
bool verify_annihilator(const SparsePoly& r, const SparsePoly& f);

}  // namespace kholo

#endif  // KHOLO_ELIMINATE_HPP
