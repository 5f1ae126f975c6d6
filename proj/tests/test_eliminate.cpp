#include <doctest.h>

#include "kholo/kholo.hpp"
#include "oracles.hpp"

using namespace kholo;

namespace {

SparsePoly rt(const char* text, std::size_t n = 1) { return parse_poly(text, VarSpace::real_t(n)); }
SparsePoly zt(const char* text, std::size_t n = 1) { return parse_poly(text, VarSpace::complex_t(n)); }

AnnihilatorPair pair_for(const SparsePoly& f) {
  const std::size_t n = f.space().size();
  const auto parts = split_real_imag(f);
  const VarSpace space = VarSpace::real_t(n);
  const SparsePoly t = SparsePoly::variable(space, "t");
  return AnnihilatorPair(t - change_space(parts.re, space), t - change_space(parts.im, space));
}

// First grid point (graded order) where both restrictions y = y0 are nonzero.
Basepoint brute_basepoint(const AnnihilatorPair& pair, long bound) {
  const std::size_t n = pair.dimension();
  for (const auto& g : oracle::graded_grid(2 * n, bound)) {
    Assignment ys;
    for (std::size_t j = 0; j < n; ++j) ys["y" + std::to_string(j + 1)] = GaussianRational(g[n + j]);
    if (!specialize(pair.p1(), ys).is_zero() && !specialize(pair.p2(), ys).is_zero())
      return Basepoint{{g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n)}, {g.begin() + static_cast<std::ptrdiff_t>(n), g.end()}};
  }
  throw Error(ErrorKind::BasepointNotFound, "oracle exhausted the grid");
}

}  // namespace

TEST_SUITE("eliminate") {
  TEST_CASE("pair validation") {
    CHECK_THROWS_AS(AnnihilatorPair(rt("0"), rt("t")), Error);
    CHECK_THROWS_AS(AnnihilatorPair(rt("t - i*x"), rt("t")), Error);
    CHECK_THROWS_AS(AnnihilatorPair(zt("t - z1"), rt("t")), Error);
    const AnnihilatorPair p(rt("t - x1"), parse_poly("t - y2", VarSpace::real_t(2)));
    CHECK(p.dimension() == 2);
    CHECK(p.p1().space() == VarSpace::real_t(2));
  }

  TEST_CASE("basepoint examples") {
    CHECK(search_basepoint(AnnihilatorPair(rt("t - (x^2 - y^2)"), rt("t - 2*x*y"))).is_origin());
    CHECK(search_basepoint(AnnihilatorPair(rt("y*t - 1"), rt("t - x"))).is_origin());
    const AnnihilatorPair shifted(rt("y1*t"), rt("t"));
    const Basepoint bp = search_basepoint(shifted);
    CHECK(bp == brute_basepoint(shifted, 5));
    CHECK(bp.y0[0] != 0);
    CHECK_THROWS_AS(search_basepoint(shifted, 0), Error);
    const AnnihilatorPair two(parse_poly("(y2 - 2)*t", VarSpace::real_t(2)), parse_poly("y1*t + x2", VarSpace::real_t(2)));
    CHECK(search_basepoint(two) == brute_basepoint(two, 5));
  }

  TEST_CASE("elimination examples") {
    const auto square = eliminate_annihilator(AnnihilatorPair(rt("t - (x^2 - y^2)"), rt("t - 2*x*y")));
    CHECK(square.basepoint.is_origin());
    CHECK(square.q1 == zt("t - z^2"));
    CHECK(square.q2 == zt("-i*t"));
    CHECK(square.r == zt("-i*(t - z^2)"));
    CHECK_FALSE(square.degenerate);

    const auto linear = eliminate_annihilator(AnnihilatorPair(rt("t - x"), rt("t - y")));
    CHECK(linear.r == zt("-i*(t - z)"));
    CHECK(verify_annihilator(linear.r, parse_poly("z", VarSpace::complex(1))));
  }

  TEST_CASE("square root golden case") {
    const auto report = eliminate_annihilator(
        AnnihilatorPair(rt("4*(t+1)^4 - 4*(1+x)*(t+1)^2 - y^2"), rt("4*t^4 + 4*(1+x)*t^2 - y^2")));
    CHECK(report.basepoint.is_origin());
    CHECK(report.q1 == zt("4*(t+1)^4 - 4*(1+z)*(t+1)^2"));
    CHECK(report.q2 == zt("4*t^4 - 4*(1+z)*t^2"));
    CHECK_FALSE(report.degenerate);
    const auto [quotient, remainder] = divide(report.r, zt("t^2 + 2*t - z"));
    CHECK(remainder.is_zero());
    CHECK_NOTHROW(divide_exact(report.r, zt("t^2 + 2*t - z")));

    // f(z0) = sqrt(1 + z0) - 1 on real samples in (-1, 1)
    const std::vector<numeric::ComplexPoint> samples{{{"z1", -0.5}}, {{"z1", 0.0}}, {{"z1", 0.25}}, {{"z1", 0.75}}};
    auto f = [](const numeric::ComplexPoint& p) { return std::sqrt(1.0 + p.at("z1")) - 1.0; };
    CHECK(numeric::verify_annihilator_numeric(zt("t^2 + 2*t - z"), f, samples, 1e-12));
    CHECK(numeric::verify_annihilator_numeric(report.r, f, samples, 1e-3));
  }

  TEST_CASE("verify_annihilator examples") {
    const SparsePoly f = parse_poly("z^2", VarSpace::complex(1));
    CHECK(verify_annihilator(zt("-i*(t - z^2)"), f));
    CHECK_FALSE(verify_annihilator(zt("t - z"), f));
  }

  TEST_CASE("translated basepoints still annihilate") {
    // P1 vanishes identically at y1 = 0, forcing a shifted basepoint
    const SparsePoly f = parse_poly("z^2 + i*z", VarSpace::complex(1));
    auto base = pair_for(f);
    const SparsePoly y = SparsePoly::variable(VarSpace::real_t(1), "y1");
    const AnnihilatorPair pair(base.p1() * y, base.p2());
    const auto report = eliminate_annihilator(pair);
    CHECK_FALSE(report.basepoint.is_origin());
    CHECK(report.basepoint == brute_basepoint(pair, 5));
    CHECK(verify_annihilator(report.r, f));
  }

  TEST_CASE("random end-to-end annihilation") {
    corpus::Rng rng(51);
    for (int k = 0; k < 30; ++k) {
      const std::size_t n = 1 + static_cast<std::size_t>(k % 2);
      const SparsePoly f = corpus::random_poly(rng, VarSpace::complex(n), {4, 4, 20, false, false});
      const auto report = eliminate_annihilator(pair_for(f));
      REQUIRE_FALSE(report.degenerate);
      REQUIRE(verify_annihilator(report.r, f));
    }
  }
}
