#include <doctest.h>

#include "kholo/kholo.hpp"

using namespace kholo;

namespace {

GaussianRational gq(long a, long b = 0) { return GaussianRational(Rational(a), Rational(b)); }

bool canonical(const GaussianRational& z) { return z.re().is_canonical() && z.im().is_canonical(); }

}  // namespace

TEST_SUITE("numeric") {
  TEST_CASE("rational normal form") {
    const Rational r(6, -4);
    CHECK(r.to_string() == "-3/2");
    CHECK(r.denominator() > 0);
    CHECK(r.is_canonical());
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("010") == Rational(10));
    CHECK_THROWS_AS(Rational::parse("10/-4"), Error);
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(static_cast<void>(Rational(1) / Rational(0)), Error);
  }

  TEST_CASE("gaussian examples") {
    CHECK(gq_arith(gq(1, 1), gq(1, -1), ArithOp::Mul) == gq(2));
    const GaussianRational three_halves_i(Rational(3, 2), Rational(1));
    CHECK(gq_arith(gq(0), three_halves_i, ArithOp::Add) == three_halves_i);
    const GaussianRational q = gq_arith(gq(1), GaussianRational::i(), ArithOp::Div);
    CHECK(q == gq(0, -1));
    CHECK(q * GaussianRational::i() == gq(1));
    CHECK_THROWS_AS(gq_arith(gq(1), gq(0), ArithOp::Div), Error);
    try {
      gq_arith(gq(1), gq(0), ArithOp::Div);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
  }

  TEST_CASE("conjugation examples") {
    CHECK(conj(gq(1, 2)) == gq(1, -2));
    CHECK(conj(GaussianRational(Rational(5, 3))) == GaussianRational(Rational(5, 3)));
    const GaussianRational a = gq(1, 1), b = gq(2, -1);
    CHECK(a * b == gq(3, 1));
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK(conj(a * b) == gq(3, -1));
  }

  TEST_CASE("text form") {
    CHECK(to_string(gq(0, 1)) == "i");
    CHECK(to_string(gq(0, -1)) == "-i");
    CHECK(to_string(gq(1, -2)) == "1-2*i");
    CHECK(to_string(GaussianRational(Rational(1, 2), Rational(3, 4))) == "1/2+3/4*i");
    CHECK(to_string(gq(0, 5)) == "5*i");
    CHECK(to_string(gq(-7)) == "-7");
    for (const char* s : {"i", "-i", "3/2", "1-2*i", "1/2+3/4*i", "-5*i", "0"})
      CHECK(to_string(parse_gaussian(s)) == s);
  }

  TEST_CASE("field axioms on random triples") {
    corpus::Rng rng(11);
    for (int k = 0; k < 1000; ++k) {
      const GaussianRational a = corpus::random_gaussian(rng, 100);
      const GaussianRational b = corpus::random_gaussian(rng, 100);
      const GaussianRational c = corpus::random_gaussian(rng, 100);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE(a - a == gq(0));
      if (!a.is_zero()) {
        REQUIRE(a * a.inverse() == gq(1));
        REQUIRE((b / a) * a == b);
      }
      REQUIRE(conj(a * b) == conj(a) * conj(b));
      REQUIRE(conj(a + b) == conj(a) + conj(b));
      REQUIRE(conj(conj(a)) == a);
      REQUIRE(a.is_real() == a.im().is_zero());
      for (const auto& z : {a + b, a - b, a * b, conj(c), pow(a, 3)}) REQUIRE(canonical(z));
      if (!b.is_zero()) REQUIRE(canonical(a / b));
    }
  }

  TEST_CASE("arbitrary precision") {
    Rational big(1);
    for (int k = 0; k < 40; ++k) big *= Rational(1'000'000'007);
    CHECK(big.to_string().size() > 300);
    CHECK(big / big == Rational(1));
    CHECK(pow(GaussianRational::i(), 4) == gq(1));
    CHECK(pow(gq(1, 1), 8) == gq(16));
  }
}
