#include <doctest.h>

#include <cmath>

#include "recdiff/algebraic.hpp"
#include "recdiff/ball.hpp"
#include "recdiff/error.hpp"
#include "recdiff/poly.hpp"
#include "recdiff/precision.hpp"
#include "recdiff/quadratic.hpp"

using namespace recdiff;

TEST_SUITE("numerics") {
  TEST_CASE("ball arithmetic encloses the exact result") {
    const mpfr_prec_t prec = 128;
    Ball third = Ball::exact(1, prec) / Ball::exact(3, prec);
    CHECK_FALSE(third.is_exact());
    Ball one = third * Ball::exact(3, prec);
    CHECK(one.contains(mpz_class(1)));
    CHECK(one.unique_integer() == mpz_class(1));
    CHECK(Ball::from_rational(mpq_class(-5, 2), prec).is_negative());
    CHECK(Ball::exact(0, prec).contains_zero());
    CHECK_THROWS_AS(Ball::exact(1, prec) / Ball::exact(0, prec), Undecided);
    CHECK_THROWS_AS(Ball::exact(-1, prec).log(), Undecided);
    Ball l2 = Ball::log2(prec);
    CHECK(l2.overlaps(Ball::exact(2, prec).log()));
    CHECK(std::fabs(l2.mid_double() - std::log(2.0)) < 1e-15);
    CHECK(Ball::exact(2, prec).sqrt().pow(2).contains(mpz_class(2)));
    CHECK(Ball::from_rational(mpq_class(1, 3), prec).certainly_below(mpq_class(1, 2)));
    CHECK(Ball::pi(prec).certainly_above(mpq_class(314, 100)));
  }

  TEST_CASE("precision refinement gives nested enclosures of pi - e") {
    Ball prev = Ball::pi(64) - Ball::euler(64);
    for (mpfr_prec_t prec = 128; prec <= 2048; prec *= 2) {
      Ball cur = Ball::pi(prec) - Ball::euler(prec);
      CHECK(prev.contains(cur));
      CHECK(mpfr_cmp(cur.rad().get(), prev.rad().get()) <= 0);
      prev = cur;
    }
  }

  TEST_CASE("root isolation of X^2 - X - 1") {
    const IntPoly f{-1, -1, 1};
    for (mpfr_prec_t prec : {64, 256, 1024}) {
      auto roots = isolate_roots(f, prec);
      REQUIRE(roots.size() == 2);
      int positive = 0;
      for (const auto& r : roots) {
        CHECK(r.is_real());
        if (r.re().is_positive()) {
          ++positive;
          CHECK(std::fabs(r.re().mid_double() - 1.6180339887498949) < 1e-15);
        }
      }
      CHECK(positive == 1);
    }
  }

  TEST_CASE("polynomial helpers") {
    const IntPoly f{-1, -1, 1};
    CHECK(degree(f) == 2);
    CHECK(to_string(f) == "X^2 - X - 1");
    // (X - 2)^2 (X + 1)
    const IntPoly g{4, 0, -3, 1};
    auto sf = square_free_decomposition(g);
    REQUIRE(sf.size() == 2);
    CHECK(evaluate(g, mpz_class(2)) == 0);
    auto rr = rational_roots(g);
    CHECK(rr.size() == 2);
    CHECK(square_free_core(mpz_class(12)).first * square_free_core(mpz_class(12)).second *
              square_free_core(mpz_class(12)).second == 12);
    CHECK(exact_quotient(g, IntPoly{1, 1}).has_value());
    CHECK_FALSE(exact_quotient(f, IntPoly{1, 1}).has_value());
    CHECK(positive_divisors(mpz_class(12)).size() == 6);
  }

  TEST_CASE("quadratic field arithmetic") {
    const QuadraticNumber phi(mpq_class(1, 2), mpq_class(1, 2), 5);
    CHECK(phi * phi == phi + QuadraticNumber(1));
    CHECK(phi.norm() == -1);
    CHECK(phi.trace() == 1);
    CHECK(phi.minimal_polynomial() == IntPoly{-1, -1, 1});
    CHECK((phi / phi) == QuadraticNumber(1));
    CHECK(phi.pow(10) == QuadraticNumber(mpq_class(123, 2), mpq_class(55, 2), 5));
    CHECK(QuadraticNumber(0, 1, 12) == QuadraticNumber(0, 2, 3));
    CHECK_THROWS_AS(QuadraticNumber::sqrt_of(2) + QuadraticNumber::sqrt_of(3), Error);
  }

  TEST_CASE("algebraic numbers") {
    auto phi = AlgebraicNumber::parse("1,-1,-1@1.6");
    CHECK(phi.degree() == 2);
    REQUIRE(phi.exact().has_value());
    CHECK(std::fabs(phi.modulus(128).mid_double() - 1.6180339887498949) < 1e-15);
    auto two = AlgebraicNumber::parse("2");
    CHECK(two.degree() == 1);
    CHECK_THROWS_AS(AlgebraicNumber::parse("1,0,-4@2"), Error);  // reducible
    auto r4 = AlgebraicNumber::from_polynomial({1, 0, 0, 0, 1}, 0.7, 0.7);
    CHECK(r4.degree() == 4);
    CHECK(std::fabs(log_mahler_measure(IntPoly{1, 0, 0, 0, 1}, 128).mid_double()) < 1e-30);
  }

  TEST_CASE("with_refinement escalates and eventually gives up") {
    mpfr_prec_t seen = 0;
    const auto v = with_refinement(
        [&](mpfr_prec_t prec) {
          seen = prec;
          if (prec < 512) throw Undecided("not yet");
          return 7;
        },
        "probe");
    CHECK(v == 7);
    CHECK(seen == 512);
    try {
      with_refinement([](mpfr_prec_t) -> int { throw Undecided("never"); }, "probe");
      FAIL("expected PrecisionExhausted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PrecisionExhausted);
    }
  }
}
