#include <doctest.h>

#include <cmath>

#include "recdiff/algebraic.hpp"
#include "recdiff/error.hpp"
#include "recdiff/heights.hpp"

using namespace recdiff;

namespace {
const QuadraticNumber kPhi(mpq_class(1, 2), mpq_class(1, 2), 5);
const double kLogPhi = std::log(1.6180339887498949);
}  // namespace

TEST_SUITE("heights") {
  TEST_CASE("reference heights") {
    CHECK(std::fabs(exact_height(2) - std::log(2.0)) < 1e-12);
    CHECK(std::fabs(exact_height(kPhi) - 0.5 * kLogPhi) < 1e-12);
    CHECK(std::fabs(exact_height(mpq_class(3, 2)) - std::log(3.0)) < 1e-12);
    CHECK(exact_height(1) == 0);
    CHECK(exact_height(-1) == 0);
    CHECK(exact_height(0) == 0);
    CHECK(std::fabs(exact_height(QuadraticNumber::sqrt_of(2)) - 0.5 * std::log(2.0)) < 1e-12);
  }

  TEST_CASE("general algebraic heights") {
    const auto zeta8 = AlgebraicNumber::from_polynomial({1, 0, 0, 0, 1}, 0.70710678, 0.70710678);
    CHECK(std::fabs(log_height(zeta8).mid_double()) < 1e-12);
    const auto phi = AlgebraicNumber::parse("1,-1,-1@1.6");
    CHECK(std::fabs(log_height(phi).mid_double() - 0.5 * kLogPhi) < 1e-12);
    const auto trib = AlgebraicNumber::from_polynomial({-1, -1, -1, 1}, 1.84);
    CHECK(std::fabs(log_height(trib).mid_double() - std::log(1.8392867552141612) / 3) < 1e-12);
  }

  TEST_CASE("height of a power scales linearly") {
    for (const QuadraticNumber& g : {kPhi, QuadraticNumber(mpq_class(3, 2)), QuadraticNumber(mpq_class(-2, 7)),
                                     QuadraticNumber(1, 1, 2)}) {
      const double h = exact_height(g);
      for (unsigned long n = 1; n <= 10; ++n)
        CHECK(std::fabs(exact_height(g.pow(n)) - n * h) < 1e-9 * n * (1 + h));
    }
  }

  TEST_CASE("height enclosures are nested under refinement") {
    const auto phi = AlgebraicNumber::parse("1,-1,-1@1.6");
    Ball prev = log_height(phi, 128);
    for (mpfr_prec_t prec = 256; prec <= 2048; prec *= 2) {
      Ball cur = log_height(phi, prec);
      CHECK(prev.overlaps(cur));
      CHECK(mpfr_cmp(cur.rad().get(), prev.rad().get()) <= 0);
      prev = cur;
    }
  }

  TEST_CASE("rational quotient heights") {
    CHECK(std::fabs(rational_quotient_height(3, 1) - std::log(3.0)) < 1e-12);
    CHECK(std::fabs(rational_quotient_height(mpq_class(5, 2), 2) - std::log(5.0)) < 1e-12);
    CHECK(rational_quotient_height(4, 4) == 0);
    try {
      rational_quotient_height(1, 0);
      FAIL("expected DivisionByZero");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
  }

  TEST_CASE("empirical height constant probe") {
    const auto two = AlgebraicNumber::from_rational(2);
    const auto three = AlgebraicNumber::from_rational(3);
    const auto p = height_constant_probe(two, three, 10);
    CHECK(p.c0_emp == std::log(2.0));
    CHECK(p.c0_n == 2);
    CHECK(p.c0_m == 1);
    CHECK(p.samples.size() == 100);
    for (const auto& s : p.samples) CHECK(s.ratio >= p.c0_emp);

    const auto phi = AlgebraicNumber::parse("1,-1,-1@1.6");
    const auto q = height_constant_probe(phi, two, 5);
    CHECK(std::fabs(q.c0_emp - 0.30990) < 1e-4);

    const std::vector<QuadraticNumber> pp{1, 2};
    const std::vector<QuadraticNumber> qq{3};
    const auto r = height_constant_probe(two, three, 6, &pp, &qq);
    REQUIRE(r.c_emp.has_value());
    CHECK(*r.c_emp > 0);
  }

  TEST_CASE("probe preconditions") {
    const auto two = AlgebraicNumber::from_rational(2);
    auto kind = [](auto&& fn) {
      try {
        fn();
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::InvalidInput;
    };
    CHECK(kind([&] { height_constant_probe(two, AlgebraicNumber::from_rational(4), 5); }) ==
          ErrorKind::PreconditionViolation);
    CHECK(kind([&] { height_constant_probe(two, two, 5); }) == ErrorKind::PreconditionViolation);
    const auto trib = AlgebraicNumber::from_polynomial({-1, -1, -1, 1}, 1.84);
    CHECK(kind([&] { height_constant_probe(trib, two, 5); }) == ErrorKind::UnsupportedDegree);
  }
}
