#include <doctest.h>

#include <cmath>
#include <functional>

#include "recdiff/asymptotics.hpp"
#include "recdiff/error.hpp"

using namespace recdiff;

namespace {

const SequenceAnalysis& fib() {
  static const auto a = analyze_sequence(builtin_sequence("fib"));
  return a;
}
const SequenceAnalysis& pow2() {
  static const auto a = analyze_sequence(builtin_sequence("pow2"));
  return a;
}
const SequenceAnalysis& pow3() {
  static const auto a = analyze_sequence(builtin_sequence("pow3"));
  return a;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_SUITE("asymptotics") {
  TEST_CASE("main term") {
    CHECK(main_term(2, 5, std::exp(10.0)) == doctest::Approx(10).epsilon(1e-12));
    CHECK(main_term(fib(), pow2(), 1e6) == doctest::Approx(572.231981149216).epsilon(1e-12));
    CHECK(main_term(1, 1, 1) == 0);
    double prev = -1;
    for (double x = 1; x < 1e15; x *= 7) {
      const double m = main_term(fib(), pow2(), x);
      CHECK(m > prev);
      prev = m;
    }
    CHECK(kind_of([] { main_term(1, 1, 0.5); }) == ErrorKind::PreconditionViolation);
  }

  TEST_CASE("grid at log x = 20") {
    const auto g = lower_bound_grid_log(fib(), pow2(), 20);
    CHECK(g.n_max == doctest::Approx(38.566006151146).epsilon(1e-10));
    CHECK(g.m_max == doctest::Approx(25.858168544225).epsilon(1e-10));
    CHECK(g.count == 39 * 26);
    CHECK(g.verified);
    CHECK(g.failures == 0);
    const auto h = lower_bound_grid_log(pow2(), pow3(), 20);
    CHECK(h.count == 26 * 16);
  }

  TEST_CASE("grid below its threshold") {
    CHECK(kind_of([] { lower_bound_grid(fib(), pow2(), 2); }) == ErrorKind::InvalidBelowThreshold);
    CHECK(kind_of([] { lower_bound_grid_log(fib(), pow2(), 0.5); }) == ErrorKind::InvalidBelowThreshold);
  }

  TEST_CASE("grid never exceeds T") {
    for (long x : {100L, 1000L, 100000L, 10000000L}) {
      const auto g = lower_bound_grid(fib(), pow2(), x);
      const auto c = count_T_S(fib(), pow2(), x);
      CHECK(g.count <= c.T);
      CHECK(g.verified);
    }
  }

  TEST_CASE("ratio table") {
    const std::vector<mpz_class> xs{1000, 1000000, mpz_class("1000000000"), mpz_class("1000000000000")};
    const auto rep = ratio_table(fib(), pow2(), xs);
    REQUIRE(rep.rows.size() == 4);
    CHECK(rep.rows[0].T == 182);
    CHECK(rep.rows[3].S == 2355);
    CHECK(std::fabs(rep.rows[3].S_ratio - 1) < std::fabs(rep.rows[0].S_ratio - 1));
    for (const auto& r : rep.rows) {
      CHECK(r.S <= r.T);
      CHECK(r.excess == r.T - r.S);
      REQUIRE(r.grid.has_value());
      CHECK(*r.grid <= r.T);
    }
    REQUIRE(rep.K_excess.has_value());
    CHECK(std::isfinite(*rep.K_excess));
    REQUIRE(rep.K1.has_value());
    REQUIRE(rep.K2.has_value());
  }

  TEST_CASE("oracle rows match fast rows") {
    const std::vector<mpz_class> xs{0, 10, 1000, 100000};
    const auto a = ratio_table(fib(), pow2(), xs);
    const auto b = ratio_table(fib(), pow2(), xs, true);
    CHECK(b.oracle);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CHECK(a.rows[i].T == b.rows[i].T);
      CHECK(a.rows[i].S == b.rows[i].S);
    }
    CHECK_FALSE(a.rows[0].grid.has_value());
  }

  TEST_CASE("auxiliary inequality instances") {
    const auto i = auxiliary_inequality_instance(AuxLemma::ForLowerBound, {1, 2, 0}, 14, std::exp(3.0));
    CHECK(i.lhs == doctest::Approx(14 + std::log(14.0)));
    CHECK(i.lhs <= i.rhs);
    const auto start = mlogm_start(1, 1);
    const auto j = auxiliary_inequality_instance(AuxLemma::Mlogm, {1, 1, 0}, start, start);
    CHECK(j.lhs <= j.rhs);
    CHECK(kind_of([] { auxiliary_inequality_instance(AuxLemma::ForLowerBound, {1, 0.5, 0}, 3, 10); }) ==
          ErrorKind::InvalidParameters);
    CHECK(kind_of([] { auxiliary_inequality_instance(AuxLemma::ForLowerBound, {1, 2, 0}, 100, 10); }) ==
          ErrorKind::InvalidParameters);
    CHECK(kind_of([] { auxiliary_inequality_instance(AuxLemma::Mlogm, {-1, 1, 0}, 100, 100); }) ==
          ErrorKind::InvalidParameters);
  }

  TEST_CASE("auxiliary inequality fuzz") {
    for (auto lemma : {AuxLemma::ForLowerBound, AuxLemma::Mlogm}) {
      const auto r = auxiliary_inequality_check(lemma, std::nullopt, 10000, 7);
      CHECK(r.trials == 10000);
      CHECK(r.passed);
      CHECK_FALSE(r.counterexample.has_value());
      const auto fixed = auxiliary_inequality_check(lemma, AuxParams{2, 3, 1}, 2000, 11);
      CHECK(fixed.passed);
    }
  }
}
