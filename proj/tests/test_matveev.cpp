#include <doctest.h>

#include <cmath>
#include <cstring>
#include <functional>
#include <map>
#include <set>

#include "recdiff/counting.hpp"
#include "recdiff/error.hpp"
#include "recdiff/matveev.hpp"

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

TEST_SUITE("matveev") {
  TEST_CASE("reference lower bounds") {
    // frozen from an independent 60-digit evaluation
    CHECK(matveev_lower_bound({3, 2, 100, {1, 1, 1}}) == doctest::Approx(-6100628888657322.76).epsilon(1e-14));
    CHECK(matveev_lower_bound({1, 1, 1, {0.16}}) == doctest::Approx(-527852383.728633).epsilon(1e-14));
  }

  TEST_CASE("bound decreases in B and in each A_j") {
    double prev = 0;
    for (double B : {1.0, 10.0, 1e3, 1e6, 1e12}) {
      const double v = matveev_lower_bound({2, 2, B, {1, 2}});
      CHECK(v < prev);
      prev = v;
    }
    prev = 0;
    for (double A : {0.5, 1.0, 4.0, 100.0}) {
      const double v = matveev_lower_bound({2, 2, 10, {A, 1}});
      CHECK(v < prev);
      prev = v;
    }
  }

  TEST_CASE("bound is bit-reproducible") {
    const MatveevInput in{3, 4, 12345.5, {0.7, 1.3, 2.9}};
    const double a = matveev_lower_bound(in);
    const double b = matveev_lower_bound(in);
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
  }

  TEST_CASE("invalid inputs") {
    CHECK(kind_of([] { matveev_lower_bound({2, 1, 10, {1}}); }) == ErrorKind::PreconditionViolation);
    CHECK(kind_of([] { matveev_lower_bound({1, 0, 10, {1}}); }) == ErrorKind::PreconditionViolation);
    CHECK(kind_of([] { matveev_lower_bound({1, 1, 0.5, {1}}); }) == ErrorKind::PreconditionViolation);
    CHECK(kind_of([] { matveev_lower_bound({1, 1, 10, {-1}}); }) == ErrorKind::PreconditionViolation);
  }

  TEST_CASE("Lambda values") {
    const auto l = lambda_value(fib(), pow2(), 10, 6);
    CHECK(l.status == LambdaStatus::Nonzero);
    CHECK(l.abs.mid_double() == doctest::Approx(0.140568185574259168).epsilon(1e-15));
    const auto z = lambda_value(pow2(), pow3(), 0, 0);
    CHECK(z.status == LambdaStatus::ExactZero);
    const auto q = lambda_value(pow2(), pow3(), 3, 2);
    CHECK(q.status == LambdaStatus::Nonzero);
    CHECK(q.abs.contains(Ball::from_rational(mpq_class(1, 9), 128)));
  }

  TEST_CASE("sampled pairs are distinct, in range and seeded") {
    const auto a = sample_index_pairs(200, 5, 60, 12345);
    const auto b = sample_index_pairs(200, 5, 60, 12345);
    CHECK(a == b);
    std::set<std::pair<unsigned long, unsigned long>> seen(a.begin(), a.end());
    CHECK(seen.size() == 200);
    for (const auto& [n, m] : a) {
      CHECK(n >= 5);
      CHECK(n <= 60);
      CHECK(m >= 5);
      CHECK(m <= 60);
    }
    CHECK(sample_index_pairs(200, 5, 60, 1) != a);
  }

  TEST_CASE("sweep over Fibonacci and powers of two") {
    const auto sweep = matveev_sweep(fib(), pow2(), sample_index_pairs(200, 5, 60, 12345));
    CHECK(sweep.D == 2);
    CHECK(sweep.samples.size() == 200);
    CHECK(sweep.skipped == 0);
    CHECK(sweep.violations == 0);
    CHECK(sweep.A2 == doctest::Approx(std::log(1.6180339887498949)));
    CHECK(sweep.A3 == doctest::Approx(2 * std::log(2.0)));
    for (const auto& s : sweep.samples) CHECK(s.log_lambda_lower >= s.matveev_floor);
  }

  TEST_CASE("tribonacci coefficients are not exact") {
    const auto trib = analyze_sequence(builtin_sequence("tribonacci"));
    CHECK(kind_of([&] { effective_upper_bounds(trib, pow3()); }) == ErrorKind::UnsupportedDegree);
    CHECK(kind_of([&] { matveev_sweep(trib, pow3(), {{5, 5}}); }) == ErrorKind::UnsupportedDegree);
    BoundsOptions opt;
    opt.c10 = 50;
    const auto b = effective_upper_bounds(trib, pow3(), opt);
    CHECK_FALSE(b.rigorous);
    CHECK(std::isfinite(b.n_max.P));
  }

  TEST_CASE("dependent dominant roots are refused") {
    const auto pow4 = analyze_sequence(LinearRecurrence("pow4", {4}, {1}));
    CHECK(kind_of([&] { effective_upper_bounds(pow2(), pow4); }) == ErrorKind::PreconditionViolation);
  }

  TEST_CASE("bound chain constants") {
    const auto b = effective_upper_bounds(fib(), pow2());
    CHECK(b.n_max.Q == doctest::Approx(1 / std::log(1.6180339887498949)).epsilon(1e-9));
    CHECK(b.n_max.Q >= 1 / std::log(1.6180339887498949));
    CHECK(b.m_max.Q == doctest::Approx(1 / std::log(2.0)).epsilon(1e-9));
    CHECK(b.c0 >= std::exp(std::exp(1.0)));
    std::map<std::string, int> seen;
    for (const auto& e : b.ledger) ++seen[e.name];
    for (int i = 5; i <= 18; ++i) {
      const std::string name = "C" + std::to_string(i);
      CHECK_MESSAGE(seen[name] == 1, name);
    }
    for (const auto& e : b.ledger) {
      CHECK_MESSAGE(std::isfinite(e.value), e.name);
      if (e.name.size() > 1 && e.name[0] == 'C' && std::isdigit(static_cast<unsigned char>(e.name[1])))
        CHECK_MESSAGE(e.value > 0, e.name);
    }
    for (const auto* r : {&b.n_max, &b.m_max}) {
      CHECK(r->P > 0);
      CHECK(r->Q > 0);
      CHECK(r->R > 0);
    }
  }

  TEST_CASE("bounds grow with |c|") {
    const auto b = effective_upper_bounds(fib(), pow2());
    double pn = 0, pm = 0;
    for (double c : {0.0, 1.0, 10.0, 1e3, 1e6, 1e12, 1e100}) {
      CHECK(b.n_bound(c) >= pn);
      CHECK(b.m_bound(c) >= pm);
      pn = b.n_bound(c);
      pm = b.m_bound(c);
    }
  }

  TEST_CASE("bounds are deterministic") {
    const auto a = effective_upper_bounds(fib(), pow2());
    const auto b = effective_upper_bounds(fib(), pow2());
    REQUIRE(a.ledger.size() == b.ledger.size());
    for (std::size_t i = 0; i < a.ledger.size(); ++i) CHECK(a.ledger[i].value == b.ledger[i].value);
  }

  TEST_CASE("every small solution lies under the bounds") {
    const auto b = effective_upper_bounds(fib(), pow2());
    const auto sols = brute_force_oracle(fib().sequence, pow2().sequence, 10000, 120, 90);
    CHECK(sols.T > 0);
    for (const auto& p : sols.pairs) {
      const double c = std::fabs(p.c.get_d());
      CHECK(p.n <= b.n_bound(c));
      CHECK(p.m <= b.m_bound(c));
    }
  }
}
