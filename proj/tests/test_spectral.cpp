#include <doctest.h>

#include <cmath>
#include <variant>

#include "recdiff/error.hpp"
#include "recdiff/spectral.hpp"

using namespace recdiff;

namespace {

ErrorKind analysis_error(const LinearRecurrence& seq) {
  try {
    analyze_sequence(seq);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("analysis succeeded");
  return ErrorKind::InvalidInput;
}

bool binet_pins_terms(const SequenceAnalysis& a, unsigned long up_to) {
  const auto& b = a.binet;
  for (unsigned long n = 0; n <= up_to; ++n) {
    ComplexBall sum(b.precision());
    for (std::size_t i = 0; i < b.spectrum.roots.size(); ++i) sum += b.term(i, n);
    const auto k = sum.re().unique_integer();
    if (!k || *k != a.sequence.term(n) || !sum.im().contains(mpz_class(0))) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("Binet sums reproduce every term up to 200") {
    for (const char* name : {"fib", "lucas", "pow2", "pow3", "tribonacci", "n2n"}) {
      const auto a = analyze_sequence(builtin_sequence(name));
      CHECK_MESSAGE(a.binet.checked_up_to >= 200, name);
      CHECK_MESSAGE(binet_pins_terms(a, 200), name);
    }
  }

  TEST_CASE("envelope holds exactly on [n0, 500]") {
    for (const char* name : {"fib", "lucas", "pow2", "pow3", "tribonacci", "n2n"}) {
      const auto a = analyze_sequence(builtin_sequence(name));
      const auto& e = a.envelope;
      CHECK(e.c_lower > 0);
      CHECK(e.c_upper >= e.c_lower);
      CHECK(e.verified_up_to >= 500);
      CHECK_MESSAGE(verify_envelope(a, e.c_lower, e.c_upper, e.n0, 500), name);
      CHECK_MESSAGE(verify_remainder(a, 500), name);
    }
  }

  TEST_CASE("a too-tight envelope is rejected") {
    const auto a = analyze_sequence(builtin_sequence("fib"));
    CHECK_FALSE(verify_envelope(a, a.envelope.c_lower * 1.5, a.envelope.c_upper, a.envelope.n0, 500));
    CHECK_FALSE(verify_envelope(a, a.envelope.c_lower, 0.3, a.envelope.n0, 500));
  }

  TEST_CASE("Fibonacci dominant root") {
    const auto a = analyze_sequence(builtin_sequence("fib"));
    const auto& cert = a.certificate;
    CHECK(cert.greater_than_one);
    CHECK(cert.sigma == 0);
    CHECK(std::fabs(cert.alpha.re().mid_double() - 1.6180339887) < 1e-10);
    CHECK(std::fabs(cert.alpha.re().mid_double() - 1.6180339887498949) < 1e-12);
    CHECK(cert.margin.is_positive());
    REQUIRE(cert.exact.has_value());
    CHECK(cert.exact->alpha == QuadraticNumber(mpq_class(1, 2), mpq_class(1, 2), 5));
    // a = 1/sqrt 5
    REQUIRE(cert.exact->a.size() == 1);
    CHECK(cert.exact->a[0] * cert.exact->a[0] == QuadraticNumber(mpq_class(1, 5)));
    CHECK(dominant_degree(a) == 2);
  }

  TEST_CASE("multiplicities and degrees") {
    const auto n2n = analyze_sequence(builtin_sequence("n2n"));
    CHECK(n2n.certificate.sigma == 1);
    CHECK_FALSE(n2n.certificate.has_subdominant);
    CHECK(n2n.envelope.a_prime == 0);
    const auto trib = analyze_sequence(builtin_sequence("tribonacci"));
    CHECK(dominant_degree(trib) == 3);
    CHECK_FALSE(trib.certificate.exact.has_value());
    CHECK(std::fabs(trib.log_modulus() - std::log(1.8392867552141612)) < 1e-12);
  }

  TEST_CASE("a certified zero coefficient on the largest root is refused") {
    // roots 2 and 3; U_0 = 1, U_1 = 2 gives U_n = 2^n
    const LinearRecurrence s("only2", {5, -6}, {1, 2});
    CHECK(analysis_error(s) == ErrorKind::NoDominantRoot);
  }

  TEST_CASE("failures") {
    CHECK(analysis_error(LinearRecurrence("pm2", {0, 4}, {1, 1})) == ErrorKind::NoDominantRoot);
    CHECK(analysis_error(LinearRecurrence("const", {1}, {1})) == ErrorKind::RootNotLargerThanOne);
    CHECK(analysis_error(LinearRecurrence("half", {1, -1}, {1, 1})) == ErrorKind::NoDominantRoot);
  }

  TEST_CASE("multiplicative independence") {
    const auto two = AlgebraicNumber::from_rational(2);
    const auto three = AlgebraicNumber::from_rational(3);
    const auto four = AlgebraicNumber::from_rational(4);
    const auto phi = AlgebraicNumber::parse("1,-1,-1@1.6");
    CHECK(std::holds_alternative<Independent>(multiplicative_independence(two, three)));
    CHECK(std::holds_alternative<Independent>(multiplicative_independence(phi, two)));
    const auto dep = multiplicative_independence(two, four);
    REQUIRE(std::holds_alternative<Dependent>(dep));
    CHECK(std::get<Dependent>(dep).n == 2 * std::get<Dependent>(dep).m);
    const auto phi2 = AlgebraicNumber::from_quadratic(QuadraticNumber(mpq_class(1, 2), mpq_class(1, 2), 5).pow(2));
    CHECK(std::holds_alternative<Dependent>(multiplicative_independence(phi, phi2)));
  }
}
