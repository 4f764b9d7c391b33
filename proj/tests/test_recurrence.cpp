#include <doctest.h>

#include <fstream>
#include <functional>
#include <sstream>

#include "recdiff/error.hpp"
#include "recdiff/recurrence.hpp"

using namespace recdiff;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
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

TEST_SUITE("recurrence") {
  TEST_CASE("first terms of the built-in sequences") {
    CHECK(builtin_sequence("fib").term(10) == 55);
    CHECK(builtin_sequence("lucas").term(10) == 123);
    CHECK(builtin_sequence("pow2").term(20) == 1048576);
    CHECK(builtin_sequence("pow3").term(5) == 243);
    CHECK(builtin_sequence("tribonacci").term(10) == 81);
    // n 2^n
    CHECK(builtin_sequence("n2n").term(7) == 7 * 128);
    CHECK(builtin_sequence("fib").term(100) == mpz_class("354224848179261915075"));
  }

  TEST_CASE("recurrence identity holds up to 10^4") {
    for (const char* name : {"fib", "lucas", "tribonacci", "n2n"}) {
      const auto seq = builtin_sequence(name);
      const auto u = seq.values(10000);
      const auto& c = seq.coefficients();
      const std::size_t k = c.size();
      bool ok = true;
      for (std::size_t n = k; n < u.size() && ok; ++n) {
        mpz_class s = 0;
        for (std::size_t i = 0; i < k; ++i) s += c[i] * u[n - 1 - i];
        ok = s == u[n];
      }
      CHECK_MESSAGE(ok, name);
    }
  }

  TEST_CASE("term agrees with values, including past the cache") {
    const auto seq = builtin_sequence("fib");
    const auto u = seq.values(300);
    CHECK(seq.term(300) == u[300]);
    CHECK(seq.term(LinearRecurrence::kCacheLimit + 5) ==
          seq.term(LinearRecurrence::kCacheLimit + 4) + seq.term(LinearRecurrence::kCacheLimit + 3));
    const auto pairs = seq.terms_up_to_index(5);
    REQUIRE(pairs.size() == 6);
    CHECK(pairs[5].first == 5);
    CHECK(pairs[5].second == 5);
  }

  TEST_CASE("characteristic polynomial") {
    CHECK(to_string(builtin_sequence("fib").characteristic_polynomial()) == "X^2 - X - 1");
    CHECK(to_string(builtin_sequence("n2n").characteristic_polynomial()) == "X^2 - 4X + 4");
  }

  TEST_CASE("invalid recurrences") {
    CHECK(kind_of([] { LinearRecurrence("e", {}, {}); }) == ErrorKind::InvalidRecurrence);
    CHECK(kind_of([] { LinearRecurrence("z", {1, 0}, {0, 1}); }) == ErrorKind::InvalidRecurrence);
    CHECK(kind_of([] { LinearRecurrence("s", {1, 1}, {0}); }) == ErrorKind::InvalidRecurrence);
  }

  TEST_CASE("config parsing") {
    auto fib = parse_sequence_config(slurp(std::string(RECDIFF_TEST_DATA) + "/fib.json"));
    CHECK(fib.name() == "fib");
    CHECK(fib.term(12) == 144);
    CHECK(kind_of([] { parse_sequence_config("{"); }) == ErrorKind::MalformedConfig);
    CHECK(kind_of([] { parse_sequence_config(slurp(std::string(RECDIFF_TEST_DATA) + "/malformed.json")); }) ==
          ErrorKind::MalformedConfig);
    CHECK(kind_of([] { parse_sequence_config(R"({"name":"x","coefficients":[1.5],"initial_terms":[1]})"); }) ==
          ErrorKind::MalformedConfig);
    CHECK(kind_of([] { parse_sequence_config(R"({"name":"x","coefficients":[1],"initial_terms":[1],"extra":0})"); }) ==
          ErrorKind::MalformedConfig);
    CHECK(kind_of([] { load_sequence(std::string(RECDIFF_TEST_DATA) + "/bad.json"); }) ==
          ErrorKind::InvalidRecurrence);
    auto big = parse_sequence_config(
        R"({"name":"big","coefficients":["100000000000000000000000"],"initial_terms":[1]})");
    CHECK(big.term(1) == mpz_class("100000000000000000000000"));
  }

  TEST_CASE("serialize then parse is the identity") {
    std::vector<LinearRecurrence> seqs;
    for (const char* name : {"fib", "lucas", "pow2", "pow3", "tribonacci", "n2n"}) seqs.push_back(builtin_sequence(name));
    seqs.emplace_back("huge", std::vector<mpz_class>{mpz_class("-123456789012345678901234567890"), 7},
                      std::vector<mpz_class>{mpz_class("99999999999999999999"), -3});
    for (const auto& s : seqs) {
      const std::string once = serialize_sequence_config(s);
      const auto back = parse_sequence_config(once);
      CHECK(back.name() == s.name());
      CHECK(back.coefficients() == s.coefficients());
      CHECK(back.initial_terms() == s.initial_terms());
      CHECK(serialize_sequence_config(back) == once);
    }
  }

  TEST_CASE("built-in names and paths") {
    CHECK(is_builtin_sequence("tribonacci"));
    CHECK_FALSE(is_builtin_sequence("fibonacci"));
    CHECK(load_sequence("pow3").term(3) == 27);
    CHECK(load_sequence(std::string(RECDIFF_TEST_DATA) + "/pow2.json").term(10) == 1024);
    CHECK_THROWS_AS(load_sequence("/nonexistent/file.json"), Error);
  }
}
