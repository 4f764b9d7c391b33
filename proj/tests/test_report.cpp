#include <doctest.h>

#include "recdiff/error.hpp"
#include "recdiff/report.hpp"

using namespace recdiff;

TEST_SUITE("report") {
  TEST_CASE("literal parsing") {
    CHECK(parse_integer_literal("1000") == 1000);
    CHECK(parse_integer_literal("1e12") == mpz_class("1000000000000"));
    CHECK(parse_integer_literal("2.5e3") == 2500);
    CHECK_THROWS_AS(parse_integer_literal("2.5"), Error);
    CHECK_THROWS_AS(parse_integer_literal("-3"), Error);
    CHECK_THROWS_AS(parse_integer_literal("ten"), Error);
    CHECK(parse_rational_literal("10") == 10);
    CHECK(parse_rational_literal("2.5") == mpq_class(5, 2));
    CHECK(parse_rational_literal("3/2") == mpq_class(3, 2));
    CHECK(parse_rational_literal("1e-3") == mpq_class(1, 1000));
    CHECK(split_list("1e3, 1e6,1e9") == std::vector<std::string>{"1e3", "1e6", "1e9"});
  }

  TEST_CASE("number formatting") {
    CHECK(format_real(1.0 / 3) == "0.333333333333");
    CHECK(format_real(6100628888657322.76) == "6.10062888866e+15");
    CHECK(json_integer(42).is_number_integer());
    const auto big = json_integer(mpz_class("123456789012345678901234567890"));
    REQUIRE(big.is_string());
    CHECK(big.get<std::string>() == "123456789012345678901234567890");
  }

  TEST_CASE("reports are deterministic") {
    const auto u = analyze_sequence(builtin_sequence("fib"));
    const auto v = analyze_sequence(builtin_sequence("pow2"));
    const auto a = count_report(count_T_S(u, v, 1000)).dump();
    const auto b = count_report(count_T_S(u, v, 1000)).dump();
    CHECK(a == b);
    const auto j = Json::parse(a);
    CHECK(j["T"] == 182);
    CHECK(j["S"] == 156);
    const auto bounds = effective_upper_bounds(u, v);
    CHECK(bounds_report(bounds).dump() == bounds_report(effective_upper_bounds(u, v)).dump());
    CHECK(bounds_csv(bounds).rfind("constant,value\n", 0) == 0);
    const auto an = analysis_report(u);
    CHECK(an["name"] == "fib");
    CHECK(an["order"] == 2);
  }
}
