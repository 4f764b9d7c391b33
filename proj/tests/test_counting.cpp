#include <doctest.h>

#include <functional>
#include <map>

#include "recdiff/counting.hpp"
#include "recdiff/error.hpp"

using namespace recdiff;

namespace {

const SequenceAnalysis& get(const std::string& name) {
  static std::map<std::string, SequenceAnalysis> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, analyze_sequence(builtin_sequence(name))).first;
  return it->second;
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

struct Frozen {
  long x;
  unsigned long long T, S;
};

}  // namespace

TEST_SUITE("counting") {
  TEST_CASE("frozen values, Fibonacci against powers of two") {
    // from an independent brute force with generous caps
    const Frozen table[] = {{0, 4, 1},       {1, 11, 3},        {10, 35, 18},       {100, 93, 70},
                            {1000, 182, 156}, {10000, 305, 275}, {1000000, 633, 597}};
    for (const auto& f : table) {
      const auto r = count_T_S(get("fib"), get("pow2"), f.x);
      CHECK_MESSAGE(r.T == f.T, f.x);
      CHECK_MESSAGE(r.S == f.S, f.x);
    }
    const auto big = count_T_S(get("fib"), get("pow2"), mpz_class("1000000000000"));
    CHECK(big.T == 2411);
    CHECK(big.S == 2355);
  }

  TEST_CASE("frozen values, powers of two against powers of three") {
    const Frozen table[] = {{0, 1, 1}, {1, 5, 3}, {2, 6, 4}, {10, 14, 10}, {1000, 75, 70}, {1000000, 266, 261}};
    for (const auto& f : table) {
      const auto r = count_T_S(get("pow2"), get("pow3"), f.x);
      CHECK_MESSAGE(r.T == f.T, f.x);
      CHECK_MESSAGE(r.S == f.S, f.x);
    }
  }

  TEST_CASE("fast count agrees with the oracle") {
    const char* pairs[][2] = {{"fib", "pow2"}, {"pow2", "pow3"}, {"lucas", "pow2"}, {"tribonacci", "pow3"},
                              {"n2n", "pow3"}, {"fib", "lucas"}};
    for (const auto& p : pairs) {
      for (long x : {0L, 1L, 2L, 10L, 100L, 1000L, 10000L, 1000000L}) {
        const auto fast = count_T_S(get(p[0]), get(p[1]), x);
        const auto slow =
            brute_force_oracle(get(p[0]).sequence, get(p[1]).sequence, x, 3 * fast.window_end + 10,
                               3 * fast.m_cut + 10);
        CHECK_MESSAGE(fast.T == slow.T, p[0], "/", p[1], " x=", x);
        CHECK_MESSAGE(fast.S == slow.S, p[0], "/", p[1], " x=", x);
        CHECK(fast.S <= fast.T);
        REQUIRE(fast.pairs.size() == slow.pairs.size());
        for (std::size_t i = 0; i < fast.pairs.size(); ++i) {
          CHECK(fast.pairs[i].n == slow.pairs[i].n);
          CHECK(fast.pairs[i].m == slow.pairs[i].m);
        }
      }
    }
  }

  TEST_CASE("oracle with small caps") {
    const auto r = brute_force_oracle(builtin_sequence("fib"), builtin_sequence("pow2"), 10, 6, 3);
    CHECK(r.T == 28);
    CHECK(r.S == 15);
    CHECK(r.method == CountMethod::Oracle);
  }

  TEST_CASE("T and S are non-decreasing in x") {
    unsigned long long T = 0, S = 0;
    for (long x = 0; x <= 300; ++x) {
      const auto r = count_T_S(get("fib"), get("pow2"), x);
      CHECK(r.T >= T);
      CHECK(r.S >= S);
      T = r.T;
      S = r.S;
    }
  }

  TEST_CASE("thread count does not change the result") {
    CountOptions one, four;
    one.threads = 1;
    four.threads = 4;
    for (long x : {0L, 10L, 100000L}) {
      const auto a = count_T_S(get("fib"), get("pow2"), x, one);
      const auto b = count_T_S(get("fib"), get("pow2"), x, four);
      CHECK(a.T == b.T);
      CHECK(a.S == b.S);
      CHECK(a.n_cut == b.n_cut);
      CHECK(a.gap_margin == b.gap_margin);
      REQUIRE(a.pairs.size() == b.pairs.size());
      for (std::size_t i = 0; i < a.pairs.size(); ++i) CHECK(a.pairs[i].c == b.pairs[i].c);
    }
  }

  TEST_CASE("safety window") {
    const auto r = count_T_S(get("fib"), get("pow2"), 1000);
    CHECK(r.window_end >= 2 * r.n_cut);
    REQUIRE(r.gap_margin.has_value());
    CHECK(*r.gap_margin > 1000);
    // F_1 = F_2 = 1 = 2^0 hits inside the first window at x = 0
    CountOptions strict;
    strict.expand_on_hit = false;
    CHECK(kind_of([&] { count_T_S(get("fib"), get("pow2"), 0, strict); }) == ErrorKind::CutoffUnsafe);
  }

  TEST_CASE("negative x is refused") {
    CHECK(kind_of([&] { count_T_S(get("fib"), get("pow2"), -1); }) == ErrorKind::PreconditionViolation);
  }

  TEST_CASE("collisions") {
    const auto rep = find_collisions(get("fib"), get("pow2"), 10);
    const auto cnt = count_T_S(get("fib"), get("pow2"), 10);
    CHECK(rep.surplus == cnt.T - cnt.S);
    CHECK(rep.surplus == 17);
    CHECK(rep.N_emp == 7);
    CHECK(rep.M_emp == 3);
    bool found = false;
    for (const auto& r : rep.records) {
      CHECK(r.representations.size() >= 2);
      if (r.c == -1) {
        found = true;
        const std::vector<std::pair<unsigned long, unsigned long>> want{{0, 0}, {1, 1}, {2, 1}, {4, 2}};
        CHECK(r.representations == want);
      }
    }
    CHECK(found);
  }

  TEST_CASE("real power pairs") {
    const auto pe = count_real_power_pairs(RealBase::parse("pi"), RealBase::parse("e"), 10, 200);
    CHECK(pe.T == 9);
    const auto twothree = count_real_power_pairs(RealBase::parse("2"), RealBase::parse("3"), 2, 200);
    CHECK(twothree.T == 6);
    const auto frac = count_real_power_pairs(RealBase::parse("3/2"), RealBase::parse("2.5"), mpq_class(1, 2), 200);
    CHECK(frac.T >= 1);  // (0, 0)
    CHECK(kind_of([] { count_real_power_pairs(RealBase::parse("e"), RealBase::parse("e"), 1, 200); }) ==
          ErrorKind::PreconditionViolation);
    CHECK(kind_of([] { count_real_power_pairs(RealBase::parse("4"), RealBase::parse("8"), 1, 200); }) ==
          ErrorKind::PreconditionViolation);
    CHECK_THROWS_AS(RealBase::parse("1/2"), Error);
  }
}
