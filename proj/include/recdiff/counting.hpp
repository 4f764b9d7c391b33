#pragma once

// T(x) = #{(n, m) : |U_n - V_m| <= x} and S(x) = #{c in [-x, x] : c = U_n - V_m}.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "recdiff/spectral.hpp"

namespace recdiff {

enum class CountMethod { Fast, Oracle };
std::string to_string(CountMethod method);

struct IndexPair {
  unsigned long n = 0;
  unsigned long m = 0;
  mpz_class c;  // U_n - V_m
};

struct CountResult {
  mpz_class x;
  unsigned long long T = 0;
  unsigned long long S = 0;
  unsigned long n_cut = 0;  // last n enumerated against every V_m
  unsigned long m_cut = 0;  // last m in the V index
  unsigned long window_end = 0;
  std::optional<mpz_class> gap_margin;  // min |U_n - V_m| over the safety window
  unsigned expansions = 0;
  CountMethod method = CountMethod::Fast;
  std::vector<IndexPair> pairs;  // sorted by (n, m)
};

struct CountOptions {
  bool expand_on_hit = true;
  unsigned max_expansions = 8;
  unsigned long max_index = 200000;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Exact for every n up to the end of the safety window; beyond it the
/// growth of both sequences is trusted. Throws CutoffUnsafe when the window
/// keeps finding solutions.
CountResult count_T_S(const SequenceAnalysis& u, const SequenceAnalysis& v, const mpz_class& x,
                      const CountOptions& options = {});

/// Plain double loop over n <= n_cap, m <= m_cap.
CountResult brute_force_oracle(const LinearRecurrence& u, const LinearRecurrence& v,
                               const mpz_class& x, unsigned long n_cap, unsigned long m_cap);

struct CollisionRecord {
  mpz_class c;
  std::vector<std::pair<unsigned long, unsigned long>> representations;
  unsigned long max_n = 0;
  unsigned long max_m = 0;
};

struct CollisionReport {
  std::vector<CollisionRecord> records;  // sorted by c
  unsigned long N_emp = 0;  // max over records of the smallest n
  unsigned long M_emp = 0;  // max over records of the smallest m
  unsigned long long surplus = 0;  // sum of (size - 1) = T - S
};

CollisionReport collisions_from(const CountResult& count);
CollisionReport find_collisions(const SequenceAnalysis& u, const SequenceAnalysis& v,
                                const mpz_class& x, const CountOptions& options = {});

/// A base > 1: "pi", "e", or a decimal / fraction literal taken as exact.
struct RealBase {
  std::string text;
  std::optional<mpq_class> rational;  // set for literals

  static RealBase parse(const std::string& text);
  Ball value(mpfr_prec_t prec) const;
};

struct RealCountResult {
  unsigned long long T = 0;
  unsigned long n_cut = 0;
  unsigned long m_cut = 0;
  unsigned long window_end = 0;
  mpfr_prec_t max_precision_used = 0;
  std::vector<std::pair<unsigned long, unsigned long>> pairs;
};

/// #{(n, m) : |alpha^n - beta^m| <= x}. Comparisons that stay undecided at
/// the precision cap raise PrecisionExhausted.
RealCountResult count_real_power_pairs(const RealBase& alpha, const RealBase& beta,
                                       const mpq_class& x, mpfr_prec_t precision);

}  // namespace recdiff
