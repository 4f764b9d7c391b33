#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recdiff/counting.hpp"
#include "recdiff/spectral.hpp"

namespace recdiff {

/// (log x)^2 / (log|alpha| log|beta|). Needs x >= 1.
double main_term(double log_alpha, double log_beta, double x);
double main_term(const SequenceAnalysis& u, const SequenceAnalysis& v, double x);

struct GridResult {
  double z = 0;  // log x
  double n_max = 0;
  double m_max = 0;
  unsigned long long count = 0;
  double threshold_n = 0;  // smallest admissible log x for each side
  double threshold_m = 0;
  bool verified = true;    // every grid pair has |U_n - V_m| <= x
  unsigned long long failures = 0;
};

/// Pairs n <= z/log|alpha| - (sigma/log|alpha| + 1) log z and the analogue
/// for m, with z = log x. Throws InvalidBelowThreshold when z is below
/// max(k^(c-1) e^d, 1) for either side.
GridResult lower_bound_grid(const SequenceAnalysis& u, const SequenceAnalysis& v,
                            const mpz_class& x);
/// Same with x = e^z.
GridResult lower_bound_grid_log(const SequenceAnalysis& u, const SequenceAnalysis& v, double z);

struct ReportRow {
  mpz_class x;
  unsigned long long T = 0;
  unsigned long long S = 0;
  double main = 0;
  double T_ratio = 0;
  double S_ratio = 0;
  std::optional<unsigned long long> grid;  // empty below the threshold
  unsigned long long excess = 0;           // T - S
  unsigned long n_cut = 0;
  unsigned long m_cut = 0;
};

struct AsymptoticReport {
  std::string u_name;
  std::string v_name;
  double log_alpha = 0;
  double log_beta = 0;
  std::vector<ReportRow> rows;
  // |T - main| ~ K1 log x loglog x and ~ K2 log x (loglog x)^2, least squares
  std::optional<double> K1;
  std::optional<double> K2;
  // max over rows with x > 1 of (T - S) / log x
  std::optional<double> K_excess;
  bool oracle = false;
};

AsymptoticReport ratio_table(const SequenceAnalysis& u, const SequenceAnalysis& v,
                             const std::vector<mpz_class>& x_grid, bool oracle = false,
                             const CountOptions& options = {});

enum class AuxLemma { ForLowerBound, Mlogm };
std::string to_string(AuxLemma lemma);

struct AuxParams {
  double k = 1;
  double c = 2;
  double d = 0;  // forLowerBound only
};

struct AuxInstance {
  AuxParams params;
  double n = 0;
  double z = 0;
  double lhs = 0;  // conclusion: lhs <= rhs
  double rhs = 0;
};

struct AuxCheckResult {
  AuxLemma lemma = AuxLemma::ForLowerBound;
  unsigned long trials = 0;
  unsigned long resamples = 0;
  bool passed = true;
  std::optional<AuxInstance> counterexample;
};

/// N(k, c): smallest integer n with n >= e^(sqrt(2/c)) and k^2 c^2 (log n)^4 <= n
/// from which both keep holding.
double mlogm_start(double k, double c);

/// One instance; InvalidParameters if the preconditions or the hypothesis fail.
AuxInstance auxiliary_inequality_instance(AuxLemma lemma, const AuxParams& params, double n,
                                          double z);

/// Random (n, z) meeting the hypotheses. With `params` empty the parameters
/// are drawn too (k in [0.1, 10], c in (1, 10] or [0.1, 10], d in [-5, 5]).
AuxCheckResult auxiliary_inequality_check(AuxLemma lemma, const std::optional<AuxParams>& params,
                                          unsigned long trials, std::uint64_t seed);

}  // namespace recdiff
