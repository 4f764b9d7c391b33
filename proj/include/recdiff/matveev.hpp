#pragma once

// Lower bounds for linear forms in logarithms, the quotient Lambda between two
// dominant terms, and the effective bound chain for U_n - V_m = c.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recdiff/ball.hpp"
#include "recdiff/spectral.hpp"

namespace recdiff {

struct MatveevInput {
  int t = 1;
  int D = 1;
  double B = 1;
  std::vector<double> A;
};

/// -3 * 30^(t+4) * (t+1)^5.5 * D^2 (1 + log D)(1 + log tB) A_1 ... A_t,
/// evaluated in 256-bit MPFR and rounded to nearest.
double matveev_lower_bound(const MatveevInput& input);

enum class LambdaStatus { Nonzero, ExactZero, Undecided };
std::string to_string(LambdaStatus status);

struct LambdaValue {
  Ball abs;  // |Lambda|
  LambdaStatus status = LambdaStatus::Undecided;
};

/// |a(n) alpha^n / (b(m) beta^m) - 1|. Zero is reported only when exact
/// quadratic arithmetic proves it.
LambdaValue lambda_value(const SequenceAnalysis& u, const SequenceAnalysis& v, unsigned long n,
                         unsigned long m);

struct LinearFormSample {
  unsigned long n = 0;
  unsigned long m = 0;
  LambdaValue lambda;
  double log_lambda_lower = 0;  // log of the lower end of |Lambda|
  double matveev_floor = 0;
  bool holds = true;
};

struct MatveevSweep {
  int D = 1;
  double A1 = 0;
  double A2 = 0;
  double A3 = 0;
  std::vector<LinearFormSample> samples;  // certified nonzero only
  long skipped = 0;                       // zero or undecided
  long violations = 0;
};

/// `count` distinct pairs drawn uniformly from [lo, hi]^2.
std::vector<std::pair<unsigned long, unsigned long>> sample_index_pairs(std::size_t count,
                                                                        unsigned long lo,
                                                                        unsigned long hi,
                                                                        std::uint64_t seed);

/// Compares log|Lambda| with the three-term bound at B = max(n, m). A1 is the
/// maximum over the pairs of max{D h(a(n)/b(m)), |log a(n)/b(m)|, 0.16};
/// needs exact coefficients (UnsupportedDegree otherwise).
MatveevSweep matveev_sweep(const SequenceAnalysis& u, const SequenceAnalysis& v,
                           const std::vector<std::pair<unsigned long, unsigned long>>& pairs);

/// f(c) = P + Q log c + R (log log c)^2 for c >= c0.
struct BoundRecord {
  double P = 0;
  double Q = 0;
  double R = 0;
  double at(double abs_c, double c0) const;
};

struct LedgerEntry {
  std::string name;
  std::string formula;
  double value = 0;
  bool rigorous = true;
};

struct EffectiveBounds {
  BoundRecord n_max;
  BoundRecord m_max;
  double c0 = 0;
  bool rigorous = true;
  std::vector<LedgerEntry> ledger;
  std::vector<std::string> notes;

  double n_bound(double abs_c) const { return n_max.at(abs_c, c0); }
  double m_bound(double abs_c) const { return m_max.at(abs_c, c0); }
};

struct BoundsOptions {
  /// Replaces the coefficient-height constant when the Binet coefficients are
  /// not exactly known. Marked non-rigorous.
  std::optional<double> c10;
  /// Empirical height constant used to bound the Lambda = 0 branch.
  std::optional<double> c0_height;
};

/// Pre: dominant roots multiplicatively independent (PreconditionViolation on
/// a certified dependence).
EffectiveBounds effective_upper_bounds(const SequenceAnalysis& u, const SequenceAnalysis& v,
                                       const BoundsOptions& options = {});

}  // namespace recdiff
