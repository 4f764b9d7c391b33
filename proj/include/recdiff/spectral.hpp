#pragma once

// Characteristic roots, Binet coefficients, dominant-root certificates and
// growth envelopes for integer linear recurrences.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "recdiff/algebraic.hpp"
#include "recdiff/ball.hpp"
#include "recdiff/poly.hpp"
#include "recdiff/quadratic.hpp"
#include "recdiff/recurrence.hpp"

namespace recdiff {

struct CharacteristicSpectrum {
  IntPoly polynomial;
  std::vector<IntPoly> factors;  // Yun factors, primitive and square-free
  std::vector<ComplexBall> roots;
  std::vector<int> multiplicities;
  std::vector<std::size_t> factor_of;  // roots[i] is a root of factors[factor_of[i]]
  mpfr_prec_t precision = 0;
};

/// Throws Undecided if `prec` is not enough to separate the roots.
CharacteristicSpectrum characteristic_roots(const LinearRecurrence& seq, mpfr_prec_t prec);
CharacteristicSpectrum characteristic_roots(const LinearRecurrence& seq);

struct BinetDecomposition {
  CharacteristicSpectrum spectrum;
  /// coefficients[i][j] is the coefficient of X^j in a_i(X).
  std::vector<std::vector<ComplexBall>> coefficients;
  unsigned long checked_up_to = 0;

  mpfr_prec_t precision() const { return spectrum.precision; }
  ComplexBall polynomial_at(std::size_t i, unsigned long n) const;  // a_i(n)
  ComplexBall term(std::size_t i, unsigned long n) const;           // a_i(n) alpha_i^n
};

inline constexpr unsigned long kReconstructionBound = 200;

/// Solves the generalized Vandermonde system and checks that the Binet sum
/// pins down term(n) for every n <= check_bound. Throws Undecided.
BinetDecomposition binet_decomposition(const LinearRecurrence& seq,
                                       const CharacteristicSpectrum& spectrum,
                                       unsigned long check_bound = kReconstructionBound);
BinetDecomposition binet_decomposition(const LinearRecurrence& seq,
                                       unsigned long check_bound = kReconstructionBound);

/// Dominant root known exactly: alpha in Q or a real quadratic field.
struct ExactDominantData {
  IntPoly minimal_polynomial;
  QuadraticNumber alpha;
  int multiplicity = 1;
  std::vector<QuadraticNumber> a;  // coefficients of a(X), ascending; trimmed

  QuadraticNumber a_at(unsigned long n) const;
};

struct DominantRootCertificate {
  std::size_t index = 0;  // into the spectrum
  ComplexBall alpha;
  Ball modulus;
  int sigma = 0;
  Ball margin;           // |alpha| - max_{i != index} |alpha_i|
  Ball second_modulus;   // max_{i != index} |alpha_i|, exact 0 without other roots
  bool has_subdominant = false;
  bool greater_than_one = false;
  std::vector<ComplexBall> a;  // a(X), length sigma + 1
  IntPoly alpha_factor;        // square-free factor of f vanishing at alpha
  std::optional<ExactDominantData> exact;
};

/// Throws Error(NoDominantRoot | RootNotLargerThanOne) or Undecided.
DominantRootCertificate dominant_root_certificate(const LinearRecurrence& seq,
                                                  const BinetDecomposition& binet);

struct GrowthEnvelope {
  double c_lower = 0;  // C1 (C3 for the second sequence)
  double c_upper = 0;  // C2 (C4)
  double alpha_prime = 0;
  double a_prime = 0;  // 0 when there are no other roots
  int sigma = 0;
  unsigned long n0 = 0;
  unsigned long verified_up_to = 0;
  // |a(n)| >= a_lower for n >= a_lower_from
  double a_lower = 0;
  unsigned long a_lower_from = 0;
  // sum of |a_j|, an upper bound for |a(n)| / n^sigma when n >= 1
  double a_abs_sum = 0;
};

inline constexpr unsigned long kEnvelopeCap = 500;

GrowthEnvelope growth_envelope(const LinearRecurrence& seq, const BinetDecomposition& binet,
                               const DominantRootCertificate& cert,
                               unsigned long cap = kEnvelopeCap);

/// Everything the counting and bounds code needs about one sequence.
struct SequenceAnalysis {
  LinearRecurrence sequence;
  BinetDecomposition binet;
  DominantRootCertificate certificate;
  GrowthEnvelope envelope;

  double log_modulus() const;  // log|alpha|, nearest double
};

SequenceAnalysis analyze_sequence(const LinearRecurrence& seq);

/// Exact check of C_lower |alpha|^n <= |U_n| <= C_upper n^sigma |alpha|^n for
/// n0 <= n <= cap (n^0 read as 1).
bool verify_envelope(const SequenceAnalysis& analysis, double c_lower, double c_upper,
                     unsigned long n0, unsigned long cap);

/// |U_n - a(n) alpha^n| <= a' alpha'^n for n0 <= n <= cap.
bool verify_remainder(const SequenceAnalysis& analysis, unsigned long cap);

struct Independent {
  std::string certificate;
};
struct Dependent {
  long n = 0;
  long m = 0;
};
struct UnknownRelation {
  std::string reason;
};
using IndependenceResult = std::variant<Independent, Dependent, UnknownRelation>;

/// Decides whether alpha^n = beta^m has a solution (n, m) != (0, 0).
/// Both numbers must have modulus > 1.
IndependenceResult multiplicative_independence(const AlgebraicNumber& alpha,
                                               const AlgebraicNumber& beta);

/// Field degree of the dominant root (exact when known, else the degree of
/// its square-free factor, an upper bound).
int dominant_degree(const SequenceAnalysis& analysis);
/// The dominant root as an algebraic number (minimal polynomial when exact).
AlgebraicNumber dominant_root(const SequenceAnalysis& analysis);

}  // namespace recdiff
