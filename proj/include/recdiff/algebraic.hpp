#pragma once

// Algebraic numbers given by a minimal polynomial and an isolating box for the
// chosen root, with exact quadratic arithmetic when the degree is at most 2.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "recdiff/ball.hpp"
#include "recdiff/poly.hpp"
#include "recdiff/quadratic.hpp"

namespace recdiff {

class AlgebraicNumber {
 public:
  /// `poly` is made primitive with positive leading coefficient. The root is
  /// the one closest to (re, im). Irreducibility is checked for degree <= 3;
  /// a reducible polynomial is rejected with InvalidInput.
  static AlgebraicNumber from_polynomial(const IntPoly& poly, double re, double im = 0.0);
  static AlgebraicNumber from_rational(const mpq_class& value);
  static AlgebraicNumber from_quadratic(const QuadraticNumber& value);
  /// "3", "-3/2" or "a_d,...,a_0@root" (root may be "re" or "re+imi").
  static AlgebraicNumber parse(const std::string& text);

  const IntPoly& minimal_polynomial() const { return poly_; }
  int degree() const { return static_cast<int>(poly_.size()) - 1; }
  bool irreducibility_verified() const { return verified_; }
  /// Exact value when the degree is at most 2.
  const std::optional<QuadraticNumber>& exact() const { return exact_; }

  /// Isolating box for this root at the given precision (throws Undecided).
  ComplexBall root(mpfr_prec_t prec) const;
  /// All conjugates at the given precision (throws Undecided).
  std::vector<ComplexBall> conjugates(mpfr_prec_t prec) const;
  /// Index of this root within conjugates(prec).
  std::size_t root_index(const std::vector<ComplexBall>& conjugates) const;

  /// |gamma| and |log gamma| = sqrt(log^2|gamma| + arg^2), refined to the cap.
  Ball modulus(mpfr_prec_t prec) const;
  Ball abs_log(mpfr_prec_t prec) const;

  std::string to_string() const;

 private:
  IntPoly poly_;
  double seed_re_ = 0.0;
  double seed_im_ = 0.0;
  bool verified_ = false;
  std::optional<QuadraticNumber> exact_;
};

/// (1/d)(log a_d + sum log max(1, |gamma_i|)), certified; throws Undecided if
/// the enclosure is not yet tight at `prec`.
Ball log_height(const AlgebraicNumber& gamma, mpfr_prec_t prec);
/// Same, refined up to the precision cap.
Ball log_height(const AlgebraicNumber& gamma);

/// log of the Mahler measure of an integer polynomial (any factorization).
Ball log_mahler_measure(const IntPoly& p, mpfr_prec_t prec);

}  // namespace recdiff
