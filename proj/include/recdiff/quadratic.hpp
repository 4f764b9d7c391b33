#pragma once

// Exact arithmetic in Q(sqrt(D)) for square-free D. A value with b == 0 is a
// rational and mixes freely with any field; two irrational values must share D.

#include <gmpxx.h>

#include <string>

#include "recdiff/ball.hpp"
#include "recdiff/poly.hpp"

namespace recdiff {

class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(mpq_class a) : a_(std::move(a)) {}  // NOLINT: implicit from rationals
  QuadraticNumber(long a) : a_(a) {}                  // NOLINT
  /// a + b*sqrt(radicand); the radicand is reduced to its square-free core.
  QuadraticNumber(mpq_class a, mpq_class b, const mpz_class& radicand);

  static QuadraticNumber sqrt_of(const mpz_class& radicand) { return {0, 1, radicand}; }

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  const mpz_class& field() const { return d_; }  // 0 for rationals
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadraticNumber conj() const;
  mpq_class norm() const { return a_ * a_ - mpq_class(d_) * b_ * b_; }
  mpq_class trace() const { return 2 * a_; }
  QuadraticNumber pow(unsigned long exponent) const;

  /// Primitive integer minimal polynomial (degree 1 or 2), leading coefficient > 0.
  IntPoly minimal_polynomial() const;
  /// Exact logarithmic height, enclosed in a ball.
  Ball log_height(mpfr_prec_t prec) const;
  ComplexBall to_complex(mpfr_prec_t prec) const;
  std::string to_string() const;

  QuadraticNumber operator-() const;
  QuadraticNumber& operator+=(const QuadraticNumber& rhs);
  QuadraticNumber& operator-=(const QuadraticNumber& rhs);
  QuadraticNumber& operator*=(const QuadraticNumber& rhs);
  QuadraticNumber& operator/=(const QuadraticNumber& rhs);

  friend QuadraticNumber operator+(QuadraticNumber l, const QuadraticNumber& r) { return l += r; }
  friend QuadraticNumber operator-(QuadraticNumber l, const QuadraticNumber& r) { return l -= r; }
  friend QuadraticNumber operator*(QuadraticNumber l, const QuadraticNumber& r) { return l *= r; }
  friend QuadraticNumber operator/(QuadraticNumber l, const QuadraticNumber& r) { return l /= r; }
  friend bool operator==(const QuadraticNumber& l, const QuadraticNumber& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && (l.b_ == 0 || l.d_ == r.d_);
  }

 private:
  void adopt_field(const QuadraticNumber& other);
  void normalize();

  mpq_class a_{0};
  mpq_class b_{0};
  mpz_class d_{0};
};

/// log max(|num|, |den|) of a reduced rational, as a ball.
Ball rational_log_height(const mpq_class& value, mpfr_prec_t prec);

}  // namespace recdiff
