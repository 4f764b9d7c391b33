#pragma once

// Midpoint-radius arithmetic over MPFR.
//
// A Ball is the closed interval [mid - rad, mid + rad]. The midpoint carries
// the working precision; the radius is kept at a fixed 64-bit precision and is
// always rounded upward, so every operation returns an enclosure of the exact
// result. ComplexBall is a rectangle of two real balls.

#include <mpfr.h>

#include <gmpxx.h>

#include <optional>
#include <string>

namespace recdiff {

/// RAII owner of an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec = 64);
  Mpfr(const Mpfr& other);
  Mpfr(Mpfr&& other) noexcept;
  Mpfr& operator=(const Mpfr& other);
  Mpfr& operator=(Mpfr&& other) noexcept;
  ~Mpfr();

  static Mpfr from_double(double value, mpfr_prec_t prec = 64);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  mpq_class to_rational() const;
  std::string to_string(int digits) const;

 private:
  mpfr_t value_;
};

inline constexpr mpfr_prec_t kRadiusPrecision = 64;

class Ball {
 public:
  explicit Ball(mpfr_prec_t prec = 128);

  static Ball exact(long value, mpfr_prec_t prec);
  static Ball from_double(double value, mpfr_prec_t prec);
  static Ball from_integer(const mpz_class& value, mpfr_prec_t prec);
  static Ball from_rational(const mpq_class& value, mpfr_prec_t prec);
  /// Smallest ball (up to rounding) containing [lo, hi].
  static Ball from_interval(const Mpfr& lo, const Mpfr& hi, mpfr_prec_t prec);
  /// Ball with the given midpoint (rounded to `prec`) and radius.
  static Ball from_mid_rad(const Mpfr& mid, const Mpfr& rad, mpfr_prec_t prec);
  static Ball pi(mpfr_prec_t prec);
  static Ball euler(mpfr_prec_t prec);
  static Ball log2(mpfr_prec_t prec);

  const Mpfr& mid() const { return mid_; }
  const Mpfr& rad() const { return rad_; }
  mpfr_prec_t precision() const { return mid_.precision(); }

  Mpfr lower() const;
  Mpfr upper() const;
  double lower_double() const;  // rounded down
  double upper_double() const;  // rounded up
  double mid_double() const { return mid_.to_double(); }

  bool is_exact() const { return mpfr_zero_p(rad_.get()) != 0; }
  bool is_finite() const;
  bool contains_zero() const;
  bool is_positive() const;  // certainly > 0
  bool is_negative() const;  // certainly < 0
  bool contains(const mpz_class& value) const;
  bool contains(const Ball& inner) const;
  bool overlaps(const Ball& other) const;
  /// The unique integer inside the ball, if there is exactly one.
  std::optional<mpz_class> unique_integer() const;
  /// Certainly less than / greater than a rational bound.
  bool certainly_below(const mpq_class& bound) const;
  bool certainly_above(const mpq_class& bound) const;

  Ball operator-() const;
  Ball& operator+=(const Ball& rhs);
  Ball& operator-=(const Ball& rhs);
  Ball& operator*=(const Ball& rhs);
  Ball& operator/=(const Ball& rhs);  // throws Undecided if rhs contains 0

  Ball abs() const;
  Ball sqrt() const;  // throws Undecided if certainly negative
  Ball log() const;   // throws Undecided unless certainly positive
  Ball exp() const;
  Ball pow(unsigned long exponent) const;
  Ball with_precision(mpfr_prec_t prec) const;
  /// Adds `extra` to the radius.
  Ball inflated(const Mpfr& extra) const;

  /// Decimal midpoint with `digits` significant digits and "+/-" radius.
  std::string to_string(int digits = 20) const;

  friend Ball operator+(Ball lhs, const Ball& rhs) { return lhs += rhs; }
  friend Ball operator-(Ball lhs, const Ball& rhs) { return lhs -= rhs; }
  friend Ball operator*(Ball lhs, const Ball& rhs) { return lhs *= rhs; }
  friend Ball operator/(Ball lhs, const Ball& rhs) { return lhs /= rhs; }

 private:
  void add_rounding_error(int ternary);

  Mpfr mid_;
  Mpfr rad_{kRadiusPrecision};
};

Ball max(const Ball& a, const Ball& b);
Ball min(const Ball& a, const Ball& b);
/// Union hull.
Ball hull(const Ball& a, const Ball& b);

class ComplexBall {
 public:
  explicit ComplexBall(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
  ComplexBall(Ball re, Ball im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit ComplexBall(Ball re);

  const Ball& re() const { return re_; }
  const Ball& im() const { return im_; }
  Ball& re() { return re_; }
  Ball& im() { return im_; }
  mpfr_prec_t precision() const { return re_.precision(); }

  bool is_real() const;  // imaginary part is exactly 0
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool overlaps(const ComplexBall& other) const {
    return re_.overlaps(other.re_) && im_.overlaps(other.im_);
  }

  ComplexBall conj() const { return {re_, -im_}; }
  Ball abs() const;
  Ball norm2() const;  // re^2 + im^2
  /// Principal argument; the real-axis cases are exact multiples of pi.
  Ball arg() const;
  ComplexBall pow(unsigned long exponent) const;
  ComplexBall midpoint() const;  // radii dropped
  std::string to_string(int digits = 20) const;

  ComplexBall operator-() const { return {-re_, -im_}; }
  ComplexBall& operator+=(const ComplexBall& rhs);
  ComplexBall& operator-=(const ComplexBall& rhs);
  ComplexBall& operator*=(const ComplexBall& rhs);
  ComplexBall& operator*=(const Ball& rhs);
  ComplexBall& operator/=(const ComplexBall& rhs);

  friend ComplexBall operator+(ComplexBall lhs, const ComplexBall& rhs) { return lhs += rhs; }
  friend ComplexBall operator-(ComplexBall lhs, const ComplexBall& rhs) { return lhs -= rhs; }
  friend ComplexBall operator*(ComplexBall lhs, const ComplexBall& rhs) { return lhs *= rhs; }
  friend ComplexBall operator*(ComplexBall lhs, const Ball& rhs) { return lhs *= rhs; }
  friend ComplexBall operator/(ComplexBall lhs, const ComplexBall& rhs) { return lhs /= rhs; }

 private:
  Ball re_;
  Ball im_;
};

}  // namespace recdiff
