#include "recdiff/ball.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>
#include <vector>

#include "recdiff/error.hpp"

namespace recdiff {

// ---------------------------------------------------------------------------
// Mpfr

Mpfr::Mpfr(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Mpfr::Mpfr(const Mpfr& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Mpfr& Mpfr::operator=(const Mpfr& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Mpfr::~Mpfr() { mpfr_clear(value_); }

Mpfr Mpfr::from_double(double value, mpfr_prec_t prec) {
  Mpfr r(std::max<mpfr_prec_t>(prec, 53));
  mpfr_set_d(r.get(), value, MPFR_RNDN);
  return r;
}

mpq_class Mpfr::to_rational() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

std::string Mpfr::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, value_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

// ---------------------------------------------------------------------------
// Ball

namespace {

Mpfr abs_up(const Mpfr& x) {
  Mpfr r(kRadiusPrecision);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  return r;
}

void add_up(Mpfr& acc, const Mpfr& term) { mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDU); }

Mpfr mul_up(const Mpfr& a, const Mpfr& b) {
  Mpfr r(kRadiusPrecision);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

}  // namespace

Ball::Ball(mpfr_prec_t prec) : mid_(prec) {}

void Ball::add_rounding_error(int ternary) {
  if (ternary == 0 || mpfr_zero_p(mid_.get())) return;
  Mpfr err = abs_up(mid_);
  mpfr_mul_2si(err.get(), err.get(), 1 - static_cast<long>(precision()), MPFR_RNDU);
  add_up(rad_, err);
}

Ball Ball::exact(long value, mpfr_prec_t prec) {
  Ball b(prec);
  b.add_rounding_error(mpfr_set_si(b.mid_.get(), value, MPFR_RNDN));
  return b;
}

Ball Ball::from_double(double value, mpfr_prec_t prec) {
  Ball b(prec);
  b.add_rounding_error(mpfr_set_d(b.mid_.get(), value, MPFR_RNDN));
  return b;
}

Ball Ball::from_integer(const mpz_class& value, mpfr_prec_t prec) {
  Ball b(prec);
  b.add_rounding_error(mpfr_set_z(b.mid_.get(), value.get_mpz_t(), MPFR_RNDN));
  return b;
}

Ball Ball::from_rational(const mpq_class& value, mpfr_prec_t prec) {
  Ball b(prec);
  b.add_rounding_error(mpfr_set_q(b.mid_.get(), value.get_mpq_t(), MPFR_RNDN));
  return b;
}

Ball Ball::from_interval(const Mpfr& lo, const Mpfr& hi, mpfr_prec_t prec) {
  Ball b(prec);
  mpfr_add(b.mid_.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(b.mid_.get(), b.mid_.get(), 1, MPFR_RNDN);
  Mpfr up(kRadiusPrecision);
  Mpfr down(kRadiusPrecision);
  mpfr_sub(up.get(), hi.get(), b.mid_.get(), MPFR_RNDU);
  mpfr_sub(down.get(), b.mid_.get(), lo.get(), MPFR_RNDU);
  mpfr_max(b.rad_.get(), up.get(), down.get(), MPFR_RNDU);
  if (mpfr_sgn(b.rad_.get()) < 0) mpfr_set_zero(b.rad_.get(), 1);
  return b;
}

Ball Ball::from_mid_rad(const Mpfr& mid, const Mpfr& rad, mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_set(b.mid_.get(), mid.get(), MPFR_RNDN);
  mpfr_abs(b.rad_.get(), rad.get(), MPFR_RNDU);
  b.add_rounding_error(t);
  return b;
}

Ball Ball::pi(mpfr_prec_t prec) {
  Ball b(prec);
  b.add_rounding_error(mpfr_const_pi(b.mid_.get(), MPFR_RNDN));
  return b;
}

Ball Ball::euler(mpfr_prec_t prec) {
  Ball b(prec);
  Mpfr one(prec);
  mpfr_set_ui(one.get(), 1, MPFR_RNDN);
  b.add_rounding_error(mpfr_exp(b.mid_.get(), one.get(), MPFR_RNDN));
  return b;
}

Ball Ball::log2(mpfr_prec_t prec) {
  Ball b(prec);
  b.add_rounding_error(mpfr_const_log2(b.mid_.get(), MPFR_RNDN));
  return b;
}

Mpfr Ball::lower() const {
  Mpfr r(precision());
  mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return r;
}

Mpfr Ball::upper() const {
  Mpfr r(precision());
  mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return r;
}

double Ball::lower_double() const { return lower().to_double(MPFR_RNDD); }
double Ball::upper_double() const { return upper().to_double(MPFR_RNDU); }

bool Ball::is_finite() const {
  return mpfr_number_p(mid_.get()) != 0 && mpfr_number_p(rad_.get()) != 0;
}

bool Ball::contains_zero() const { return !is_positive() && !is_negative(); }

bool Ball::is_positive() const { return is_finite() && mpfr_sgn(lower().get()) > 0; }

bool Ball::is_negative() const { return is_finite() && mpfr_sgn(upper().get()) < 0; }

bool Ball::contains(const mpz_class& value) const {
  if (!is_finite()) return true;
  return mpfr_cmp_z(lower().get(), value.get_mpz_t()) <= 0 &&
         mpfr_cmp_z(upper().get(), value.get_mpz_t()) >= 0;
}

bool Ball::contains(const Ball& inner) const {
  return mpfr_lessequal_p(lower().get(), inner.lower().get()) &&
         mpfr_lessequal_p(inner.upper().get(), upper().get());
}

bool Ball::overlaps(const Ball& other) const {
  if (!is_finite() || !other.is_finite()) return true;
  return mpfr_lessequal_p(lower().get(), other.upper().get()) &&
         mpfr_lessequal_p(other.lower().get(), upper().get());
}

std::optional<mpz_class> Ball::unique_integer() const {
  if (!is_finite()) return std::nullopt;
  mpz_class lo;
  mpz_class hi;
  Mpfr l = lower();
  Mpfr u = upper();
  mpfr_get_z(lo.get_mpz_t(), l.get(), MPFR_RNDU);
  mpfr_get_z(hi.get_mpz_t(), u.get(), MPFR_RNDD);
  if (lo == hi) return lo;
  return std::nullopt;
}

bool Ball::certainly_below(const mpq_class& bound) const {
  return is_finite() && mpfr_cmp_q(upper().get(), bound.get_mpq_t()) < 0;
}

bool Ball::certainly_above(const mpq_class& bound) const {
  return is_finite() && mpfr_cmp_q(lower().get(), bound.get_mpq_t()) > 0;
}

Ball Ball::operator-() const {
  Ball r(*this);
  mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
  return r;
}

Ball& Ball::operator+=(const Ball& rhs) {
  mpfr_prec_t prec = std::max(precision(), rhs.precision());
  Mpfr sum(prec);
  int t = mpfr_add(sum.get(), mid_.get(), rhs.mid_.get(), MPFR_RNDN);
  mid_ = std::move(sum);
  add_up(rad_, rhs.rad_);
  add_rounding_error(t);
  return *this;
}

Ball& Ball::operator-=(const Ball& rhs) { return *this += -rhs; }

Ball& Ball::operator*=(const Ball& rhs) {
  mpfr_prec_t prec = std::max(precision(), rhs.precision());
  Mpfr rad = mul_up(abs_up(mid_), rhs.rad_);
  add_up(rad, mul_up(abs_up(rhs.mid_), rad_));
  add_up(rad, mul_up(rad_, rhs.rad_));
  Mpfr prod(prec);
  int t = mpfr_mul(prod.get(), mid_.get(), rhs.mid_.get(), MPFR_RNDN);
  mid_ = std::move(prod);
  rad_ = std::move(rad);
  add_rounding_error(t);
  return *this;
}

Ball& Ball::operator/=(const Ball& rhs) {
  if (rhs.contains_zero()) throw Undecided("division by a ball containing zero");
  mpfr_prec_t prec = std::max(precision(), rhs.precision());
  Mpfr quot(prec);
  int t = mpfr_div(quot.get(), mid_.get(), rhs.mid_.get(), MPFR_RNDN);
  // |a/b - am/bm| <= (ar + |am/bm| br) / (|bm| - br)
  Mpfr qabs = abs_up(quot);
  Mpfr slack = qabs;
  mpfr_mul_2si(slack.get(), slack.get(), 1 - static_cast<long>(prec), MPFR_RNDU);
  add_up(qabs, slack);
  Mpfr num = rad_;
  add_up(num, mul_up(qabs, rhs.rad_));
  Mpfr den(kRadiusPrecision);
  mpfr_abs(den.get(), rhs.mid_.get(), MPFR_RNDD);
  mpfr_sub(den.get(), den.get(), rhs.rad_.get(), MPFR_RNDD);
  if (mpfr_sgn(den.get()) <= 0) throw Undecided("division by a ball containing zero");
  Mpfr rad(kRadiusPrecision);
  mpfr_div(rad.get(), num.get(), den.get(), MPFR_RNDU);
  mid_ = std::move(quot);
  rad_ = std::move(rad);
  add_rounding_error(t);
  return *this;
}

Ball Ball::abs() const {
  if (is_positive()) return *this;
  if (is_negative()) return -*this;
  Mpfr zero(precision());
  Mpfr hi = abs_up(mid_);
  add_up(hi, rad_);
  return from_interval(zero, hi, precision());
}

Ball Ball::sqrt() const {
  if (is_negative()) throw Undecided("sqrt of a negative ball");
  if (is_exact() && mpfr_zero_p(mid_.get())) return *this;
  Mpfr lo = lower();
  if (mpfr_sgn(lo.get()) <= 0) {
    Mpfr hi = upper();
    mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
    return from_interval(Mpfr(precision()), hi, precision());
  }
  Ball r(precision());
  int t = mpfr_sqrt(r.mid_.get(), mid_.get(), MPFR_RNDN);
  // |sqrt(x) - sqrt(m)| <= r / (sqrt(lo) + sqrt(m))
  Mpfr den(kRadiusPrecision);
  Mpfr sm(kRadiusPrecision);
  mpfr_sqrt(den.get(), lo.get(), MPFR_RNDD);
  mpfr_sqrt(sm.get(), mid_.get(), MPFR_RNDD);
  mpfr_add(den.get(), den.get(), sm.get(), MPFR_RNDD);
  mpfr_div(r.rad_.get(), rad_.get(), den.get(), MPFR_RNDU);
  r.add_rounding_error(t);
  return r;
}

Ball Ball::log() const {
  if (!is_positive()) throw Undecided("log of a ball not certainly positive");
  Ball r(precision());
  int t = mpfr_log(r.mid_.get(), mid_.get(), MPFR_RNDN);
  Mpfr lo(kRadiusPrecision);
  mpfr_sub(lo.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  mpfr_div(r.rad_.get(), rad_.get(), lo.get(), MPFR_RNDU);
  r.add_rounding_error(t);
  return r;
}

Ball Ball::exp() const {
  Ball r(precision());
  int t = mpfr_exp(r.mid_.get(), mid_.get(), MPFR_RNDN);
  Mpfr top(kRadiusPrecision);
  mpfr_add(top.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  mpfr_exp(top.get(), top.get(), MPFR_RNDU);
  r.rad_ = mul_up(top, rad_);
  r.add_rounding_error(t);
  return r;
}

Ball Ball::pow(unsigned long exponent) const {
  Ball result = exact(1, precision());
  Ball base = *this;
  while (exponent > 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Ball Ball::with_precision(mpfr_prec_t prec) const {
  Ball r(prec);
  int t = mpfr_set(r.mid_.get(), mid_.get(), MPFR_RNDN);
  r.rad_ = rad_;
  r.add_rounding_error(t);
  return r;
}

Ball Ball::inflated(const Mpfr& extra) const {
  Ball r(*this);
  add_up(r.rad_, abs_up(extra));
  return r;
}

std::string Ball::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg +/- %.3Re", digits, mid_.get(), rad_.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Ball max(const Ball& a, const Ball& b) {
  mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Mpfr lo(prec);
  Mpfr hi(prec);
  mpfr_max(lo.get(), a.lower().get(), b.lower().get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.upper().get(), b.upper().get(), MPFR_RNDU);
  return Ball::from_interval(lo, hi, prec);
}

Ball min(const Ball& a, const Ball& b) { return -max(-a, -b); }

Ball hull(const Ball& a, const Ball& b) {
  mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Mpfr lo(prec);
  Mpfr hi(prec);
  mpfr_min(lo.get(), a.lower().get(), b.lower().get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.upper().get(), b.upper().get(), MPFR_RNDU);
  return Ball::from_interval(lo, hi, prec);
}

// ---------------------------------------------------------------------------
// ComplexBall

ComplexBall::ComplexBall(Ball re) : re_(std::move(re)), im_(re_.precision()) {}

bool ComplexBall::is_real() const { return im_.is_exact() && mpfr_zero_p(im_.mid().get()); }

Ball ComplexBall::norm2() const {
  Ball a = re_.abs();
  Ball b = im_.abs();
  return a * a + b * b;
}

Ball ComplexBall::abs() const {
  if (is_real()) return re_.abs();
  return norm2().sqrt();
}

Ball ComplexBall::arg() const {
  mpfr_prec_t prec = precision();
  if (is_real()) {
    if (re_.is_positive()) return Ball(prec);
    if (re_.is_negative()) return Ball::pi(prec);
    throw Undecided("argument of a ball containing zero");
  }
  // The disk of radius re.rad + im.rad around the midpoint must avoid 0; the
  // argument then moves by at most asin(r/|z|) <= (pi/2) r/|z|.
  Mpfr spread(kRadiusPrecision);
  mpfr_add(spread.get(), re_.rad().get(), im_.rad().get(), MPFR_RNDU);
  Ball modulus = midpoint().abs();
  Mpfr mod_lo = modulus.lower();
  if (mpfr_cmp(mod_lo.get(), spread.get()) <= 0) throw Undecided("argument near zero");
  Mpfr ratio(kRadiusPrecision);
  mpfr_sub(mod_lo.get(), mod_lo.get(), spread.get(), MPFR_RNDD);
  mpfr_div(ratio.get(), spread.get(), mod_lo.get(), MPFR_RNDU);
  mpfr_mul_ui(ratio.get(), ratio.get(), 2, MPFR_RNDU);  // pi/2 < 2
  Mpfr angle(prec);
  mpfr_atan2(angle.get(), im_.mid().get(), re_.mid().get(), MPFR_RNDN);
  Ball r = Ball::from_interval(angle, angle, prec);
  Mpfr ulp(kRadiusPrecision);
  mpfr_abs(ulp.get(), angle.get(), MPFR_RNDU);
  mpfr_mul_2si(ulp.get(), ulp.get(), 1 - static_cast<long>(prec), MPFR_RNDU);
  mpfr_add(ratio.get(), ratio.get(), ulp.get(), MPFR_RNDU);
  return r.inflated(ratio);
}

ComplexBall ComplexBall::pow(unsigned long exponent) const {
  ComplexBall result(Ball::exact(1, precision()));
  ComplexBall base = *this;
  while (exponent > 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

ComplexBall ComplexBall::midpoint() const {
  Mpfr zero(kRadiusPrecision);
  return {Ball::from_mid_rad(re_.mid(), zero, re_.precision()),
          Ball::from_mid_rad(im_.mid(), zero, im_.precision())};
}

std::string ComplexBall::to_string(int digits) const {
  if (is_real()) return re_.to_string(digits);
  return "(" + re_.to_string(digits) + ") + i(" + im_.to_string(digits) + ")";
}

ComplexBall& ComplexBall::operator+=(const ComplexBall& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

ComplexBall& ComplexBall::operator-=(const ComplexBall& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

ComplexBall& ComplexBall::operator*=(const ComplexBall& rhs) {
  Ball re = re_ * rhs.re_ - im_ * rhs.im_;
  Ball im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ComplexBall& ComplexBall::operator*=(const Ball& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

ComplexBall& ComplexBall::operator/=(const ComplexBall& rhs) {
  if (rhs.is_real()) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  Ball den = rhs.norm2();
  *this *= rhs.conj();
  re_ /= den;
  im_ /= den;
  return *this;
}

}  // namespace recdiff
