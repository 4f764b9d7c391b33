#include "recdiff/quadratic.hpp"

#include "recdiff/error.hpp"

namespace recdiff {

QuadraticNumber::QuadraticNumber(mpq_class a, mpq_class b, const mpz_class& radicand)
    : a_(std::move(a)), b_(std::move(b)) {
  auto [core, s] = square_free_core(radicand);
  if (core == 1 || core == 0) {
    a_ += b_ * s * (core == 1 ? 1 : 0);
    b_ = 0;
    d_ = 0;
  } else {
    b_ *= s;
    d_ = core;
  }
  normalize();
}

void QuadraticNumber::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ == 0) d_ = 0;
}

void QuadraticNumber::adopt_field(const QuadraticNumber& other) {
  if (other.b_ == 0) return;
  if (b_ == 0) {
    d_ = other.d_;
    return;
  }
  if (d_ != other.d_)
    throw Error(ErrorKind::UnsupportedDegree, "arithmetic across different quadratic fields");
}

QuadraticNumber QuadraticNumber::conj() const {
  QuadraticNumber r = *this;
  r.b_ = -r.b_;
  return r;
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& rhs) {
  adopt_field(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  normalize();
  if (b_ != 0 && d_ == 0) d_ = rhs.d_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& rhs) { return *this += -rhs; }

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& rhs) {
  adopt_field(rhs);
  mpz_class d = d_ != 0 ? d_ : rhs.d_;
  mpq_class a = a_ * rhs.a_ + mpq_class(d) * b_ * rhs.b_;
  mpq_class b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "quadratic division by zero");
  mpq_class n = rhs.norm();
  *this *= rhs.conj();
  a_ /= n;
  b_ /= n;
  normalize();
  return *this;
}

QuadraticNumber QuadraticNumber::pow(unsigned long exponent) const {
  QuadraticNumber result(1);
  QuadraticNumber base = *this;
  while (exponent > 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

IntPoly QuadraticNumber::minimal_polynomial() const {
  if (is_rational()) return primitive_part(RatPoly{-a_, 1});
  return primitive_part(RatPoly{norm(), -trace(), 1});
}

Ball rational_log_height(const mpq_class& value, mpfr_prec_t prec) {
  mpz_class num = abs(value.get_num());
  const mpz_class& den = value.get_den();
  const mpz_class& big = num > den ? num : den;
  if (big == 0) return Ball::exact(0, prec);
  return Ball::from_integer(big, prec).log();
}

Ball QuadraticNumber::log_height(mpfr_prec_t prec) const {
  if (is_rational()) return rational_log_height(a_, prec);
  IntPoly p = minimal_polynomial();
  Ball acc = Ball::from_integer(p[2], prec).log();
  if (d_ < 0) {
    // complex pair: both conjugates have modulus sqrt(norm)
    mpq_class nrm = norm();
    if (nrm > 1) acc += Ball::from_rational(nrm, prec).log();
  } else {
    // a real quadratic irrational never has modulus exactly 1
    for (const QuadraticNumber& g : {*this, conj()}) {
      Ball m = g.to_complex(prec).abs();
      if (m.certainly_above(1)) acc += m.log();
      else if (!m.certainly_below(1)) throw Undecided("conjugate modulus straddles 1");
    }
  }
  return acc * Ball::from_rational(mpq_class(1, 2), prec);
}

ComplexBall QuadraticNumber::to_complex(mpfr_prec_t prec) const {
  Ball a = Ball::from_rational(a_, prec);
  if (is_rational()) return ComplexBall(a);
  Ball root = Ball::from_integer(abs(d_), prec).sqrt() * Ball::from_rational(b_, prec);
  if (d_ > 0) return ComplexBall(a + root);
  return {a, root};
}

std::string QuadraticNumber::to_string() const {
  if (is_rational()) return a_.get_str();
  return a_.get_str() + (b_ < 0 ? " - " : " + ") + mpq_class(abs(b_)).get_str() + "*sqrt(" +
         d_.get_str() + ")";
}

}  // namespace recdiff
