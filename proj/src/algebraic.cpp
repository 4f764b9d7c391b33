#include "recdiff/algebraic.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "recdiff/error.hpp"
#include "recdiff/precision.hpp"

namespace recdiff {

namespace {

double distance_to_seed(const ComplexBall& z, double re, double im) {
  return std::hypot(z.re().mid_double() - re, z.im().mid_double() - im);
}

std::size_t nearest(const std::vector<ComplexBall>& roots, double re, double im) {
  std::size_t best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    double dist = distance_to_seed(roots[i], re, im);
    if (dist < best_dist) {
      best_dist = dist;
      best = i;
    }
  }
  return best;
}

// For (anti-)self-reciprocal p, 1/conj(z) = z/|z|^2 is again a root.
bool is_self_reciprocal(const IntPoly& p) {
  const int d = degree(p);
  bool plus = true;
  bool minus = true;
  for (int i = 0; i <= d; ++i) {
    if (p[i] != p[d - i]) plus = false;
    if (p[i] != -p[d - i]) minus = false;
  }
  return plus || minus;
}

bool proven_on_unit_circle(const std::vector<ComplexBall>& roots, std::size_t j, const IntPoly& p) {
  if (!is_self_reciprocal(p)) return false;
  const ComplexBall& z = roots[j];
  ComplexBall inv(z.precision());
  try {
    Ball n2 = z.norm2();
    inv = ComplexBall(z.re() / n2, z.im() / n2);
  } catch (const Undecided&) {
    return false;
  }
  if (!inv.overlaps(z)) return false;
  for (std::size_t l = 0; l < roots.size(); ++l)
    if (l != j && inv.overlaps(roots[l])) return false;
  return true;
}

// log max(1, |z|); a modulus straddling 1 gives the interval [0, log upper].
Ball log_max_one(const ComplexBall& z, mpfr_prec_t prec) {
  Ball m = z.abs();
  if (m.certainly_above(1)) return m.log();
  if (mpfr_cmp_ui(m.upper().get(), 1) <= 0) return Ball::exact(0, prec);
  Mpfr zero(prec);
  Ball up = Ball::from_interval(m.upper(), m.upper(), prec).log();
  return Ball::from_interval(zero, up.upper(), prec);
}

}  // namespace

AlgebraicNumber AlgebraicNumber::from_polynomial(const IntPoly& poly, double re, double im) {
  AlgebraicNumber g;
  g.poly_ = primitive_part(poly);
  const int d = recdiff::degree(g.poly_);
  if (d < 1) throw Error(ErrorKind::InvalidInput, "polynomial must have degree >= 1");
  if (d <= 3) {
    if (d >= 2 && !rational_roots(g.poly_).empty())
      throw Error(ErrorKind::InvalidInput, "polynomial is reducible over Q: " + recdiff::to_string(g.poly_));
    g.verified_ = true;
  }
  auto roots = with_refinement([&](mpfr_prec_t prec) { return isolate_roots(g.poly_, prec); },
                               "root isolation");
  // Snap the seed onto the nearest certified root.
  const std::size_t best = nearest(roots, re, im);
  g.seed_re_ = roots[best].re().mid_double();
  g.seed_im_ = roots[best].im().mid_double();
  if (d == 1) {
    mpq_class r(-g.poly_[0], g.poly_[1]);
    r.canonicalize();
    g.exact_ = QuadraticNumber(r);
  } else if (d == 2) {
    const mpz_class& A = g.poly_[2];
    const mpz_class& B = g.poly_[1];
    const mpz_class& C = g.poly_[0];
    const mpz_class disc = B * B - 4 * A * C;
    QuadraticNumber plus(mpq_class(-B, 2 * A), mpq_class(1, 2 * A), disc);
    QuadraticNumber minus = plus.conj();
    double dp = distance_to_seed(plus.to_complex(128), g.seed_re_, g.seed_im_);
    double dm = distance_to_seed(minus.to_complex(128), g.seed_re_, g.seed_im_);
    g.exact_ = dp <= dm ? plus : minus;
  }
  return g;
}

AlgebraicNumber AlgebraicNumber::from_rational(const mpq_class& value) {
  AlgebraicNumber g;
  mpq_class v = value;
  v.canonicalize();
  g.poly_ = {-v.get_num(), v.get_den()};
  g.verified_ = true;
  g.seed_re_ = v.get_d();
  g.exact_ = QuadraticNumber(v);
  return g;
}

AlgebraicNumber AlgebraicNumber::from_quadratic(const QuadraticNumber& value) {
  if (value.is_rational()) return from_rational(value.a());
  AlgebraicNumber g;
  g.poly_ = value.minimal_polynomial();
  g.verified_ = true;
  ComplexBall z = value.to_complex(128);
  g.seed_re_ = z.re().mid_double();
  g.seed_im_ = z.im().mid_double();
  g.exact_ = value;
  return g;
}

namespace {

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  std::string t = s;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || q.set_str(t, 10) != 0)
    throw Error(ErrorKind::InvalidInput, "not a rational number: " + s);
  if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator: " + s);
  q.canonicalize();
  return q;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidInput, "not a number: " + s);
  }
  if (used != s.size()) throw Error(ErrorKind::InvalidInput, "not a number: " + s);
  return v;
}

}  // namespace

AlgebraicNumber AlgebraicNumber::parse(const std::string& text) {
  auto at = text.find('@');
  if (at == std::string::npos) return from_rational(parse_rational(text));
  IntPoly descending;
  std::stringstream coeffs(text.substr(0, at));
  std::string item;
  while (std::getline(coeffs, item, ',')) {
    mpz_class z;
    if (!item.empty() && item[0] == '+') item.erase(0, 1);
    if (item.empty() || z.set_str(item, 10) != 0)
      throw Error(ErrorKind::InvalidInput, "bad polynomial coefficient: " + item);
    descending.push_back(z);
  }
  IntPoly poly(descending.rbegin(), descending.rend());
  std::string root = text.substr(at + 1);
  double re = 0;
  double im = 0;
  if (!root.empty() && root.back() == 'i') {
    // split "re+imi" at the last sign that is not part of an exponent
    std::size_t split = std::string::npos;
    for (std::size_t i = root.size() - 1; i > 0; --i) {
      if ((root[i] == '+' || root[i] == '-') && root[i - 1] != 'e' && root[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    std::string im_part = root.substr(split == std::string::npos ? 0 : split);
    im_part.pop_back();
    if (im_part == "+" || im_part == "-" || im_part.empty()) im_part += "1";
    im = parse_double(im_part);
    if (split != std::string::npos) re = parse_double(root.substr(0, split));
  } else {
    re = parse_double(root);
  }
  return from_polynomial(poly, re, im);
}

std::vector<ComplexBall> AlgebraicNumber::conjugates(mpfr_prec_t prec) const {
  return isolate_roots(poly_, prec);
}

std::size_t AlgebraicNumber::root_index(const std::vector<ComplexBall>& conjugates) const {
  return nearest(conjugates, seed_re_, seed_im_);
}

ComplexBall AlgebraicNumber::root(mpfr_prec_t prec) const {
  if (exact_) return exact_->to_complex(prec);
  auto all = conjugates(prec);
  return all[root_index(all)];
}

Ball AlgebraicNumber::modulus(mpfr_prec_t prec) const { return root(prec).abs(); }

Ball AlgebraicNumber::abs_log(mpfr_prec_t prec) const {
  ComplexBall z = root(prec);
  Ball l = z.abs().log();
  if (z.is_real() && z.re().is_positive()) return l.abs();
  Ball a = z.arg();
  return (l * l + a * a).sqrt();
}

std::string AlgebraicNumber::to_string() const {
  if (exact_) return exact_->to_string();
  std::ostringstream os;
  os.precision(17);
  os << "root of " << recdiff::to_string(poly_) << " near " << seed_re_;
  if (seed_im_ != 0) os << (seed_im_ < 0 ? " - " : " + ") << std::fabs(seed_im_) << "i";
  return os.str();
}

Ball log_height(const AlgebraicNumber& gamma, mpfr_prec_t prec) {
  const IntPoly& p = gamma.minimal_polynomial();
  auto roots = gamma.conjugates(prec);
  Ball acc = Ball::from_integer(p.back(), prec).log();
  for (std::size_t j = 0; j < roots.size(); ++j) {
    if (proven_on_unit_circle(roots, j, p)) continue;
    acc += log_max_one(roots[j], prec);
  }
  acc = acc / Ball::exact(gamma.degree(), prec);
  // demand about half the working precision
  Mpfr tol(kRadiusPrecision);
  mpfr_set_ui_2exp(tol.get(), 1, -static_cast<long>(prec / 2), MPFR_RNDN);
  if (mpfr_cmp(acc.rad().get(), tol.get()) > 0) throw Undecided("height enclosure too wide");
  return acc;
}

Ball log_height(const AlgebraicNumber& gamma) {
  return with_refinement([&](mpfr_prec_t prec) { return log_height(gamma, prec); },
                         "logarithmic height");
}

Ball log_mahler_measure(const IntPoly& p, mpfr_prec_t prec) {
  IntPoly f = p;
  trim(f);
  if (f.empty()) throw Error(ErrorKind::InvalidInput, "Mahler measure of the zero polynomial");
  Ball acc = Ball::from_integer(abs(f.back()), prec).log();
  for (const auto& [g, mult] : square_free_decomposition(f)) {
    Ball part = Ball::exact(0, prec);
    for (const auto& z : isolate_roots(g, prec)) part += log_max_one(z, prec);
    acc += part * Ball::exact(mult, prec);
  }
  return acc;
}

}  // namespace recdiff
