#include "recdiff/poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "recdiff/error.hpp"

namespace recdiff {

int degree(const IntPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

int degree(const RatPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

void trim(IntPoly& p) { p.resize(static_cast<std::size_t>(degree(p) + 1)); }
void trim(RatPoly& p) { p.resize(static_cast<std::size_t>(degree(p) + 1)); }

RatPoly to_rational(const IntPoly& p) {
  RatPoly r;
  r.reserve(p.size());
  for (const auto& c : p) r.emplace_back(c);
  return r;
}

IntPoly primitive_part(const RatPoly& p) {
  mpz_class den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntPoly r;
  for (const auto& c : p) {
    mpq_class scaled = c * den;
    r.push_back(scaled.get_num());
  }
  return primitive_part(r);
}

IntPoly primitive_part(const IntPoly& p) {
  IntPoly r = p;
  trim(r);
  if (r.empty()) return r;
  mpz_class g = 0;
  for (const auto& c : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (auto& c : r) c /= g;
  if (r.back() < 0)
    for (auto& c : r) c = -c;
  return r;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  int db = degree(b);
  if (db < 0) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  RatPoly rem = a;
  trim(rem);
  RatPoly quot(std::max<int>(degree(rem) - db + 1, 0));
  while (degree(rem) >= db) {
    int dr = degree(rem);
    mpq_class coef = rem[dr] / b[db];
    quot[dr - db] = coef;
    for (int i = 0; i <= db; ++i) rem[dr - db + i] -= coef * b[i];
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

std::optional<IntPoly> exact_quotient(const IntPoly& p, const IntPoly& divisor) {
  auto [q, r] = divmod(to_rational(p), to_rational(divisor));
  if (!r.empty()) return std::nullopt;
  IntPoly out;
  for (const auto& c : q) {
    if (c.get_den() != 1) return std::nullopt;
    out.push_back(c.get_num());
  }
  return out;
}

IntPoly pow(const IntPoly& p, int exponent) {
  IntPoly r{1};
  for (int i = 0; i < exponent; ++i) r = r * p;
  return r;
}

IntPoly reflect(const IntPoly& p) {
  IntPoly r = p;
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return r;
}

std::vector<std::pair<IntPoly, int>> square_free_decomposition(const IntPoly& f) {
  RatPoly fr = to_rational(f);
  trim(fr);
  std::vector<std::pair<IntPoly, int>> out;
  if (degree(fr) <= 0) return out;
  RatPoly df = derivative(fr);
  RatPoly a = gcd(fr, df);
  RatPoly b = divmod(fr, a).first;
  RatPoly c = divmod(df, a).first;
  RatPoly d = c - derivative(b);
  int i = 1;
  while (degree(b) > 0) {
    RatPoly g = gcd(b, d);
    if (degree(g) > 0) out.emplace_back(primitive_part(g), i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - derivative(b);
    ++i;
  }
  return out;
}

mpz_class evaluate(const IntPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class evaluate(const IntPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Ball evaluate(const IntPoly& p, const Ball& x) {
  Ball acc(x.precision());
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + Ball::from_integer(*it, x.precision());
  return acc;
}

ComplexBall evaluate(const IntPoly& p, const ComplexBall& x) {
  ComplexBall acc(x.precision());
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + ComplexBall(Ball::from_integer(*it, x.precision()));
  return acc;
}

namespace {

using cld = std::complex<long double>;

IntPoly derivative_int(const IntPoly& p) {
  IntPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  return d;
}

// Aberth-Ehrlich iteration in long double; only a starting point for the
// multiprecision refinement below.
std::vector<cld> aberth_long_double(const IntPoly& p) {
  const int d = degree(p);
  std::vector<long double> c(d + 1);
  for (int i = 0; i <= d; ++i) c[i] = static_cast<long double>(p[i].get_d());
  long double scale = 0;
  for (int i = 0; i < d; ++i) {
    long double ratio = std::fabs(c[i] / c[d]);
    if (ratio > 0) scale = std::max(scale, std::pow(ratio, 1.0L / (d - i)));
  }
  if (scale == 0) scale = 1;
  std::vector<cld> z(d);
  const long double two_pi = 6.283185307179586476925286766559L;
  for (int j = 0; j < d; ++j)
    z[j] = std::polar(scale, two_pi * j / d + 0.4L);
  auto eval = [&](cld x, cld& dp) {
    cld v = c[d];
    dp = 0;
    for (int i = d - 1; i >= 0; --i) {
      dp = dp * x + v;
      v = v * x + c[i];
    }
    return v;
  };
  for (int iter = 0; iter < 500; ++iter) {
    long double worst = 0;
    for (int j = 0; j < d; ++j) {
      cld dp;
      cld v = eval(z[j], dp);
      if (v == cld(0)) continue;
      cld ratio = v / dp;
      cld sum = 0;
      for (int l = 0; l < d; ++l)
        if (l != j) sum += 1.0L / (z[j] - z[l]);
      cld w = ratio / (1.0L - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[j] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[j])));
    }
    if (worst < 1e-18L) break;
  }
  return z;
}

ComplexBall point(const Mpfr& re, const Mpfr& im, mpfr_prec_t prec) {
  Mpfr zero(kRadiusPrecision);
  return {Ball::from_mid_rad(re, zero, prec), Ball::from_mid_rad(im, zero, prec)};
}

}  // namespace

std::vector<ComplexBall> isolate_roots(const IntPoly& squarefree, mpfr_prec_t prec) {
  IntPoly g = squarefree;
  trim(g);
  const int d = degree(g);
  if (d <= 0) return {};
  if (d == 1) {
    mpq_class root(-g[0], g[1]);
    root.canonicalize();
    return {ComplexBall(Ball::from_rational(root, prec))};
  }

  std::vector<cld> start = aberth_long_double(g);
  std::vector<ComplexBall> z;
  for (const auto& s : start) {
    Mpfr re = Mpfr::from_double(static_cast<double>(s.real()), prec);
    Mpfr im = Mpfr::from_double(static_cast<double>(s.imag()), prec);
    mpfr_set_ld(re.get(), s.real(), MPFR_RNDN);
    mpfr_set_ld(im.get(), s.imag(), MPFR_RNDN);
    Mpfr rre(prec), rim(prec);
    mpfr_set(rre.get(), re.get(), MPFR_RNDN);
    mpfr_set(rim.get(), im.get(), MPFR_RNDN);
    z.push_back(point(rre, rim, prec));
  }

  // Multiprecision Aberth sweeps on midpoints.
  const IntPoly dg = derivative_int(g);
  const long max_iter = 40 + 4 * static_cast<long>(std::log2(static_cast<double>(prec)));
  for (long iter = 0; iter < max_iter; ++iter) {
    bool converged = true;
    for (int j = 0; j < d; ++j) {
      try {
        ComplexBall v = evaluate(g, z[j]);
        if (v.midpoint().contains_zero()) continue;
        ComplexBall ratio = v / evaluate(dg, z[j]);
        ComplexBall sum(prec);
        for (int l = 0; l < d; ++l)
          if (l != j) sum += ComplexBall(Ball::exact(1, prec)) / (z[j] - z[l]);
        ComplexBall one(Ball::exact(1, prec));
        ComplexBall w = (ratio / (one - ratio * sum)).midpoint();
        z[j] = (z[j] - w).midpoint();
        // relative size of the correction
        Ball wabs = w.abs();
        Mpfr bound(kRadiusPrecision);
        mpfr_set_ui(bound.get(), 1, MPFR_RNDN);
        Ball zabs = z[j].abs();
        if (mpfr_cmp_ui(zabs.upper().get(), 1) > 0) mpfr_set(bound.get(), zabs.upper().get(), MPFR_RNDU);
        mpfr_mul_2si(bound.get(), bound.get(), -static_cast<long>(prec) + 6, MPFR_RNDU);
        if (mpfr_cmp(wabs.upper().get(), bound.get()) > 0) converged = false;
      } catch (const Undecided&) {
        converged = false;
      }
    }
    if (converged) break;
  }

  // Weierstrass corrections W_j = g(z_j) / (lc * prod_{l != j}(z_j - z_l)); the
  // disks D(z_j, d |W_j|) contain all roots, and a disk disjoint from the
  // others contains exactly one root.
  std::vector<Mpfr> radius(d, Mpfr(kRadiusPrecision));
  for (int j = 0; j < d; ++j) {
    ComplexBall den(Ball::from_integer(g[d], prec));
    for (int l = 0; l < d; ++l)
      if (l != j) den *= z[j] - z[l];
    ComplexBall w = evaluate(g, z[j]) / den;  // may throw Undecided
    Mpfr r = w.abs().upper();
    mpfr_mul_ui(radius[j].get(), r.get(), static_cast<unsigned long>(d), MPFR_RNDU);
  }
  auto disjoint = [&](const ComplexBall& a, const Mpfr& ra, const ComplexBall& b, const Mpfr& rb) {
    Ball dist = (a - b).abs();
    Mpfr sum(kRadiusPrecision);
    mpfr_add(sum.get(), ra.get(), rb.get(), MPFR_RNDU);
    return mpfr_cmp(dist.lower().get(), sum.get()) > 0;
  };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (!disjoint(z[i], radius[i], z[j], radius[j]))
        throw Undecided("root inclusion disks overlap");

  std::vector<ComplexBall> roots;
  for (int j = 0; j < d; ++j) {
    // conj(root_j) lies in conj(D_j); if conj(D_j) meets only D_j, the root is real.
    ComplexBall mirrored = z[j].conj();
    bool only_self = true;
    for (int l = 0; l < d && only_self; ++l)
      if (l != j && !disjoint(mirrored, radius[j], z[l], radius[l])) only_self = false;
    Ball re = Ball::from_mid_rad(z[j].re().mid(), radius[j], prec);
    if (only_self) {
      roots.emplace_back(re);
    } else {
      roots.emplace_back(re, Ball::from_mid_rad(z[j].im().mid(), radius[j], prec));
    }
  }
  return roots;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  mpz_class m = abs(n);
  if (m == 0) return {};
  if (m > mpz_class("100000000000000"))
    throw Error(ErrorKind::UnsupportedDegree, "integer too large for trial-division factoring");
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  for (mpz_class q = 1; q * q <= m; ++q) {
    if (m % q == 0) {
      small.push_back(q);
      if (q * q != m) large.push_back(m / q);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<mpq_class> rational_roots(const IntPoly& p) {
  IntPoly f = primitive_part(p);
  std::vector<mpq_class> out;
  if (degree(f) < 1) return out;
  // Strip the root 0.
  std::size_t shift = 0;
  while (shift < f.size() && f[shift] == 0) ++shift;
  if (shift > 0) {
    out.emplace_back(0);
    f.erase(f.begin(), f.begin() + static_cast<long>(shift));
  }
  if (degree(f) < 1) return out;
  // p/q in lowest terms needs p | a_0 and q | a_d.
  std::vector<mpz_class> nums = positive_divisors(f.front());
  std::vector<mpz_class> dens = positive_divisors(f.back());
  for (const auto& q : dens) {
    for (const auto& n : nums) {
      for (int sign : {1, -1}) {
        mpq_class cand(n * sign, q);
        cand.canonicalize();
        if (cand.get_den() != q) continue;
        if (evaluate(f, cand) == 0 &&
            std::find(out.begin(), out.end(), cand) == out.end())
          out.push_back(cand);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<mpz_class, mpz_class> square_free_core(const mpz_class& value) {
  if (value == 0) return {0, 1};
  mpz_class m = abs(value);
  mpz_class core = value < 0 ? -1 : 1;
  mpz_class s = 1;
  // After removing all primes up to cbrt(m), the cofactor has at most two prime
  // factors, so it is square-free unless it is a perfect square.
  mpz_class limit;
  mpz_root(limit.get_mpz_t(), m.get_mpz_t(), 3);
  limit += 1;
  if (limit > 10000000)
    throw Error(ErrorKind::UnsupportedDegree, "discriminant too large to factor");
  for (mpz_class q = 2; q <= limit && q * q <= m; ++q) {
    int e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= q;
    if (e % 2 == 1) core *= q;
  }
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    s *= r;
  } else {
    core *= m;
  }
  return {core, s};
}

std::string to_string(const IntPoly& p, char var) {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(p); i >= 0; --i) {
    if (p[i] == 0) continue;
    mpz_class c = p[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    mpz_class a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace recdiff
