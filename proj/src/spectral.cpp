#include "recdiff/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "recdiff/error.hpp"
#include "recdiff/precision.hpp"

namespace recdiff {

// ---------------------------------------------------------------------------
// Spectrum

CharacteristicSpectrum characteristic_roots(const LinearRecurrence& seq, mpfr_prec_t prec) {
  CharacteristicSpectrum sp;
  sp.polynomial = seq.characteristic_polynomial();
  sp.precision = prec;
  for (const auto& [g, mult] : square_free_decomposition(sp.polynomial)) {
    const std::size_t idx = sp.factors.size();
    sp.factors.push_back(g);
    for (auto& z : isolate_roots(g, prec)) {
      sp.roots.push_back(std::move(z));
      sp.multiplicities.push_back(mult);
      sp.factor_of.push_back(idx);
    }
  }
  for (std::size_t i = 0; i < sp.roots.size(); ++i) {
    if (sp.roots[i].contains_zero()) throw Undecided("root box contains 0");
    for (std::size_t j = i + 1; j < sp.roots.size(); ++j)
      if (sp.roots[i].overlaps(sp.roots[j])) throw Undecided("root boxes overlap");
  }
  return sp;
}

CharacteristicSpectrum characteristic_roots(const LinearRecurrence& seq) {
  return with_refinement([&](mpfr_prec_t prec) { return characteristic_roots(seq, prec); },
                         "characteristic root isolation");
}

// ---------------------------------------------------------------------------
// Binet decomposition

namespace {

ComplexBall cball(long v, mpfr_prec_t prec) { return ComplexBall(Ball::exact(v, prec)); }

ComplexBall cball(const mpz_class& v, mpfr_prec_t prec) {
  return ComplexBall(Ball::from_integer(v, prec));
}

// Gaussian elimination with partial pivoting on midpoint moduli.
std::vector<ComplexBall> solve(std::vector<std::vector<ComplexBall>> a, std::vector<ComplexBall> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    double best = -1;
    for (std::size_t r = col; r < n; ++r) {
      if (a[r][col].contains_zero()) continue;
      double v = a[r][col].abs().mid_double();
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (piv == n) throw Undecided("singular pivot in Binet system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      ComplexBall factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<ComplexBall> x(n, ComplexBall(b.empty() ? 128 : b[0].precision()));
  for (std::size_t i = n; i-- > 0;) {
    ComplexBall acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

std::vector<QuadraticNumber> solve_exact(std::vector<std::vector<QuadraticNumber>> a,
                                         std::vector<QuadraticNumber> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw Error(ErrorKind::InvalidInput, "singular exact Binet system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      QuadraticNumber factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<QuadraticNumber> x(n);
  for (std::size_t i = n; i-- > 0;) {
    QuadraticNumber acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

mpz_class int_pow(unsigned long base, unsigned long e) {
  if (e == 0) return 1;  // 0^0 = 1
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

}  // namespace

ComplexBall BinetDecomposition::polynomial_at(std::size_t i, unsigned long n) const {
  const mpfr_prec_t prec = precision();
  const auto& c = coefficients[i];
  ComplexBall acc(prec);
  Ball x = Ball::from_integer(mpz_class(n), prec);
  for (std::size_t j = c.size(); j-- > 0;) acc = acc * x + c[j];
  return acc;
}

ComplexBall BinetDecomposition::term(std::size_t i, unsigned long n) const {
  return polynomial_at(i, n) * spectrum.roots[i].pow(n);
}

BinetDecomposition binet_decomposition(const LinearRecurrence& seq,
                                       const CharacteristicSpectrum& spectrum,
                                       unsigned long check_bound) {
  const mpfr_prec_t prec = spectrum.precision;
  const std::size_t k = static_cast<std::size_t>(seq.order());
  std::vector<std::pair<std::size_t, int>> unknowns;
  for (std::size_t i = 0; i < spectrum.roots.size(); ++i)
    for (int j = 0; j < spectrum.multiplicities[i]; ++j) unknowns.emplace_back(i, j);
  if (unknowns.size() != k) throw Error(ErrorKind::InvalidRecurrence, "multiplicities do not sum to k");

  std::vector<std::vector<ComplexBall>> a(k, std::vector<ComplexBall>(k, ComplexBall(prec)));
  std::vector<ComplexBall> b;
  for (std::size_t n = 0; n < k; ++n) {
    for (std::size_t u = 0; u < k; ++u) {
      const auto [i, j] = unknowns[u];
      a[n][u] = spectrum.roots[i].pow(n) * Ball::from_integer(int_pow(n, j), prec);
    }
    b.push_back(cball(seq.term(n), prec));
  }
  std::vector<ComplexBall> x = solve(std::move(a), std::move(b));

  BinetDecomposition out;
  out.spectrum = spectrum;
  out.coefficients.resize(spectrum.roots.size());
  for (std::size_t u = 0; u < k; ++u) out.coefficients[unknowns[u].first].push_back(x[u]);

  // Reconstruction: the Binet sum must isolate exactly the integer term(n).
  std::vector<ComplexBall> powers(spectrum.roots.size(), cball(1, prec));
  const auto values = seq.values(check_bound);
  for (unsigned long n = 0; n <= check_bound; ++n) {
    ComplexBall sum(prec);
    for (std::size_t i = 0; i < powers.size(); ++i) {
      sum += out.polynomial_at(i, n) * powers[i];
      powers[i] *= spectrum.roots[i];
    }
    auto z = sum.re().unique_integer();
    if (!z || !sum.im().contains_zero()) throw Undecided("Binet reconstruction not sharp");
    if (*z != values[n]) throw Undecided("Binet reconstruction mismatch");
  }
  out.checked_up_to = check_bound;
  return out;
}

BinetDecomposition binet_decomposition(const LinearRecurrence& seq, unsigned long check_bound) {
  return with_refinement(
      [&](mpfr_prec_t prec) {
        return binet_decomposition(seq, characteristic_roots(seq, prec), check_bound);
      },
      "Binet decomposition");
}

// ---------------------------------------------------------------------------
// Exact dominant data

QuadraticNumber ExactDominantData::a_at(unsigned long n) const {
  QuadraticNumber acc;
  for (std::size_t j = a.size(); j-- > 0;) acc = acc * QuadraticNumber(static_cast<long>(n)) + a[j];
  return acc;
}

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Minimal polynomial and exact value of a real root, if it is rational or
// real quadratic.
std::optional<std::pair<IntPoly, QuadraticNumber>> exact_root(const CharacteristicSpectrum& sp,
                                                              std::size_t top) {
  const Ball& r = sp.roots[top].re();
  if (auto z = r.unique_integer(); z && evaluate(sp.polynomial, *z) == 0)
    return std::make_pair(IntPoly{-*z, 1}, QuadraticNumber(mpq_class(*z)));
  for (std::size_t j = 0; j < sp.roots.size(); ++j) {
    if (j == top || !sp.roots[j].is_real()) continue;
    const Ball& rj = sp.roots[j].re();
    auto s = (r + rj).unique_integer();
    auto p = (r * rj).unique_integer();
    if (!s || !p) continue;
    mpz_class disc = *s * *s - 4 * *p;
    if (disc <= 0 || mpz_perfect_square_p(disc.get_mpz_t())) continue;
    IntPoly q{*p, -*s, 1};
    if (!exact_quotient(sp.polynomial, q)) continue;
    int sign = mpfr_cmp(r.mid().get(), rj.mid().get()) > 0 ? 1 : -1;
    QuadraticNumber alpha(mpq_class(*s, 2), mpq_class(sign, 2), disc);
    if (!alpha.to_complex(sp.precision).re().overlaps(r)) continue;
    return std::make_pair(q, alpha);
  }
  return std::nullopt;
}

std::optional<ExactDominantData> exact_dominant(const LinearRecurrence& seq,
                                                const CharacteristicSpectrum& sp, std::size_t top) {
  auto root = exact_root(sp, top);
  if (!root) return std::nullopt;
  ExactDominantData ex;
  ex.minimal_polynomial = root->first;
  ex.alpha = root->second;
  ex.multiplicity = sp.multiplicities[top];
  const int e = ex.multiplicity;
  const int d = degree(ex.minimal_polynomial);
  auto h = exact_quotient(sp.polynomial, pow(ex.minimal_polynomial, e));
  if (!h) return std::nullopt;
  trim(*h);

  // W_n = sum_l h_l U_{n+l} only keeps the conjugates of alpha.
  const int rows = d * e;
  std::vector<QuadraticNumber> roots{ex.alpha};
  if (d == 2) roots.push_back(ex.alpha.conj());
  std::vector<std::vector<QuadraticNumber>> a(rows);
  std::vector<QuadraticNumber> b;
  for (int n = 0; n < rows; ++n) {
    mpz_class w = 0;
    for (std::size_t l = 0; l < h->size(); ++l) w += (*h)[l] * seq.term(n + l);
    b.emplace_back(mpq_class(w));
    for (const auto& g : roots) {
      QuadraticNumber gn = g.pow(n);
      for (int j = 0; j < e; ++j) a[n].push_back(gn * QuadraticNumber(mpq_class(int_pow(n, j))));
    }
  }
  std::vector<QuadraticNumber> sol = solve_exact(std::move(a), std::move(b));
  std::vector<QuadraticNumber> tilde(sol.begin(), sol.begin() + e);

  // tilde(X) = sum_l h_l alpha^l a(X + l); triangular with diagonal h(alpha).
  std::vector<QuadraticNumber> S(e);
  for (int t = 0; t < e; ++t) {
    QuadraticNumber acc;
    QuadraticNumber apow(1);
    for (std::size_t l = 0; l < h->size(); ++l) {
      acc += QuadraticNumber(mpq_class((*h)[l] * int_pow(l, t))) * apow;
      apow *= ex.alpha;
    }
    S[t] = acc;
  }
  ex.a.assign(e, QuadraticNumber());
  for (int i = e - 1; i >= 0; --i) {
    QuadraticNumber acc = tilde[i];
    for (int j = i + 1; j < e; ++j)
      acc -= ex.a[j] * QuadraticNumber(mpq_class(binomial(j, i))) * S[j - i];
    ex.a[i] = acc / S[0];
  }
  while (!ex.a.empty() && ex.a.back().is_zero()) ex.a.pop_back();
  return ex;
}

// Divides out rational roots so that a cubic or quadratic remainder is irreducible.
IntPoly strip_rational_roots(IntPoly g) {
  for (const auto& r : rational_roots(g)) {
    IntPoly lin = primitive_part(RatPoly{-r, 1});
    while (auto q = exact_quotient(g, lin)) g = *q;
  }
  return primitive_part(g);
}

}  // namespace

// ---------------------------------------------------------------------------
// Dominant root

DominantRootCertificate dominant_root_certificate(const LinearRecurrence& seq,
                                                  const BinetDecomposition& binet) {
  const auto& sp = binet.spectrum;
  const mpfr_prec_t prec = sp.precision;
  const std::size_t t = sp.roots.size();
  std::vector<Ball> moduli;
  for (const auto& z : sp.roots) moduli.push_back(z.abs());

  std::size_t top = 0;
  for (std::size_t i = 1; i < t; ++i)
    if (mpfr_cmp(moduli[i].lower().get(), moduli[top].lower().get()) > 0) top = i;
  std::vector<std::size_t> tied{top};
  for (std::size_t i = 0; i < t; ++i)
    if (i != top && mpfr_cmp(moduli[i].upper().get(), moduli[top].lower().get()) >= 0)
      tied.push_back(i);

  if (tied.size() == 2) {
    const ComplexBall& x = sp.roots[tied[0]];
    const ComplexBall& y = sp.roots[tied[1]];
    // complex conjugate pair
    if (!x.im().contains_zero() && x.conj().overlaps(y))
      throw Error(ErrorKind::NoDominantRoot, "complex conjugate roots of maximal modulus");
    // real pair +r, -r: r is a root of gcd(f(X), f(-X))
    if (x.is_real() && y.is_real() && (-x).overlaps(y)) {
      IntPoly g = primitive_part(gcd(to_rational(sp.polynomial), to_rational(reflect(sp.polynomial))));
      if (degree(g) > 0) {
        for (const auto& [gf, mult] : square_free_decomposition(g)) {
          (void)mult;
          for (const auto& z : isolate_roots(gf, prec)) {
            if (!z.overlaps(x)) continue;
            bool unique = true;
            for (std::size_t i = 0; i < t; ++i)
              if (i != tied[0] && z.overlaps(sp.roots[i])) unique = false;
            if (unique) throw Error(ErrorKind::NoDominantRoot, "roots r and -r of maximal modulus");
          }
        }
      }
    }
  }
  if (tied.size() > 1) throw Undecided("moduli of the largest roots overlap");
  if (!sp.roots[top].is_real()) {
    if (!sp.roots[top].im().contains_zero())
      throw Error(ErrorKind::NoDominantRoot, "complex conjugate roots of maximal modulus");
    throw Undecided("cannot tell whether the largest root is real");
  }

  DominantRootCertificate cert;
  cert.index = top;
  cert.alpha = sp.roots[top];
  cert.modulus = moduli[top];
  cert.has_subdominant = t > 1;
  cert.second_modulus = Ball::exact(0, prec);
  for (std::size_t i = 0; i < t; ++i)
    if (i != top) cert.second_modulus = max(cert.second_modulus, moduli[i]);
  cert.margin = cert.modulus - cert.second_modulus;
  cert.alpha_factor = strip_rational_roots(sp.factors[sp.factor_of[top]]);
  cert.exact = exact_dominant(seq, sp, top);

  const auto& coeffs = binet.coefficients[top];
  if (cert.exact) {
    if (cert.exact->a.empty())
      throw Error(ErrorKind::NoDominantRoot, "coefficient polynomial of the largest root vanishes");
    cert.sigma = static_cast<int>(cert.exact->a.size()) - 1;
    for (int j = 0; j <= cert.sigma; ++j) {
      ComplexBall z = cert.exact->a[j].to_complex(prec);
      if (!z.overlaps(coeffs[j])) throw Undecided("exact and numeric Binet data disagree");
      cert.a.push_back(z);
    }
  } else {
    int hi = -1;
    for (int j = 0; j < static_cast<int>(coeffs.size()); ++j)
      if (!coeffs[j].contains_zero()) hi = j;
    if (hi < 0 || hi + 1 != static_cast<int>(coeffs.size()))
      throw Undecided("cannot certify the degree of a(X)");
    cert.sigma = hi;
    cert.a.assign(coeffs.begin(), coeffs.end());
  }

  // |alpha| > 1
  if (cert.exact && cert.exact->alpha.is_rational()) {
    cert.greater_than_one = abs(cert.exact->alpha.a()) > 1;
  } else if (cert.modulus.certainly_above(1)) {
    cert.greater_than_one = true;
  } else if (mpfr_cmp_ui(cert.modulus.upper().get(), 1) <= 0) {
    cert.greater_than_one = false;
  } else {
    bool is_unit_root = false;
    for (long s : {1L, -1L})
      if (evaluate(sp.polynomial, mpz_class(s)) == 0 && cert.alpha.re().contains(mpz_class(s)))
        is_unit_root = true;
    if (!is_unit_root) throw Undecided("|alpha| straddles 1");
    cert.greater_than_one = false;
  }
  if (!cert.greater_than_one)
    throw Error(ErrorKind::RootNotLargerThanOne, "dominant root has modulus <= 1");
  if (cert.has_subdominant && !cert.margin.is_positive()) throw Undecided("dominance margin");
  return cert;
}

// ---------------------------------------------------------------------------
// Growth envelope

namespace {

double up(const Ball& b) { return b.upper_double(); }
double down(const Ball& b) { return b.lower_double(); }

double round_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
double round_down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }

bool integer_root(const DominantRootCertificate& cert) {
  return cert.exact && cert.exact->alpha.is_rational();
}

enum class Check { Yes, No, Unsure };

// C |alpha|^n <= |U_n|   (lower)   or   |U_n| <= C n^sigma |alpha|^n   (upper)
Check check_bound(const DominantRootCertificate& cert, const mpz_class& u, unsigned long n,
                  double c, int sigma, bool lower, mpfr_prec_t prec) {
  const mpz_class au = abs(u);
  mpz_class npow = sigma == 0 ? mpz_class(1) : int_pow(n, static_cast<unsigned long>(sigma));
  if (lower) npow = 1;
  if (integer_root(cert)) {
    mpz_class base = abs(cert.exact->alpha.a().get_num());
    mpz_class apow;
    mpz_pow_ui(apow.get_mpz_t(), base.get_mpz_t(), n);
    mpq_class rhs = mpq_class(c) * mpq_class(npow * apow);
    bool ok = lower ? rhs <= mpq_class(au) : mpq_class(au) <= rhs;
    return ok ? Check::Yes : Check::No;
  }
  Ball rhs = Ball::from_double(c, prec) * Ball::from_integer(npow, prec) *
             cert.modulus.with_precision(prec).pow(n);
  Ball diff = lower ? Ball::from_integer(au, prec) - rhs : rhs - Ball::from_integer(au, prec);
  if (!diff.is_negative() && mpfr_sgn(diff.lower().get()) >= 0) return Check::Yes;
  if (diff.is_negative()) return Check::No;
  return Check::Unsure;
}

}  // namespace

GrowthEnvelope growth_envelope(const LinearRecurrence& seq, const BinetDecomposition& binet,
                               const DominantRootCertificate& cert, unsigned long cap) {
  const auto& sp = binet.spectrum;
  const mpfr_prec_t prec = sp.precision;
  const std::size_t top = cert.index;
  GrowthEnvelope env;
  env.sigma = cert.sigma;

  const double alpha_lo = down(cert.modulus);
  const double base = cert.has_subdominant ? std::max(up(cert.second_modulus), 1.0) : 1.0;
  double ap = std::sqrt(base * alpha_lo);
  if (!(ap > base && ap < alpha_lo && ap > 1.0)) throw Undecided("no room for alpha'");
  env.alpha_prime = ap;
  const Ball ap_ball = Ball::from_double(ap, prec);

  // Window long enough that every n^d rho^n is decreasing past it.
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < sp.roots.size(); ++i)
    if (i != top) others.push_back(i);
  unsigned long window = cap;
  for (std::size_t i : others) {
    Ball rho = sp.roots[i].abs() / ap_ball;
    if (!rho.certainly_below(1)) throw Undecided("subdominant ratio not below 1");
    const int d = static_cast<int>(binet.coefficients[i].size()) - 1;
    if (d > 0) {
      double turn = d / -std::log(up(rho));
      if (turn > 1e5) throw Error(ErrorKind::PrecisionExhausted, "envelope window too long");
      window = std::max(window, static_cast<unsigned long>(std::ceil(turn)) + 1);
    }
  }

  for (;;) {
    const auto values = seq.values(window);
    // a' over the window
    Ball a_prime = Ball::exact(0, prec);
    if (!others.empty()) {
      std::vector<ComplexBall> powers(others.size(), ComplexBall(Ball::exact(1, prec)));
      Ball ap_pow = Ball::exact(1, prec);
      for (unsigned long n = 0; n <= window; ++n) {
        ComplexBall sub(prec);
        for (std::size_t s = 0; s < others.size(); ++s) {
          sub += binet.polynomial_at(others[s], n) * powers[s];
          powers[s] *= sp.roots[others[s]];
        }
        a_prime = max(a_prime, sub.abs() / ap_pow);
        ap_pow *= ap_ball;
      }
      // geometric tail past the window
      Ball tail = Ball::exact(0, prec);
      Ball w = Ball::from_integer(mpz_class(window), prec);
      for (std::size_t i : others) {
        Ball amp = Ball::exact(0, prec);
        for (const auto& c : binet.coefficients[i]) amp += c.abs();
        const unsigned long d = binet.coefficients[i].size() - 1;
        tail += amp * w.pow(d) * (sp.roots[i].abs() / ap_ball).pow(window);
      }
      a_prime = max(a_prime, tail);
    }
    env.a_prime = others.empty() ? 0.0 : round_up(up(a_prime) * (1 + 0x1p-30));

    // lower bound for |a(n)|/n^sigma once n >= window, and the tail slack
    const int sigma = cert.sigma;
    Ball lead = cert.a[sigma].abs();
    Ball rest = Ball::exact(0, prec);
    for (int j = 0; j < sigma; ++j) rest += cert.a[j].abs();
    Ball l_a = sigma > 0 ? lead - rest / Ball::from_integer(mpz_class(window), prec) : lead;
    Ball eps = Ball::from_double(env.a_prime, prec) *
               (ap_ball / cert.modulus).pow(window);
    Ball slack = l_a - eps;
    if (!slack.is_positive()) {
      if (window >= 16 * cap) throw Error(ErrorKind::PrecisionExhausted, "envelope lower constant");
      window *= 2;
      continue;
    }
    env.a_abs_sum = round_up(up(lead + rest));
    if (sigma == 0) {
      env.a_lower = round_down(down(lead));
      env.a_lower_from = 0;
    } else {
      env.a_lower = round_down(down(lead) / 2);
      env.a_lower_from =
          std::max<unsigned long>(1, static_cast<unsigned long>(std::ceil(2 * up(rest) / down(lead))));
    }

    bool exact_constant = false;
    if (!cert.has_subdominant && sigma == 0 && cert.exact && cert.exact->a[0].is_rational()) {
      mpq_class av = abs(cert.exact->a[0].a());
      double d = av.get_d();
      if (mpq_class(d) == av) {
        env.c_lower = env.c_upper = d;
        env.n0 = 0;
        exact_constant = true;
      }
    }
    if (!exact_constant) {
      env.c_lower = round_down(0.9 * down(slack));
      unsigned long n0 = sigma > 0 ? 1 : 0;
      for (unsigned long n = window + 1; n-- > 0;) {
        if (check_bound(cert, values[n], n, env.c_lower, sigma, true, prec) != Check::Yes) {
          n0 = std::max(n0, n + 1);
          break;
        }
      }
      env.n0 = n0;
      Ball worst = Ball::from_double(up(lead + rest) , prec) + eps;
      double c2 = up(worst);
      Ball apow = cert.modulus.pow(n0);
      for (unsigned long n = n0; n <= window; ++n) {
        Ball denom = apow;
        if (sigma > 0) denom *= Ball::from_integer(int_pow(n, sigma), prec);
        c2 = std::max(c2, up(Ball::from_integer(abs(values[n]), prec) / denom));
        apow *= cert.modulus;
      }
      env.c_upper = round_up(c2 * (1 + 0x1p-40));
    }
    for (unsigned long n = env.n0; n <= window; ++n) {
      if (check_bound(cert, values[n], n, env.c_lower, sigma, true, prec) != Check::Yes ||
          check_bound(cert, values[n], n, env.c_upper, sigma, false, prec) != Check::Yes)
        throw Undecided("envelope check inconclusive");
    }
    env.verified_up_to = window;
    return env;
  }
}

// ---------------------------------------------------------------------------
// Analysis bundle

double SequenceAnalysis::log_modulus() const { return certificate.modulus.log().mid_double(); }

SequenceAnalysis analyze_sequence(const LinearRecurrence& seq) {
  return with_refinement(
      [&](mpfr_prec_t prec) {
        CharacteristicSpectrum sp = characteristic_roots(seq, prec);
        BinetDecomposition binet = binet_decomposition(seq, sp);
        DominantRootCertificate cert = dominant_root_certificate(seq, binet);
        GrowthEnvelope env = growth_envelope(seq, binet, cert);
        return SequenceAnalysis{seq, std::move(binet), std::move(cert), env};
      },
      "sequence analysis", 256);
}

bool verify_envelope(const SequenceAnalysis& analysis, double c_lower, double c_upper,
                     unsigned long n0, unsigned long cap) {
  const auto values = analysis.sequence.values(cap);
  const int sigma = analysis.certificate.sigma;
  for (unsigned long n = n0; n <= cap; ++n) {
    for (bool lower : {true, false}) {
      const double c = lower ? c_lower : c_upper;
      Check r = Check::Unsure;
      for (mpfr_prec_t prec = 256; r == Check::Unsure && prec <= precision_cap(); prec *= 2) {
        DominantRootCertificate cert = analysis.certificate;
        if (cert.exact && prec > analysis.binet.precision())
          cert.modulus = cert.exact->alpha.to_complex(prec).abs();
        r = check_bound(cert, values[n], n, c, sigma, lower, prec);
        if (!cert.exact) break;
      }
      if (r != Check::Yes) return false;
    }
  }
  return true;
}

bool verify_remainder(const SequenceAnalysis& analysis, unsigned long cap) {
  const auto& binet = analysis.binet;
  const auto& cert = analysis.certificate;
  const auto& env = analysis.envelope;
  const mpfr_prec_t prec = binet.precision();
  const auto values = analysis.sequence.values(cap);
  const Ball ap = Ball::from_double(env.alpha_prime, prec);
  for (unsigned long n = env.n0; n <= cap; ++n) {
    ComplexBall rem(prec);
    if (cert.exact) {
      QuadraticNumber r = QuadraticNumber(mpq_class(values[n])) -
                          cert.exact->a_at(n) * cert.exact->alpha.pow(n);
      if (r.is_zero()) continue;
      rem = r.to_complex(prec);
    } else {
      rem = ComplexBall(Ball::from_integer(values[n], prec)) - binet.term(cert.index, n);
    }
    Ball bound = Ball::from_double(env.a_prime, prec) * ap.pow(n);
    Ball diff = bound - rem.abs();
    if (mpfr_sgn(diff.lower().get()) < 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Degree helpers

int dominant_degree(const SequenceAnalysis& analysis) {
  const auto& cert = analysis.certificate;
  if (cert.exact) return degree(cert.exact->minimal_polynomial);
  return degree(cert.alpha_factor);
}

AlgebraicNumber dominant_root(const SequenceAnalysis& analysis) {
  const auto& cert = analysis.certificate;
  if (cert.exact) return AlgebraicNumber::from_quadratic(cert.exact->alpha);
  return AlgebraicNumber::from_polynomial(cert.alpha_factor, cert.alpha.re().mid_double(),
                                          cert.alpha.im().mid_double());
}

}  // namespace recdiff
