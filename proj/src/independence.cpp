#include <cmath>
#include <numeric>

#include "recdiff/error.hpp"
#include "recdiff/precision.hpp"
#include "recdiff/spectral.hpp"

namespace recdiff {

namespace {

// Pairwise coprime basis generating every input by products of powers.
std::vector<mpz_class> coprime_base(std::vector<mpz_class> xs) {
  std::vector<mpz_class> base;
  for (auto& x : xs)
    if (x > 1) base.push_back(x);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), base[i].get_mpz_t(), base[j].get_mpz_t());
        if (g == 1) continue;
        changed = true;
        if (base[i] == base[j]) {
          base.erase(base.begin() + static_cast<long>(j));
          break;
        }
        mpz_class a = base[i] / g;
        mpz_class b = base[j] / g;
        base.erase(base.begin() + static_cast<long>(j));
        base.erase(base.begin() + static_cast<long>(i));
        for (const auto& v : {a, b, g})
          if (v > 1) base.push_back(v);
      }
    }
  }
  return base;
}

long valuation(mpz_class& x, const mpz_class& b) {
  long e = 0;
  while (x % b == 0) {
    x /= b;
    ++e;
  }
  return e;
}

// Exponent vector of |q| over the base; nullopt if the base does not cover q.
std::optional<std::vector<long>> exponents(const mpq_class& q, const std::vector<mpz_class>& base) {
  mpz_class num = abs(q.get_num());
  mpz_class den = q.get_den();
  std::vector<long> e;
  for (const auto& b : base) e.push_back(valuation(num, b) - valuation(den, b));
  if (num != 1 || den != 1) return std::nullopt;
  return e;
}

// Smallest (n, m) with n > 0 and |p|^n = |q|^m, m of either sign.
std::optional<std::pair<long, long>> rational_relation(const mpq_class& p, const mpq_class& q) {
  auto base = coprime_base({abs(p.get_num()), p.get_den(), abs(q.get_num()), q.get_den()});
  auto ep = exponents(p, base);
  auto eq = exponents(q, base);
  if (!ep || !eq) throw Error(ErrorKind::InvalidInput, "coprime base construction failed");
  std::size_t i = 0;
  while (i < base.size() && (*ep)[i] == 0 && (*eq)[i] == 0) ++i;
  if (i == base.size()) return std::make_pair(1L, 0L);  // both are 1
  if ((*ep)[i] == 0 || (*eq)[i] == 0) return std::nullopt;
  long g = std::gcd((*ep)[i], (*eq)[i]);
  long n = (*eq)[i] / g;
  long m = (*ep)[i] / g;
  if (n < 0) {
    n = -n;
    m = -m;
  }
  for (std::size_t k = 0; k < base.size(); ++k)
    if (n * (*ep)[k] != m * (*eq)[k]) return std::nullopt;
  return std::make_pair(n, m);
}

mpq_class field_norm(const AlgebraicNumber& x) {
  const IntPoly& p = x.minimal_polynomial();
  mpq_class n(p.front(), p.back());
  n.canonicalize();
  return x.degree() % 2 == 0 ? n : mpq_class(-n);
}

bool exact_equal(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.is_rational() != y.is_rational()) return false;
  if (x.is_rational()) return x.a() == y.a();
  return x.field() == y.field() && x == y;
}

int compositum_degree(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  const auto& x = *a.exact();
  const auto& y = *b.exact();
  if (x.is_rational()) return y.is_rational() ? 1 : 2;
  if (y.is_rational()) return 2;
  return x.field() == y.field() ? 2 : 4;
}

}  // namespace

IndependenceResult multiplicative_independence(const AlgebraicNumber& alpha,
                                               const AlgebraicNumber& beta) {
  for (const auto* x : {&alpha, &beta}) {
    bool above = with_refinement(
        [&](mpfr_prec_t prec) {
          Ball m = x->modulus(prec);
          if (m.certainly_above(1)) return true;
          if (mpfr_cmp_ui(m.upper().get(), 1) <= 0) return false;
          throw Undecided("modulus straddles 1");
        },
        "modulus test");
    if (!above)
      throw Error(ErrorKind::PreconditionViolation, "multiplicative test needs |.| > 1: " + x->to_string());
  }

  const bool both_exact = alpha.exact().has_value() && beta.exact().has_value();
  if (alpha.degree() == 1 && beta.degree() == 1) {
    const mpq_class& p = alpha.exact()->a();
    const mpq_class& q = beta.exact()->a();
    auto rel = rational_relation(p, q);
    if (!rel || rel->second <= 0)
      return Independent{"exponent vectors over a coprime base are not proportional"};
    long n = rel->first;
    long m = rel->second;
    bool neg_lhs = p < 0 && n % 2 != 0;
    bool neg_rhs = q < 0 && m % 2 != 0;
    if (neg_lhs != neg_rhs) {
      n *= 2;
      m *= 2;
    }
    return Dependent{n, m};
  }

  const mpq_class na = abs(field_norm(alpha));
  const mpq_class nb = abs(field_norm(beta));
  const bool unit_a = na == 1;
  const bool unit_b = nb == 1;
  if (unit_a != unit_b)
    return Independent{"norm obstruction: exactly one of |N(alpha)|, |N(beta)| equals 1"};

  if (!unit_a) {
    auto rel = rational_relation(na, nb);
    if (!rel || rel->second <= 0)
      return Independent{"norm obstruction: |N(alpha)| and |N(beta)| multiplicatively independent"};
    if (!both_exact) return UnknownRelation{"dependent norms in degree > 2"};
    // alpha^n = beta^m forces (n (D/d_a), m (D/d_b)) proportional to the norm relation.
    const long D = compositum_degree(alpha, beta);
    long n0 = rel->first * (D / beta.degree());
    long m0 = rel->second * (D / alpha.degree());
    long g = std::gcd(n0, m0);
    n0 /= g;
    m0 /= g;
    if (n0 * 12 > 100000 || m0 * 12 > 100000)
      return UnknownRelation{"candidate exponents too large"};
    for (long j : {1, 2, 3, 4, 5, 6, 8, 10, 12}) {
      QuadraticNumber lhs = alpha.exact()->pow(static_cast<unsigned long>(j * n0));
      QuadraticNumber rhs = beta.exact()->pow(static_cast<unsigned long>(j * m0));
      if (exact_equal(lhs, rhs)) return Dependent{j * n0, j * m0};
    }
    return Independent{"norm relation fixes the exponent ratio " + std::to_string(n0) + ":" +
                       std::to_string(m0) + " and no root-of-unity quotient occurs"};
  }

  // both units
  if (!both_exact) return UnknownRelation{"units of degree > 2"};
  if (alpha.exact()->field() != beta.exact()->field())
    return Independent{"units of different quadratic fields"};
  const double la = alpha.abs_log(256).mid_double();
  const double lb = beta.abs_log(256).mid_double();
  // convergents p/q of log|beta| / log|alpha| = n/m
  double x = lb / la;
  long p0 = 1, q0 = 0, p1 = static_cast<long>(std::floor(x)), q1 = 1;
  double frac = x - std::floor(x);
  for (int step = 0; step < 40 && q1 <= 1000; ++step) {
    for (long j : {1, 2}) {
      if (p1 <= 0) continue;
      QuadraticNumber lhs = alpha.exact()->pow(static_cast<unsigned long>(j * p1));
      QuadraticNumber rhs = beta.exact()->pow(static_cast<unsigned long>(j * q1));
      if (exact_equal(lhs, rhs)) return Dependent{j * p1, j * q1};
    }
    if (frac < 1e-12) break;
    x = 1.0 / frac;
    long a = static_cast<long>(std::floor(x));
    frac = x - a;
    long p2 = a * p1 + p0;
    long q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return UnknownRelation{"no relation found among units with exponent <= 1000"};
}

}  // namespace recdiff
