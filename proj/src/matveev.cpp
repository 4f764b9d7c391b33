#include "recdiff/matveev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "recdiff/asymptotics.hpp"
#include "recdiff/error.hpp"
#include "recdiff/heights.hpp"
#include "recdiff/precision.hpp"

namespace recdiff {

namespace {

constexpr mpfr_prec_t kFixedPrecision = 256;

double round_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

double height_upper(const QuadraticNumber& x) {
  return with_refinement([&](mpfr_prec_t prec) { return x.log_height(prec); }, "height")
      .upper_double();
}

// sqrt(log^2|z| + arg^2 z), rounded up.
double abs_log_upper(const ComplexBall& z) {
  Ball l = z.abs().log();
  Ball a = z.arg();
  return (l * l + a * a).sqrt().upper_double();
}

double log_abs(const mpz_class& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  long e = 0;
  double d = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(std::fabs(d)) + static_cast<double>(e) * std::log(2.0);
}

double pos(double x) { return std::max(0.0, x); }

// Dominant term a(n) alpha^n at the requested precision.
ComplexBall dominant_term(const SequenceAnalysis& s, unsigned long n, mpfr_prec_t prec) {
  const auto& cert = s.certificate;
  if (cert.exact) return (cert.exact->a_at(n) * cert.exact->alpha.pow(n)).to_complex(prec);
  if (prec <= s.binet.precision()) return s.binet.term(cert.index, n);
  BinetDecomposition b = binet_decomposition(s.sequence, characteristic_roots(s.sequence, prec), 0);
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < b.spectrum.roots.size(); ++i) {
    if (!b.spectrum.roots[i].overlaps(cert.alpha)) continue;
    if (hit) throw Undecided("dominant root not re-identified");
    hit = i;
  }
  if (!hit) throw Undecided("dominant root not re-identified");
  return b.term(*hit, n);
}

// Degree of the field generated by a set of exact values (an upper bound once
// more than one quadratic field is involved).
int field_degree(const std::vector<QuadraticNumber>& values) {
  std::set<mpz_class> fields;
  for (const auto& v : values)
    if (!v.is_rational()) fields.insert(v.field());
  return 1 << std::min<std::size_t>(fields.size(), 20);
}

std::vector<QuadraticNumber> exact_values(const SequenceAnalysis& u, const SequenceAnalysis& v) {
  std::vector<QuadraticNumber> out{u.certificate.exact->alpha, v.certificate.exact->alpha};
  for (const auto& a : u.certificate.exact->a) out.push_back(a);
  for (const auto& b : v.certificate.exact->a) out.push_back(b);
  return out;
}

bool same_field(const QuadraticNumber& x, const QuadraticNumber& y) {
  return x.is_rational() || y.is_rational() || x.field() == y.field();
}

// Upper bound for h(x / y), exact when both live in one field.
double quotient_height_upper(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (same_field(x, y)) return height_upper(x / y);
  return round_up(height_upper(x) + height_upper(y));
}

double root_height_upper(const SequenceAnalysis& s) {
  const auto& cert = s.certificate;
  if (cert.exact) return height_upper(cert.exact->alpha);
  // h(alpha) <= log M(g) for any integer g vanishing at alpha
  return with_refinement([&](mpfr_prec_t p) { return log_mahler_measure(cert.alpha_factor, p); },
                         "Mahler measure")
      .upper_double();
}

double root_abs_log_upper(const SequenceAnalysis& s) {
  return with_refinement([&](mpfr_prec_t p) { return dominant_root(s).abs_log(p); }, "log alpha")
      .upper_double();
}

// Smallest t0 >= max(1, e^(1-e)) with a t - b - c (e + log t)^p > 0 and
// increasing on [t0, inf). Every solution of the reverse inequality is < t0.
double crossing(double a, double b, double c, double e, int p) {
  auto f = [&](double t) { return a * t - b - c * std::pow(e + std::log(t), p); };
  auto fp = [&](double t) { return a - c * p * std::pow(e + std::log(t), p - 1) / t; };
  auto ok = [&](double t) { return f(t) > 0 && fp(t) > 0; };
  double lo = std::max(1.0, std::exp(1.0 - e));
  if (ok(lo)) return lo;
  double hi = 2 * lo;
  while (!ok(hi)) {
    lo = hi;
    hi *= 2;
    if (!std::isfinite(hi)) throw Error(ErrorKind::PrecisionExhausted, "crossing point overflows");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    double mid = 0.5 * (lo + hi);
    (ok(mid) ? hi : lo) = mid;
  }
  return round_up(hi);
}

}  // namespace

double matveev_lower_bound(const MatveevInput& in) {
  if (in.t < 1 || in.D < 1 || !(in.B >= 1) || in.A.size() != static_cast<std::size_t>(in.t))
    throw Error(ErrorKind::PreconditionViolation, "Matveev input needs t, D >= 1, B >= 1 and t values A_i");
  for (double a : in.A)
    if (!(a >= 0.16) || !std::isfinite(a))
      throw Error(ErrorKind::PreconditionViolation, "every A_i must be >= 0.16");
  if (!std::isfinite(in.B)) throw Error(ErrorKind::PreconditionViolation, "B must be finite");

  const mpfr_prec_t p = kFixedPrecision;
  Mpfr acc(p), tmp(p), one_plus(p);
  mpfr_ui_pow_ui(acc.get(), 30, static_cast<unsigned long>(in.t + 4), MPFR_RNDN);
  mpfr_mul_ui(acc.get(), acc.get(), 3, MPFR_RNDN);
  mpfr_set_ui(tmp.get(), static_cast<unsigned long>(in.t + 1), MPFR_RNDN);
  Mpfr e(p);
  mpfr_set_d(e.get(), 5.5, MPFR_RNDN);
  mpfr_pow(tmp.get(), tmp.get(), e.get(), MPFR_RNDN);
  mpfr_mul(acc.get(), acc.get(), tmp.get(), MPFR_RNDN);
  mpfr_set_ui(tmp.get(), static_cast<unsigned long>(in.D), MPFR_RNDN);
  mpfr_log(one_plus.get(), tmp.get(), MPFR_RNDN);
  mpfr_add_ui(one_plus.get(), one_plus.get(), 1, MPFR_RNDN);
  mpfr_mul(acc.get(), acc.get(), one_plus.get(), MPFR_RNDN);
  mpfr_sqr(tmp.get(), tmp.get(), MPFR_RNDN);
  mpfr_mul(acc.get(), acc.get(), tmp.get(), MPFR_RNDN);
  mpfr_set_d(tmp.get(), in.B, MPFR_RNDN);
  mpfr_mul_ui(tmp.get(), tmp.get(), static_cast<unsigned long>(in.t), MPFR_RNDN);
  mpfr_log(tmp.get(), tmp.get(), MPFR_RNDN);
  mpfr_add_ui(tmp.get(), tmp.get(), 1, MPFR_RNDN);
  mpfr_mul(acc.get(), acc.get(), tmp.get(), MPFR_RNDN);
  for (double a : in.A) mpfr_mul_d(acc.get(), acc.get(), a, MPFR_RNDN);
  mpfr_neg(acc.get(), acc.get(), MPFR_RNDN);
  return acc.to_double();
}

std::string to_string(LambdaStatus status) {
  switch (status) {
    case LambdaStatus::Nonzero: return "nonzero";
    case LambdaStatus::ExactZero: return "zero";
    case LambdaStatus::Undecided: return "undecided";
  }
  return "undecided";
}

LambdaValue lambda_value(const SequenceAnalysis& u, const SequenceAnalysis& v, unsigned long n,
                         unsigned long m) {
  const auto& eu = u.certificate.exact;
  const auto& ev = v.certificate.exact;
  if (eu && ev) {
    QuadraticNumber top = eu->a_at(n) * eu->alpha.pow(n);
    QuadraticNumber bottom = ev->a_at(m) * ev->alpha.pow(m);
    if (bottom.is_zero()) throw Error(ErrorKind::PreconditionViolation, "b(m) = 0");
    // Distinct fields: two irrational values cannot coincide.
    if (top == bottom) return {Ball::exact(0, kStartPrecision), LambdaStatus::ExactZero};
    if (same_field(top, bottom)) {
      QuadraticNumber lambda = top / bottom - QuadraticNumber(1);
      return with_refinement(
          [&](mpfr_prec_t prec) {
            Ball a = lambda.to_complex(prec).abs();
            if (!a.is_positive()) throw Undecided("|Lambda| not separated from 0");
            return LambdaValue{a, LambdaStatus::Nonzero};
          },
          "Lambda");
    }
    return with_refinement(
        [&](mpfr_prec_t prec) {
          Ball a = (top.to_complex(prec) / bottom.to_complex(prec) -
                    ComplexBall(Ball::exact(1, prec)))
                       .abs();
          if (!a.is_positive()) throw Undecided("|Lambda| not separated from 0");
          return LambdaValue{a, LambdaStatus::Nonzero};
        },
        "Lambda");
  }

  const mpfr_prec_t cap = precision_cap();
  for (mpfr_prec_t prec = kStartPrecision;; prec = std::min(cap, 2 * prec)) {
    try {
      ComplexBall top = dominant_term(u, n, prec);
      ComplexBall bottom = dominant_term(v, m, prec);
      if (bottom.contains_zero()) throw Undecided("b(m) beta^m not separated from 0");
      Ball a = (top / bottom - ComplexBall(Ball::exact(1, prec))).abs();
      if (a.is_positive()) return {a, LambdaStatus::Nonzero};
      if (prec >= cap) return {a, LambdaStatus::Undecided};
    } catch (const Undecided& e) {
      if (prec >= cap) throw Error(ErrorKind::PrecisionExhausted, std::string("Lambda: ") + e.what());
    }
  }
}

std::vector<std::pair<unsigned long, unsigned long>> sample_index_pairs(std::size_t count,
                                                                        unsigned long lo,
                                                                        unsigned long hi,
                                                                        std::uint64_t seed) {
  if (hi < lo) throw Error(ErrorKind::PreconditionViolation, "empty index range");
  const unsigned long width = hi - lo + 1;
  count = static_cast<std::size_t>(std::min<unsigned long long>(
      count, static_cast<unsigned long long>(width) * width));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned long> pick(lo, hi);
  std::set<std::pair<unsigned long, unsigned long>> seen;
  std::vector<std::pair<unsigned long, unsigned long>> out;
  while (out.size() < count) {
    std::pair<unsigned long, unsigned long> p{pick(rng), pick(rng)};
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

MatveevSweep matveev_sweep(const SequenceAnalysis& u, const SequenceAnalysis& v,
                           const std::vector<std::pair<unsigned long, unsigned long>>& pairs) {
  const auto& eu = u.certificate.exact;
  const auto& ev = v.certificate.exact;
  if (!eu || !ev)
    throw Error(ErrorKind::UnsupportedDegree, "A1 needs exact Binet coefficients of degree <= 2");
  MatveevSweep out;
  out.D = field_degree(exact_values(u, v));
  const double D = out.D;
  out.A2 = std::max({D * root_height_upper(u), root_abs_log_upper(u), 0.16});
  out.A3 = std::max({D * root_height_upper(v), root_abs_log_upper(v), 0.16});
  out.A1 = 0.16;
  for (const auto& [n, m] : pairs) {
    QuadraticNumber a = eu->a_at(n);
    QuadraticNumber b = ev->a_at(m);
    if (a.is_zero() || b.is_zero()) continue;
    double h = quotient_height_upper(a, b);
    double l = with_refinement(
        [&](mpfr_prec_t prec) {
          ComplexBall g = a.to_complex(prec) / b.to_complex(prec);
          return abs_log_upper(g);
        },
        "log gamma_1");
    out.A1 = std::max({out.A1, D * h, l});
  }
  for (const auto& [n, m] : pairs) {
    LambdaValue lv = lambda_value(u, v, n, m);
    if (lv.status != LambdaStatus::Nonzero) {
      ++out.skipped;
      continue;
    }
    LinearFormSample s;
    s.n = n;
    s.m = m;
    s.log_lambda_lower = lv.abs.log().lower_double();
    s.lambda = std::move(lv);
    MatveevInput in{3, out.D, static_cast<double>(std::max<unsigned long>({n, m, 1})),
                    {out.A1, out.A2, out.A3}};
    s.matveev_floor = matveev_lower_bound(in);
    s.holds = s.log_lambda_lower >= s.matveev_floor;
    if (!s.holds) ++out.violations;
    out.samples.push_back(std::move(s));
  }
  return out;
}

double BoundRecord::at(double abs_c, double c0) const {
  const double L = std::log(std::max(abs_c, c0));
  const double l = std::log(L);
  return P + Q * L + R * l * l;
}

EffectiveBounds effective_upper_bounds(const SequenceAnalysis& u, const SequenceAnalysis& v,
                                       const BoundsOptions& options) {
  EffectiveBounds out;
  auto& ledger = out.ledger;
  auto add = [&](const std::string& name, const std::string& formula, double value,
                 bool rigorous = true) {
    if (!std::isfinite(value))
      throw Error(ErrorKind::PrecisionExhausted, "constant " + name + " is not finite");
    ledger.push_back({name, formula, value, rigorous});
    if (!rigorous) out.rigorous = false;
    return value;
  };

  const AlgebraicNumber alpha = dominant_root(u);
  const AlgebraicNumber beta = dominant_root(v);
  IndependenceResult rel = multiplicative_independence(alpha, beta);
  if (std::holds_alternative<Dependent>(rel))
    throw Error(ErrorKind::PreconditionViolation, "dominant roots are multiplicatively dependent");
  if (std::holds_alternative<UnknownRelation>(rel)) {
    out.rigorous = false;
    out.notes.push_back("independence assumed: " + std::get<UnknownRelation>(rel).reason);
  }

  const auto& eu = u.envelope;
  const auto& ev = v.envelope;
  const auto& cu = u.certificate;
  const auto& cv = v.certificate;
  const double la = cu.modulus.log().lower_double();
  const double lb = cv.modulus.log().lower_double();
  const double lap = std::log(eu.alpha_prime);
  const double lbp = std::log(ev.alpha_prime);
  const double sigma = eu.sigma;
  const double tau = ev.sigma;
  const double l2 = std::log(2.0);

  const double C1 = add("C1", "lower envelope constant of U", eu.c_lower);
  const double C2 = add("C2", "upper envelope constant of U", eu.c_upper);
  const double C3 = add("C3", "lower envelope constant of V", ev.c_lower);
  const double C4 = add("C4", "upper envelope constant of V", ev.c_upper);
  const double N1 = add("N1", "max(n0, first n with |a(n)| >= a_lo, 3)",
                        std::max<double>({static_cast<double>(eu.n0),
                                          static_cast<double>(eu.a_lower_from), 3.0}));
  const double M1 = add("M1", "max(m0, first m with |b(m)| >= b_lo, 3)",
                        std::max<double>({static_cast<double>(ev.n0),
                                          static_cast<double>(ev.a_lower_from), 3.0}));

  const double Qn = round_up(1.0 / la);
  const double Qm = round_up(1.0 / lb);

  const double C5 = add("C5", "max(0, (log 2 + log+ C4 - log C1) / log|alpha|)",
                        pos((l2 + pos(std::log(C4)) - std::log(C1)) / la));
  const double C6 = add("C6", "max(0, (log 2 + log+ C2 - log C3) / log|beta|)",
                        pos((l2 + pos(std::log(C2)) - std::log(C3)) / lb));
  const double lo_coef = std::min(eu.a_lower, ev.a_lower);
  const double C7 = add("C7", "max(a', b') / min(a_lo, b_lo)",
                        round_up(std::max(eu.a_prime, ev.a_prime) / lo_coef));
  const double C8 = add("C8", "max(a', b') / min(a_lo, b_lo)", C7);
  const double C9 = add("C9", "1 / min(a_lo, b_lo)", round_up(1.0 / lo_coef));

  // field degree and the coefficient-height constant
  double D = 0;
  double Ch = 0;
  double C10 = 0;
  const double pi_term = (M_PI + 0.16) / l2;
  if (cu.exact && cv.exact) {
    D = field_degree(exact_values(u, v));
    double Kp = std::log(sigma + 1);
    for (const auto& a : cu.exact->a) Kp += height_upper(a);
    double Kq = std::log(tau + 1);
    for (const auto& b : cv.exact->a) Kq += height_upper(b);
    add("D", "degree of the field generated by alpha, beta and the Binet coefficients", D);
    Ch = add("C_h", "(K_p + K_q) / log 2 + sigma(sigma+1)/2 + tau(tau+1)/2",
             round_up((Kp + Kq) / l2 + sigma * (sigma + 1) / 2 + tau * (tau + 1) / 2));
    C10 = add("C10", "D C_h + (pi + 0.16) / log 2", round_up(D * Ch + pi_term));
  } else if (options.c10) {
    D = static_cast<double>(dominant_degree(u)) * dominant_degree(v);
    add("D", "deg(alpha) deg(beta), upper bound", D);
    C10 = add("C10", "user supplied", *options.c10, false);
    Ch = add("C_h", "C10 / D (from the supplied C10)", C10 / D, false);
    out.notes.push_back("C10 supplied by the caller; not certified");
  } else {
    throw Error(ErrorKind::UnsupportedDegree,
                "coefficient heights need exact Binet data of degree <= 2 (or a supplied C10)");
  }

  const double A2 = add("A2", "max(D h(alpha), |log alpha|, 0.16)",
                        std::max({D * root_height_upper(u), root_abs_log_upper(u), 0.16}));
  const double A3 = add("A3", "max(D h(beta), |log beta|, 0.16)",
                        std::max({D * root_height_upper(v), root_abs_log_upper(v), 0.16}));
  const double C3D = add("C(3,D)", "3 30^7 4^5.5 D^2 (1 + log D)",
                         3 * std::pow(30.0, 7) * std::pow(4.0, 5.5) * D * D * (1 + std::log(D)));
  const double C11 = add("C11", "C(3,D) C10 A2 A3 ((1 + log 3)/log 2 + 1)",
                         round_up(C3D * C10 * A2 * A3 * ((1 + std::log(3.0)) / l2 + 1)));
  const double C12 = add("C12", "C7 + C8 + C9", round_up(C7 + C8 + C9));
  const double C13 = add("C13", "max(1/log alpha', 1/log beta')", std::max(1 / lap, 1 / lbp));
  const double lc13 = std::fabs(std::log(C13)) + 1;
  const double C14 = add("C14", "log+ C12 + C11 (|log C13| + 1)^2",
                         round_up(pos(std::log(C12)) + C11 * lc13 * lc13));
  const double C15 = add("C15",
                         "max(C6 + (log|alpha| + sigma + log alpha')/log|beta|, "
                         "C5 + (log|beta| + tau + log beta')/log|alpha|, 1)",
                         std::max({C6 + (la + sigma + lap) / lb, C5 + (lb + tau + lbp) / la, 1.0}));
  const double inv_gamma =
      std::max({std::pow(eu.alpha_prime / cu.modulus.lower_double(), 1 / C15),
                std::pow(ev.alpha_prime / cv.modulus.lower_double(), 1 / C15),
                std::exp(-lb * (1 - lap / la)), std::exp(-la * (1 - lbp / lb))});
  const double gamma = add("gamma",
                           "1/max((alpha'/|alpha|)^(1/C15), (beta'/|beta|)^(1/C15), "
                           "|beta|^-(1 - log alpha'/log|alpha|), |alpha|^-(1 - log beta'/log|beta|))",
                           1 / inv_gamma);
  const double lg = std::log(gamma);
  if (!(lg > 0)) throw Error(ErrorKind::PrecisionExhausted, "gamma not separated from 1");
  const double C16 = add("C16", "C7 + C8 + C9", round_up(C7 + C8 + C9));
  const double lc15 = std::log(C15) + 1;
  const double C17 = add("C17", "(log+ C16 + C11 (log C15 + 1)^2) / log gamma",
                         round_up((pos(std::log(C16)) + C11 * lc15 * lc15) / lg));
  const double c18_a = l2 + pos(-std::log(C1)) + pos(std::log(C4)) +
                       tau * (pos(std::log(C17)) + 2) + C17 * lb;
  const double c18_b = l2 + pos(-std::log(C3)) + pos(std::log(C2)) +
                       sigma * (pos(std::log(C17)) + 2) + C17 * la;
  const double C18 = add("C18",
                         "log 2 + log+(1/C1) + log+ C4 + tau(log+ C17 + 2) + C17 log|beta|, "
                         "maximized with the roles of U and V swapped",
                         round_up(std::max(c18_a, c18_b)));

  // Case 2b: the dividing index t satisfies t log gamma <= log+ C16 + C11 (log K + log t)^2.
  const double K = std::max(la / lb, lb / la);
  const double S2b = add("S_2b", "crossing of t log gamma = log+ C16 + C11 (log K + log t)^2",
                         crossing(lg, pos(std::log(C16)), C11, std::log(std::max(K, 1.0)), 2));

  // Case 2a: mlogm with k = 1/log|alpha|, c = C18/log|alpha| (and for beta).
  const double Na = add("N_mlogm_n", "mlogm threshold for k = 1/log|alpha|, c = C18/log|alpha|",
                        mlogm_start(1 / la, C18 / la));
  const double Nb = add("N_mlogm_m", "mlogm threshold for k = 1/log|beta|, c = C18/log|beta|",
                        mlogm_start(1 / lb, C18 / lb));
  const double R2a_n = round_up(4 * C18 / la);
  const double R2a_m = round_up(4 * C18 / lb);
  const double small_n = [&] {
    double lsum = pos(std::log(Nb + Qm + R2a_m)) + 2;
    return round_up(C17 * lsum * lsum);
  }();
  const double small_m = [&] {
    double lsum = pos(std::log(Na + Qn + R2a_n)) + 2;
    return round_up(C17 * lsum * lsum);
  }();

  // Small indices: n < N1 or m < M1.
  double log_umax = 0;
  for (const auto& x : u.sequence.values(static_cast<unsigned long>(N1)))
    log_umax = std::max(log_umax, log_abs(x));
  double log_vmax = 0;
  for (const auto& x : v.sequence.values(static_cast<unsigned long>(M1)))
    log_vmax = std::max(log_vmax, log_abs(x));
  const double P_small_n = eu.n0 + pos((l2 - std::log(C1) + log_vmax) / la);
  const double P_small_m = ev.n0 + pos((l2 - std::log(C3) + log_umax) / lb);

  // Lambda = 0: C0 t <= C_h log t with an empirical C0.
  std::optional<double> c0h = options.c0_height;
  if (!c0h && cu.exact && cv.exact) {
    try {
      c0h = height_constant_probe(alpha, beta, 20, nullptr, nullptr, true).c0_emp;
    } catch (const Error&) {
    }
  }
  double N_lambda = 0;
  if (c0h && *c0h > 0) {
    add("C0", "empirical min h(alpha^n/beta^m)/max(n,m)", *c0h, false);
    N_lambda = add("N_Lambda", "crossing of C0 t = C_h log t", crossing(*c0h, 0, Ch, 0, 1), false);
  } else {
    out.rigorous = false;
    out.notes.push_back("Lambda = 0 branch not bounded: no height constant C0 available");
  }

  BoundRecord& bn = out.n_max;
  BoundRecord& bm = out.m_max;
  bn.Q = Qn;
  bm.Q = Qm;
  bn.P = std::max({N1, P_small_n, C5 + (S2b * lb + tau * std::log(S2b)) / la, Na, S2b, N_lambda});
  bm.P = std::max({M1, P_small_m, C6 + (S2b * la + sigma * std::log(S2b)) / lb, Nb, S2b, N_lambda});
  bn.R = std::max({C14 / la, R2a_n, small_n});
  bm.R = std::max({C14 / lb, R2a_m, small_m});
  bn.P = round_up(bn.P);
  bm.P = round_up(bm.P);
  bn.R = round_up(bn.R);
  bm.R = round_up(bm.R);

  const double ka = 1 / la;
  const double kb = 1 / lb;
  out.c0 = add("c0", "max(e^e, |alpha|^2, |beta|^2, e^(k + 1/k) for k = 1/log|alpha|, 1/log|beta|)",
               round_up(std::max({std::exp(std::exp(1.0)),
                                  std::pow(cu.modulus.upper_double(), 2),
                                  std::pow(cv.modulus.upper_double(), 2), std::exp(ka + 1 / ka),
                                  std::exp(kb + 1 / kb)})));
  return out;
}

}  // namespace recdiff
