#include "recdiff/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "recdiff/error.hpp"
#include "recdiff/precision.hpp"

namespace recdiff {

double main_term(double log_alpha, double log_beta, double x) {
  if (!(x >= 1)) throw Error(ErrorKind::PreconditionViolation, "main term needs x >= 1");
  if (!(log_alpha > 0) || !(log_beta > 0))
    throw Error(ErrorKind::PreconditionViolation, "main term needs |alpha|, |beta| > 1");
  const double l = std::log(x);
  return l * l / (log_alpha * log_beta);
}

double main_term(const SequenceAnalysis& u, const SequenceAnalysis& v, double x) {
  return main_term(u.log_modulus(), v.log_modulus(), x);
}

namespace {

double log_of(const mpz_class& x) {
  long e = 0;
  double d = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(d) + static_cast<double>(e) * std::log(2.0);
}

struct Side {
  double la = 0;
  double k = 0;
  double c = 0;
  double d = 0;
  double threshold = 0;  // on z
};

Side grid_side(const SequenceAnalysis& s) {
  Side out;
  out.la = s.log_modulus();
  out.k = 1 / out.la;
  out.c = s.envelope.sigma / out.la + 1;
  out.d = (std::log(s.envelope.c_upper) + std::log(2.0)) / out.la;
  out.threshold = std::max(std::pow(out.k, out.c - 1) * std::exp(out.d), 1.0);
  return out;
}

GridResult grid_core(const SequenceAnalysis& u, const SequenceAnalysis& v, double z,
                     const mpz_class& floor_x) {
  GridResult g;
  g.z = z;
  const Side su = grid_side(u);
  const Side sv = grid_side(v);
  g.threshold_n = su.threshold;
  g.threshold_m = sv.threshold;
  if (!(z >= su.threshold) || !(z >= sv.threshold))
    throw Error(ErrorKind::InvalidBelowThreshold,
                "log x = " + std::to_string(z) + " below the grid threshold " +
                    std::to_string(std::max(su.threshold, sv.threshold)));
  g.n_max = su.k * z - su.c * std::log(z);
  g.m_max = sv.k * z - sv.c * std::log(z);
  if (g.n_max < 0 || g.m_max < 0)
    throw Error(ErrorKind::InvalidBelowThreshold, "grid is empty at log x = " + std::to_string(z));
  const auto nn = static_cast<unsigned long>(std::floor(g.n_max));
  const auto mm = static_cast<unsigned long>(std::floor(g.m_max));
  g.count = static_cast<unsigned long long>(nn + 1) * (mm + 1);

  const auto uvals = u.sequence.values(nn);
  const auto vvals = v.sequence.values(mm);
  mpz_class umax = 0, vmax = 0;
  for (const auto& a : uvals) umax = std::max(umax, mpz_class(abs(a)));
  for (const auto& b : vvals) vmax = std::max(vmax, mpz_class(abs(b)));
  if (umax + vmax <= floor_x) return g;
  if (g.count > 1000000) {
    g.verified = false;
    return g;
  }
  for (const auto& a : uvals)
    for (const auto& b : vvals)
      if (abs(a - b) > floor_x) ++g.failures;
  g.verified = g.failures == 0;
  return g;
}

}  // namespace

GridResult lower_bound_grid(const SequenceAnalysis& u, const SequenceAnalysis& v,
                            const mpz_class& x) {
  if (x < 1) throw Error(ErrorKind::InvalidBelowThreshold, "x below 1");
  return grid_core(u, v, log_of(x), x);
}

GridResult lower_bound_grid_log(const SequenceAnalysis& u, const SequenceAnalysis& v, double z) {
  if (!std::isfinite(z) || z > 1e6) throw Error(ErrorKind::PreconditionViolation, "log x out of range");
  mpz_class floor_x = with_refinement(
      [&](mpfr_prec_t prec) {
        Ball e = Ball::from_double(z, prec).exp();
        mpz_class lo, hi;
        mpfr_get_z(lo.get_mpz_t(), e.lower().get(), MPFR_RNDD);
        mpfr_get_z(hi.get_mpz_t(), e.upper().get(), MPFR_RNDD);
        if (lo != hi) throw Undecided("floor(e^z) not determined");
        return lo;
      },
      "floor of e^z", 64 + static_cast<mpfr_prec_t>(z * 1.5));
  return grid_core(u, v, z, floor_x);
}

AsymptoticReport ratio_table(const SequenceAnalysis& u, const SequenceAnalysis& v,
                             const std::vector<mpz_class>& x_grid, bool oracle,
                             const CountOptions& options) {
  AsymptoticReport rep;
  rep.u_name = u.sequence.name();
  rep.v_name = v.sequence.name();
  rep.log_alpha = u.log_modulus();
  rep.log_beta = v.log_modulus();
  rep.oracle = oracle;
  std::vector<mpz_class> xs = x_grid;
  std::sort(xs.begin(), xs.end());
  double s11 = 0, s1y = 0, s22 = 0, s2y = 0;
  for (const auto& x : xs) {
    CountResult c = count_T_S(u, v, x, options);
    if (oracle) c = brute_force_oracle(u.sequence, v.sequence, x, 3 * c.n_cut, 3 * c.m_cut);
    ReportRow row;
    row.x = x;
    row.T = c.T;
    row.S = c.S;
    row.excess = c.T - c.S;
    row.n_cut = c.n_cut;
    row.m_cut = c.m_cut;
    const double xd = x.get_d();
    row.main = xd >= 1 ? main_term(rep.log_alpha, rep.log_beta, xd) : 0;
    if (row.main > 0) {
      row.T_ratio = static_cast<double>(row.T) / row.main;
      row.S_ratio = static_cast<double>(row.S) / row.main;
    }
    try {
      GridResult g = lower_bound_grid(u, v, x);
      if (g.verified) row.grid = g.count;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvalidBelowThreshold) throw;
    }
    if (xd > std::exp(1.0)) {
      const double l = std::log(xd);
      const double ll = std::log(l);
      const double y = std::fabs(static_cast<double>(row.T) - row.main);
      const double f1 = l * ll;
      const double f2 = l * ll * ll;
      s11 += f1 * f1;
      s1y += f1 * y;
      s22 += f2 * f2;
      s2y += f2 * y;
    }
    if (xd > 1) {
      double k = static_cast<double>(row.excess) / std::log(xd);
      rep.K_excess = std::max(rep.K_excess.value_or(0.0), k);
    }
    rep.rows.push_back(std::move(row));
  }
  if (s11 > 0) rep.K1 = s1y / s11;
  if (s22 > 0) rep.K2 = s2y / s22;
  return rep;
}

std::string to_string(AuxLemma lemma) {
  return lemma == AuxLemma::ForLowerBound ? "forLowerBound" : "mlogm";
}

double mlogm_start(double k, double c) {
  if (!(k > 0) || !(c > 0)) throw Error(ErrorKind::InvalidParameters, "mlogm needs k, c > 0");
  const double start = std::max(std::exp(std::sqrt(2.0 / c)), std::exp(4.0));
  auto ok = [&](double n) { return k * k * c * c * std::pow(std::log(n), 4) <= n; };
  if (ok(start)) return std::ceil(start);
  double lo = start, hi = 2 * start;
  while (!ok(hi)) {
    lo = hi;
    hi *= 2;
    if (!std::isfinite(hi)) throw Error(ErrorKind::InvalidParameters, "mlogm threshold overflows");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    double mid = 0.5 * (lo + hi);
    (ok(mid) ? hi : lo) = mid;
  }
  return std::ceil(hi);
}

namespace {

double for_lower_bound_zmin(const AuxParams& p) {
  return std::max(std::pow(p.k, p.c - 1) * std::exp(p.d), 1.0);
}

void check_params(AuxLemma lemma, const AuxParams& p) {
  if (!(p.k > 0) || !std::isfinite(p.k)) throw Error(ErrorKind::InvalidParameters, "k must be > 0");
  if (lemma == AuxLemma::ForLowerBound) {
    if (!(p.c > 1) || !std::isfinite(p.c)) throw Error(ErrorKind::InvalidParameters, "c must be > 1");
    if (!std::isfinite(p.d)) throw Error(ErrorKind::InvalidParameters, "d must be finite");
  } else if (!(p.c > 0) || !std::isfinite(p.c)) {
    throw Error(ErrorKind::InvalidParameters, "c must be > 0");
  }
}

}  // namespace

AuxInstance auxiliary_inequality_instance(AuxLemma lemma, const AuxParams& p, double n, double z) {
  check_params(lemma, p);
  AuxInstance in{p, n, z, 0, 0};
  if (lemma == AuxLemma::ForLowerBound) {
    if (!(z >= for_lower_bound_zmin(p)))
      throw Error(ErrorKind::InvalidParameters, "z below max(k^(c-1) e^d, 1)");
    if (!(n > 0) || !(n <= p.k * z - p.c * std::log(z)))
      throw Error(ErrorKind::InvalidParameters, "hypothesis 0 < n <= k z - c log z fails");
    in.lhs = n + (p.c - 1) * std::log(n) + p.d;
    in.rhs = p.k * z;
  } else {
    if (!(n >= mlogm_start(p.k, p.c)))
      throw Error(ErrorKind::InvalidParameters, "n below the mlogm threshold");
    if (!(z >= 2 / p.k)) throw Error(ErrorKind::InvalidParameters, "z below 2/k");
    const double ln = std::log(n);
    if (!(n <= p.k * z + p.c * ln * ln))
      throw Error(ErrorKind::InvalidParameters, "hypothesis n <= k z + c (log n)^2 fails");
    const double lz = std::log(z);
    in.lhs = n;
    in.rhs = p.k * z + 4 * p.c * lz * lz;
  }
  return in;
}

AuxCheckResult auxiliary_inequality_check(AuxLemma lemma, const std::optional<AuxParams>& params,
                                          unsigned long trials, std::uint64_t seed) {
  if (params) check_params(lemma, *params);
  AuxCheckResult out;
  out.lemma = lemma;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto log_uniform = [&](double lo, double hi) { return lo * std::pow(hi / lo, unit(rng)); };

  while (out.trials < trials) {
    AuxParams p;
    if (params) {
      p = *params;
    } else {
      p.k = log_uniform(0.1, 10);
      p.c = lemma == AuxLemma::ForLowerBound ? 1 + log_uniform(1e-3, 9) : log_uniform(0.1, 10);
      p.d = lemma == AuxLemma::ForLowerBound ? -5 + 10 * unit(rng) : 0;
    }
    double n = 0, z = 0;
    if (lemma == AuxLemma::ForLowerBound) {
      const double zmin = for_lower_bound_zmin(p);
      z = zmin * std::exp(6 * unit(rng));
      const double top = p.k * z - p.c * std::log(z);
      if (!(top > 0)) {
        ++out.resamples;
        continue;
      }
      n = top * (1 - unit(rng));  // (0, top]
    } else {
      const double n0 = mlogm_start(p.k, p.c);
      n = std::ceil(log_uniform(n0, 100 * n0));
      const double ln = std::log(n);
      const double zmin = std::max(2 / p.k, (n - p.c * ln * ln) / p.k);
      z = zmin * (1 + (unit(rng) < 0.25 ? 0.0 : unit(rng)));
    }
    AuxInstance in;
    try {
      in = auxiliary_inequality_instance(lemma, p, n, z);
    } catch (const Error&) {
      ++out.resamples;  // rounding at the boundary of the hypothesis
      continue;
    }
    ++out.trials;
    if (!(in.lhs <= in.rhs)) {
      out.passed = false;
      out.counterexample = in;
      break;
    }
  }
  return out;
}

}  // namespace recdiff
