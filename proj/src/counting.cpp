#include "recdiff/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include "recdiff/error.hpp"
#include "recdiff/precision.hpp"

namespace recdiff {

std::string to_string(CountMethod method) {
  return method == CountMethod::Fast ? "fast" : "oracle";
}

namespace {

double log_abs(const mpz_class& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  long e = 0;
  double d = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(std::fabs(d)) + static_cast<double>(e) * std::log(2.0);
}

// Smallest index k >= k0 with C |root|^k > bound for every later index too,
// padded by one step against rounding.
unsigned long growth_index(const SequenceAnalysis& s, double log_bound) {
  const auto& env = s.envelope;
  const double la = s.certificate.modulus.log().lower_double();
  double k = (log_bound - std::log(env.c_lower)) / la;
  unsigned long idx = k < 0 ? 0 : static_cast<unsigned long>(std::floor(k)) + 2;
  return std::max<unsigned long>(idx, env.n0);
}

mpz_class max_abs(const std::vector<mpz_class>& values, unsigned long upto) {
  mpz_class best = 0;
  for (unsigned long i = 0; i <= upto && i < values.size(); ++i) best = std::max(best, mpz_class(abs(values[i])));
  return best;
}

struct Indexed {
  mpz_class value;
  unsigned long index;
};

void count_distinct(CountResult& r) {
  std::vector<mpz_class> cs;
  cs.reserve(r.pairs.size());
  for (const auto& p : r.pairs) cs.push_back(p.c);
  std::sort(cs.begin(), cs.end());
  r.S = static_cast<unsigned long long>(std::unique(cs.begin(), cs.end()) - cs.begin());
  r.T = r.pairs.size();
}

}  // namespace

CountResult count_T_S(const SequenceAnalysis& u, const SequenceAnalysis& v, const mpz_class& x,
                      const CountOptions& options) {
  if (x < 0) throw Error(ErrorKind::PreconditionViolation, "x must be non-negative");
  for (const auto* s : {&u, &v})
    if (!s->certificate.greater_than_one)
      throw Error(ErrorKind::RootNotLargerThanOne, s->sequence.name());

  CountResult r;
  r.x = x;
  r.method = CountMethod::Fast;
  const double log_x = log_abs(x);

  // Every solution with m <= m_x has n <= n_cut.
  const unsigned long m_x = growth_index(v, log_x);
  const mpz_class bound_n = x + max_abs(v.sequence.values(m_x), m_x);
  unsigned long n_cut = growth_index(u, log_abs(bound_n));

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, 16u);

  for (;;) {
    const unsigned long window_end = std::max(2 * n_cut, n_cut + 32);
    if (window_end > options.max_index)
      throw Error(ErrorKind::CutoffUnsafe, "safety window passes the index limit " +
                                               std::to_string(options.max_index));
    const auto uvals = u.sequence.values(window_end);
    const mpz_class bound_m = x + max_abs(uvals, window_end);
    const unsigned long m_cut = growth_index(v, log_abs(bound_m));
    if (m_cut > options.max_index)
      throw Error(ErrorKind::CutoffUnsafe, "V index passes the limit " + std::to_string(options.max_index));
    const auto vvals = v.sequence.values(m_cut);
    std::vector<Indexed> sorted;
    sorted.reserve(m_cut + 1);
    for (unsigned long m = 0; m <= m_cut; ++m) sorted.push_back({vvals[m], m});
    std::sort(sorted.begin(), sorted.end(), [](const Indexed& a, const Indexed& b) {
      return a.value < b.value || (a.value == b.value && a.index < b.index);
    });
    auto by_value = [](const Indexed& e, const mpz_class& val) { return e.value < val; };

    // Solutions for n in [lo, hi), plus the smallest distance seen.
    struct Chunk {
      std::vector<IndexPair> pairs;
      std::optional<mpz_class> gap;
    };
    auto scan = [&](unsigned long lo, unsigned long hi, Chunk& out) {
      for (unsigned long n = lo; n < hi; ++n) {
        const mpz_class& un = uvals[n];
        auto it = std::lower_bound(sorted.begin(), sorted.end(), mpz_class(un - x), by_value);
        std::vector<IndexPair> found;
        for (; it != sorted.end() && it->value <= un + x; ++it) found.push_back({n, it->index, un - it->value});
        std::sort(found.begin(), found.end(), [](const IndexPair& a, const IndexPair& b) { return a.m < b.m; });
        for (auto& p : found) out.pairs.push_back(std::move(p));
        if (n > n_cut) {
          auto near = std::lower_bound(sorted.begin(), sorted.end(), un, by_value);
          for (auto jt : {near, near == sorted.begin() ? near : std::prev(near)}) {
            if (jt == sorted.end()) continue;
            mpz_class d = abs(un - jt->value);
            if (!out.gap || d < *out.gap) out.gap = d;
          }
        }
      }
    };

    const unsigned long total = window_end + 1;
    const unsigned long parts = std::min<unsigned long>(threads, total);
    std::vector<Chunk> chunks(parts);
    std::vector<std::thread> pool;
    for (unsigned long t = 0; t < parts; ++t) {
      unsigned long lo = total * t / parts;
      unsigned long hi = total * (t + 1) / parts;
      if (parts == 1) scan(lo, hi, chunks[t]);
      else pool.emplace_back(scan, lo, hi, std::ref(chunks[t]));
    }
    for (auto& th : pool) th.join();

    r.pairs.clear();
    std::optional<mpz_class> gap;
    bool window_hit = false;
    for (auto& ch : chunks) {
      for (auto& p : ch.pairs) {
        if (p.n > n_cut) window_hit = true;
        r.pairs.push_back(std::move(p));
      }
      if (ch.gap && (!gap || *ch.gap < *gap)) gap = ch.gap;
    }
    r.n_cut = n_cut;
    r.m_cut = m_cut;
    r.window_end = window_end;
    r.gap_margin = gap;
    if (!window_hit) break;
    if (!options.expand_on_hit || r.expansions >= options.max_expansions)
      throw Error(ErrorKind::CutoffUnsafe,
                  "solution inside the safety window beyond n = " + std::to_string(n_cut));
    ++r.expansions;
    n_cut = window_end;
  }
  count_distinct(r);
  return r;
}

CountResult brute_force_oracle(const LinearRecurrence& u, const LinearRecurrence& v,
                               const mpz_class& x, unsigned long n_cap, unsigned long m_cap) {
  if (x < 0) throw Error(ErrorKind::PreconditionViolation, "x must be non-negative");
  CountResult r;
  r.x = x;
  r.method = CountMethod::Oracle;
  r.n_cut = n_cap;
  r.m_cut = m_cap;
  r.window_end = n_cap;
  const auto uvals = u.values(n_cap);
  const auto vvals = v.values(m_cap);
  for (unsigned long n = 0; n <= n_cap; ++n) {
    for (unsigned long m = 0; m <= m_cap; ++m) {
      mpz_class c = uvals[n] - vvals[m];
      if (abs(c) <= x) r.pairs.push_back({n, m, c});
    }
  }
  count_distinct(r);
  return r;
}

CollisionReport collisions_from(const CountResult& count) {
  std::map<mpz_class, std::vector<std::pair<unsigned long, unsigned long>>> groups;
  for (const auto& p : count.pairs) groups[p.c].emplace_back(p.n, p.m);
  CollisionReport out;
  for (auto& [c, reps] : groups) {
    if (reps.size() < 2) continue;
    CollisionRecord rec;
    rec.c = c;
    rec.representations = reps;
    unsigned long min_n = reps.front().first;
    unsigned long min_m = reps.front().second;
    for (const auto& [n, m] : reps) {
      rec.max_n = std::max(rec.max_n, n);
      rec.max_m = std::max(rec.max_m, m);
      min_n = std::min(min_n, n);
      min_m = std::min(min_m, m);
    }
    out.N_emp = std::max(out.N_emp, min_n);
    out.M_emp = std::max(out.M_emp, min_m);
    out.surplus += reps.size() - 1;
    out.records.push_back(std::move(rec));
  }
  return out;
}

CollisionReport find_collisions(const SequenceAnalysis& u, const SequenceAnalysis& v,
                                const mpz_class& x, const CountOptions& options) {
  return collisions_from(count_T_S(u, v, x, options));
}

RealBase RealBase::parse(const std::string& text) {
  RealBase b;
  b.text = text;
  if (text == "pi" || text == "e") return b;
  mpq_class q;
  try {
    auto slash = text.find('/');
    auto dot = text.find('.');
    if (slash != std::string::npos) {
      q = mpq_class(text);
    } else if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      if (digits.empty() || text.find_first_not_of("0123456789.+-") != std::string::npos)
        throw std::invalid_argument(text);
      q = mpq_class(mpz_class(digits), mpz_class(1));
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
      q /= den;
    } else {
      q = mpq_class(mpz_class(text), mpz_class(1));
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::InvalidInput, "not a base: " + text);
  }
  q.canonicalize();
  if (q <= 1) throw Error(ErrorKind::PreconditionViolation, "base must exceed 1: " + text);
  b.rational = q;
  return b;
}

Ball RealBase::value(mpfr_prec_t prec) const {
  if (rational) return Ball::from_rational(*rational, prec);
  if (text == "pi") return Ball::pi(prec);
  return Ball::euler(prec);
}

RealCountResult count_real_power_pairs(const RealBase& alpha, const RealBase& beta,
                                       const mpq_class& x, mpfr_prec_t precision) {
  if (x <= 0) throw Error(ErrorKind::PreconditionViolation, "x must be positive");
  if (alpha.rational && beta.rational) {
    auto rel = multiplicative_independence(AlgebraicNumber::from_rational(*alpha.rational),
                                           AlgebraicNumber::from_rational(*beta.rational));
    if (std::holds_alternative<Dependent>(rel))
      throw Error(ErrorKind::PreconditionViolation, "bases are multiplicatively dependent");
  } else if (!alpha.rational && !beta.rational && alpha.text == beta.text) {
    throw Error(ErrorKind::PreconditionViolation, "bases are multiplicatively dependent");
  }

  RealCountResult r;
  r.max_precision_used = precision;
  const double la = std::log(alpha.value(64).mid_double());
  const double lb = std::log(beta.value(64).mid_double());
  const double lx = std::log(mpq_class(x).get_d());
  auto index_above = [](double log_bound, double log_base) {
    double k = log_bound / log_base;
    return k < 0 ? 0UL : static_cast<unsigned long>(std::floor(k)) + 2;
  };
  // with_refinement-style decision of |alpha^n - beta^m| <= x
  auto within = [&](unsigned long n, unsigned long m) {
    const bool exact_a = alpha.rational || n == 0;
    const bool exact_b = beta.rational || m == 0;
    if (exact_a && exact_b) {
      mpq_class a = 1, b = 1;
      for (unsigned long i = 0; i < n; ++i) a *= *alpha.rational;
      for (unsigned long i = 0; i < m; ++i) b *= *beta.rational;
      return abs(a - b) <= x;
    }
    const mpfr_prec_t cap = std::max(precision_cap(), precision);
    for (mpfr_prec_t prec = precision;; prec = std::min(cap, 2 * prec)) {
      Ball d = (alpha.value(prec).pow(n) - beta.value(prec).pow(m)).abs() -
               Ball::from_rational(x, prec);
      r.max_precision_used = std::max(r.max_precision_used, prec);
      if (d.is_negative()) return true;
      if (d.is_positive()) return false;
      if (prec >= cap)
        throw Error(ErrorKind::PrecisionExhausted,
                    "|" + alpha.text + "^" + std::to_string(n) + " - " + beta.text + "^" +
                        std::to_string(m) + "| against x undecided at the cap");
    }
  };

  const unsigned long m_x = index_above(lx, lb);
  unsigned long n_cut = index_above(std::log(std::exp(lx) + std::exp(m_x * lb)), la);
  for (unsigned expansions = 0;; ++expansions) {
    const unsigned long window_end = std::max(2 * n_cut, n_cut + 32);
    const unsigned long m_cut = index_above(std::log(std::exp(lx) + std::exp(window_end * la)), lb);
    if (!std::isfinite(window_end * la) || m_cut > 100000)
      throw Error(ErrorKind::CutoffUnsafe, "real-base enumeration range too large");
    r.pairs.clear();
    bool hit = false;
    for (unsigned long n = 0; n <= window_end; ++n)
      for (unsigned long m = 0; m <= m_cut; ++m)
        if (within(n, m)) {
          r.pairs.emplace_back(n, m);
          if (n > n_cut) hit = true;
        }
    r.n_cut = n_cut;
    r.m_cut = m_cut;
    r.window_end = window_end;
    if (!hit) break;
    if (expansions >= 8) throw Error(ErrorKind::CutoffUnsafe, "safety window keeps finding solutions");
    n_cut = window_end;
  }
  r.T = r.pairs.size();
  return r;
}

}  // namespace recdiff
