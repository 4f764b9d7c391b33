#include "recdiff/heights.hpp"

#include <cmath>
#include <limits>

#include "recdiff/error.hpp"
#include "recdiff/precision.hpp"
#include "recdiff/spectral.hpp"

namespace recdiff {

double rational_quotient_height(const mpq_class& p, const mpq_class& q) {
  if (q == 0) throw Error(ErrorKind::DivisionByZero, "height of p/q with q = 0");
  mpq_class r = p / q;
  r.canonicalize();
  return rational_log_height(r, 128).mid_double();
}

double exact_height(const QuadraticNumber& value) {
  return with_refinement([&](mpfr_prec_t prec) { return value.log_height(prec); }, "exact height")
      .mid_double();
}

namespace {

QuadraticNumber eval_poly(const std::vector<QuadraticNumber>& p, long x) {
  QuadraticNumber acc;
  for (std::size_t j = p.size(); j-- > 0;) acc = acc * QuadraticNumber(x) + p[j];
  return acc;
}

}  // namespace

HeightProbe height_constant_probe(const AlgebraicNumber& alpha, const AlgebraicNumber& beta,
                                  long range_bound, const std::vector<QuadraticNumber>* p,
                                  const std::vector<QuadraticNumber>* q, bool assume_independent) {
  if (range_bound < 1) throw Error(ErrorKind::PreconditionViolation, "range bound must be >= 1");
  if (!alpha.exact() || !beta.exact())
    throw Error(ErrorKind::UnsupportedDegree, "compound heights need degree <= 2");
  const QuadraticNumber& a = *alpha.exact();
  const QuadraticNumber& b = *beta.exact();
  if (!a.is_rational() && !b.is_rational() && a.field() != b.field())
    throw Error(ErrorKind::UnsupportedDegree, "alpha and beta lie in different quadratic fields");

  IndependenceResult rel = multiplicative_independence(alpha, beta);
  if (std::holds_alternative<Dependent>(rel))
    throw Error(ErrorKind::PreconditionViolation, "alpha and beta are multiplicatively dependent");
  if (std::holds_alternative<UnknownRelation>(rel) && !assume_independent)
    throw Error(ErrorKind::PreconditionViolation,
                "independence not certified: " + std::get<UnknownRelation>(rel).reason);

  HeightProbe out;
  out.c0_emp = std::numeric_limits<double>::infinity();
  std::vector<QuadraticNumber> apow{QuadraticNumber(1)};
  std::vector<QuadraticNumber> bpow{QuadraticNumber(1)};
  for (long i = 1; i <= range_bound; ++i) {
    apow.push_back(apow.back() * a);
    bpow.push_back(bpow.back() * b);
  }
  for (long n = 1; n <= range_bound; ++n) {
    for (long m = 1; m <= range_bound; ++m) {
      double h = exact_height(apow[n] / bpow[m]);
      double ratio = h / static_cast<double>(std::max(n, m));
      out.samples.push_back({n, m, h, ratio});
      if (ratio < out.c0_emp) {
        out.c0_emp = ratio;
        out.c0_n = n;
        out.c0_m = m;
      }
    }
  }

  if (p == nullptr || q == nullptr) {
    out.c_emp_note = "no coefficient polynomials supplied";
    return out;
  }
  try {
    double best = 0;
    for (long n = 2; n <= range_bound; ++n) {
      QuadraticNumber pn = eval_poly(*p, n);
      for (long m = 2; m <= range_bound; ++m) {
        QuadraticNumber qm = eval_poly(*q, m);
        if (qm.is_zero()) continue;
        double h = exact_height(pn / qm);
        double ratio = h / std::log(static_cast<double>(std::max(n, m)));
        out.poly_samples.push_back({n, m, h, ratio});
        best = std::max(best, ratio);
      }
    }
    if (!out.poly_samples.empty()) out.c_emp = best;
    else out.c_emp_note = "range too small for n, m >= 2";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedDegree) throw;
    out.c_emp_note = "coefficient quotients leave degree 2; not computed";
    out.poly_samples.clear();
  }
  return out;
}

}  // namespace recdiff
