#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "recdiff/algebraic.hpp"
#include "recdiff/quadratic.hpp"

namespace recdiff {

/// h(p/q) = log max(|r|, |s|) for p/q = r/s in lowest terms.
double rational_quotient_height(const mpq_class& p, const mpq_class& q);

struct HeightSample {
  long n = 0;
  long m = 0;
  double height = 0;
  double ratio = 0;
};

struct HeightProbe {
  double c0_emp = 0;  // min h(alpha^n / beta^m) / max(n, m)
  long c0_n = 0;
  long c0_m = 0;
  std::optional<double> c_emp;  // max h(p(n) / q(m)) / log max(n, m)
  std::string c_emp_note;
  std::vector<HeightSample> samples;       // alpha^n / beta^m grid
  std::vector<HeightSample> poly_samples;  // p(n) / q(m) grid
};

/// Empirical witnesses for the two height inequalities. `p` and `q` are
/// optional coefficient polynomials (ascending) with entries in Q or one real
/// quadratic field. Dependent pairs are rejected; pairs whose relation is
/// unknown are accepted only with `assume_independent`.
HeightProbe height_constant_probe(const AlgebraicNumber& alpha, const AlgebraicNumber& beta,
                                  long range_bound,
                                  const std::vector<QuadraticNumber>* p = nullptr,
                                  const std::vector<QuadraticNumber>* q = nullptr,
                                  bool assume_independent = false);

/// Exact height of a value in Q or a quadratic field, nearest double.
double exact_height(const QuadraticNumber& value);

}  // namespace recdiff
