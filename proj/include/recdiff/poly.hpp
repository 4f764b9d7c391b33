#pragma once

// Dense univariate polynomials over Z and Q, coefficients stored in ascending
// order of degree, plus certified complex root isolation.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recdiff/ball.hpp"

namespace recdiff {

using IntPoly = std::vector<mpz_class>;
using RatPoly = std::vector<mpq_class>;

int degree(const IntPoly& p);
int degree(const RatPoly& p);
void trim(IntPoly& p);
void trim(RatPoly& p);

RatPoly to_rational(const IntPoly& p);
/// Clears denominators, divides by the content, makes the leading coefficient positive.
IntPoly primitive_part(const RatPoly& p);
IntPoly primitive_part(const IntPoly& p);

RatPoly derivative(const RatPoly& p);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/// Monic gcd over Q.
RatPoly gcd(RatPoly a, RatPoly b);
/// Exact quotient over Z when `divisor` divides `p`, otherwise nullopt.
std::optional<IntPoly> exact_quotient(const IntPoly& p, const IntPoly& divisor);
IntPoly pow(const IntPoly& p, int exponent);
/// p(-X)
IntPoly reflect(const IntPoly& p);

/// Yun's square-free decomposition: f = lc * prod g_i^i with the g_i
/// square-free, pairwise coprime and primitive. Only non-constant factors are
/// returned.
std::vector<std::pair<IntPoly, int>> square_free_decomposition(const IntPoly& f);

mpz_class evaluate(const IntPoly& p, const mpz_class& x);
mpq_class evaluate(const IntPoly& p, const mpq_class& x);
Ball evaluate(const IntPoly& p, const Ball& x);
ComplexBall evaluate(const IntPoly& p, const ComplexBall& x);

/// Certified isolation of every complex root of a square-free integer
/// polynomial. Each returned box contains exactly one root and the boxes are
/// pairwise disjoint. Roots certified real get an exactly-zero imaginary part.
/// Throws Undecided when the working precision is too small.
std::vector<ComplexBall> isolate_roots(const IntPoly& squarefree, mpfr_prec_t prec);

/// All rational roots of p (any degree, p need not be square-free).
std::vector<mpq_class> rational_roots(const IntPoly& p);

/// Positive divisors by trial division; throws UnsupportedDegree above 10^14.
std::vector<mpz_class> positive_divisors(const mpz_class& n);

/// Writes D = s^2 * core with core square-free; returns {core, s}. Sign is
/// carried by core.
std::pair<mpz_class, mpz_class> square_free_core(const mpz_class& value);

std::string to_string(const IntPoly& p, char var = 'X');

}  // namespace recdiff
