#pragma once

// Report assembly shared by the command-line tool and the tests. Reports are
// JSON objects (keys sorted); reals carry 12 significant digits and integers
// outside int64 are written as decimal strings.

#include <gmpxx.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "recdiff/asymptotics.hpp"
#include "recdiff/counting.hpp"
#include "recdiff/heights.hpp"
#include "recdiff/matveev.hpp"
#include "recdiff/spectral.hpp"

namespace recdiff {

using Json = nlohmann::json;

std::string format_real(double value);  // %.12g
Json json_real(double value);
Json json_integer(const mpz_class& value);

/// "1000", "1e6", "2.5e3" (must be integral) -> non-negative integer.
mpz_class parse_integer_literal(const std::string& text);
/// "10", "2.5", "3/2", "1e-3" -> rational.
mpq_class parse_rational_literal(const std::string& text);
std::vector<std::string> split_list(const std::string& text, char sep = ',');

Json analysis_report(const SequenceAnalysis& analysis, unsigned long verify_cap = kEnvelopeCap);
Json count_report(const CountResult& count, const CollisionReport* collisions = nullptr);
Json collision_report(const CollisionReport& report);
Json scan_report(const AsymptoticReport& report);
std::string scan_csv(const AsymptoticReport& report);
Json sweep_report(const MatveevSweep& sweep);
Json bounds_report(const EffectiveBounds& bounds, const std::vector<double>& sample_c = {});
std::string bounds_csv(const EffectiveBounds& bounds);
Json independence_report(const AlgebraicNumber& alpha, const AlgebraicNumber& beta,
                         const IndependenceResult& result);
Json heights_report(const HeightProbe& probe);
std::string heights_csv(const HeightProbe& probe);
Json real_count_report(const RealCountResult& result, const RealBase& alpha, const RealBase& beta,
                       const mpq_class& x);

}  // namespace recdiff
