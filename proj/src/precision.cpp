#include "recdiff/precision.hpp"

#include <atomic>
#include <cstdlib>

namespace recdiff {

namespace {

std::atomic<long> g_override{0};

mpfr_prec_t from_environment() {
  const char* env = std::getenv("RECDIFF_PRECISION_BITS");
  if (env == nullptr) return kDefaultPrecisionCap;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 64 || v > (1L << 24)) return kDefaultPrecisionCap;
  return static_cast<mpfr_prec_t>(v);
}

}  // namespace

mpfr_prec_t precision_cap() {
  long o = g_override.load();
  if (o > 0) return static_cast<mpfr_prec_t>(o);
  static const mpfr_prec_t env = from_environment();
  return env;
}

void set_precision_cap(mpfr_prec_t bits) { g_override.store(static_cast<long>(bits)); }

}  // namespace recdiff
