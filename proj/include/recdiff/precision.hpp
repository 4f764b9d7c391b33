#pragma once

#include <mpfr.h>

#include <string>

#include "recdiff/error.hpp"

namespace recdiff {

inline constexpr mpfr_prec_t kDefaultPrecisionCap = 4096;
inline constexpr mpfr_prec_t kStartPrecision = 128;

/// Cap for adaptive refinement. Reads RECDIFF_PRECISION_BITS once; a value set
/// with set_precision_cap() takes priority.
mpfr_prec_t precision_cap();
void set_precision_cap(mpfr_prec_t bits);

/// Calls fn(prec) for prec = start, 2*start, ... up to the cap, retrying on
/// Undecided. Throws PrecisionExhausted with `what` once the cap is passed.
template <class Fn>
auto with_refinement(Fn&& fn, const std::string& what, mpfr_prec_t start = kStartPrecision) {
  const mpfr_prec_t cap = precision_cap();
  for (mpfr_prec_t prec = start;; prec *= 2) {
    if (prec > cap) prec = cap;
    try {
      return fn(prec);
    } catch (const Undecided& e) {
      if (prec >= cap)
        throw Error(ErrorKind::PrecisionExhausted, what + " (" + e.what() + ")");
    }
  }
}

}  // namespace recdiff
