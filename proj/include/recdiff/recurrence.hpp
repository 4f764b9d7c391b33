#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "recdiff/poly.hpp"

namespace recdiff {

/// U_{n+k} = c_1 U_{n+k-1} + ... + c_k U_n with integer data.
///
/// Immutable after construction. Terms are memoized in a shared, mutex-guarded
/// cache, so copies are cheap and concurrent term() calls are safe.
class LinearRecurrence {
 public:
  LinearRecurrence(std::string name, std::vector<mpz_class> coefficients,
                   std::vector<mpz_class> initial_terms);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(coefficients_.size()); }
  const std::vector<mpz_class>& coefficients() const { return coefficients_; }
  const std::vector<mpz_class>& initial_terms() const { return initial_; }

  /// X^k - c_1 X^{k-1} - ... - c_k, ascending coefficients.
  IntPoly characteristic_polynomial() const;

  mpz_class term(unsigned long n) const;
  std::vector<std::pair<unsigned long, mpz_class>> terms_up_to_index(unsigned long n_max) const;
  /// U_0..U_{n_max} without the index pairs.
  std::vector<mpz_class> values(unsigned long n_max) const;

  /// Terms beyond this index are recomputed rather than stored.
  static constexpr unsigned long kCacheLimit = 50000;

 private:
  struct Cache;

  std::string name_;
  std::vector<mpz_class> coefficients_;
  std::vector<mpz_class> initial_;
  std::shared_ptr<Cache> cache_;
};

/// Parses {"name": ..., "coefficients": [...], "initial_terms": [...]}.
/// Integers may be JSON numbers or decimal strings.
LinearRecurrence parse_sequence_config(const std::string& document);
std::string serialize_sequence_config(const LinearRecurrence& seq);

/// fib, lucas, pow2, pow3, tribonacci, n2n (U_n = n 2^n).
bool is_builtin_sequence(const std::string& name);
LinearRecurrence builtin_sequence(const std::string& name);
/// A built-in name or a path to a config file.
LinearRecurrence load_sequence(const std::string& name_or_path);

}  // namespace recdiff
