#include "recdiff/recurrence.hpp"

#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "recdiff/error.hpp"

namespace recdiff {

struct LinearRecurrence::Cache {
  std::mutex mutex;
  std::vector<mpz_class> terms;
};

LinearRecurrence::LinearRecurrence(std::string name, std::vector<mpz_class> coefficients,
                                   std::vector<mpz_class> initial_terms)
    : name_(std::move(name)),
      coefficients_(std::move(coefficients)),
      initial_(std::move(initial_terms)),
      cache_(std::make_shared<Cache>()) {
  if (coefficients_.empty()) throw Error(ErrorKind::InvalidRecurrence, "order must be at least 1");
  if (coefficients_.size() != initial_.size())
    throw Error(ErrorKind::InvalidRecurrence, "need exactly k initial terms for k coefficients");
  if (coefficients_.back() == 0) throw Error(ErrorKind::InvalidRecurrence, "c_k must be nonzero");
  cache_->terms = initial_;
}

IntPoly LinearRecurrence::characteristic_polynomial() const {
  const std::size_t k = coefficients_.size();
  IntPoly f(k + 1);
  f[k] = 1;
  for (std::size_t i = 1; i <= k; ++i) f[k - i] = -coefficients_[i - 1];
  return f;
}

mpz_class LinearRecurrence::term(unsigned long n) const {
  const std::size_t k = coefficients_.size();
  std::vector<mpz_class> window;
  unsigned long next = 0;
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto& t = cache_->terms;
    if (n < t.size()) return t[n];
    const unsigned long stop = std::min<unsigned long>(n, kCacheLimit);
    while (t.size() <= stop) {
      mpz_class v = 0;
      const std::size_t m = t.size();
      for (std::size_t i = 1; i <= k; ++i) v += coefficients_[i - 1] * t[m - i];
      t.push_back(std::move(v));
    }
    if (n < t.size()) return t[n];
    window.assign(t.end() - static_cast<long>(k), t.end());
    next = t.size();
  }
  // Past the cache: roll a window of the last k terms.
  for (; next <= n; ++next) {
    mpz_class v = 0;
    for (std::size_t i = 1; i <= k; ++i) v += coefficients_[i - 1] * window[k - i];
    window.erase(window.begin());
    window.push_back(std::move(v));
  }
  return window.back();
}

std::vector<std::pair<unsigned long, mpz_class>> LinearRecurrence::terms_up_to_index(
    unsigned long n_max) const {
  std::vector<std::pair<unsigned long, mpz_class>> out;
  std::vector<mpz_class> v = values(n_max);
  out.reserve(v.size());
  for (unsigned long i = 0; i <= n_max; ++i) out.emplace_back(i, std::move(v[i]));
  return out;
}

std::vector<mpz_class> LinearRecurrence::values(unsigned long n_max) const {
  std::vector<mpz_class> out;
  out.reserve(n_max + 1);
  if (n_max <= kCacheLimit) {
    term(n_max);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    out.assign(cache_->terms.begin(), cache_->terms.begin() + static_cast<long>(n_max + 1));
    return out;
  }
  const std::size_t k = coefficients_.size();
  for (unsigned long i = 0; i <= n_max; ++i) {
    if (i < k) {
      out.push_back(initial_[i]);
      continue;
    }
    mpz_class v = 0;
    for (std::size_t j = 1; j <= k; ++j) v += coefficients_[j - 1] * out[i - j];
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

using nlohmann::json;

mpz_class parse_integer(const json& value, const char* field) {
  if (value.is_number_integer()) return mpz_class(value.dump());
  if (value.is_string()) {
    mpz_class z;
    std::string s = value.get<std::string>();
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (s.empty() || z.set_str(s, 10) != 0)
      throw Error(ErrorKind::MalformedConfig, std::string("not an integer in ") + field);
    return z;
  }
  throw Error(ErrorKind::MalformedConfig, std::string("not an integer in ") + field);
}

std::vector<mpz_class> parse_integer_array(const json& value, const char* field) {
  if (!value.is_array())
    throw Error(ErrorKind::MalformedConfig, std::string(field) + " must be an array");
  std::vector<mpz_class> out;
  for (const auto& v : value) out.push_back(parse_integer(v, field));
  return out;
}

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

}  // namespace

LinearRecurrence parse_sequence_config(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedConfig, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::MalformedConfig, "config must be an object");
  const std::set<std::string> expected{"name", "coefficients", "initial_terms"};
  for (const auto& [key, _] : doc.items())
    if (!expected.count(key)) throw Error(ErrorKind::MalformedConfig, "unknown field: " + key);
  for (const auto& key : expected)
    if (!doc.contains(key)) throw Error(ErrorKind::MalformedConfig, "missing field: " + key);
  if (!doc["name"].is_string()) throw Error(ErrorKind::MalformedConfig, "name must be a string");
  return LinearRecurrence(doc["name"].get<std::string>(),
                          parse_integer_array(doc["coefficients"], "coefficients"),
                          parse_integer_array(doc["initial_terms"], "initial_terms"));
}

std::string serialize_sequence_config(const LinearRecurrence& seq) {
  json doc;
  doc["name"] = seq.name();
  doc["coefficients"] = json::array();
  for (const auto& c : seq.coefficients()) doc["coefficients"].push_back(integer_to_json(c));
  doc["initial_terms"] = json::array();
  for (const auto& c : seq.initial_terms()) doc["initial_terms"].push_back(integer_to_json(c));
  return doc.dump(2) + "\n";
}

bool is_builtin_sequence(const std::string& name) {
  return name == "fib" || name == "lucas" || name == "pow2" || name == "pow3" ||
         name == "tribonacci" || name == "n2n";
}

LinearRecurrence builtin_sequence(const std::string& name) {
  if (name == "fib") return {"fib", {1, 1}, {0, 1}};
  if (name == "lucas") return {"lucas", {1, 1}, {2, 1}};
  if (name == "pow2") return {"pow2", {2}, {1}};
  if (name == "pow3") return {"pow3", {3}, {1}};
  if (name == "tribonacci") return {"tribonacci", {1, 1, 1}, {0, 0, 1}};
  if (name == "n2n") return {"n2n", {4, -4}, {0, 2}};
  throw Error(ErrorKind::InvalidInput, "unknown built-in sequence: " + name);
}

LinearRecurrence load_sequence(const std::string& name_or_path) {
  if (is_builtin_sequence(name_or_path)) return builtin_sequence(name_or_path);
  std::ifstream in(name_or_path);
  if (!in) throw Error(ErrorKind::MalformedConfig, "cannot read " + name_or_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence_config(buf.str());
}

}  // namespace recdiff
