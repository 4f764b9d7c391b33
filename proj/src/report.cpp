#include "recdiff/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "recdiff/error.hpp"

namespace recdiff {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Json json_real(double value) {
  if (!std::isfinite(value)) return format_real(value);
  return std::stod(format_real(value));
}

Json json_integer(const mpz_class& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

mpq_class parse_rational_literal(const std::string& text) {
  auto bad = [&] { return Error(ErrorKind::InvalidInput, "not a number: '" + text + "'"); };
  if (text.empty()) throw bad();
  try {
    if (text.find('/') != std::string::npos) {
      mpq_class q(text);
      if (q.get_den() == 0) throw bad();
      q.canonicalize();
      return q;
    }
    std::string mant = text;
    long exp10 = 0;
    auto epos = text.find_first_of("eE");
    if (epos != std::string::npos) {
      mant = text.substr(0, epos);
      std::size_t used = 0;
      exp10 = std::stol(text.substr(epos + 1), &used);
      if (used != text.size() - epos - 1 || std::labs(exp10) > 10000) throw bad();
    }
    bool neg = !mant.empty() && (mant[0] == '-' || mant[0] == '+');
    bool minus = !mant.empty() && mant[0] == '-';
    if (neg) mant = mant.substr(1);
    auto dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
      digits = mant.substr(0, dot) + mant.substr(dot + 1);
      exp10 -= static_cast<long>(mant.size() - dot - 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) throw bad();
    mpq_class q(mpz_class(digits), 1);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    if (exp10 >= 0) q *= scale;
    else q /= scale;
    q.canonicalize();
    return minus ? mpq_class(-q) : q;
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
}

mpz_class parse_integer_literal(const std::string& text) {
  mpq_class q = parse_rational_literal(text);
  if (q.get_den() != 1 || q < 0)
    throw Error(ErrorKind::InvalidInput, "expected a non-negative integer: '" + text + "'");
  return q.get_num();
}

namespace {

Json complex_json(const ComplexBall& z) {
  return Json{{"re", json_real(z.re().mid_double())}, {"im", json_real(z.im().mid_double())}};
}

Json integer_list(const std::vector<mpz_class>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(json_integer(x));
  return a;
}

}  // namespace

Json analysis_report(const SequenceAnalysis& s, unsigned long verify_cap) {
  const auto& cert = s.certificate;
  const auto& env = s.envelope;
  const auto& sp = s.binet.spectrum;
  Json roots = Json::array();
  for (std::size_t i = 0; i < sp.roots.size(); ++i) {
    Json r = complex_json(sp.roots[i]);
    r["modulus"] = json_real(sp.roots[i].abs().mid_double());
    r["multiplicity"] = sp.multiplicities[i];
    roots.push_back(r);
  }
  Json dominant{{"root", complex_json(cert.alpha)},
                {"modulus", json_real(cert.modulus.mid_double())},
                {"log_modulus", json_real(s.log_modulus())},
                {"sigma", cert.sigma},
                {"margin", json_real(cert.margin.mid_double())},
                {"degree", dominant_degree(s)}};
  if (cert.exact) {
    dominant["exact"] = cert.exact->alpha.to_string();
    dominant["minimal_polynomial"] = to_string(cert.exact->minimal_polynomial);
    Json a = Json::array();
    for (const auto& q : cert.exact->a) a.push_back(q.to_string());
    dominant["coefficient_polynomial"] = a;
  } else {
    dominant["exact"] = nullptr;
    dominant["minimal_polynomial"] = to_string(cert.alpha_factor);
  }
  Json envelope{{"C_lower", json_real(env.c_lower)},   {"C_upper", json_real(env.c_upper)},
                {"n0", env.n0},                         {"alpha_prime", json_real(env.alpha_prime)},
                {"a_prime", json_real(env.a_prime)},    {"a_lower", json_real(env.a_lower)},
                {"a_lower_from", env.a_lower_from},     {"verified_up_to", env.verified_up_to}};
  Json checks{{"binet_checked_up_to", s.binet.checked_up_to},
              {"envelope_holds", verify_envelope(s, env.c_lower, env.c_upper, env.n0, verify_cap)},
              {"remainder_holds", verify_remainder(s, verify_cap)},
              {"checked_up_to", verify_cap}};
  return Json{{"name", s.sequence.name()},
              {"order", s.sequence.order()},
              {"coefficients", integer_list(s.sequence.coefficients())},
              {"initial_terms", integer_list(s.sequence.initial_terms())},
              {"characteristic_polynomial", to_string(sp.polynomial)},
              {"roots", roots},
              {"dominant", dominant},
              {"envelope", envelope},
              {"checks", checks},
              {"precision_bits", s.binet.precision()}};
}

Json collision_report(const CollisionReport& report) {
  Json recs = Json::array();
  for (const auto& r : report.records) {
    Json reps = Json::array();
    for (const auto& [n, m] : r.representations) reps.push_back({n, m});
    recs.push_back(Json{{"c", json_integer(r.c)},
                        {"representations", reps},
                        {"max_n", r.max_n},
                        {"max_m", r.max_m}});
  }
  return Json{{"records", recs},
              {"N_emp", report.N_emp},
              {"M_emp", report.M_emp},
              {"surplus", report.surplus}};
}

Json count_report(const CountResult& c, const CollisionReport* collisions) {
  Json j{{"x", json_integer(c.x)},
         {"T", c.T},
         {"S", c.S},
         {"n_cut", c.n_cut},
         {"m_cut", c.m_cut},
         {"window_end", c.window_end},
         {"expansions", c.expansions},
         {"method", to_string(c.method)}};
  j["gap_margin"] = c.gap_margin ? json_integer(*c.gap_margin) : Json(nullptr);
  j["collisions"] = collisions ? collision_report(*collisions)["records"] : Json::array();
  return j;
}

Json scan_report(const AsymptoticReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    rows.push_back(Json{{"x", json_integer(r.x)},
                        {"T", r.T},
                        {"S", r.S},
                        {"main", json_real(r.main)},
                        {"T_ratio", json_real(r.T_ratio)},
                        {"S_ratio", json_real(r.S_ratio)},
                        {"grid", r.grid ? Json(*r.grid) : Json(nullptr)},
                        {"excess", r.excess},
                        {"n_cut", r.n_cut},
                        {"m_cut", r.m_cut}});
  }
  auto opt = [](const std::optional<double>& v) { return v ? json_real(*v) : Json(nullptr); };
  return Json{{"u", rep.u_name},
              {"v", rep.v_name},
              {"log_alpha", json_real(rep.log_alpha)},
              {"log_beta", json_real(rep.log_beta)},
              {"rows", rows},
              {"K1", opt(rep.K1)},
              {"K2", opt(rep.K2)},
              {"K_excess", opt(rep.K_excess)},
              {"oracle", rep.oracle}};
}

std::string scan_csv(const AsymptoticReport& rep) {
  std::ostringstream out;
  out << "x,T,S,main,T_ratio,S_ratio,grid,excess\n";
  for (const auto& r : rep.rows) {
    out << r.x.get_str() << ',' << r.T << ',' << r.S << ',' << format_real(r.main) << ','
        << format_real(r.T_ratio) << ',' << format_real(r.S_ratio) << ','
        << (r.grid ? std::to_string(*r.grid) : std::string()) << ',' << r.excess << '\n';
  }
  return out.str();
}

Json sweep_report(const MatveevSweep& sweep) {
  Json samples = Json::array();
  double worst_gap = std::numeric_limits<double>::infinity();
  for (const auto& s : sweep.samples) {
    samples.push_back(Json{{"n", s.n},
                           {"m", s.m},
                           {"log_lambda_lower", json_real(s.log_lambda_lower)},
                           {"matveev_floor", json_real(s.matveev_floor)},
                           {"holds", s.holds}});
    worst_gap = std::min(worst_gap, s.log_lambda_lower - s.matveev_floor);
  }
  return Json{{"D", sweep.D},
              {"A1", json_real(sweep.A1)},
              {"A2", json_real(sweep.A2)},
              {"A3", json_real(sweep.A3)},
              {"samples", samples},
              {"certified_nonzero", sweep.samples.size()},
              {"skipped", sweep.skipped},
              {"violations", sweep.violations},
              {"min_slack", sweep.samples.empty() ? Json(nullptr) : json_real(worst_gap)}};
}

Json bounds_report(const EffectiveBounds& b, const std::vector<double>& sample_c) {
  Json ledger = Json::array();
  for (const auto& e : b.ledger)
    ledger.push_back(Json{{"name", e.name},
                          {"formula", e.formula},
                          {"value", json_real(e.value)},
                          {"rigorous", e.rigorous}});
  auto rec = [](const BoundRecord& r) {
    return Json{{"P", json_real(r.P)}, {"Q", json_real(r.Q)}, {"R", json_real(r.R)}};
  };
  Json evals = Json::array();
  for (double c : sample_c)
    evals.push_back(Json{{"c", json_real(c)},
                         {"n_max", json_real(b.n_bound(c))},
                         {"m_max", json_real(b.m_bound(c))}});
  return Json{{"n_max", rec(b.n_max)},
              {"m_max", rec(b.m_max)},
              {"c0", json_real(b.c0)},
              {"form", "P + Q log max(|c|, c0) + R (log log max(|c|, c0))^2"},
              {"rigorous", b.rigorous},
              {"ledger", ledger},
              {"notes", b.notes},
              {"evaluations", evals}};
}

std::string bounds_csv(const EffectiveBounds& b) {
  std::ostringstream out;
  out << "constant,value\n";
  for (const auto& e : b.ledger) out << e.name << ',' << format_real(e.value) << '\n';
  out << "P_n," << format_real(b.n_max.P) << "\nQ_n," << format_real(b.n_max.Q) << "\nR_n,"
      << format_real(b.n_max.R) << "\nP_m," << format_real(b.m_max.P) << "\nQ_m,"
      << format_real(b.m_max.Q) << "\nR_m," << format_real(b.m_max.R) << '\n';
  return out.str();
}

Json independence_report(const AlgebraicNumber& alpha, const AlgebraicNumber& beta,
                         const IndependenceResult& result) {
  Json j{{"alpha", alpha.to_string()},
         {"beta", beta.to_string()},
         {"h_alpha", json_real(log_height(alpha).mid_double())},
         {"h_beta", json_real(log_height(beta).mid_double())}};
  if (const auto* i = std::get_if<Independent>(&result)) {
    j["relation"] = "independent";
    j["certificate"] = i->certificate;
  } else if (const auto* d = std::get_if<Dependent>(&result)) {
    j["relation"] = "dependent";
    j["n"] = d->n;
    j["m"] = d->m;
  } else {
    j["relation"] = "unknown";
    j["reason"] = std::get<UnknownRelation>(result).reason;
  }
  return j;
}

Json heights_report(const HeightProbe& p) {
  auto rows = [](const std::vector<HeightSample>& xs) {
    Json a = Json::array();
    for (const auto& s : xs)
      a.push_back(Json{{"n", s.n}, {"m", s.m}, {"height", json_real(s.height)}, {"ratio", json_real(s.ratio)}});
    return a;
  };
  return Json{{"C0_emp", json_real(p.c0_emp)},
              {"C0_at", {p.c0_n, p.c0_m}},
              {"C_emp", p.c_emp ? json_real(*p.c_emp) : Json(nullptr)},
              {"C_emp_note", p.c_emp_note},
              {"label", "empirical"},
              {"samples", rows(p.samples)},
              {"coefficient_samples", rows(p.poly_samples)}};
}

std::string heights_csv(const HeightProbe& p) {
  std::ostringstream out;
  out << "n,m,height,ratio\n";
  for (const auto& s : p.samples)
    out << s.n << ',' << s.m << ',' << format_real(s.height) << ',' << format_real(s.ratio) << '\n';
  return out.str();
}

Json real_count_report(const RealCountResult& r, const RealBase& alpha, const RealBase& beta,
                       const mpq_class& x) {
  Json pairs = Json::array();
  for (const auto& [n, m] : r.pairs) pairs.push_back({n, m});
  return Json{{"alpha", alpha.text},
              {"beta", beta.text},
              {"x", x.get_str()},
              {"T", r.T},
              {"pairs", pairs},
              {"n_cut", r.n_cut},
              {"m_cut", r.m_cut},
              {"window_end", r.window_end},
              {"precision_bits", r.max_precision_used}};
}

}  // namespace recdiff
