// recdiff: differences of linear recurrence sequences from the command line.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "recdiff/asymptotics.hpp"
#include "recdiff/counting.hpp"
#include "recdiff/error.hpp"
#include "recdiff/heights.hpp"
#include "recdiff/matveev.hpp"
#include "recdiff/report.hpp"
#include "recdiff/spectral.hpp"

using namespace recdiff;

namespace {

struct Globals {
  std::string out;
  bool no_header = false;
  std::string format = "structured";
};

std::string timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

void emit(const Globals& g, const std::string& command, const Json& report, const std::string& csv) {
  std::ostringstream text;
  if (g.format == "csv") {
    if (!g.no_header) text << "# recdiff " << command << ' ' << timestamp() << '\n';
    text << csv;
  } else {
    Json doc = report;
    if (!g.no_header) doc["header"] = Json{{"tool", "recdiff"}, {"command", command}, {"generated", timestamp()}};
    text << doc.dump(2) << '\n';
  }
  if (g.out.empty()) {
    std::cout << text.str();
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + g.out);
  f << text.str();
}

// Flat key,value rows for reports without a natural table.
std::string kv_csv(const Json& j) {
  std::ostringstream out;
  out << "key,value\n";
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_structured()) continue;
    out << it.key() << ',' << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
  }
  return out.str();
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CutoffUnsafe: return 2;
    case ErrorKind::PrecisionExhausted: return 3;
    default: return 4;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recdiff: counting and bounding differences U_n - V_m of linear recurrences"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Globals g;
  app.add_option("--out", g.out, "write the report to this file");
  app.add_flag("--no-header", g.no_header, "omit the timestamp header");
  app.add_option("--output", g.format, "structured (JSON) or csv")
      ->check(CLI::IsMember({"structured", "csv"}));

  std::string seq_u, seq_v, x_text = "0", x_grid = "1e3,1e6,1e9,1e12";
  bool oracle = false, with_collisions = false, no_expand = false;
  unsigned long n_cap = 0, m_cap = 0;
  unsigned threads = 0;

  auto* analyze = app.add_subcommand("analyze", "spectral certificate and growth envelope");
  analyze->add_option("--seq-u", seq_u, "config file or built-in name")->required();
  analyze->add_option("--seq-v", seq_v, "optional second sequence");
  unsigned long verify_cap = kEnvelopeCap;
  analyze->add_option("--verify-up-to", verify_cap, "exact envelope check range");

  auto* count = app.add_subcommand("count", "T(x) and S(x)");
  count->add_option("--seq-u", seq_u)->required();
  count->add_option("--seq-v", seq_v)->required();
  count->add_option("--x", x_text, "non-negative integer")->required();
  count->add_flag("--oracle", oracle, "use the brute-force double loop");
  count->add_option("--n-cap", n_cap, "oracle cap for n (default 3x fast cutoff)");
  count->add_option("--m-cap", m_cap, "oracle cap for m (default 3x fast cutoff)");
  count->add_flag("--collisions", with_collisions, "list values with several representations");
  count->add_flag("--no-expand", no_expand, "fail instead of widening the safety window");
  count->add_option("--threads", threads);

  auto* scan = app.add_subcommand("scan", "ratio table over a grid of x");
  scan->add_option("--seq-u", seq_u)->required();
  scan->add_option("--seq-v", seq_v)->required();
  scan->add_option("--x-grid", x_grid, "comma separated integers");
  scan->add_flag("--oracle", oracle);

  auto* coll = app.add_subcommand("collisions", "values with several representations");
  coll->add_option("--seq-u", seq_u)->required();
  coll->add_option("--seq-v", seq_v)->required();
  coll->add_option("--x", x_text)->required();

  auto* matveev = app.add_subcommand("matveev", "lower bound for a linear form in logarithms");
  MatveevInput min;
  std::vector<double> A;
  unsigned long samples = 0;
  std::uint64_t seed = 20240601;
  matveev->add_option("--t", min.t);
  matveev->add_option("--D", min.D);
  matveev->add_option("--B", min.B);
  matveev->add_option("--A", A, "repeat once per term");
  matveev->add_option("--seq-u", seq_u, "with --seq-v and --samples: compare with |Lambda|");
  matveev->add_option("--seq-v", seq_v);
  matveev->add_option("--samples", samples);
  matveev->add_option("--seed", seed);
  unsigned long lo = 5, hi = 60;
  matveev->add_option("--lo", lo);
  matveev->add_option("--hi", hi);

  auto* indep = app.add_subcommand("independence", "multiplicative independence of two numbers");
  std::string alpha_text, beta_text;
  indep->add_option("--alpha", alpha_text, "'3', '-3/2' or 'a_d,...,a_0@root'")->required();
  indep->add_option("--beta", beta_text)->required();

  auto* heights = app.add_subcommand("heights", "logarithmic heights and probe constants");
  long range = 10;
  bool assume_independent = false;
  heights->add_option("--alpha", alpha_text);
  heights->add_option("--beta", beta_text);
  heights->add_option("--seq-u", seq_u, "take alpha and p(n) from this sequence");
  heights->add_option("--seq-v", seq_v, "take beta and q(m) from this sequence");
  heights->add_option("--range", range);
  heights->add_flag("--assume-independent", assume_independent);

  auto* bounds = app.add_subcommand("bounds", "effective upper bounds for n and m");
  bounds->add_option("--seq-u", seq_u)->required();
  bounds->add_option("--seq-v", seq_v)->required();
  std::optional<double> c10, c0h;
  std::vector<double> eval_c;
  bounds->add_option("--c10", c10, "coefficient height constant when not computable");
  bounds->add_option("--c0", c0h, "height constant for the Lambda = 0 branch");
  bounds->add_option("--eval", eval_c, "evaluate n_max, m_max at these |c|")->delimiter(',');

  auto* problem1 = app.add_subcommand("problem1", "count |alpha^n - beta^m| <= x for real bases");
  std::string pa = "pi", pb = "e";
  mpfr_prec_t precision = 200;
  problem1->add_option("--alpha", pa, "pi, e or a decimal");
  problem1->add_option("--beta", pb);
  problem1->add_option("--x", x_text)->required();
  problem1->add_option("--precision", precision, "starting precision in bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    CountOptions copt;
    copt.expand_on_hit = !no_expand;
    copt.threads = threads;
    if (analyze->parsed()) {
      Json rep{{"u", analysis_report(analyze_sequence(load_sequence(seq_u)), verify_cap)}};
      if (!seq_v.empty()) rep["v"] = analysis_report(analyze_sequence(load_sequence(seq_v)), verify_cap);
      emit(g, "analyze", rep, kv_csv(rep["u"]["envelope"]));
    } else if (count->parsed()) {
      const mpz_class x = parse_integer_literal(x_text);
      auto u = analyze_sequence(load_sequence(seq_u));
      auto v = analyze_sequence(load_sequence(seq_v));
      CountResult r;
      if (oracle) {
        if (n_cap == 0 || m_cap == 0) {
          CountResult fast = count_T_S(u, v, x, copt);
          if (n_cap == 0) n_cap = 3 * fast.n_cut;
          if (m_cap == 0) m_cap = 3 * fast.m_cut;
        }
        r = brute_force_oracle(u.sequence, v.sequence, x, n_cap, m_cap);
      } else {
        r = count_T_S(u, v, x, copt);
      }
      CollisionReport cr = collisions_from(r);
      Json rep = count_report(r, with_collisions ? &cr : nullptr);
      emit(g, "count", rep, kv_csv(rep));
    } else if (scan->parsed()) {
      std::vector<mpz_class> xs;
      for (const auto& item : split_list(x_grid)) xs.push_back(parse_integer_literal(item));
      auto u = analyze_sequence(load_sequence(seq_u));
      auto v = analyze_sequence(load_sequence(seq_v));
      AsymptoticReport rep = ratio_table(u, v, xs, oracle, copt);
      emit(g, "scan", scan_report(rep), scan_csv(rep));
    } else if (coll->parsed()) {
      const mpz_class x = parse_integer_literal(x_text);
      auto u = analyze_sequence(load_sequence(seq_u));
      auto v = analyze_sequence(load_sequence(seq_v));
      CollisionReport cr = find_collisions(u, v, x, copt);
      Json rep = collision_report(cr);
      std::ostringstream csv;
      csv << "c,n,m\n";
      for (const auto& rec : cr.records)
        for (const auto& [n, m] : rec.representations) csv << rec.c.get_str() << ',' << n << ',' << m << '\n';
      emit(g, "collisions", rep, csv.str());
    } else if (matveev->parsed()) {
      Json rep;
      if (!A.empty() || seq_u.empty()) {
        min.A = A;
        double bound = matveev_lower_bound(min);
        rep["bound"] = json_real(bound);
        rep["input"] = Json{{"t", min.t}, {"D", min.D}, {"B", json_real(min.B)}, {"A", A}};
      }
      if (!seq_u.empty()) {
        if (seq_v.empty()) throw Error(ErrorKind::InvalidInput, "--seq-u needs --seq-v");
        auto u = analyze_sequence(load_sequence(seq_u));
        auto v = analyze_sequence(load_sequence(seq_v));
        rep["sweep"] = sweep_report(matveev_sweep(u, v, sample_index_pairs(samples ? samples : 200, lo, hi, seed)));
      }
      emit(g, "matveev", rep, kv_csv(rep.contains("sweep") ? rep["sweep"] : rep));
    } else if (indep->parsed()) {
      auto a = AlgebraicNumber::parse(alpha_text);
      auto b = AlgebraicNumber::parse(beta_text);
      Json rep = independence_report(a, b, multiplicative_independence(a, b));
      emit(g, "independence", rep, kv_csv(rep));
    } else if (heights->parsed()) {
      std::optional<SequenceAnalysis> u, v;
      if (!seq_u.empty()) u = analyze_sequence(load_sequence(seq_u));
      if (!seq_v.empty()) v = analyze_sequence(load_sequence(seq_v));
      if (!u && alpha_text.empty()) throw Error(ErrorKind::InvalidInput, "need --alpha or --seq-u");
      if (!v && beta_text.empty()) throw Error(ErrorKind::InvalidInput, "need --beta or --seq-v");
      AlgebraicNumber a = u ? dominant_root(*u) : AlgebraicNumber::parse(alpha_text);
      AlgebraicNumber b = v ? dominant_root(*v) : AlgebraicNumber::parse(beta_text);
      const std::vector<QuadraticNumber>* p = u && u->certificate.exact ? &u->certificate.exact->a : nullptr;
      const std::vector<QuadraticNumber>* q = v && v->certificate.exact ? &v->certificate.exact->a : nullptr;
      HeightProbe probe = height_constant_probe(a, b, range, p, q, assume_independent);
      Json rep = heights_report(probe);
      rep["alpha"] = a.to_string();
      rep["beta"] = b.to_string();
      rep["h_alpha"] = json_real(log_height(a).mid_double());
      rep["h_beta"] = json_real(log_height(b).mid_double());
      emit(g, "heights", rep, heights_csv(probe));
    } else if (bounds->parsed()) {
      auto u = analyze_sequence(load_sequence(seq_u));
      auto v = analyze_sequence(load_sequence(seq_v));
      BoundsOptions bo;
      bo.c10 = c10;
      bo.c0_height = c0h;
      EffectiveBounds eb = effective_upper_bounds(u, v, bo);
      emit(g, "bounds", bounds_report(eb, eval_c), bounds_csv(eb));
    } else if (problem1->parsed()) {
      RealBase a = RealBase::parse(pa);
      RealBase b = RealBase::parse(pb);
      mpq_class x = parse_rational_literal(x_text);
      RealCountResult r = count_real_power_pairs(a, b, x, precision);
      Json rep = real_count_report(r, a, b, x);
      std::ostringstream csv;
      csv << "n,m\n";
      for (const auto& [n, m] : r.pairs) csv << n << ',' << m << '\n';
      emit(g, "problem1", rep, csv.str());
    }
  } catch (const Error& e) {
    std::cerr << "recdiff: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "recdiff: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
