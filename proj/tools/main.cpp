// relgas command-line tool: single evaluations, (T, mu) tables, the
// verification suites and a method benchmark.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relgas/eos.hpp"
#include "relgas/hightemp.hpp"
#include "relgas/oracle.hpp"
#include "relgas/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace relgas;

constexpr int kExitDomain = 2;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Method parse_eval_method(const std::string& name) {
  const Method m = parse_method(name);
  switch (m) {
    case Method::auto_select:
    case Method::massless:
    case Method::high_t:
    case Method::polylog_form:
    case Method::bessel:
    case Method::quadrature:
      return m;
    default:
      throw DomainError("method '" + name + "' is not an equation-of-state path");
  }
}

const std::vector<std::string> kMethodChoices{"auto", "massless", "high_t", "polylog", "bessel", "quadrature"};
const std::vector<std::string> kQuantities{"P", "n", "sc", "s", "eps"};

struct Row {
  eos::PhysicalState state;
  std::optional<eos::ThermoSet> result;
  std::string error;
};

Row evaluate_row(const eos::PhysicalState& st, Method method, const eos::EosConfig& cfg) {
  Row r;
  r.state = st;
  try {
    r.result = eos::evaluate(st, method, cfg);
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Columns {
  bool P = true, n = true, sc = true, s = true, eps = true;

  static Columns from(const std::vector<std::string>& q) {
    if (q.empty()) return {};
    Columns c{false, false, false, false, false};
    for (const std::string& x : q) {
      if (x == "P") c.P = true;
      else if (x == "n") c.n = true;
      else if (x == "sc" || x == "rho_sc") c.sc = true;
      else if (x == "s") c.s = true;
      else if (x == "eps") c.eps = true;
    }
    return c;
  }
};

std::string csv_header(const Columns& c) {
  std::string h = "T,mu,mass,stat,method,lambda,nu";
  if (c.P) h += ",P";
  if (c.n) h += ",n";
  if (c.sc) h += ",rho_sc";
  if (c.s) h += ",s";
  if (c.eps) h += ",eps";
  return h + ",err_est,flags";
}

std::string csv_row(const Row& r, const Columns& c) {
  const eos::PhysicalState& st = r.state;
  std::string line = num(st.T) + "," + num(st.mu) + "," + num(st.mass) + "," + std::string(to_string(st.stat));
  if (!r.result) {
    line += ",error," + num(st.mass / st.T) + "," + num(st.mu / st.T);
    const int blanks = c.P + c.n + c.sc + c.s + c.eps + 1;
    for (int i = 0; i < blanks; ++i) line += ",";
    return line + "," + csv_escape("error: " + r.error);
  }
  const eos::ThermoSet& t = *r.result;
  line += "," + std::string(to_string(t.reduced.method)) + "," + num(t.reduced.lambda) + "," + num(t.reduced.nu);
  if (c.P) line += "," + num(t.P);
  if (c.n) line += "," + num(t.n);
  if (c.sc) line += "," + num(t.rho_sc);
  if (c.s) line += "," + num(t.s);
  if (c.eps) line += "," + num(t.eps);
  return line + "," + num(t.reduced.relative_error()) + "," + csv_escape(t.reduced.flags().to_string());
}

json json_row(const Row& r, const Columns& c, bool detail) {
  const eos::PhysicalState& st = r.state;
  json j;
  j["T"] = st.T;
  j["mu"] = st.mu;
  j["mass"] = st.mass;
  j["stat"] = std::string(to_string(st.stat));
  if (!r.result) {
    j["method"] = "error";
    j["lambda"] = st.mass / st.T;
    j["nu"] = st.mu / st.T;
    j["error"] = r.error;
    return j;
  }
  const eos::ThermoSet& t = *r.result;
  j["method"] = std::string(to_string(t.reduced.method));
  j["lambda"] = t.reduced.lambda;
  j["nu"] = t.reduced.nu;
  if (c.P) j["P"] = t.P;
  if (c.n) j["n"] = t.n;
  if (c.sc) j["rho_sc"] = t.rho_sc;
  if (c.s) j["s"] = t.s;
  if (c.eps) j["eps"] = t.eps;
  j["err_est"] = t.reduced.relative_error();
  j["flags"] = t.reduced.flags().to_string();
  if (detail) {
    const eos::ReducedSet& rs = t.reduced;
    j["P_T4"] = rs.pressure.value;
    j["n_T3"] = rs.density.value;
    j["rho_sc_T3"] = rs.scalar_density.value;
    j["s_T3"] = rs.entropy.value;
    j["eps_T4"] = 3.0 * rs.pressure.value + rs.lambda * rs.scalar_density.value;
    j["terms_used"] = {{"P", rs.pressure.terms_used},
                       {"n", rs.density.terms_used},
                       {"rho_sc", rs.scalar_density.terms_used},
                       {"s", rs.entropy.terms_used}};
  }
  return j;
}

void print_text(const Row& r) {
  const eos::ThermoSet& t = *r.result;
  const eos::ReducedSet& rs = t.reduced;
  auto line = [](const char* k, const std::string& v) { std::printf("%-10s %s\n", k, v.c_str()); };
  line("T", num(t.state.T));
  line("mu", num(t.state.mu));
  line("mass", num(t.state.mass));
  line("stat", std::string(to_string(t.state.stat)));
  line("method", std::string(to_string(rs.method)));
  line("lambda", num(rs.lambda));
  line("nu", num(rs.nu));
  line("P", num(t.P));
  line("n", num(t.n));
  line("rho_sc", num(t.rho_sc));
  line("s", num(t.s));
  line("eps", num(t.eps));
  line("P_T4", num(rs.pressure.value));
  line("n_T3", num(rs.density.value));
  line("rho_sc_T3", num(rs.scalar_density.value));
  line("s_T3", num(rs.entropy.value));
  line("terms", std::to_string(rs.pressure.terms_used) + " " + std::to_string(rs.density.terms_used) + " " +
                    std::to_string(rs.scalar_density.terms_used) + " " + std::to_string(rs.entropy.terms_used));
  line("err_est", num(rs.relative_error()));
  line("flags", rs.flags().to_string());
}

eos::EosConfig make_config(const std::optional<double>& rtol) {
  eos::EosConfig cfg = eos::config_from_env();
  if (rtol) {
    if (!(*rtol > 0.0)) throw DomainError("--rtol must be > 0");
    cfg.rtol = *rtol;
  }
  return cfg;
}

std::vector<double> axis(double lo, double hi, int count, bool log_spacing) {
  if (count < 1) throw DomainError("grid counts must be >= 1");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("grid ranges must be finite");
  if (log_spacing && !(lo > 0.0 && hi > 0.0)) throw DomainError("log spacing needs a positive range");
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    v[static_cast<std::size_t>(i)] =
        log_spacing ? std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))) : lo + f * (hi - lo);
  }
  if (count > 1) v.back() = hi;
  return v;
}

// Evaluates rows on a fixed pool; rows come back in input order.
std::vector<Row> run_grid(const std::vector<eos::PhysicalState>& states, Method method, const eos::EosConfig& cfg,
                          int threads) {
  std::vector<Row> rows(states.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < states.size(); i = next++) rows[i] = evaluate_row(states[i], method, cfg);
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(states.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

struct EvalArgs {
  double T = 1.0, mu = 0.0, mass = 0.0;
  std::string stat = "fermion", method = "auto", format = "text";
  std::optional<double> rtol;
};

int cmd_eval(const EvalArgs& a) {
  try {
    const eos::EosConfig cfg = make_config(a.rtol);
    const eos::PhysicalState st{a.T, a.mu, a.mass, parse_statistics(a.stat)};
    const Row r = evaluate_row(st, parse_eval_method(a.method), cfg);
    if (!r.result) throw DomainError(r.error);
    const Columns all;
    if (a.format == "csv") {
      std::printf("%s\n%s\n", csv_header(all).c_str(), csv_row(r, all).c_str());
    } else if (a.format == "json") {
      std::printf("%s\n", json_row(r, all, true).dump(2).c_str());
    } else {
      print_text(r);
    }
    return 0;
  } catch (const Error& e) {
    if (a.format == "json") {
      std::printf("%s\n", json{{"error", e.what()}}.dump(2).c_str());
    } else if (a.format == "csv") {
      std::printf("error\n%s\n", csv_escape(e.what()).c_str());
    } else {
      std::printf("error      %s\n", e.what());
    }
    std::fprintf(stderr, "relgas: %s\n", e.what());
    return kExitDomain;
  }
}

struct TableArgs {
  double mass = 0.0;
  std::string stat = "fermion", method = "auto", format = "csv", t_spacing = "lin", output;
  double t_min = 1.0, t_max = 1.0, mu_min = 0.0, mu_max = 0.0;
  int t_count = 1, mu_count = 1, threads = 0;
  std::vector<std::string> quantities;
  std::optional<double> rtol;
};

int cmd_table(const TableArgs& a) {
  eos::EosConfig cfg;
  Method method{};
  std::vector<eos::PhysicalState> states;
  Statistics stat{};
  try {
    cfg = make_config(a.rtol);
    method = parse_eval_method(a.method);
    stat = parse_statistics(a.stat);
    const std::vector<double> Ts = axis(a.t_min, a.t_max, a.t_count, a.t_spacing == "log");
    const std::vector<double> mus = axis(a.mu_min, a.mu_max, a.mu_count, false);
    for (double T : Ts) {
      for (double mu : mus) states.push_back({T, mu, a.mass, stat});
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "relgas: %s\n", e.what());
    return kExitDomain;
  }
  const int threads = a.threads > 0 ? a.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const std::vector<Row> rows = run_grid(states, method, cfg, threads);
  const Columns cols = Columns::from(a.quantities);

  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output);
    if (!file) {
      std::fprintf(stderr, "relgas: cannot open '%s' for writing\n", a.output.c_str());
      return 1;
    }
  }
  std::ostream& out = a.output.empty() ? std::cout : file;
  if (a.format == "json") {
    json arr = json::array();
    for (const Row& r : rows) arr.push_back(json_row(r, cols, false));
    out << arr.dump(2) << "\n";
  } else {
    out << csv_header(cols) << "\n";
    for (const Row& r : rows) out << csv_row(r, cols) << "\n";
  }
  out.flush();
  if (!out) {
    std::fprintf(stderr, "relgas: write failed\n");
    return 1;
  }
  return 0;
}

struct VerifyArgs {
  std::vector<std::string> suites;
  std::string json_path;
  bool quiet = false;
};

int cmd_verify(const VerifyArgs& a) {
  std::vector<std::string> names = a.suites.empty() ? verify::suite_names() : a.suites;
  std::vector<verify::SuiteResult> results;
  for (const std::string& n : names) {
    try {
      results.push_back(verify::run_suite(n));
    } catch (const std::invalid_argument& e) {
      std::fprintf(stderr, "relgas: %s\n", e.what());
      return 1;
    }
  }
  bool ok = true;
  json summary;
  summary["suites"] = json::array();
  for (const verify::SuiteResult& r : results) {
    const verify::Check* w = r.worst();
    const bool pass = r.passed();
    ok = ok && pass;
    int failed = 0;
    for (const auto& c : r.checks) failed += !c.passed;
    std::printf("%-11s %s  checks=%zu failed=%d max_residual=%.3e  (%.2fs)\n", r.name.c_str(), pass ? "PASS" : "FAIL",
                r.checks.size(), failed, r.max_residual(), r.seconds);
    if (w != nullptr) std::printf("            worst: %s  residual=%.3e tol=%.1e\n", w->name.c_str(), w->residual, w->tolerance);
    if (!a.quiet) {
      for (const auto& c : r.checks) {
        if (!c.passed) std::printf("            failed: %s  residual=%.3e tol=%.1e\n", c.name.c_str(), c.residual, c.tolerance);
      }
    }
    json s{{"name", r.name}, {"passed", pass}, {"checks", r.checks.size()}, {"failed", failed},
           {"max_residual", r.max_residual()}, {"seconds", r.seconds}};
    if (w != nullptr) s["worst"] = {{"name", w->name}, {"residual", w->residual}, {"tolerance", w->tolerance}};
    json fails = json::array();
    for (const auto& c : r.checks) {
      if (!c.passed) fails.push_back({{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}});
    }
    s["failures"] = fails;
    summary["suites"].push_back(s);
  }
  summary["passed"] = ok;
  if (!a.json_path.empty()) {
    std::ofstream f(a.json_path);
    f << summary.dump(2) << "\n";
  } else {
    std::printf("%s\n", summary.dump().c_str());
  }
  return ok ? 0 : 1;
}

struct BenchArgs {
  int repeat = 200;
  std::optional<double> rtol;
  std::string json_path;
};

int cmd_bench(const BenchArgs& a) {
  eos::EosConfig cfg;
  try {
    cfg = make_config(a.rtol);
  } catch (const Error& e) {
    std::fprintf(stderr, "relgas: %s\n", e.what());
    return kExitDomain;
  }
  struct Sample {
    double lambda, nu;
    Statistics stat;
  };
  const Sample samples[] = {{0.3, 0.1, Statistics::fermion}, {1.0, 0.5, Statistics::fermion},
                            {0.0, 0.5, Statistics::fermion}, {5.0, 1.0, Statistics::fermion},
                            {10.0, 0.0, Statistics::fermion}, {0.5, 0.3, Statistics::boson},
                            {10.0, 5.0, Statistics::boson}};
  const Method methods[] = {Method::auto_select, Method::massless, Method::high_t,
                            Method::polylog_form, Method::bessel, Method::quadrature};
  json report = json::array();
  std::printf("%-8s %-8s %-8s %-11s %12s %10s %10s\n", "stat", "lambda", "nu", "method", "ns/eval", "terms", "rel_err");
  for (const Sample& s : samples) {
    const eos::ReducedSet ref = eos::evaluate_reduced(s.lambda, s.nu, s.stat, Method::quadrature, {1e-13, {}});
    for (Method m : methods) {
      json j{{"stat", std::string(to_string(s.stat))}, {"lambda", s.lambda}, {"nu", s.nu},
             {"method", std::string(to_string(m))}};
      try {
        eos::ReducedSet r = eos::evaluate_reduced(s.lambda, s.nu, s.stat, m, cfg);
        const int reps = m == Method::quadrature ? std::max(1, a.repeat / 10) : a.repeat;
        const auto t0 = std::chrono::steady_clock::now();
        for (int i = 0; i < reps; ++i) r = eos::evaluate_reduced(s.lambda, s.nu, s.stat, m, cfg);
        const double ns =
            std::chrono::duration<double, std::nano>(std::chrono::steady_clock::now() - t0).count() / reps;
        const double err = ref.pressure.value != 0.0 ? std::abs(r.pressure.value / ref.pressure.value - 1.0) : 0.0;
        j["ns_per_eval"] = ns;
        j["terms_used"] = r.pressure.terms_used;
        j["rel_err_vs_quadrature"] = err;
        j["used"] = std::string(to_string(r.method));
        std::printf("%-8s %-8g %-8g %-11s %12.0f %10d %10.2e\n", to_string(s.stat).data(), s.lambda, s.nu,
                    to_string(m).data(), ns, r.pressure.terms_used, err);
      } catch (const Error& e) {
        j["error"] = e.what();
        std::printf("%-8s %-8g %-8g %-11s %12s\n", to_string(s.stat).data(), s.lambda, s.nu, to_string(m).data(),
                    "n/a");
      }
      report.push_back(j);
    }
  }
  if (!a.json_path.empty()) {
    std::ofstream f(a.json_path);
    f << report.dump(2) << "\n";
  } else {
    std::printf("%s\n", report.dump().c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relgas: thermodynamics of ideal relativistic Fermi and Bose gases"};
  app.require_subcommand(1);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate a single state");
  eval->add_option("--T", ea.T, "Temperature")->required();
  eval->add_option("--mu", ea.mu, "Chemical potential")->required();
  eval->add_option("--mass", ea.mass, "Particle mass")->required();
  eval->add_option("--stat", ea.stat, "fermion|boson")->check(CLI::IsMember({"fermion", "boson"}));
  eval->add_option("--method", ea.method, "Evaluation path")->check(CLI::IsMember(kMethodChoices));
  eval->add_option("--rtol", ea.rtol, "Relative tolerance (default RELGAS_RTOL or 1e-10)");
  eval->add_option("--format", ea.format, "text|csv|json")->check(CLI::IsMember({"text", "csv", "json"}));

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Tabulate a (T, mu) grid");
  table->add_option("--mass", ta.mass, "Particle mass")->required();
  table->add_option("--stat", ta.stat, "fermion|boson")->check(CLI::IsMember({"fermion", "boson"}));
  table->add_option("--T-min", ta.t_min, "Lowest temperature")->required();
  table->add_option("--T-max", ta.t_max, "Highest temperature")->required();
  table->add_option("--T-count", ta.t_count, "Number of temperatures");
  table->add_option("--T-spacing", ta.t_spacing, "lin|log")->check(CLI::IsMember({"lin", "log"}));
  table->add_option("--mu-min", ta.mu_min, "Lowest chemical potential");
  table->add_option("--mu-max", ta.mu_max, "Highest chemical potential");
  table->add_option("--mu-count", ta.mu_count, "Number of chemical potentials");
  table->add_option("--method", ta.method, "Evaluation path")->check(CLI::IsMember(kMethodChoices));
  table->add_option("--format", ta.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--quantities", ta.quantities, "Subset of P,n,sc,s,eps")
      ->delimiter(',')
      ->check(CLI::IsMember({"P", "n", "sc", "rho_sc", "s", "eps"}));
  table->add_option("--rtol", ta.rtol, "Relative tolerance (default RELGAS_RTOL or 1e-10)");
  table->add_option("--threads", ta.threads, "Worker threads (0: hardware concurrency)");
  table->add_option("-o,--output", ta.output, "Output file (default stdout)");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run the verification suites");
  ver->add_option("--suite", va.suites, "Suite name (repeatable)")->check(CLI::IsMember(verify::suite_names()));
  ver->add_option("--json", va.json_path, "Write the JSON summary to a file");
  ver->add_flag("--quiet", va.quiet, "Only print the per-suite summary");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Time every method on a sample set");
  bench->add_option("--repeat", ba.repeat, "Evaluations per timing")->check(CLI::PositiveNumber);
  bench->add_option("--rtol", ba.rtol, "Relative tolerance");
  bench->add_option("--json", ba.json_path, "Write the JSON report to a file");

  CLI11_PARSE(app, argc, argv);

  if (*eval) return cmd_eval(ea);
  if (*table) return cmd_table(ta);
  if (*ver) return cmd_verify(va);
  if (*bench) return cmd_bench(ba);
  return 0;
}
