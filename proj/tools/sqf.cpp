// sqf: command-line front end for the square-free density experiments.
//
// Exit codes: 0 success, 2 invalid or inadmissible input, 3 budget exceeded,
// 4 a verification suite reported a failed check.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqf/density.hpp"
#include "sqf/errors.hpp"
#include "sqf/experiments.hpp"
#include "sqf/parse.hpp"
#include "sqf/primes.hpp"
#include "sqf/verify.hpp"

using json = nlohmann::ordered_json;
using namespace sqf;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;
constexpr int kExitCheckFailed = 4;

struct FieldArgs {
  std::uint64_t q = 2;
  std::string modulus;

  FieldPtr make() const {
    if (modulus.empty()) return Field::of_order(q);
    const FieldPtr probe = Field::of_order(q);
    return Field::of_order(q, parse_modulus(modulus, probe->characteristic()));
  }
};

struct Common {
  FieldArgs field;
  std::string format = "csv";
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;

  RunOptions options() const {
    RunOptions o;
    if (budget) o.budget = o.local_budget = *budget;
    o.threads = threads;
    return o;
  }
};

void add_field(CLI::App* cmd, Common& c) {
  cmd->add_option("--q", c.field.q, "field order, a prime power <= 65536")->default_val(2);
  cmd->add_option("--modulus", c.field.modulus, "defining polynomial in u for extension fields, e.g. \"u^2+u+1\"");
}

void add_run(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget", c.budget, "maximum candidates per enumeration or residue scan");
  cmd->add_option("--threads", c.threads, "worker threads for enumerations")->default_val(1)->check(CLI::Range(1, 256));
}

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "output format")->default_val("csv")->check(CLI::IsMember({"csv", "json"}));
}

std::string real(double v) { return format_real(v); }

// Reals are reported to 12 significant digits in both formats.
json real_json(double v) { return std::isfinite(v) ? json(std::stod(real(v))) : json(real(v)); }

std::string to_string(const BigInt& v) { return v.str(); }

// --- primes -----------------------------------------------------------------

struct PrimesArgs {
  int n = 1;
  bool list = false;
  std::string Q, A;
};

int run_primes(const Common& c, const PrimesArgs& a) {
  const FieldPtr F = c.field.make();
  const BigInt count = count_primes(F->order(), a.n);
  std::optional<ApCount> ap;
  if (!a.Q.empty()) ap = count_primes_ap(a.n, parse_poly(a.Q, F), parse_poly(a.A.empty() ? "1" : a.A, F));
  std::vector<std::string> listed;
  if (a.list) {
    if (MonicRange(F, a.n).size() > c.options().budget) throw BudgetExceeded("prime listing exceeds the budget");
    for (const auto& P : enumerate_primes(F, a.n)) listed.push_back(format(P.poly()));
  }
  if (c.format == "json") {
    json j;
    j["q"] = F->order();
    j["n"] = a.n;
    j["count"] = to_string(count);
    if (ap) {
      j["ap"] = {{"Q", a.Q}, {"A", a.A.empty() ? "1" : a.A}, {"count", to_string(ap->count)},
                 {"main_term", real_json(ap->main_term.convert_to<double>())}, {"deviation", real_json(ap->deviation)}};
    }
    if (a.list) j["primes"] = listed;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "q,n,count" << (ap ? ",ap_count,main_term,deviation" : "") << '\n';
    std::cout << F->order() << ',' << a.n << ',' << count;
    if (ap) std::cout << ',' << ap->count << ',' << real(ap->main_term.convert_to<double>()) << ',' << real(ap->deviation);
    std::cout << '\n';
    if (a.list) {
      std::cout << "prime\n";
      for (const auto& s : listed) std::cout << s << '\n';
    }
  }
  return 0;
}

// --- density ----------------------------------------------------------------

struct DensityArgs {
  std::string f;
  int M = 8;
  bool positivity = false;
};

int run_density(const Common& c, const DensityArgs& a) {
  const FieldPtr F = c.field.make();
  const Admissible f(parse_bipoly(a.f, F));
  const RunOptions opts = c.options();
  const DensityEstimate d = truncated_density(f, a.M, opts.local_budget);
  std::optional<PositivityResult> pos;
  if (a.positivity) pos = positivity_check(f, opts.local_budget);
  const std::string culprit = d.culprit ? format(d.culprit->poly()) : "";
  if (c.format == "json") {
    json j;
    j["truncated_value"] = real_json(d.truncated_value);
    j["lower"] = real_json(d.lower);
    j["upper"] = real_json(d.upper);
    j["M"] = d.M;
    j["B"] = to_string(d.B);
    j["positive"] = d.positive;
    j["culprit"] = d.culprit ? json(culprit) : json(nullptr);
    if (pos) {
      json recs = json::array();
      for (const auto& r : pos->records)
        recs.push_back({{"prime", format(r.prime.poly())},
                        {"witness", r.witness ? json(format(*r.witness)) : json(nullptr)}});
      j["positivity"] = {{"positive", pos->positive}, {"records", recs}};
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "truncated_value,lower,upper,M,B,positive,culprit\n";
    std::cout << real(d.truncated_value) << ',' << real(d.lower) << ',' << real(d.upper) << ',' << d.M << ','
              << d.B << ',' << (d.positive ? "true" : "false") << ',' << culprit << '\n';
    if (pos) {
      std::cout << "prime,witness\n";
      for (const auto& r : pos->records)
        std::cout << format(r.prime.poly()) << ',' << (r.witness ? format(*r.witness) : "") << '\n';
    }
  }
  return 0;
}

// --- scan -------------------------------------------------------------------

struct ScanArgs {
  std::string f;
  int n_min = 1, n_max = 1;
  std::optional<int> M;
};

int run_scan(const Common& c, const ScanArgs& a) {
  const FieldPtr F = c.field.make();
  const Admissible f(parse_bipoly(a.f, F));
  const ScanResult s = scan(f, a.n_min, a.n_max, a.M, c.options());
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& r : s.rows)
      rows.push_back({{"n", r.n},
                      {"primes", r.primes},
                      {"hits", r.hits},
                      {"fraction", real_json(r.fraction)},
                      {"c_trunc", real_json(r.c_trunc)},
                      {"c_lower", real_json(r.c_lower)},
                      {"c_upper", real_json(r.c_upper)},
                      {"deviation", real_json(r.deviation)},
                      {"log_ref", real_json(r.log_ref)}});
    json j;
    j["M"] = s.density.M;
    j["rows"] = rows;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << scan_csv(s.rows);
  }
  return 0;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::string f = "x^3+t";
  std::optional<int> n;
  std::vector<int> ns, Ms;
  std::vector<std::string> moduli;
  std::optional<double> slack;
  int enum_max = 10;
  int samples = 1000;
  std::uint64_t seed = 1;
};

SuiteReport run_suite(const Common& c, const VerifyArgs& a) {
  const FieldPtr F = c.field.make();
  const RunOptions opts = c.options();
  const auto pick = [](const std::vector<int>& v, std::vector<int> fallback) { return v.empty() ? fallback : v; };
  if (a.suite == "hensel") return verify_hensel(Admissible(parse_bipoly(a.f, F)), a.n.value_or(5), opts.local_budget);
  if (a.suite == "explicit-formula") return verify_explicit_formula(F, a.n.value_or(12), a.enum_max);
  if (a.suite == "weil") {
    std::vector<Poly> moduli;
    for (const auto& s : a.moduli.empty() ? std::vector<std::string>{"t", "t+1", "t^2+t+1"} : a.moduli)
      moduli.push_back(parse_poly(s, F));
    return verify_weil(moduli, a.n.value_or(14), a.slack, opts);
  }
  if (a.suite == "frobenius") return verify_frobenius(F, a.n.value_or(32), a.samples, a.seed);
  const Admissible f(parse_bipoly(a.f, F));
  if (a.suite == "sieve") return verify_sieve(f, pick(a.ns, {8, 10, 12}), pick(a.Ms, {2, 3, 4}), opts);
  return verify_remainder(f, pick(a.ns, {10, 12, 14}), pick(a.Ms, {2, 3}), opts);
}

int run_verify(const Common& c, const VerifyArgs& a) {
  const SuiteReport r = run_suite(c, a);
  if (c.format == "json") {
    json checks = json::array();
    for (const auto& ch : r.checks) checks.push_back({{"label", ch.label}, {"pass", ch.pass}, {"detail", ch.detail}});
    std::cout << json{{"suite", r.suite}, {"pass", r.pass()}, {"checks", checks}}.dump(2) << '\n';
  } else {
    std::cout << "suite,label,pass,detail\n";
    for (const auto& ch : r.checks)
      std::cout << r.suite << ',' << ch.label << ',' << (ch.pass ? "true" : "false") << ",\"" << ch.detail << "\"\n";
  }
  return r.pass() ? 0 : kExitCheckFailed;
}

// --- qscan ------------------------------------------------------------------

struct QScanArgs {
  std::string f;
  std::vector<std::uint64_t> qs;
  int n = 4;
};

int run_qscan(const Common& c, const QScanArgs& a) {
  const auto rows = qscan(a.f, a.qs, a.n, c.options());
  if (c.format == "json") {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"q", r.q}, {"status", r.status}, {"primes", r.primes}, {"hits", r.hits},
                     {"fraction", real_json(r.fraction)}});
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "q,status,primes,hits,fraction\n";
    for (const auto& r : rows)
      std::cout << r.q << ",\"" << r.status << "\"," << r.primes << ',' << r.hits << ',' << real(r.fraction) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square-free values of polynomials at prime arguments in F_q[t]"};
  app.require_subcommand(1);

  Common common;

  PrimesArgs pa;
  auto* primes = app.add_subcommand("primes", "count (and optionally list) primes of degree n");
  add_field(primes, common);
  add_format(primes, common);
  add_run(primes, common);
  primes->add_option("--n", pa.n, "degree")->required()->check(CLI::Range(1, 1 << 20));
  primes->add_flag("--list", pa.list, "list the primes by enumeration");
  primes->add_option("--Q", pa.Q, "modulus of an arithmetic progression");
  primes->add_option("--A", pa.A, "residue of the progression (default 1)");

  DensityArgs da;
  auto* density = app.add_subcommand("density", "truncated Euler product with certified bounds");
  add_field(density, common);
  add_format(density, common);
  add_run(density, common);
  density->add_option("--f", da.f, "polynomial in x and t")->required();
  density->add_option("--M", da.M, "cutoff: primes of degree < M enter the product")->default_val(8)->check(
      CLI::Range(1, 64));
  density->add_flag("--positivity", da.positivity, "also run the finite positivity test");

  ScanArgs sa;
  auto* scan_cmd = app.add_subcommand("scan", "empirical square-free fraction for each n");
  add_field(scan_cmd, common);
  add_format(scan_cmd, common);
  add_run(scan_cmd, common);
  scan_cmd->add_option("--f", sa.f, "polynomial in x and t")->required();
  scan_cmd->add_option("--n-min", sa.n_min, "smallest degree")->required();
  scan_cmd->add_option("--n-max", sa.n_max, "largest degree")->required();
  scan_cmd->add_option("--M", sa.M, "density cutoff (default: floor(log_q(n_max/9)), raised until certifiable)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_field(verify, common);
  add_format(verify, common);
  add_run(verify, common);
  verify->add_option("--suite", va.suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"hensel", "explicit-formula", "weil", "frobenius", "sieve", "remainder"}));
  verify->add_option("--f", va.f, "polynomial in x and t (hensel, sieve, remainder)")->default_val("x^3+t");
  verify->add_option("--n", va.n, "largest degree (hensel 5, explicit-formula 12, weil 14, frobenius 32)");
  verify->add_option("--n-list", va.ns, "degrees for sieve/remainder")->delimiter(',');
  verify->add_option("--M-list", va.Ms, "cutoffs for sieve/remainder")->delimiter(',');
  verify->add_option("--Q", va.moduli, "moduli for weil (default t,t+1,t^2+t+1)")->delimiter(',');
  verify->add_option("--slack", va.slack, "weil slack (default 2 (deg Q + 1) / deg Q)");
  verify->add_option("--enum-max", va.enum_max, "explicit-formula: enumerate primes up to this degree")->default_val(10);
  verify->add_option("--samples", va.samples, "frobenius: samples per degree")->default_val(1000);
  verify->add_option("--seed", va.seed, "frobenius: RNG seed")->default_val(1);

  QScanArgs qa;
  auto* qscan_cmd = app.add_subcommand("qscan", "one expression over several fields at fixed n");
  add_format(qscan_cmd, common);
  add_run(qscan_cmd, common);
  qscan_cmd->add_option("--f", qa.f, "polynomial in x and t")->required();
  qscan_cmd->add_option("--q-list", qa.qs, "field orders, comma separated")->delimiter(',')->required();
  qscan_cmd->add_option("--n", qa.n, "degree")->default_val(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*primes) return run_primes(common, pa);
    if (*density) return run_density(common, da);
    if (*scan_cmd) return run_scan(common, sa);
    if (*verify) return run_verify(common, va);
    if (*qscan_cmd) return run_qscan(common, qa);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  }
  return 0;
}
