#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "latqmc/cbc.hpp"
#include "latqmc/errors.hpp"
#include "latqmc/experiments.hpp"
#include "latqmc/fourier_analysis.hpp"
#include "latqmc/io.hpp"
#include "latqmc/number_theory.hpp"
#include "latqmc/worst_case_error.hpp"

namespace latqmc {

namespace {

std::vector<std::uint64_t> parse_z(const std::string& text) {
  std::vector<std::uint64_t> z;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw PreconditionError("--z expects comma-separated integers, got '" + text + "'");
    }
    if (pos != item.size() || v < 0) throw PreconditionError("--z expects comma-separated integers, got '" + text + "'");
    z.push_back(static_cast<std::uint64_t>(v));
  }
  if (z.empty()) throw PreconditionError("--z is empty");
  return z;
}

// A value starting with '{' is read as inline JSON, anything else as a file.
WeightScheme load_weights(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') {
    try {
      return weights_from_json(json::parse(arg));
    } catch (const json::parse_error& e) {
      throw PreconditionError(std::string("malformed weights JSON: ") + e.what());
    }
  }
  return weights_from_json(read_json_file(arg));
}

void warn_non_coprime(const LatticeRule& rule, std::ostream& err) {
  for (std::size_t j : rule.non_coprime_components())
    err << fmt::format("warning: gcd(z_{}, N) = gcd({}, {}) != 1\n", j + 1, rule.z[j], rule.n);
}

template <class Fn>
void with_output(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw PreconditionError("cannot write '" + path + "'");
  fn(f);
}

double root(double v) { return std::sqrt(std::max(v, 0.0)); }

struct PointsArgs {
  std::uint64_t n = 0;
  std::string z;
  std::string transform = "none";
  std::string format = "csv";
  std::string out;
};

int cmd_points(const PointsArgs& a, std::ostream& out, std::ostream& err) {
  const LatticeRule rule = make_rule(a.n, parse_z(a.z));
  warn_non_coprime(rule, err);
  PointSet ps = rank1_points(rule);
  if (a.transform == "tent")
    ps = tent_transform(ps);
  else if (a.transform == "sym")
    ps = symmetrize(ps);
  with_output(a.out, out, [&](std::ostream& os) {
    if (a.format == "json")
      os << to_json(ps).dump() << '\n';
    else
      write_points_csv(os, ps);
  });
  return 0;
}

struct WceArgs {
  std::string space;
  std::optional<int> alpha;
  std::uint64_t n = 0;
  std::string z;
  std::string weights;
  std::string out;
};

int cmd_wce(const WceArgs& a, std::ostream& out, std::ostream& err) {
  const LatticeRule rule = make_rule(a.n, parse_z(a.z));
  warn_non_coprime(rule, err);
  const WeightScheme w = load_weights(a.weights);
  if (w.dims() < rule.dims()) throw PreconditionError("weights cover fewer coordinates than z");
  const WeightScheme wp = w.prefix(rule.dims());
  json j;
  j["space"] = a.space;
  j["n"] = rule.n;
  j["z"] = rule.z;
  ErrorReport sq;
  std::optional<ErrorReport> bound;
  if (a.space == "korobov") {
    const int alpha = a.alpha.value_or(1);
    j["alpha"] = alpha;
    sq = wce_sq_korobov_lattice(alpha, wp, rule);
  } else if (a.space == "sob2-tent") {
    if (a.alpha && *a.alpha != 2) throw PreconditionError("sob2-tent is the order-2 Sobolev space; alpha must be 2");
    j["alpha"] = 2;
    sq = wce_tent_exact(wp, rule);
    bound = wce_tent_bound(wp, rule);
  } else if (a.space == "sym") {
    const int alpha = a.alpha.value_or(2);
    j["alpha"] = alpha;
    sq = wce_sym_exact(alpha, wp, rule);
    bound = wce_sym_bound(alpha, wp, rule);
  } else {
    throw PreconditionError("unknown space '" + a.space + "'");
  }
  j["squared_error"] = to_json(sq);
  j["error"] = root(sq.value);
  if (bound) {
    j["squared_error_bound"] = to_json(*bound);
    j["error_bound"] = root(bound->value);
  }
  out << fmt::format("e^2 = {:.17g}\ne   = {:.17g}\n", sq.value, root(sq.value));
  if (bound) out << fmt::format("bound on e^2 = {:.17g}\n", bound->value);
  if (!a.out.empty()) with_output(a.out, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  return 0;
}

struct BoundArgs {
  std::string kind;
  int alpha = 2;
  std::uint64_t n = 0;
  double lambda = 1.0;
  std::string weights;
  std::string out;
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  CorollaryKind kind;
  if (a.kind == "tent")
    kind = CorollaryKind::tent;
  else if (a.kind == "sym")
    kind = CorollaryKind::sym;
  else
    throw PreconditionError("unknown bound kind '" + a.kind + "'");
  const ErrorReport r = corollary_bound(kind, a.alpha, load_weights(a.weights), a.n, a.lambda);
  json j = to_json(r);
  j["root"] = root(r.value);
  if (a.out.empty())
    out << j.dump(2) << '\n';
  else
    with_output(a.out, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  return 0;
}

struct CbcArgs {
  std::uint64_t n = 0;
  std::size_t dims = 0;
  std::string criterion = "tent";
  int alpha = 2;
  std::string weights;
  bool fast = false;
  bool plain = false;
  std::string out;
};

int cmd_cbc(const CbcArgs& a, std::ostream& out) {
  CbcCriterion crit{parse_criterion(a.criterion), a.alpha, load_weights(a.weights)};
  const bool fast = a.fast || (!a.plain && is_prime(a.n));
  const CbcResult r = fast ? cbc_fast(a.n, a.dims, crit) : cbc_plain(a.n, a.dims, crit);
  with_output(a.out, out, [&](std::ostream& os) { os << to_json(r).dump(2) << '\n'; });
  if (!a.out.empty() && a.out != "-") {
    std::string zs;
    for (std::size_t j = 0; j < r.z.size(); ++j) zs += (j ? "," : "") + std::to_string(r.z[j]);
    out << fmt::format("z = {}\ncriterion = {:.17g}\n", zs, r.per_dimension_error.back());
  }
  return 0;
}

struct ExperimentArgs {
  std::string name;
  std::string config;
  std::vector<std::string> external;
  std::string out;
};

int cmd_experiment(const ExperimentArgs& a, std::ostream& out, std::ostream& err) {
  if (a.name.empty() && a.config.empty()) throw PreconditionError("experiment needs --name or --config");
  ExperimentConfig cfg = a.config.empty() ? preset(a.name) : experiment_config_from_json(read_json_file(a.config));
  if (!a.config.empty() && !a.name.empty()) cfg.name = a.name;
  const ExperimentResult result = run_experiment(cfg);
  with_output(a.out, out, [&](std::ostream& os) { write_experiment_csv(os, result); });
  // Keep stdout pure CSV when the table goes there.
  std::ostream& info = a.out.empty() || a.out == "-" ? err : out;
  for (const auto& [rule, fit] : result.slopes) {
    for (const auto& w : fit.warnings) err << "warning: " << w << '\n';
    info << fmt::format("slope {}: {:.4f} over {} points\n", rule_name(rule), fit.slope, fit.used);
  }
  if (a.external.empty()) return 0;

  const double exact = exact_integral(cfg.integrand);
  std::vector<ExternalRow> rows;
  for (const auto& path : a.external) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open '" + path + "'");
    const PointSet ps = read_points_csv(in);
    rows.push_back({ps.size(), std::fabs(qmc_average(cfg.integrand, ps) - exact)});
  }
  std::filesystem::path target = a.out.empty() || a.out == "-" ? std::filesystem::path(cfg.name) : std::filesystem::path(a.out);
  target.replace_filename(target.stem().string() + "_external.csv");
  with_output(target.string(), out, [&](std::ostream& os) { write_external_csv(os, rows); });
  out << "external errors written to " << target.string() << '\n';
  return 0;
}

int cmd_verify_appendix(std::ostream& out) {
  const auto checks = verify_appendix();
  bool all = true;
  out << fmt::format("{:<44} {:>6} {:>12} {:>12}\n", "check", "result", "worst", "tolerance");
  for (const auto& c : checks) {
    all = all && c.pass;
    out << fmt::format("{:<44} {:>6} {:>12.3e} {:>12.3e}\n", c.name, c.pass ? "PASS" : "FAIL", c.worst, c.tolerance);
  }
  return all ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-1 lattice rules: points, worst-case errors, CBC and experiments", "latqmc"};
  app.require_subcommand(1);

  PointsArgs pa;
  auto* points = app.add_subcommand("points", "export lattice points");
  points->add_option("--n", pa.n, "number of points")->required();
  points->add_option("--z", pa.z, "generating vector, comma separated")->required();
  points->add_option("--transform", pa.transform)->check(CLI::IsMember({"none", "tent", "sym"}));
  points->add_option("--format", pa.format)->check(CLI::IsMember({"csv", "json"}));
  points->add_option("--out", pa.out, "output file (stdout if omitted)");

  WceArgs wa;
  auto* wce = app.add_subcommand("wce", "worst-case error of a lattice rule");
  wce->add_option("--space", wa.space)->required()->check(CLI::IsMember({"korobov", "sob2-tent", "sym"}));
  wce->add_option("--alpha", wa.alpha);
  wce->add_option("--n", wa.n)->required();
  wce->add_option("--z", wa.z)->required();
  wce->add_option("--weights", wa.weights, "weights JSON file or inline JSON")->required();
  wce->add_option("--out", wa.out, "JSON report");

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "existence bound for CBC rules of prime size");
  bound->add_option("--kind", ba.kind)->required()->check(CLI::IsMember({"tent", "sym"}));
  bound->add_option("--alpha", ba.alpha);
  bound->add_option("--n", ba.n)->required();
  bound->add_option("--lambda", ba.lambda);
  bound->add_option("--weights", ba.weights)->required();
  bound->add_option("--out", ba.out);

  CbcArgs ca;
  auto* cbc = app.add_subcommand("cbc", "component-by-component construction");
  cbc->add_option("--n", ca.n)->required();
  cbc->add_option("--dims", ca.dims)->required();
  cbc->add_option("--criterion", ca.criterion)->check(CLI::IsMember({"tent", "sym", "korobov"}));
  cbc->add_option("--alpha", ca.alpha);
  cbc->add_option("--weights", ca.weights)->required();
  auto* fast = cbc->add_flag("--fast", ca.fast, "FFT search (prime N)");
  auto* plain = cbc->add_flag("--plain", ca.plain, "direct O(s N^2) search");
  fast->excludes(plain);
  cbc->add_option("--out", ca.out);

  ExperimentArgs ea;
  auto* exp = app.add_subcommand("experiment", "convergence experiment as CSV");
  exp->add_option("--name", ea.name, "preset name");
  exp->add_option("--config", ea.config, "JSON experiment description");
  exp->add_option("--external-points", ea.external, "CSV point set to compare against (repeatable)");
  exp->add_option("--out", ea.out, "CSV output (stdout if omitted)");

  auto* verify = app.add_subcommand("verify-appendix", "run the Fourier-series identity checks");

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (points->parsed()) return cmd_points(pa, out, err);
    if (wce->parsed()) return cmd_wce(wa, out, err);
    if (bound->parsed()) return cmd_bound(ba, out);
    if (cbc->parsed()) return cmd_cbc(ca, out);
    if (exp->parsed()) return cmd_experiment(ea, out, err);
    if (verify->parsed()) return cmd_verify_appendix(out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace latqmc
