#include "latqmc/experiments.hpp"

#include <cmath>
#include <numbers>

#include "latqmc/cbc.hpp"
#include "latqmc/errors.hpp"
#include "latqmc/number_theory.hpp"
#include "latqmc/simd/kernels.hpp"
#include "latqmc/worst_case_error.hpp"

namespace latqmc {

std::string_view integrand_name(IntegrandKind kind) {
  switch (kind) {
    case IntegrandKind::bivar:
      return "bivar";
    case IntegrandKind::f1:
      return "f1";
    case IntegrandKind::f2:
      return "f2";
  }
  return "unknown";
}

IntegrandKind parse_integrand(std::string_view name) {
  if (name == "bivar") return IntegrandKind::bivar;
  if (name == "f1") return IntegrandKind::f1;
  if (name == "f2") return IntegrandKind::f2;
  throw PreconditionError("unknown integrand '" + std::string(name) + "'");
}

double integrand_eval(const Integrand& f, std::span<const double> x) {
  if (x.size() != f.dims()) throw PreconditionError("integrand dimension mismatch");
  switch (f.kind) {
    case IntegrandKind::bivar:
      return x[1] * std::exp(x[0] * x[1]) / (std::numbers::e - 2.0);
    case IntegrandKind::f1: {
      double p = 1.0;
      const double mean = 1.0 / (1.0 + f.c);
      for (std::size_t j = 0; j < x.size(); ++j) p *= 1.0 + f.omega[j] * (std::pow(x[j], f.c) - mean);
      return p;
    }
    case IntegrandKind::f2: {
      double p = 1.0;
      for (std::size_t j = 0; j < x.size(); ++j) p *= 1.0 + f.omega[j] / (1.0 + f.omega[j] * std::pow(x[j], f.c));
      return p;
    }
  }
  return 0.0;
}

double exact_integral(const Integrand& f) {
  switch (f.kind) {
    case IntegrandKind::bivar:
    case IntegrandKind::f1:
      return 1.0;
    case IntegrandKind::f2: {
      if (f.c != 1.0 && f.c != 2.0) throw PreconditionError("f2 has a closed-form integral only for c in {1, 2}");
      double p = 1.0;
      for (double w : f.omega) p *= f.c == 1.0 ? 1.0 + std::log1p(w) : 1.0 + std::sqrt(w) * std::atan(std::sqrt(w));
      return p;
    }
  }
  return 0.0;
}

std::string_view rule_name(RuleKind kind) {
  switch (kind) {
    case RuleKind::lattice:
      return "lattice";
    case RuleKind::tent:
      return "tent";
    case RuleKind::sym:
      return "sym";
  }
  return "unknown";
}

std::vector<double> power_sequence(std::size_t s, double p, double scale) {
  std::vector<double> v(s);
  for (std::size_t j = 0; j < s; ++j) v[j] = scale * std::pow(static_cast<double>(j + 1), -p);
  return v;
}

std::vector<std::uint64_t> ExperimentConfig::point_counts() const {
  std::vector<std::uint64_t> out;
  if (construction == Construction::fibonacci)
    for (int m : fibonacci_indices) out.push_back(fibonacci(m));
  else
    out = n_list;
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1]) throw PreconditionError("experiment point counts must be strictly increasing");
  return out;
}

void ExperimentConfig::validate() const {
  if (rules.empty()) throw PreconditionError("experiment has no rules to run");
  const auto counts = point_counts();
  if (counts.empty()) throw PreconditionError("experiment has no point counts");
  const std::size_t s = integrand.dims();
  if (s == 0) throw PreconditionError("integrand has no coordinates");
  if (construction == Construction::fibonacci && s != 2)
    throw PreconditionError("Fibonacci lattices are two-dimensional");
  if (construction == Construction::cbc_tent && cbc_gamma.size() < s)
    throw PreconditionError("CBC weights cover fewer coordinates than the integrand");
  for (RuleKind r : rules)
    if (r == RuleKind::sym && s > kMaxSymmetrizeDims) throw GuardError("sym rule refused for s > 20");
}

ExperimentConfig preset(std::string_view name) {
  ExperimentConfig cfg;
  cfg.name = std::string(name);
  if (name == "figure1") {
    cfg.construction = Construction::fibonacci;
    for (int m = 7; m <= 25; ++m) cfg.fibonacci_indices.push_back(m);
    cfg.integrand = {IntegrandKind::bivar, 1.0, {}};
    cfg.rules = {RuleKind::lattice, RuleKind::tent, RuleKind::sym};
    return cfg;
  }
  struct Fig2 {
    std::string_view name;
    IntegrandKind kind;
    double c;
    std::size_t s;
    double decay;
  };
  static constexpr Fig2 kFig2[] = {
      {"f1_s20", IntegrandKind::f1, 1.3, 20, 2.0},   {"f2c1_s20", IntegrandKind::f2, 1.0, 20, 2.0},
      {"f2c2_s20", IntegrandKind::f2, 2.0, 20, 2.0}, {"f1_s100", IntegrandKind::f1, 1.3, 100, 3.0},
      {"f2c1_s100", IntegrandKind::f2, 1.0, 100, 3.0}, {"f2c2_s100", IntegrandKind::f2, 2.0, 100, 3.0},
  };
  for (const auto& p : kFig2) {
    if (p.name != name) continue;
    cfg.construction = Construction::cbc_tent;
    for (int e = 6; e <= 14; ++e) cfg.n_list.push_back(nearest_prime(std::uint64_t{1} << e));
    cfg.integrand = {p.kind, p.c, power_sequence(p.s, p.decay)};
    cfg.rules = {RuleKind::tent};
    cfg.cbc_gamma = power_sequence(p.s, p.decay, 1.0 / (4.0 * kTentConstant));
    return cfg;
  }
  throw PreconditionError("unknown experiment '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  return {"figure1", "f1_s20", "f2c1_s20", "f2c2_s20", "f1_s100", "f2c1_s100", "f2c2_s100"};
}

std::optional<double> ConvergenceRow::error(RuleKind kind) const {
  switch (kind) {
    case RuleKind::lattice:
      return err_lattice;
    case RuleKind::tent:
      return err_tent;
    case RuleKind::sym:
      return err_sym;
  }
  return std::nullopt;
}

SlopeFit slope_fit(std::span<const double> n, std::span<const double> err) {
  if (n.size() != err.size()) throw PreconditionError("slope_fit needs matching N and error lists");
  SlopeFit fit;
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!(err[i] >= kErrorFloor) || !std::isfinite(err[i])) {
      fit.warnings.push_back("N = " + std::to_string(static_cast<std::uint64_t>(n[i])) +
                             " excluded from the slope window (error below 1e-15)");
      continue;
    }
    lx.push_back(std::log(n[i]));
    ly.push_back(std::log(err[i]));
  }
  if (lx.size() < 3) throw PreconditionError("slope fit needs at least 3 usable points");
  const double m = static_cast<double>(lx.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / m;
  const double my = sy / m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw PreconditionError("slope fit needs at least two distinct N");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.used = lx.size();
  return fit;
}

SlopeFit slope_fit(std::span<const ConvergenceRow> rows, RuleKind column, std::uint64_t n_lo, std::uint64_t n_hi) {
  std::vector<double> n;
  std::vector<double> err;
  for (const auto& r : rows) {
    if (r.n < n_lo || r.n > n_hi) continue;
    const auto e = r.error(column);
    n.push_back(static_cast<double>(r.n));
    err.push_back(e ? *e : std::nan(""));
  }
  return slope_fit(n, err);
}

double qmc_average(const Integrand& f, const LatticeRule& rule, RuleKind kind) {
  rule.validate();
  const std::size_t s = rule.dims();
  if (s != f.dims()) throw PreconditionError("integrand and rule dimensions differ");
  if (kind == RuleKind::sym && s > kMaxSymmetrizeDims) throw GuardError("sym rule refused for s > 20");
  const std::uint64_t n = rule.n;
  const double nd = static_cast<double>(n);
  std::vector<double> values(n);
  std::vector<std::uint64_t> idx(s, 0);
  std::vector<double> x(s);
  std::vector<double> xr(s);
  std::vector<double> refl;
  if (kind == RuleKind::sym) refl.resize(std::size_t{1} << s);
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      const std::uint64_t v = idx[j];
      if (kind == RuleKind::tent)
        x[j] = static_cast<double>(2 * v <= n ? 2 * v : 2 * (n - v)) / nd;
      else
        x[j] = static_cast<double>(v) / nd;
      idx[j] += rule.z[j];
      if (idx[j] >= n) idx[j] -= n;
    }
    if (kind != RuleKind::sym) {
      values[i] = integrand_eval(f, x);
      continue;
    }
    for (std::size_t u = 0; u < refl.size(); ++u) {
      for (std::size_t j = 0; j < s; ++j) xr[j] = (u >> j) & 1 ? 1.0 - x[j] : x[j];
      refl[u] = integrand_eval(f, xr);
    }
    values[i] = simd::pairwise_sum(refl) / static_cast<double>(refl.size());
  }
  return simd::pairwise_sum(values) / nd;
}

double qmc_average(const Integrand& f, const PointSet& ps) {
  if (ps.dims() != f.dims()) throw PreconditionError("integrand and point set dimensions differ");
  if (ps.size() == 0) throw PreconditionError("point set is empty");
  std::vector<double> values(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) values[i] = integrand_eval(f, ps.point(i));
  return simd::pairwise_sum(values) / static_cast<double>(ps.size());
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult result;
  result.config = cfg;
  const double exact = exact_integral(cfg.integrand);
  const std::size_t s = cfg.integrand.dims();
  const auto counts = cfg.point_counts();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    LatticeRule rule;
    if (cfg.construction == Construction::fibonacci) {
      rule = fibonacci_rule(cfg.fibonacci_indices[i]);
    } else {
      CbcCriterion crit{CbcCriterion::Kind::tent, 2, WeightScheme::product(cfg.cbc_gamma)};
      const auto cbc = is_prime(counts[i]) ? cbc_fast(counts[i], s, crit) : cbc_plain(counts[i], s, crit);
      rule = make_rule(counts[i], cbc.z);
    }
    ConvergenceRow row;
    row.n = rule.n;
    row.points_used = rule.n;
    row.z = rule.z;
    for (RuleKind r : cfg.rules) {
      const double err = std::fabs(qmc_average(cfg.integrand, rule, r) - exact);
      switch (r) {
        case RuleKind::lattice:
          row.err_lattice = err;
          break;
        case RuleKind::tent:
          row.err_tent = err;
          break;
        case RuleKind::sym:
          row.err_sym = err;
          row.points_used = distinct_count(symmetrize(rank1_points(rule)));
          break;
      }
    }
    result.rows.push_back(std::move(row));
  }
  if (result.rows.size() >= 3) {
    for (RuleKind r : cfg.rules) {
      try {
        result.slopes.emplace_back(r, slope_fit(result.rows, r, 0, UINT64_MAX));
      } catch (const PreconditionError&) {
        // Too few usable points for this column; no slope reported.
      }
    }
  }
  return result;
}

}  // namespace latqmc
