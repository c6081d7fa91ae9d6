#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latqmc/lattice_points.hpp"

namespace latqmc {

enum class IntegrandKind { bivar, f1, f2 };

/// bivar: y e^{xy} / (e - 2) on [0,1]^2.
/// f1:    prod_j [1 + omega_j (x_j^c - 1/(1+c))].
/// f2:    prod_j [1 + omega_j / (1 + omega_j x_j^c)].
struct Integrand {
  IntegrandKind kind = IntegrandKind::bivar;
  double c = 1.0;
  std::vector<double> omega;

  std::size_t dims() const { return kind == IntegrandKind::bivar ? 2 : omega.size(); }
};

std::string_view integrand_name(IntegrandKind kind);
IntegrandKind parse_integrand(std::string_view name);

double integrand_eval(const Integrand& f, std::span<const double> x);

/// Closed-form integral; f2 only for c in {1, 2}.
double exact_integral(const Integrand& f);

enum class RuleKind { lattice, tent, sym };

std::string_view rule_name(RuleKind kind);

enum class Construction { fibonacci, cbc_tent };

struct ExperimentConfig {
  std::string name = "custom";
  Construction construction = Construction::fibonacci;
  /// Fibonacci indices m (N = F_m) for the Fibonacci construction.
  std::vector<int> fibonacci_indices;
  /// Point counts for the CBC construction (prime for the fast search).
  std::vector<std::uint64_t> n_list;
  Integrand integrand;
  std::vector<RuleKind> rules;
  /// Product weights of the tent CBC criterion.
  std::vector<double> cbc_gamma;

  /// Point counts in run order. Throws unless strictly increasing.
  std::vector<std::uint64_t> point_counts() const;
  void validate() const;
};

/// Named presets: figure1, f1_s20, f2c1_s20, f2c2_s20, f1_s100, f2c1_s100, f2c2_s100.
ExperimentConfig preset(std::string_view name);
std::vector<std::string> preset_names();

/// omega_j = j^{-p}, j = 1..s.
std::vector<double> power_sequence(std::size_t s, double p, double scale = 1.0);

struct ConvergenceRow {
  std::uint64_t n = 0;
  std::uint64_t points_used = 0;
  std::optional<double> err_lattice;
  std::optional<double> err_tent;
  std::optional<double> err_sym;
  std::vector<std::uint64_t> z;

  std::optional<double> error(RuleKind kind) const;
};

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t used = 0;
  std::vector<std::string> warnings;
};

/// Errors below this floor are excluded from slope fits.
inline constexpr double kErrorFloor = 1e-15;

/// Least-squares slope of ln(err) against ln(N). Points with err < 1e-15 or no
/// value are dropped with a warning; fewer than 3 remaining points is a
/// PreconditionError.
SlopeFit slope_fit(std::span<const double> n, std::span<const double> err);

/// Slope over the rows with n_lo <= N <= n_hi for one error column.
SlopeFit slope_fit(std::span<const ConvergenceRow> rows, RuleKind column, std::uint64_t n_lo, std::uint64_t n_hi);

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<ConvergenceRow> rows;
  std::vector<std::pair<RuleKind, SlopeFit>> slopes;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Equal-weight average of f over the lattice points, the tent-transformed
/// points, or the 2^s N symmetrized multiset (never materialized).
double qmc_average(const Integrand& f, const LatticeRule& rule, RuleKind kind);

/// Equal-weight average of f over an explicit point set.
double qmc_average(const Integrand& f, const PointSet& ps);

}  // namespace latqmc
