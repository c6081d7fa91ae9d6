#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "latqmc/kernels.hpp"
#include "latqmc/lattice_points.hpp"
#include "latqmc/weights.hpp"

namespace latqmc {

enum class ReportKind { exact_quadratic_form, closed_form_lattice, dual_series_truncated, theorem_bound, corollary_bound };

std::string_view report_kind_name(ReportKind kind);

/// A squared worst-case error or a bound on it.
struct ErrorReport {
  double value = 0.0;
  ReportKind kind = ReportKind::exact_quadratic_form;
  std::optional<std::int64_t> truncation_kmax;
  std::optional<double> tail_estimate;
  std::optional<double> lambda;
  /// Amount by which a slightly negative floating-point result was raised to 0.
  double clamped = 0.0;
};

/// c' = 58/3.
inline constexpr double kTentConstant = 58.0 / 3.0;

/// Point-count guard of the O(|P|^2) evaluations.
inline constexpr std::size_t kMaxQuadraticFormPoints = 20000;

/// -1 + |P|^{-2} sum_{x,y in P} K(x, y) for kernels with unit mean
/// (integer-alpha Korobov and the Sobolev families). Accumulated as the mean of
/// K - 1, so no O(1) term is ever cancelled.
ErrorReport wce_sq_quadratic_form(const KernelSpec& spec, const PointSet& ps);

/// Squared error of the lattice rule in the Korobov space of integer order alpha:
/// (1/N) sum_x sum_u gamma_u prod_{j in u} (-1)^{alpha+1} (2 pi)^{2 alpha} b_{2 alpha}(x_j).
ErrorReport wce_sq_korobov_lattice(int alpha, const WeightScheme& weights, const LatticeRule& rule);

/// gamma'_u = gamma_u (c' / (4 pi^4))^{|u|}.
WeightScheme tent_modified_weights(const WeightScheme& weights);

/// gamma''_u = gamma_u (3 / (2^{2 alpha + 1} pi^{2 alpha}))^{|u|}, alpha even.
WeightScheme sym_modified_weights(int alpha, const WeightScheme& weights);

/// Squared error of the tent-transformed rule in the order-2 Sobolev space.
ErrorReport wce_tent_exact(const WeightScheme& weights, const LatticeRule& rule);

/// B^2 with B the squared Korobov order-1 error under weights gamma'^{1/2}.
ErrorReport wce_tent_bound(const WeightScheme& weights, const LatticeRule& rule);

/// sum_u gamma'_u (sum_{k_u in dual_u} prod 1/k_j^2)^2 with the inner sums cut
/// at |k_j| <= kmax. tail_estimate is the remaining part, obtained from the
/// exact inner sums (1/N) sum_x prod_{j in u} 4 pi^2 b_2(x_j).
ErrorReport wce_tent_middle_term(const WeightScheme& weights, const LatticeRule& rule, std::int64_t kmax);

/// Squared error of the symmetrized rule in the space with kernel
/// K^{sob,odd+alpha}, alpha even, using the reflection-averaged kernel on the
/// N plain points.
ErrorReport wce_sym_exact(int alpha, const WeightScheme& weights, const LatticeRule& rule);

/// B^2 with B the squared Korobov order alpha/2 error under weights gamma''^{1/2}.
ErrorReport wce_sym_bound(int alpha, const WeightScheme& weights, const LatticeRule& rule);

enum class CorollaryKind { tent, sym };

/// (1/(N-1))^{1/lambda} (sum_u gamma_u^{lambda/2} f^{|u|})^{1/lambda}; lambda in
/// (1/2, 1] for tent, (1/alpha, 1] for sym; N prime.
ErrorReport corollary_bound(CorollaryKind kind, int alpha, const WeightScheme& weights, std::uint64_t n,
                            double lambda);

/// Lower end of the admissible lambda interval.
double corollary_lambda_min(CorollaryKind kind, int alpha);

/// Korobov factor table omega[k] = (-1)^{alpha+1} (2 pi)^{2 alpha} b_{2 alpha}(k/N),
/// k = 0..N-1, mirrored so omega[N-k] == omega[k] bit for bit.
std::vector<double> korobov_omega(int alpha, std::uint64_t n);

}  // namespace latqmc
