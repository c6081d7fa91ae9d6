#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "latqmc/weights.hpp"

namespace latqmc {

enum class KernelFamily { korobov, cosine, kor_plus_cos, sobolev, sob_odd, sob_odd_alpha };

std::string_view family_name(KernelFamily family);
KernelFamily parse_family(std::string_view name);

inline constexpr std::int64_t kDefaultSeriesKmax = 10000;

struct KernelSpec {
  KernelFamily family = KernelFamily::korobov;
  double alpha = 1.0;
  WeightScheme weights;
  std::int64_t series_kmax = kDefaultSeriesKmax;

  void validate() const;
  /// Korobov with integer alpha and the Sobolev families have Bernoulli
  /// closed forms; everything else is a truncated series.
  bool closed_form() const;
};

/// Kernel value plus a rigorous bound on the truncation error (0 for closed
/// forms).
struct KernelValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

/// K_{alpha,1,1}(x, y) of the given family. kmax is used by series families only.
KernelValue kernel_1d(KernelFamily family, double alpha, double x, double y,
                      std::int64_t kmax = kDefaultSeriesKmax);

/// Korobov kernel by its cosine series, for any alpha > 1/2.
KernelValue korobov_series_1d(double alpha, double x, double y, std::int64_t kmax);

/// 1 + sum_u gamma_u prod_{j in u} (K_1(x_j, y_j) - 1).
KernelValue kernel(const KernelSpec& spec, std::span<const double> x, std::span<const double> y);

/// Integral over y in [0,1]^s of kernel(spec, x, y), coordinate by coordinate,
/// with composite Gauss-Legendre (quad_points nodes per coordinate, split at x_j).
double kernel_mean_identity_check(const KernelSpec& spec, std::span<const double> x, int quad_points);

/// K_1(x, y) - 1 of a closed-form kernel, written as
///   sum_t coeffs[t] b_{degrees[t]}(x) b_{degrees[t]}(y) + P(|x - y|)
/// with P given by ascending coefficients. With `reflect`, P(|x - y|) is
/// replaced by (P(|x - y|) + P(|x + y - 1|)) / 2.
struct PairIncrement {
  std::vector<int> degrees;
  std::vector<double> coeffs;
  std::vector<double> poly;
  bool reflect = false;

  double operator()(double x, double y) const;
};

PairIncrement pair_increment(KernelFamily family, int alpha);

/// Average of K^{sob,odd+alpha}_1 - 1 over the reflections (x, y), (1-x, y),
/// (x, 1-y), (1-x, 1-y); alpha even. Odd-degree features cancel, leaving
/// b_alpha(x) b_alpha(y) - (b_2alpha(|x-y|) + b_2alpha(|x+y-1|)) / 2.
PairIncrement sym_averaged_increment(int alpha);

/// Checks that alpha is a positive integer and returns it.
int require_integer_alpha(double alpha, const char* context);

}  // namespace latqmc
