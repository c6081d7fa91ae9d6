#pragma once

// Data-parallel inner loops shared by the worst-case-error and CBC code.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2/FMA variant. The variant is chosen once at first use from the CPU
// feature bits; setting LATQMC_SIMD=scalar (or avx2) in the environment
// overrides the choice. The signatures use raw pointers on purpose: the AVX2
// translation unit is compiled with -mavx2 and must not instantiate inline
// library templates that could leak into the rest of the program.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace latqmc::simd {

enum class Level { scalar, avx2 };

std::string_view level_name(Level level);

/// Arguments of one row of the pairwise kernel evaluation. For each m the
/// kernel computes
///
///   a = gamma * ( sum_t x_feature_weights[t] * y_features[t][m] + P(|x - y[m]|) )
///
/// where P is the polynomial with ascending coefficients `poly`; with
/// `reflect` set, P(|x - y|) is replaced by (P(|x - y|) + P(|x + y - 1|)) / 2.
/// The result is folded into the running excess r[m] <- r[m] + a (1 + r[m]),
/// which tracks prod_j (1 + a_j) - 1 without cancellation.
struct PairRowArgs {
  const double* y = nullptr;
  std::size_t count = 0;
  const double* const* y_features = nullptr;
  const double* x_feature_weights = nullptr;
  std::size_t feature_count = 0;
  const double* poly = nullptr;
  std::size_t poly_len = 0;
  bool reflect = false;
  double x = 0.0;
  double gamma = 0.0;
};

struct KernelTable {
  Level level;
  /// Pairwise sum: recursive halving down to 64-element leaves.
  double (*pairwise_sum)(const double* v, std::size_t n);
  /// sum_{i<n} w[i] * table[(i * step) mod n], pairwise over 256-element leaves.
  double (*gather_dot)(const double* w, const double* table, std::uint64_t n, std::uint64_t step);
  /// r[i] <- r[i] + a (1 + r[i]) with a = weight * table[(i * step) mod n].
  void (*excess_gather)(double* r, const double* table, std::uint64_t n, std::uint64_t step,
                        double weight);
  void (*excess_pair)(double* r, const PairRowArgs& args);
};

bool available(Level level);

/// Kernel table for an explicit level. Throws PreconditionError if the level
/// is not available on this machine/build.
const KernelTable& kernels(Level level);

/// The dispatched table (best available level unless overridden by LATQMC_SIMD).
const KernelTable& active();

inline double pairwise_sum(std::span<const double> v) { return active().pairwise_sum(v.data(), v.size()); }

}  // namespace latqmc::simd
