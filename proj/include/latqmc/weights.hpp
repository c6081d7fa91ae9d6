#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

namespace latqmc {

/// Subsets of 1:s are bitmasks; bit j (0-based) stands for coordinate j+1.
using SubsetMask = std::uint64_t;

inline constexpr std::size_t kMaxGeneralDims = 20;

/// Weights gamma_u over nonempty coordinate subsets. gamma_emptyset = 1 is
/// implicit and never stored.
///   product:  gamma_u = prod_{j in u} gamma_j
///   pod:      gamma_u = Gamma_{|u|} prod_{j in u} gamma_j
///   general:  sparse map u -> gamma_u, absent subsets are 0
class WeightScheme {
 public:
  enum class Form { product, pod, general };

  WeightScheme() = default;

  static WeightScheme product(std::vector<double> gamma);
  /// order_weights[l-1] = Gamma_l.
  static WeightScheme pod(std::vector<double> order_weights, std::vector<double> gamma);
  static WeightScheme general(std::size_t dims, std::map<SubsetMask, double> subsets);

  Form form() const { return form_; }
  std::size_t dims() const { return dims_; }
  std::span<const double> gamma() const { return gamma_; }
  std::span<const double> order_weights() const { return order_; }
  const std::map<SubsetMask, double>& subsets() const { return subsets_; }

  double weight(SubsetMask u) const;

  /// sum over nonempty u of gamma_u prod_{j in u} a_j. Product weights use
  /// the running excess r <- r + gamma_j a_j (1 + r), POD weights an order
  /// recursion over elementary symmetric sums, general weights the sparse map.
  double subset_sum(std::span<const double> a) const;

  /// gamma_u * c^{|u|}.
  WeightScheme scaled_per_coordinate(double c) const;
  /// gamma_u^p.
  WeightScheme pow(double p) const;
  WeightScheme sqrt() const { return pow(0.5); }
  /// c * gamma_u (product weights become POD with constant Gamma).
  WeightScheme scaled(double c) const;
  /// Restriction to the first d coordinates.
  WeightScheme prefix(std::size_t d) const;

 private:
  Form form_ = Form::product;
  std::size_t dims_ = 0;
  std::vector<double> gamma_;
  std::vector<double> order_;
  std::map<SubsetMask, double> subsets_;
};

std::string_view form_name(WeightScheme::Form form);

int subset_size(SubsetMask u);

}  // namespace latqmc
