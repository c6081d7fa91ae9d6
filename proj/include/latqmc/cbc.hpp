#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "latqmc/weights.hpp"

namespace latqmc {

/// Korobov-space CBC criteria.
///   tent:          order-1 Korobov error under tent-modified weights gamma'^{1/2}
///   sym:           order-alpha/2 Korobov error under gamma''^{1/2}, alpha even
///   plain_korobov: order-alpha Korobov error under the weights as given
struct CbcCriterion {
  enum class Kind { tent, sym, plain_korobov };
  Kind kind = Kind::tent;
  int alpha = 2;
  WeightScheme base_weights;

  /// Korobov order actually searched over.
  int korobov_order() const;
  /// Weights entering the Korobov criterion (first s coordinates).
  WeightScheme effective_weights(std::size_t s) const;
};

std::string_view criterion_name(CbcCriterion::Kind kind);
CbcCriterion::Kind parse_criterion(std::string_view name);

struct CbcResult {
  std::uint64_t n = 0;
  bool prime = false;
  std::vector<std::uint64_t> z;
  /// Criterion of the prefix rule (z_1..z_d) after each component.
  std::vector<double> per_dimension_error;
  double elapsed_seconds = 0.0;
};

/// O(s N^2) greedy search over z_d in {1..N-1}; z_1 = 1; ties go to the
/// smallest candidate. Product and POD weights.
CbcResult cbc_plain(std::uint64_t n, std::size_t s, const CbcCriterion& crit);

/// Same result for prime N via the primitive-root reordering and an FFT
/// correlation per dimension. Candidates whose FFT value lies within a
/// rounding window of the minimum are re-evaluated exactly and selected with
/// the rule of cbc_plain, so both paths return the same vector.
CbcResult cbc_fast(std::uint64_t n, std::size_t s, const CbcCriterion& crit);

}  // namespace latqmc
