#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace latqmc {

/// Rank-1 lattice: N points, generating vector z with 1 <= z_j <= N-1.
struct LatticeRule {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> z;

  std::size_t dims() const { return z.size(); }

  /// Validates the invariants; throws PreconditionError.
  /// N is capped below 2^32 so every n*z_j product fits in 64 bits.
  void validate() const;

  /// Components j with gcd(z_j, N) != 1. Non-coprime entries are allowed and
  /// only reported.
  std::vector<std::size_t> non_coprime_components() const;
};

LatticeRule make_rule(std::uint64_t n, std::vector<std::uint64_t> z);

enum class PointKind { plain, tent, symmetrized, external };

std::string_view kind_name(PointKind kind);

/// Finite multiset of points in [0,1]^s, row-major. Point sets derived from a
/// lattice also keep the exact integer numerators over the common
/// denominator N, so reflections and duplicate detection stay exact.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t dims, PointKind kind, std::vector<double> coords);
  PointSet(std::size_t dims, PointKind kind, std::vector<std::uint64_t> numerators, std::uint64_t denominator);

  std::size_t dims() const { return dims_; }
  std::size_t size() const { return dims_ == 0 ? 0 : coords_.size() / dims_; }
  PointKind kind() const { return kind_; }
  bool exact() const { return denominator_ != 0; }
  std::uint64_t denominator() const { return denominator_; }

  std::span<const double> point(std::size_t i) const { return {coords_.data() + i * dims_, dims_}; }
  double operator()(std::size_t i, std::size_t j) const { return coords_[i * dims_ + j]; }
  std::span<const double> data() const { return coords_; }
  std::span<const std::uint64_t> numerators() const { return numerators_; }

  /// Coordinate j of every point (structure-of-arrays view, copied).
  std::vector<double> column(std::size_t j) const;

 private:
  std::size_t dims_ = 0;
  PointKind kind_ = PointKind::plain;
  std::vector<double> coords_;
  std::vector<std::uint64_t> numerators_;
  std::uint64_t denominator_ = 0;
};

/// points[n] = ((n z_j) mod N) / N, n = 0..N-1.
PointSet rank1_points(const LatticeRule& rule);

/// phi(x) = 1 - |2x - 1|.
double tent(double x);

/// Componentwise tent map of a plain point set. Duplicates are kept.
PointSet tent_transform(const PointSet& ps);

/// Union over all u of the reflections x_j -> 1 - x_j (j in u), listed
/// subset by subset (u as a bitmask, 0 .. 2^s - 1). 2^s * N points.
PointSet symmetrize(const PointSet& ps);

inline constexpr std::size_t kMaxSymmetrizeDims = 20;

/// Number of distinct points of a symmetrized multiset.
std::size_t distinct_count(const PointSet& ps);

/// k . z == 0 (mod N).
bool is_dual(std::span<const std::int64_t> k, const LatticeRule& rule);

/// All k_u in (Z \ {0})^{|u|} with |k_j| <= kmax and (k_u, 0) . z == 0 mod N,
/// lexicographic order. `u` holds 0-based coordinate indices. Brute-force scan.
std::vector<std::vector<std::int64_t>> dual_projected(const LatticeRule& rule, std::span<const std::size_t> u,
                                                      std::int64_t kmax);

/// (1/N) sum_x e^{2 pi i k.x}, exactly 1 or 0 via the modular test.
double character_sum(const LatticeRule& rule, std::span<const std::int64_t> k);

/// Same quantity by direct complex summation over the points (real part).
double character_sum_direct(const LatticeRule& rule, std::span<const std::int64_t> k);

/// Fibonacci lattice: N = F_m, z = (1, F_{m-1}), F_1 = F_2 = 1; 3 <= m <= 47.
LatticeRule fibonacci_rule(int m);

std::uint64_t fibonacci(int m);

}  // namespace latqmc
