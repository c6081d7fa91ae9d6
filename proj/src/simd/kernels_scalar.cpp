#include <cmath>

#include "tables.hpp"

namespace latqmc::simd::detail {
namespace {

double sum_leaf(const double* v, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += v[i];
  return s;
}

double pairwise_sum_scalar(const double* v, std::size_t n) {
  if (n <= kSumLeaf) return sum_leaf(v, n);
  const std::size_t half = n / 2;
  return pairwise_sum_scalar(v, half) + pairwise_sum_scalar(v + half, n - half);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

double gather_range(const double* w, const double* table, std::uint64_t n, std::uint64_t step,
                    std::uint64_t lo, std::uint64_t hi) {
  if (hi - lo > kGatherLeaf) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    return gather_range(w, table, n, step, lo, mid) + gather_range(w, table, n, step, mid, hi);
  }
  std::uint64_t idx = mulmod(lo, step, n);
  const std::uint64_t inc = step % n;
  double s = 0.0;
  for (std::uint64_t i = lo; i < hi; ++i) {
    s += w[i] * table[idx];
    idx += inc;
    if (idx >= n) idx -= n;
  }
  return s;
}

double gather_dot_scalar(const double* w, const double* table, std::uint64_t n, std::uint64_t step) {
  if (n == 0) return 0.0;
  return gather_range(w, table, n, step, 0, n);
}

void excess_gather_scalar(double* r, const double* table, std::uint64_t n, std::uint64_t step,
                          double weight) {
  std::uint64_t idx = 0;
  const std::uint64_t inc = n == 0 ? 0 : step % n;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double a = weight * table[idx];
    r[i] = r[i] + a * (1.0 + r[i]);
    idx += inc;
    if (idx >= n) idx -= n;
  }
}

double horner(const double* c, std::size_t len, double t) {
  if (len == 0) return 0.0;
  double p = c[len - 1];
  for (std::size_t k = len - 1; k-- > 0;) p = p * t + c[k];
  return p;
}

void excess_pair_scalar(double* r, const PairRowArgs& a) {
  for (std::size_t m = 0; m < a.count; ++m) {
    const double y = a.y[m];
    double p = horner(a.poly, a.poly_len, std::fabs(a.x - y));
    if (a.reflect) p = 0.5 * (p + horner(a.poly, a.poly_len, std::fabs(a.x + y - 1.0)));
    double f = 0.0;
    for (std::size_t t = 0; t < a.feature_count; ++t) f += a.x_feature_weights[t] * a.y_features[t][m];
    const double inc = a.gamma * (f + p);
    r[m] = r[m] + inc * (1.0 + r[m]);
  }
}

}  // namespace

const KernelTable scalar_table{Level::scalar, &pairwise_sum_scalar, &gather_dot_scalar,
                               &excess_gather_scalar, &excess_pair_scalar};

}  // namespace latqmc::simd::detail
