// AVX2/FMA variants. Compiled with -mavx2 -mfma; reached only through the
// dispatch table after a CPU feature check. Keep standard-library includes out
// of this file.
#include <immintrin.h>

#include "tables.hpp"

namespace latqmc::simd::detail {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const double l0 = _mm_cvtsd_f64(lo);
  const double l1 = _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
  const double h0 = _mm_cvtsd_f64(hi);
  const double h1 = _mm_cvtsd_f64(_mm_unpackhi_pd(hi, hi));
  return (l0 + l1) + (h0 + h1);
}

inline __m256d vabs(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

double sum_leaf(const double* v, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(v + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += v[i];
  return s;
}

double pairwise_sum_avx2(const double* v, std::size_t n) {
  if (n <= kSumLeaf) return sum_leaf(v, n);
  const std::size_t half = n / 2;
  return pairwise_sum_avx2(v, half) + pairwise_sum_avx2(v + half, n - half);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

// Lane k holds ((start + k) * step) mod n; advancing adds 4*step mod n.
struct IndexStream {
  __m256i idx;
  __m256i inc;
  __m256i n_minus_1;
  __m256i n;

  IndexStream(std::uint64_t start, std::uint64_t step, std::uint64_t modulus) {
    const std::uint64_t s = step % modulus;
    std::uint64_t i0 = mulmod(start, s, modulus);
    long long lanes[4];
    for (int k = 0; k < 4; ++k) {
      lanes[k] = static_cast<long long>(i0);
      i0 += s;
      if (i0 >= modulus) i0 -= modulus;
    }
    idx = _mm256_setr_epi64x(lanes[0], lanes[1], lanes[2], lanes[3]);
    inc = _mm256_set1_epi64x(static_cast<long long>(mulmod(4, s, modulus)));
    n_minus_1 = _mm256_set1_epi64x(static_cast<long long>(modulus - 1));
    n = _mm256_set1_epi64x(static_cast<long long>(modulus));
  }

  void advance() {
    idx = _mm256_add_epi64(idx, inc);
    const __m256i wrap = _mm256_cmpgt_epi64(idx, n_minus_1);
    idx = _mm256_sub_epi64(idx, _mm256_and_si256(wrap, n));
  }

  std::uint64_t lane0() const { return static_cast<std::uint64_t>(_mm256_extract_epi64(idx, 0)); }
};

double gather_range(const double* w, const double* table, std::uint64_t n, std::uint64_t step,
                    std::uint64_t lo, std::uint64_t hi) {
  if (hi - lo > kGatherLeaf) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    return gather_range(w, table, n, step, lo, mid) + gather_range(w, table, n, step, mid, hi);
  }
  IndexStream stream(lo, step, n);
  __m256d acc = _mm256_setzero_pd();
  std::uint64_t i = lo;
  for (; i + 4 <= hi; i += 4) {
    const __m256d t = _mm256_i64gather_pd(table, stream.idx, 8);
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), t, acc);
    stream.advance();
  }
  double s = hsum(acc);
  std::uint64_t idx = stream.lane0();
  const std::uint64_t inc = step % n;
  for (; i < hi; ++i) {
    s += w[i] * table[idx];
    idx += inc;
    if (idx >= n) idx -= n;
  }
  return s;
}

double gather_dot_avx2(const double* w, const double* table, std::uint64_t n, std::uint64_t step) {
  if (n == 0) return 0.0;
  return gather_range(w, table, n, step, 0, n);
}

void excess_gather_avx2(double* r, const double* table, std::uint64_t n, std::uint64_t step,
                        double weight) {
  if (n == 0) return;
  IndexStream stream(0, step, n);
  const __m256d wv = _mm256_set1_pd(weight);
  const __m256d one = _mm256_set1_pd(1.0);
  std::uint64_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_mul_pd(wv, _mm256_i64gather_pd(table, stream.idx, 8));
    const __m256d rv = _mm256_loadu_pd(r + i);
    _mm256_storeu_pd(r + i, _mm256_fmadd_pd(a, _mm256_add_pd(one, rv), rv));
    stream.advance();
  }
  std::uint64_t idx = stream.lane0();
  const std::uint64_t inc = step % n;
  for (; i < n; ++i) {
    const double a = weight * table[idx];
    r[i] = r[i] + a * (1.0 + r[i]);
    idx += inc;
    if (idx >= n) idx -= n;
  }
}

inline __m256d horner(const double* c, std::size_t len, __m256d t) {
  if (len == 0) return _mm256_setzero_pd();
  __m256d p = _mm256_set1_pd(c[len - 1]);
  for (std::size_t k = len - 1; k-- > 0;) p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(c[k]));
  return p;
}

inline double horner1(const double* c, std::size_t len, double t) {
  if (len == 0) return 0.0;
  double p = c[len - 1];
  for (std::size_t k = len - 1; k-- > 0;) p = p * t + c[k];
  return p;
}

void excess_pair_avx2(double* r, const PairRowArgs& a) {
  const __m256d xv = _mm256_set1_pd(a.x);
  const __m256d xm1 = _mm256_set1_pd(a.x - 1.0);
  const __m256d gv = _mm256_set1_pd(a.gamma);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t m = 0;
  for (; m + 4 <= a.count; m += 4) {
    const __m256d y = _mm256_loadu_pd(a.y + m);
    __m256d p = horner(a.poly, a.poly_len, vabs(_mm256_sub_pd(xv, y)));
    if (a.reflect) {
      const __m256d q = horner(a.poly, a.poly_len, vabs(_mm256_add_pd(xm1, y)));
      p = _mm256_mul_pd(half, _mm256_add_pd(p, q));
    }
    __m256d f = _mm256_setzero_pd();
    for (std::size_t t = 0; t < a.feature_count; ++t)
      f = _mm256_fmadd_pd(_mm256_set1_pd(a.x_feature_weights[t]), _mm256_loadu_pd(a.y_features[t] + m), f);
    const __m256d inc = _mm256_mul_pd(gv, _mm256_add_pd(f, p));
    const __m256d rv = _mm256_loadu_pd(r + m);
    _mm256_storeu_pd(r + m, _mm256_fmadd_pd(inc, _mm256_add_pd(one, rv), rv));
  }
  for (; m < a.count; ++m) {
    const double y = a.y[m];
    double p = horner1(a.poly, a.poly_len, __builtin_fabs(a.x - y));
    if (a.reflect) p = 0.5 * (p + horner1(a.poly, a.poly_len, __builtin_fabs(a.x + y - 1.0)));
    double f = 0.0;
    for (std::size_t t = 0; t < a.feature_count; ++t) f += a.x_feature_weights[t] * a.y_features[t][m];
    const double inc = a.gamma * (f + p);
    r[m] = r[m] + inc * (1.0 + r[m]);
  }
}

}  // namespace

const KernelTable avx2_table{Level::avx2, &pairwise_sum_avx2, &gather_dot_avx2, &excess_gather_avx2,
                             &excess_pair_avx2};

}  // namespace latqmc::simd::detail
