#include "latqmc/cbc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <string>

#include "latqmc/errors.hpp"
#include "latqmc/fft.hpp"
#include "latqmc/number_theory.hpp"
#include "latqmc/simd/kernels.hpp"
#include "latqmc/worst_case_error.hpp"

namespace latqmc {

int CbcCriterion::korobov_order() const {
  switch (kind) {
    case Kind::tent:
      return 1;
    case Kind::sym:
      if (alpha < 2 || alpha % 2 != 0) throw PreconditionError("sym criterion requires an even alpha >= 2");
      return alpha / 2;
    case Kind::plain_korobov:
      if (alpha < 1) throw PreconditionError("Korobov criterion requires alpha >= 1");
      return alpha;
  }
  return 1;
}

WeightScheme CbcCriterion::effective_weights(std::size_t s) const {
  if (base_weights.dims() < s) throw PreconditionError("CBC weights cover fewer coordinates than requested");
  const WeightScheme w = base_weights.prefix(s);
  switch (kind) {
    case Kind::tent:
      return tent_modified_weights(w).sqrt();
    case Kind::sym:
      return sym_modified_weights(alpha, w).sqrt();
    case Kind::plain_korobov:
      return w;
  }
  return w;
}

std::string_view criterion_name(CbcCriterion::Kind kind) {
  switch (kind) {
    case CbcCriterion::Kind::tent:
      return "tent";
    case CbcCriterion::Kind::sym:
      return "sym";
    case CbcCriterion::Kind::plain_korobov:
      return "korobov";
  }
  return "unknown";
}

CbcCriterion::Kind parse_criterion(std::string_view name) {
  if (name == "tent") return CbcCriterion::Kind::tent;
  if (name == "sym") return CbcCriterion::Kind::sym;
  if (name == "korobov") return CbcCriterion::Kind::plain_korobov;
  throw PreconditionError("unknown CBC criterion '" + std::string(name) + "'");
}

namespace {

// Per-point state of the prefix rule. Product weights keep the running excess
// prod_j (1 + gamma_j omega_j(n)) - 1; POD weights keep the elementary
// symmetric sums e_l(n) of gamma_j omega_j(n), l = 0..d.
class PrefixState {
 public:
  PrefixState(const WeightScheme& w, std::uint64_t n) : w_(w), n_(n), kt_(simd::active()) {
    if (pod()) {
      elem_.assign(w.dims() + 1, std::vector<double>(n, 0.0));
      elem_[0].assign(n, 1.0);
    } else {
      excess_.assign(n, 0.0);
    }
  }

  // The criterion of (z_1..z_d, z) equals value() + gamma_{d+1} * sum_n q(n) omega(n z) / N.
  void next(std::vector<double>& q) const {
    q.resize(n_);
    if (!pod()) {
      for (std::uint64_t i = 0; i < n_; ++i) q[i] = 1.0 + excess_[i];
      return;
    }
    const auto order = w_.order_weights();
    std::fill(q.begin(), q.end(), 0.0);
    for (std::size_t l = 1; l <= d_ + 1; ++l)
      for (std::uint64_t i = 0; i < n_; ++i) q[i] += order[l - 1] * elem_[l - 1][i];
  }

  void add(const std::vector<double>& omega, std::uint64_t z) {
    const double g = w_.gamma()[d_];
    if (!pod()) {
      if (g != 0.0) kt_.excess_gather(excess_.data(), omega.data(), n_, z, g);
    } else {
      std::uint64_t idx = 0;
      for (std::uint64_t i = 0; i < n_; ++i) {
        const double t = g * omega[idx];
        for (std::size_t l = d_ + 1; l >= 1; --l) elem_[l][i] += t * elem_[l - 1][i];
        idx += z;
        if (idx >= n_) idx -= n_;
      }
    }
    ++d_;
  }

  double value() const {
    if (!pod()) return mean(excess_);
    const auto order = w_.order_weights();
    double v = 0.0;
    for (std::size_t l = 1; l <= d_; ++l) v += order[l - 1] * mean(elem_[l]);
    return v;
  }

 private:
  bool pod() const { return w_.form() == WeightScheme::Form::pod; }
  double mean(const std::vector<double>& v) const {
    return kt_.pairwise_sum(v.data(), v.size()) / static_cast<double>(n_);
  }

  const WeightScheme& w_;
  std::uint64_t n_;
  const simd::KernelTable& kt_;
  std::size_t d_ = 0;
  std::vector<double> excess_;
  std::vector<std::vector<double>> elem_;
};

struct FastTables {
  std::vector<std::uint64_t> power;  // g^i mod N, i = 0..N-2
  FftPlan plan;
  std::vector<std::complex<double>> omega_hat;
  double omega_norm = 0.0;
};

// Ties in D(z) = sum_n q(n) omega(n z) closer than this are resolved
// towards the smaller candidate; equivalent generators (z and N - z, or z and
// its inverse at d = 2) give the same value up to rounding.
double tie_tolerance(const std::vector<double>& q, const std::vector<double>& omega) {
  double qq = 0.0, ww = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    qq += q[i] * q[i];
    ww += omega[i] * omega[i];
  }
  return 1e-13 * std::sqrt(qq * ww);
}

// Smallest candidate whose D(z) is within the tie tolerance of the minimum.
// Both CBC variants go through here. The criterion is value() + gamma D(z) / N
// with gamma > 0, so ranking by D is ranking by the criterion.
std::uint64_t select(const std::vector<std::uint64_t>& candidates, const std::vector<double>& q,
                     const std::vector<double>& omega, std::uint64_t n) {
  const auto& kt = simd::active();
  std::vector<double> d(candidates.size());
  double dmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    d[i] = kt.gather_dot(q.data(), omega.data(), n, candidates[i]);
    dmin = std::min(dmin, d[i]);
  }
  const double tol = tie_tolerance(q, omega);
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (d[i] <= dmin + tol) return candidates[i];
  return candidates.front();
}

std::vector<std::uint64_t> fast_candidates(const FastTables& t, const std::vector<double>& q,
                                          const std::vector<double>& omega, std::uint64_t n) {
  const std::size_t len = n - 1;
  // Constant offsets of Q shift every correlation value equally; drop them so
  // the FFT only resolves the part that ranks candidates.
  double mean = 0.0;
  for (std::size_t i = 0; i < len; ++i) mean += q[t.power[i]];
  mean /= static_cast<double>(len);
  std::vector<std::complex<double>> qh(len);
  double qnorm = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double v = q[t.power[i]] - mean;
    qh[i] = v;
    qnorm += v * v;
  }
  qnorm = std::sqrt(qnorm);
  t.plan.forward(qh);
  for (std::size_t k = 0; k < len; ++k) qh[k] = std::conj(qh[k]) * t.omega_hat[k];
  t.plan.inverse(qh);

  double smin = std::numeric_limits<double>::infinity();
  for (const auto& v : qh) smin = std::min(smin, v.real());
  const double tol = 1e-9 * qnorm * t.omega_norm + 2.0 * tie_tolerance(q, omega);
  // Index k of the correlation corresponds to the candidate z = g^k.
  std::vector<char> keep(n, 0);
  for (std::size_t k = 0; k < len; ++k)
    if (qh[k].real() <= smin + tol) keep[t.power[k]] = 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t z = 1; z < n; ++z)
    if (keep[z]) out.push_back(z);
  return out;
}

CbcResult run_cbc(std::uint64_t n, std::size_t s, const CbcCriterion& crit, bool fast) {
  const auto start = std::chrono::steady_clock::now();
  if (n < 2) throw PreconditionError("CBC requires N >= 2");
  if (n >= (std::uint64_t{1} << 32)) throw GuardError("CBC requires N < 2^32");
  if (s < 1) throw PreconditionError("CBC requires s >= 1");
  if (crit.base_weights.form() == WeightScheme::Form::general)
    throw PreconditionError("CBC supports product and POD weights only");
  const bool prime = is_prime(n);
  if (fast && !prime) throw PreconditionError("fast CBC requires a prime N");

  const WeightScheme w = crit.effective_weights(s);
  const auto omega = korobov_omega(crit.korobov_order(), n);

  std::unique_ptr<FastTables> tables;
  if (fast && n > 2) {
    const std::uint64_t g = primitive_root(n);
    const std::size_t len = n - 1;
    tables = std::make_unique<FastTables>(FastTables{{}, FftPlan(len), {}, 0.0});
    tables->power.resize(len);
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < len; ++i) {
      tables->power[i] = p;
      p = mulmod(p, g, n);
    }
    tables->omega_hat.resize(len);
    double norm = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      const double v = omega[tables->power[i]];
      tables->omega_hat[i] = v;
      norm += v * v;
    }
    tables->omega_norm = std::sqrt(norm);
    tables->plan.forward(tables->omega_hat);
  }

  CbcResult result;
  result.n = n;
  result.prime = prime;
  PrefixState state(w, n);
  state.add(omega, 1);
  result.z.push_back(1);
  result.per_dimension_error.push_back(state.value());

  std::vector<double> q;
  std::vector<std::uint64_t> all(n - 1);
  for (std::uint64_t z = 1; z < n; ++z) all[z - 1] = z;
  for (std::size_t d = 1; d < s; ++d) {
    state.next(q);
    const double gamma = w.gamma()[d];
    std::uint64_t z = 1;
    if (gamma != 0.0 && n > 2) {
      if (tables)
        z = select(fast_candidates(*tables, q, omega, n), q, omega, n);
      else
        z = select(all, q, omega, n);
    }
    state.add(omega, z);
    result.z.push_back(z);
    result.per_dimension_error.push_back(state.value());
  }
  result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

CbcResult cbc_plain(std::uint64_t n, std::size_t s, const CbcCriterion& crit) { return run_cbc(n, s, crit, false); }

CbcResult cbc_fast(std::uint64_t n, std::size_t s, const CbcCriterion& crit) { return run_cbc(n, s, crit, true); }

}  // namespace latqmc
