#include "latqmc/worst_case_error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "latqmc/errors.hpp"
#include "latqmc/number_theory.hpp"
#include "latqmc/simd/kernels.hpp"
#include "latqmc/special_functions.hpp"

namespace latqmc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kMaxTableSize = std::uint64_t{1} << 28;

using Columns = std::vector<std::vector<double>>;

ErrorReport clamped_report(double v, ReportKind kind) {
  ErrorReport r;
  r.kind = kind;
  if (v < 0.0) {
    r.clamped = -v;
    v = 0.0;
  }
  r.value = v;
  return r;
}

// Mean over all ordered pairs (x, y) of sum_u gamma_u prod_{j in u} inc(x_j, y_j).
// Only the upper triangle is evaluated; the increment is symmetric in (x, y).
double pair_mean(const PairIncrement& inc, const WeightScheme& w, const Columns& cols) {
  const std::size_t s = cols.size();
  const std::size_t n = cols.front().size();
  const std::size_t nf = inc.degrees.size();
  // feat[j][t][m] = b_{degree t}(coordinate j of point m)
  std::vector<std::vector<std::vector<double>>> feat(s, std::vector<std::vector<double>>(nf));
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t t = 0; t < nf; ++t) {
      auto& f = feat[j][t];
      f.resize(n);
      for (std::size_t m = 0; m < n; ++m) f[m] = bernoulli_scaled(inc.degrees[t], cols[j][m]);
    }

  const auto& kt = simd::active();
  std::vector<double> rows(n);
  std::vector<double> r(n);
  if (w.form() == WeightScheme::Form::product) {
    std::vector<double> xw(nf);
    std::vector<const double*> fptr(nf);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t len = n - i;
      std::fill(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(len), 0.0);
      for (std::size_t j = 0; j < s; ++j) {
        const double g = w.gamma()[j];
        if (g == 0.0) continue;
        for (std::size_t t = 0; t < nf; ++t) {
          xw[t] = inc.coeffs[t] * feat[j][t][i];
          fptr[t] = feat[j][t].data() + i;
        }
        simd::PairRowArgs args;
        args.y = cols[j].data() + i;
        args.count = len;
        args.y_features = fptr.data();
        args.x_feature_weights = xw.data();
        args.feature_count = nf;
        args.poly = inc.poly.data();
        args.poly_len = inc.poly.size();
        args.reflect = inc.reflect;
        args.x = cols[j][i];
        args.gamma = g;
        kt.excess_pair(r.data(), args);
      }
      rows[i] = r[0] + 2.0 * kt.pairwise_sum(r.data() + 1, len - 1);
    }
  } else {
    std::vector<double> a(s);
    auto horner = [&](double t) {
      double p = 0.0;
      for (std::size_t k = inc.poly.size(); k-- > 0;) p = p * t + inc.poly[k];
      return p;
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t m = i; m < n; ++m) {
        for (std::size_t j = 0; j < s; ++j) {
          const double x = cols[j][i];
          const double y = cols[j][m];
          double p = horner(std::fabs(x - y));
          if (inc.reflect) p = 0.5 * (p + horner(std::fabs(x + y - 1.0)));
          double f = 0.0;
          for (std::size_t t = 0; t < nf; ++t) f += inc.coeffs[t] * feat[j][t][i] * feat[j][t][m];
          a[j] = f + p;
        }
        r[m - i] = w.subset_sum(a);
      }
      rows[i] = r[0] + 2.0 * kt.pairwise_sum(r.data() + 1, n - i - 1);
    }
  }
  const double nn = static_cast<double>(n);
  return kt.pairwise_sum(rows.data(), n) / (nn * nn);
}

Columns columns_of(const PointSet& ps) {
  Columns cols(ps.dims());
  for (std::size_t j = 0; j < ps.dims(); ++j) cols[j] = ps.column(j);
  return cols;
}

void check_rule_weights(const LatticeRule& rule, const WeightScheme& w) {
  rule.validate();
  if (w.dims() != rule.dims())
    throw PreconditionError("weights have dimension " + std::to_string(w.dims()) + " but the rule has " +
                            std::to_string(rule.dims()));
}

int require_even_alpha(int alpha) {
  if (alpha < 2 || alpha % 2 != 0) throw PreconditionError("symmetrized rules require an even alpha >= 2");
  if (2 * alpha > bernoulli_table().max_degree()) throw PreconditionError("alpha exceeds the Bernoulli table");
  return alpha;
}

}  // namespace

std::string_view report_kind_name(ReportKind kind) {
  switch (kind) {
    case ReportKind::exact_quadratic_form:
      return "exact_quadratic_form";
    case ReportKind::closed_form_lattice:
      return "closed_form_lattice";
    case ReportKind::dual_series_truncated:
      return "dual_series_truncated";
    case ReportKind::theorem_bound:
      return "theorem_bound";
    case ReportKind::corollary_bound:
      return "corollary_bound";
  }
  return "unknown";
}

ErrorReport wce_sq_quadratic_form(const KernelSpec& spec, const PointSet& ps) {
  spec.validate();
  if (!spec.closed_form())
    throw PreconditionError("quadratic form needs a unit-mean closed-form kernel (integer-alpha Korobov or Sobolev)");
  if (ps.size() == 0) throw PreconditionError("point set is empty");
  if (ps.dims() != spec.weights.dims()) throw PreconditionError("point set dimension does not match the weights");
  if (ps.size() > kMaxQuadraticFormPoints) throw GuardError("quadratic form refused for more than 20000 points");
  const auto inc = pair_increment(spec.family, static_cast<int>(spec.alpha));
  return clamped_report(pair_mean(inc, spec.weights, columns_of(ps)), ReportKind::exact_quadratic_form);
}

std::vector<double> korobov_omega(int alpha, std::uint64_t n) {
  if (n == 0) throw PreconditionError("omega table needs N >= 1");
  if (n > kMaxTableSize) throw GuardError("omega table larger than 2^28 entries");
  const auto inc = pair_increment(KernelFamily::korobov, alpha);
  std::vector<double> omega(n);
  const double nd = static_cast<double>(n);
  for (std::uint64_t k = 0; k <= n / 2; ++k) {
    const double x = static_cast<double>(k) / nd;
    double p = 0.0;
    for (std::size_t c = inc.poly.size(); c-- > 0;) p = p * x + inc.poly[c];
    omega[k] = p;
    if (k > 0) omega[n - k] = p;
  }
  return omega;
}

ErrorReport wce_sq_korobov_lattice(int alpha, const WeightScheme& weights, const LatticeRule& rule) {
  check_rule_weights(rule, weights);
  const std::uint64_t n = rule.n;
  const std::size_t s = rule.dims();
  const auto omega = korobov_omega(alpha, n);
  const auto& kt = simd::active();
  std::vector<double> r(n, 0.0);
  if (weights.form() == WeightScheme::Form::product) {
    for (std::size_t j = 0; j < s; ++j)
      if (weights.gamma()[j] != 0.0) kt.excess_gather(r.data(), omega.data(), n, rule.z[j], weights.gamma()[j]);
  } else {
    std::vector<std::uint64_t> idx(s, 0);
    std::vector<double> a(s);
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        a[j] = omega[idx[j]];
        idx[j] += rule.z[j];
        if (idx[j] >= n) idx[j] -= n;
      }
      r[i] = weights.subset_sum(a);
    }
  }
  return clamped_report(kt.pairwise_sum(r.data(), n) / static_cast<double>(n), ReportKind::closed_form_lattice);
}

WeightScheme tent_modified_weights(const WeightScheme& weights) {
  return weights.scaled_per_coordinate(kTentConstant / (4.0 * std::pow(kPi, 4)));
}

WeightScheme sym_modified_weights(int alpha, const WeightScheme& weights) {
  require_even_alpha(alpha);
  return weights.scaled_per_coordinate(3.0 / (std::pow(2.0, 2 * alpha + 1) * std::pow(kPi, 2 * alpha)));
}

ErrorReport wce_tent_exact(const WeightScheme& weights, const LatticeRule& rule) {
  check_rule_weights(rule, weights);
  KernelSpec spec{KernelFamily::sobolev, 2.0, weights, kDefaultSeriesKmax};
  return wce_sq_quadratic_form(spec, tent_transform(rank1_points(rule)));
}

ErrorReport wce_tent_bound(const WeightScheme& weights, const LatticeRule& rule) {
  const double b = wce_sq_korobov_lattice(1, tent_modified_weights(weights).sqrt(), rule).value;
  ErrorReport r;
  r.kind = ReportKind::theorem_bound;
  r.value = b * b;
  return r;
}

ErrorReport wce_sym_bound(int alpha, const WeightScheme& weights, const LatticeRule& rule) {
  require_even_alpha(alpha);
  const double b = wce_sq_korobov_lattice(alpha / 2, sym_modified_weights(alpha, weights).sqrt(), rule).value;
  ErrorReport r;
  r.kind = ReportKind::theorem_bound;
  r.value = b * b;
  return r;
}

ErrorReport wce_sym_exact(int alpha, const WeightScheme& weights, const LatticeRule& rule) {
  require_even_alpha(alpha);
  check_rule_weights(rule, weights);
  if (rule.n > kMaxQuadraticFormPoints) throw GuardError("symmetrized error refused for N > 20000");
  const auto inc = sym_averaged_increment(alpha);
  return clamped_report(pair_mean(inc, weights, columns_of(rank1_points(rule))), ReportKind::exact_quadratic_form);
}

ErrorReport wce_tent_middle_term(const WeightScheme& weights, const LatticeRule& rule, std::int64_t kmax) {
  check_rule_weights(rule, weights);
  if (kmax < 1) throw PreconditionError("middle term needs kmax >= 1");
  const std::size_t s = rule.dims();
  const std::uint64_t n = rule.n;
  if (s > 20 || std::ldexp(static_cast<double>(n) * static_cast<double>(n), static_cast<int>(s)) > 2e9)
    throw GuardError("middle term refused: 2^s N^2 exceeds 2e9");
  const WeightScheme wp = tent_modified_weights(weights);

  // v[j][r] = sum of 1/k^2 over 0 < |k| <= kmax with k z_j = r (mod N).
  std::vector<std::vector<double>> v(s, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < s; ++j) {
    for (std::int64_t k = kmax; k >= 1; --k) {
      const double t = 1.0 / (static_cast<double>(k) * static_cast<double>(k));
      const std::uint64_t r = mulmod(static_cast<std::uint64_t>(k) % n, rule.z[j], n);
      v[j][r] += t;
      v[j][(n - r) % n] += t;
    }
  }
  const auto omega = korobov_omega(1, n);  // 4 pi^2 b_2(k/N)
  const auto& kt = simd::active();

  double value = 0.0;
  double tail = 0.0;
  // Depth-first over subsets: conv is the residue distribution of the truncated
  // dual sum restricted to the chosen coordinates, prod the per-point product.
  auto visit = [&](auto&& self, std::size_t j, SubsetMask u, const std::vector<double>& conv,
                   const std::vector<double>& prod) -> void {
    if (j == s) {
      if (u == 0) return;
      const double g = wp.weight(u);
      if (g == 0.0) return;
      const double truncated = conv[0];
      const double exact = kt.pairwise_sum(prod.data(), n) / static_cast<double>(n);
      value += g * truncated * truncated;
      tail += g * std::max(0.0, (exact - truncated) * (exact + truncated));
      return;
    }
    self(self, j + 1, u, conv, prod);
    std::vector<double> c2(n, 0.0);
    for (std::uint64_t a = 0; a < n; ++a) {
      if (conv[a] == 0.0) continue;
      for (std::uint64_t b = 0; b < n; ++b) {
        const std::uint64_t r = a + b >= n ? a + b - n : a + b;
        c2[r] += conv[a] * v[j][b];
      }
    }
    std::vector<double> p2(prod);
    std::uint64_t idx = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      p2[i] *= omega[idx];
      idx += rule.z[j];
      if (idx >= n) idx -= n;
    }
    self(self, j + 1, u | (SubsetMask{1} << j), c2, p2);
  };
  std::vector<double> delta(n, 0.0);
  delta[0] = 1.0;
  visit(visit, 0, 0, delta, std::vector<double>(n, 1.0));

  ErrorReport r;
  r.kind = ReportKind::dual_series_truncated;
  r.value = value;
  r.truncation_kmax = kmax;
  r.tail_estimate = tail;
  return r;
}

double corollary_lambda_min(CorollaryKind kind, int alpha) {
  if (kind == CorollaryKind::tent) return 0.5;
  require_even_alpha(alpha);
  return 1.0 / alpha;
}

ErrorReport corollary_bound(CorollaryKind kind, int alpha, const WeightScheme& weights, std::uint64_t n,
                            double lambda) {
  const double lo = corollary_lambda_min(kind, alpha);
  if (!(lambda > lo && lambda <= 1.0))
    throw PreconditionError("lambda must lie in (" + std::to_string(lo) + ", 1]");
  if (!is_prime(n)) throw PreconditionError("corollary bound requires a prime N");
  double f = 0.0;
  if (kind == CorollaryKind::tent) {
    f = std::pow(2.0, 1.0 - lambda) * std::pow(kTentConstant, lambda / 2.0) * riemann_zeta(2.0 * lambda) /
        std::pow(kPi, 2.0 * lambda);
  } else {
    const double a = alpha;
    f = std::pow(3.0, lambda / 2.0) * riemann_zeta(a * lambda) /
        (std::pow(2.0, (2.0 * a + 1.0) * lambda / 2.0 - 1.0) * std::pow(kPi, a * lambda));
  }
  const std::vector<double> fs(weights.dims(), f);
  const double sum = weights.pow(lambda / 2.0).subset_sum(fs);
  ErrorReport r;
  r.kind = ReportKind::corollary_bound;
  r.lambda = lambda;
  r.value = std::pow(sum / static_cast<double>(n - 1), 1.0 / lambda);
  return r;
}

}  // namespace latqmc
