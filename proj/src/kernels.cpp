#include "latqmc/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "latqmc/errors.hpp"
#include "latqmc/quadrature.hpp"
#include "latqmc/special_functions.hpp"

namespace latqmc {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_integer(double a) { return std::floor(a) == a; }

double horner(std::span<const double> c, double t) {
  double p = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) p = p * t + c[k];
  return p;
}

// 2 * sum_{k > kmax} k^{-2 alpha}.
double series_tail(double alpha, std::int64_t kmax) { return 2.0 * zeta_tail_bound(2.0 * alpha, kmax); }

void check_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) throw PreconditionError(std::string(what) + " must lie in [0,1]");
}

}  // namespace

std::string_view family_name(KernelFamily family) {
  switch (family) {
    case KernelFamily::korobov:
      return "korobov";
    case KernelFamily::cosine:
      return "cosine";
    case KernelFamily::kor_plus_cos:
      return "kor_plus_cos";
    case KernelFamily::sobolev:
      return "sobolev";
    case KernelFamily::sob_odd:
      return "sob_odd";
    case KernelFamily::sob_odd_alpha:
      return "sob_odd_alpha";
  }
  return "unknown";
}

KernelFamily parse_family(std::string_view name) {
  for (auto f : {KernelFamily::korobov, KernelFamily::cosine, KernelFamily::kor_plus_cos, KernelFamily::sobolev,
                 KernelFamily::sob_odd, KernelFamily::sob_odd_alpha})
    if (family_name(f) == name) return f;
  throw PreconditionError("unknown kernel family '" + std::string(name) + "'");
}

int require_integer_alpha(double alpha, const char* context) {
  if (!is_integer(alpha) || alpha < 1.0)
    throw PreconditionError(std::string(context) + " requires an integer alpha >= 1");
  if (2 * static_cast<int>(alpha) > bernoulli_table().max_degree())
    throw PreconditionError(std::string(context) + ": alpha exceeds the Bernoulli table (alpha <= 8)");
  return static_cast<int>(alpha);
}

void KernelSpec::validate() const {
  switch (family) {
    case KernelFamily::korobov:
    case KernelFamily::cosine:
    case KernelFamily::kor_plus_cos:
      if (!(alpha > 0.5)) throw PreconditionError(std::string(family_name(family)) + " kernel requires alpha > 1/2");
      if (family == KernelFamily::korobov && is_integer(alpha)) require_integer_alpha(alpha, "korobov kernel");
      break;
    case KernelFamily::sobolev:
    case KernelFamily::sob_odd:
    case KernelFamily::sob_odd_alpha:
      require_integer_alpha(alpha, "Sobolev kernel");
      break;
  }
  if (!closed_form() && series_kmax < 1) throw PreconditionError("series kernels need kmax >= 1");
  if (weights.dims() == 0) throw PreconditionError("kernel spec has no weights");
}

bool KernelSpec::closed_form() const {
  switch (family) {
    case KernelFamily::korobov:
      return is_integer(alpha);
    case KernelFamily::cosine:
    case KernelFamily::kor_plus_cos:
      return false;
    default:
      return true;
  }
}

PairIncrement pair_increment(KernelFamily family, int alpha) {
  require_integer_alpha(alpha, "closed-form kernel");
  PairIncrement inc;
  const double sign = alpha % 2 == 1 ? 1.0 : -1.0;  // (-1)^{alpha+1}
  inc.poly = bernoulli_scaled_coefficients(2 * alpha);
  switch (family) {
    case KernelFamily::korobov: {
      const double scale = sign * std::pow(2.0 * kPi, 2 * alpha);
      for (double& c : inc.poly) c *= scale;
      return inc;
    }
    case KernelFamily::sobolev:
    case KernelFamily::sob_odd:
    case KernelFamily::sob_odd_alpha:
      for (double& c : inc.poly) c *= sign;
      for (int tau = 1; tau <= alpha; ++tau) {
        const bool keep = family == KernelFamily::sobolev || tau % 2 == 1 ||
                          (family == KernelFamily::sob_odd_alpha && tau == alpha);
        if (!keep) continue;
        inc.degrees.push_back(tau);
        inc.coeffs.push_back(1.0);
      }
      return inc;
    default:
      throw PreconditionError(std::string(family_name(family)) + " kernel has no closed form");
  }
}

PairIncrement sym_averaged_increment(int alpha) {
  require_integer_alpha(alpha, "symmetrized kernel");
  if (alpha % 2 != 0) throw PreconditionError("symmetrized kernel requires even alpha");
  PairIncrement inc;
  inc.degrees = {alpha};
  inc.coeffs = {1.0};
  inc.poly = bernoulli_scaled_coefficients(2 * alpha);
  for (double& c : inc.poly) c = -c;
  inc.reflect = true;
  return inc;
}

double PairIncrement::operator()(double x, double y) const {
  double p = horner(poly, std::fabs(x - y));
  if (reflect) p = 0.5 * (p + horner(poly, std::fabs(x + y - 1.0)));
  double f = 0.0;
  for (std::size_t t = 0; t < degrees.size(); ++t)
    f += coeffs[t] * bernoulli_scaled(degrees[t], x) * bernoulli_scaled(degrees[t], y);
  return f + p;
}

KernelValue korobov_series_1d(double alpha, double x, double y, std::int64_t kmax) {
  if (!(alpha > 0.5)) throw PreconditionError("korobov kernel requires alpha > 1/2");
  if (kmax < 1) throw PreconditionError("series kernels need kmax >= 1");
  double s = 0.0;
  for (std::int64_t k = kmax; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    s += std::cos(2.0 * kPi * kd * (x - y)) / std::pow(kd, 2.0 * alpha);
  }
  return {1.0 + 2.0 * s, series_tail(alpha, kmax)};
}

KernelValue kernel_1d(KernelFamily family, double alpha, double x, double y, std::int64_t kmax) {
  check_unit(x, "kernel argument x");
  check_unit(y, "kernel argument y");
  switch (family) {
    case KernelFamily::korobov:
      if (is_integer(alpha) && alpha >= 1.0) {
        const auto inc = pair_increment(family, static_cast<int>(alpha));
        return {1.0 + inc(x, y), 0.0};
      }
      return korobov_series_1d(alpha, x, y, kmax);
    case KernelFamily::cosine:
    case KernelFamily::kor_plus_cos: {
      if (!(alpha > 0.5)) throw PreconditionError("series kernel requires alpha > 1/2");
      if (kmax < 1) throw PreconditionError("series kernels need kmax >= 1");
      double s = 0.0;
      for (std::int64_t k = kmax; k >= 1; --k) {
        const double kd = static_cast<double>(k);
        const double cc = std::cos(kPi * kd * x) * std::cos(kPi * kd * y);
        const double term = family == KernelFamily::cosine ? 2.0 * cc : std::cos(2.0 * kPi * kd * (x - y)) + cc;
        s += term / std::pow(kd, 2.0 * alpha);
      }
      return {1.0 + s, series_tail(alpha, kmax)};
    }
    case KernelFamily::sobolev:
    case KernelFamily::sob_odd:
    case KernelFamily::sob_odd_alpha: {
      const auto inc = pair_increment(family, require_integer_alpha(alpha, "Sobolev kernel"));
      return {1.0 + inc(x, y), 0.0};
    }
  }
  return {};
}

KernelValue kernel(const KernelSpec& spec, std::span<const double> x, std::span<const double> y) {
  spec.validate();
  const std::size_t s = spec.weights.dims();
  if (x.size() != s || y.size() != s) throw PreconditionError("kernel arguments do not match the weight dimension");
  std::vector<double> a(s);
  std::vector<double> abs_a(s);
  std::vector<double> abs_a_t(s);
  double t = 0.0;
  for (std::size_t j = 0; j < s; ++j) {
    const auto k = kernel_1d(spec.family, spec.alpha, x[j], y[j], spec.series_kmax);
    a[j] = k.value - 1.0;
    t = k.tail_bound;
    abs_a[j] = std::fabs(a[j]);
    abs_a_t[j] = abs_a[j] + t;
  }
  KernelValue out{1.0 + spec.weights.subset_sum(a), 0.0};
  // |prod(a_j + e_j) - prod a_j| <= prod(|a_j| + t) - prod |a_j| for |e_j| <= t.
  if (t > 0.0) out.tail_bound = spec.weights.subset_sum(abs_a_t) - spec.weights.subset_sum(abs_a);
  return out;
}

double kernel_mean_identity_check(const KernelSpec& spec, std::span<const double> x, int quad_points) {
  spec.validate();
  if (!spec.closed_form()) throw PreconditionError("mean identity check needs a closed-form kernel");
  if (quad_points < 1) throw PreconditionError("quad_points must be positive");
  const std::size_t s = spec.weights.dims();
  if (x.size() != s) throw PreconditionError("point dimension does not match the weights");
  const auto inc = pair_increment(spec.family, static_cast<int>(spec.alpha));
  const int order = quad_points < 8 ? quad_points : 8;
  const int panels = quad_points / order;
  std::vector<double> m(s);
  for (std::size_t j = 0; j < s; ++j) {
    check_unit(x[j], "kernel argument x");
    const double xj = x[j];
    m[j] = integrate_unit_interval([&](double y) { return inc(xj, y); }, panels, {xj}, order);
  }
  return 1.0 + spec.weights.subset_sum(m);
}

}  // namespace latqmc
