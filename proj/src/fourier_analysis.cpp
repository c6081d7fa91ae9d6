#include "latqmc/fourier_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "latqmc/errors.hpp"
#include "latqmc/kernels.hpp"
#include "latqmc/lattice_points.hpp"
#include "latqmc/quadrature.hpp"
#include "latqmc/worst_case_error.hpp"

namespace latqmc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

void check_positive(std::int64_t k, std::int64_t l) {
  if (k < 1 || l < 1) throw PreconditionError("Fourier indices must be >= 1");
}

void check_even_alpha(int alpha) {
  if (alpha < 2 || alpha % 2 != 0) throw PreconditionError("c_sym requires an even alpha >= 2");
}

double sq(double v) { return v * v; }

}  // namespace

double c_phi(std::int64_t k, std::int64_t l) {
  check_positive(k, l);
  const bool k_odd = k % 2 == 1;
  const bool l_odd = l % 2 == 1;
  if (k_odd != l_odd) return 0.0;
  const double k2 = sq(static_cast<double>(k));
  const double l2 = sq(static_cast<double>(l));
  if (k_odd) {
    if (k == l) return (58.0 / 3.0 - 32.0 / (kPi2 * k2)) / (k2 * k2);
    return (52.0 / 3.0 - 16.0 / kPi2 * (1.0 / k2 + 1.0 / l2)) / (k2 * l2);
  }
  if (k == l) return 6.0 / (k2 * k2);
  return 4.0 / (k2 * l2);
}

double c_sym(std::int64_t k, std::int64_t l, int alpha) {
  check_positive(k, l);
  check_even_alpha(alpha);
  const double ka = std::pow(static_cast<double>(k), alpha);
  const double la = std::pow(static_cast<double>(l), alpha);
  return (k == l ? 6.0 : 4.0) / (ka * la);
}

double sin_tent_coeff(std::int64_t k, std::int64_t l) {
  check_positive(k, l);
  if (l % 2 == 0) return 0.0;
  const double kd = static_cast<double>(k);
  const double ld = static_cast<double>(l);
  return 8.0 / kPi * kd / (4.0 * kd * kd - ld * ld);
}

double tent_kernel_partial_sum(double x, double y, std::int64_t kmax) {
  if (kmax < 1) throw PreconditionError("kmax must be >= 1");
  double a2 = 0.0, a4 = 0.0, b2 = 0.0, b4 = 0.0, odd_diag = 0.0;
  double e = 0.0, f = 0.0, even_diag = 0.0;
  for (std::int64_t k = kmax; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    const double k2 = kd * kd;
    const double cx = std::cos(2.0 * kPi * kd * x);
    const double cy = std::cos(2.0 * kPi * kd * y);
    if (k % 2 == 1) {
      a2 += cx / k2;
      a4 += cx / (k2 * k2);
      b2 += cy / k2;
      b4 += cy / (k2 * k2);
      odd_diag += cx * cy / (k2 * k2);
    } else {
      e += cx / k2;
      f += cy / k2;
      even_diag += cx * cy / (k2 * k2);
    }
  }
  const double odd = 52.0 / 3.0 * a2 * b2 - 16.0 / kPi2 * (a4 * b2 + a2 * b4) + 2.0 * odd_diag;
  const double even = 4.0 * e * f + 2.0 * even_diag;
  return (odd + even) / (kPi2 * kPi2);
}

double sym_kernel_partial_sum(double x, double y, int alpha, std::int64_t kmax) {
  check_even_alpha(alpha);
  if (kmax < 1) throw PreconditionError("kmax must be >= 1");
  double a = 0.0, b = 0.0, diag = 0.0;
  for (std::int64_t k = kmax; k >= 1; --k) {
    const double ka = std::pow(static_cast<double>(k), alpha);
    const double cx = std::cos(2.0 * kPi * static_cast<double>(k) * x);
    const double cy = std::cos(2.0 * kPi * static_cast<double>(k) * y);
    a += cx / ka;
    b += cy / ka;
    diag += cx * cy / (ka * ka);
  }
  return (4.0 * a * b + 2.0 * diag) / std::pow(2.0 * kPi, 2 * alpha);
}

double cosine_coeff_quadrature(const std::function<double(double)>& f, std::int64_t k, int panels,
                               TrigWeight weight) {
  if (panels < 1) throw PreconditionError("panels must be >= 1");
  if (k < 0) throw PreconditionError("frequency must be >= 0");
  const double kd = static_cast<double>(k);
  auto integrand = [&](double x) {
    switch (weight) {
      case TrigWeight::cos_2pi:
        return f(x) * std::cos(2.0 * kPi * kd * x);
      case TrigWeight::sin_2pi:
        return f(x) * std::sin(2.0 * kPi * kd * x);
      case TrigWeight::cos_pi:
        return f(x) * std::cos(kPi * kd * x);
    }
    return 0.0;
  };
  return integrate_composite(integrand, 0.0, 0.5, panels) + integrate_composite(integrand, 0.5, 1.0, panels);
}

InnerSum appendix_inner_sum(std::int64_t l, InnerSumKind which, std::int64_t kmax) {
  if (l < 1 || l % 2 == 0) throw PreconditionError("inner-sum identities need an odd l >= 1");
  if (kmax < 1) throw PreconditionError("kmax must be >= 1");
  const double ld = static_cast<double>(l);
  const double kd = static_cast<double>(kmax);
  InnerSum out;
  for (std::int64_t k = kmax; k >= 1; --k) {
    const double kk = static_cast<double>(k);
    const double d = 4.0 * kk * kk - ld * ld;
    out.partial += which == InnerSumKind::first ? 1.0 / d : 1.0 / (d * d);
  }
  if (which == InnerSumKind::first) {
    out.closed = 1.0 / (2.0 * ld * ld);
    out.tail_bound = 2 * kmax > l ? std::log((2.0 * kd + ld) / (2.0 * kd - ld)) / (4.0 * ld)
                                  : std::numeric_limits<double>::infinity();
  } else {
    out.closed = (kPi2 / 4.0 - 2.0 / (ld * ld)) / (4.0 * ld * ld);
    out.tail_bound = kmax >= l ? 1.0 / (27.0 * kd * kd * kd) : std::numeric_limits<double>::infinity();
  }
  return out;
}

InnerSum appendix_three_product_sum(std::int64_t l, std::int64_t m, std::int64_t kmax) {
  if (l < 1 || m < 1 || l % 2 == 0 || m % 2 == 0) throw PreconditionError("three-product sum needs odd l, m");
  if (kmax < 1) throw PreconditionError("kmax must be >= 1");
  const double ld = static_cast<double>(l);
  const double md = static_cast<double>(m);
  InnerSum out;
  for (std::int64_t k = kmax; k >= 1; --k) {
    const double kk = static_cast<double>(k);
    out.partial += 1.0 / (kk * kk * (4.0 * kk * kk - ld * ld) * (4.0 * kk * kk - md * md));
  }
  const double l2 = ld * ld;
  const double m2 = md * md;
  out.closed = l == m ? (5.0 / 12.0 * kPi2 - 4.0 / l2) / (l2 * l2) : (kPi2 / 6.0 - 2.0 / l2 - 2.0 / m2) / (l2 * m2);
  const double kd = static_cast<double>(kmax);
  // For k >= max(l, m) each factor 4k^2 - l^2 is at least 3k^2.
  out.tail_bound = kmax >= std::max(l, m) ? 1.0 / (45.0 * std::pow(kd, 5)) : std::numeric_limits<double>::infinity();
  return out;
}

std::vector<AppendixCheck> verify_appendix(const AppendixOptions& opt) {
  std::vector<AppendixCheck> checks;
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  {
    const auto inc = pair_increment(KernelFamily::sobolev, 2);
    double worst = 0.0;
    for (int i = 0; i < opt.reconstruction_points; ++i) {
      const double x = unit(rng);
      const double y = unit(rng);
      const double series = tent_kernel_partial_sum(x, y, opt.reconstruction_kmax);
      worst = std::max(worst, std::fabs(series - inc(tent(x), tent(y))));
    }
    checks.push_back({"tent kernel series reconstruction", worst <= 5e-4, worst, 5e-4});
  }
  {
    const auto inc = sym_averaged_increment(2);
    double worst = 0.0;
    for (int i = 0; i < opt.reconstruction_points; ++i) {
      const double x = unit(rng);
      const double y = unit(rng);
      worst = std::max(worst, std::fabs(sym_kernel_partial_sum(x, y, 2, opt.reconstruction_kmax) - inc(x, y)));
    }
    checks.push_back({"sym kernel series reconstruction", worst <= 5e-4, worst, 5e-4});
  }
  {
    double worst_cos = 0.0;
    double worst_sin = 0.0;
    for (std::int64_t k = 1; k <= opt.max_quadrature_index; ++k) {
      const auto f = [k](double x) { return std::sin(2.0 * kPi * static_cast<double>(k) * tent(x)); };
      for (std::int64_t l = 1; l <= opt.max_quadrature_index; ++l) {
        const double c = cosine_coeff_quadrature(f, l, 16, TrigWeight::cos_2pi);
        worst_cos = std::max(worst_cos, std::fabs(c - 0.5 * sin_tent_coeff(k, l)));
        worst_sin = std::max(worst_sin, std::fabs(cosine_coeff_quadrature(f, l, 16, TrigWeight::sin_2pi)));
      }
    }
    checks.push_back({"sine-of-tent cosine coefficients", worst_cos <= 1e-9, worst_cos, 1e-9});
    checks.push_back({"sine-of-tent sine coefficients vanish", worst_sin <= 1e-10, worst_sin, 1e-10});
  }
  {
    double worst_first = 0.0;
    double worst_second = 0.0;
    bool ok_first = true;
    bool ok_second = true;
    for (std::int64_t l = 1; l <= 15; l += 2) {
      const auto a = appendix_inner_sum(l, InnerSumKind::first, opt.inner_sum_kmax);
      const auto b = appendix_inner_sum(l, InnerSumKind::second, opt.inner_sum_kmax);
      const double da = std::fabs(a.partial - a.closed);
      const double db = std::fabs(b.partial - b.closed);
      ok_first = ok_first && da <= a.tail_bound + 1e-14;
      ok_second = ok_second && db <= b.tail_bound + 1e-14;
      worst_first = std::max(worst_first, da);
      worst_second = std::max(worst_second, db);
    }
    checks.push_back({"sum 1/(4k^2-l^2) = 1/(2l^2)", ok_first, worst_first,
                      appendix_inner_sum(1, InnerSumKind::first, opt.inner_sum_kmax).tail_bound});
    checks.push_back({"sum 1/(4k^2-l^2)^2 closed form", ok_second, worst_second,
                      appendix_inner_sum(1, InnerSumKind::second, opt.inner_sum_kmax).tail_bound});
  }
  {
    double worst = 0.0;
    bool ok = true;
    const std::int64_t kmax = std::min<std::int64_t>(opt.inner_sum_kmax, 100000);
    for (std::int64_t l = 1; l <= 9; l += 2)
      for (std::int64_t m = 1; m <= 9; m += 2) {
        const auto t = appendix_three_product_sum(l, m, kmax);
        const double d = std::fabs(t.partial - t.closed);
        ok = ok && d <= t.tail_bound + 1e-15;
        worst = std::max(worst, d);
      }
    checks.push_back({"three-product inner sums", ok, worst, 1e-15});
  }
  {
    std::int64_t violations = 0;
    std::int64_t asym = 0;
    for (std::int64_t k = 1; k <= opt.coefficient_bound_max; ++k)
      for (std::int64_t l = 1; l <= opt.coefficient_bound_max; ++l) {
        const double c = c_phi(k, l);
        const double kl = static_cast<double>(k) * static_cast<double>(k) * static_cast<double>(l) *
                          static_cast<double>(l);
        if (c < 0.0 || c > kTentConstant / kl) ++violations;
        if (c != c_phi(l, k)) ++asym;
      }
    checks.push_back({"0 <= c_phi(k,l) <= c'/(k^2 l^2)", violations == 0, static_cast<double>(violations), 0.0});
    checks.push_back({"c_phi symmetric", asym == 0, static_cast<double>(asym), 0.0});
  }
  {
    std::int64_t violations = 0;
    for (int alpha : {2, 4})
      for (std::int64_t k = 1; k <= opt.coefficient_bound_max; ++k)
        for (std::int64_t l = 1; l <= opt.coefficient_bound_max; ++l) {
          const double c = c_sym(k, l, alpha);
          const double bound =
              6.0 / (std::pow(static_cast<double>(k), alpha) * std::pow(static_cast<double>(l), alpha));
          if (c < 0.0 || c > bound || c != c_sym(l, k, alpha)) ++violations;
        }
    checks.push_back({"0 <= c_sym(k,l) <= 6/(k l)^alpha, symmetric", violations == 0,
                      static_cast<double>(violations), 0.0});
  }
  return checks;
}

}  // namespace latqmc
