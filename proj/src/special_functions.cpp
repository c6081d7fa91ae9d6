#include "latqmc/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "latqmc/errors.hpp"

namespace latqmc {
namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Working rational in 128-bit; narrowed to Rational once reduced.
struct Wide {
  i128 num = 0;
  i128 den = 1;

  static Wide reduced(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return {n, d};
  }
  Wide operator+(const Wide& o) const { return reduced(num * o.den + o.num * den, den * o.den); }
  Wide operator*(const Wide& o) const { return reduced(num * o.num, den * o.den); }
};

Rational narrow(const Wide& w) {
  constexpr i128 kMax = static_cast<i128>(INT64_MAX);
  if (w.num > kMax || w.num < -kMax || w.den > kMax)
    throw GuardError("Bernoulli coefficient overflows 64-bit rational");
  return {static_cast<std::int64_t>(w.num), static_cast<std::int64_t>(w.den)};
}

i128 binomial(int n, int k) {
  i128 c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

BernoulliTable::BernoulliTable(int max_degree) : max_degree_(max_degree) {
  if (max_degree < 0 || max_degree > 24) throw PreconditionError("Bernoulli table degree must be in [0, 24]");
  std::vector<Wide> numbers(max_degree + 1);
  numbers[0] = {1, 1};
  for (int m = 1; m <= max_degree; ++m) {
    Wide acc{0, 1};
    for (int k = 0; k < m; ++k) acc = acc + Wide{binomial(m + 1, k), 1} * numbers[k];
    numbers[m] = acc * Wide{-1, m + 1};
  }
  exact_.resize(max_degree + 1);
  coeffs_.resize(max_degree + 1);
  for (int n = 0; n <= max_degree; ++n) {
    exact_[n].resize(n + 1);
    coeffs_[n].resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      exact_[n][k] = narrow(Wide{binomial(n, k), 1} * numbers[n - k]);
      coeffs_[n][k] = exact_[n][k].to_double();
    }
  }
}

void BernoulliTable::check_degree(int tau) const {
  if (tau < 0 || tau > max_degree_)
    throw PreconditionError("Bernoulli degree " + std::to_string(tau) + " outside table range [0, " +
                            std::to_string(max_degree_) + "]");
}

Rational BernoulliTable::coefficient(int tau, int power) const {
  check_degree(tau);
  if (power < 0 || power > tau) return {0, 1};
  return exact_[tau][power];
}

std::span<const double> BernoulliTable::coefficients(int tau) const {
  check_degree(tau);
  return coeffs_[tau];
}

double BernoulliTable::eval(int tau, double x) const {
  check_degree(tau);
  const auto& c = coeffs_[tau];
  double p = c[tau];
  for (int k = tau - 1; k >= 0; --k) p = p * x + c[k];
  return p;
}

const BernoulliTable& bernoulli_table() {
  static const BernoulliTable table;
  return table;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double bernoulli_poly(int tau, double x) { return bernoulli_table().eval(tau, x); }

double bernoulli_scaled(int tau, double x) { return bernoulli_poly(tau, x) / factorial(tau); }

std::vector<double> bernoulli_scaled_coefficients(int tau) {
  const auto c = bernoulli_table().coefficients(tau);
  const double f = factorial(tau);
  std::vector<double> out(c.begin(), c.end());
  for (double& v : out) v /= f;
  return out;
}

double bernoulli_periodic(int tau, double x) {
  if (tau < 2) throw PreconditionError("periodic Bernoulli extension requires tau >= 2");
  return bernoulli_poly(tau, x - std::floor(x));
}

namespace {

constexpr std::int64_t kZetaCutoff = 100000;

// Euler-Maclaurin estimate of sum_{k>=m} k^{-sigma}.
double euler_maclaurin_tail(double sigma, double m) {
  // B_2, B_4, B_6, B_8 divided by (2j)!
  constexpr double kB[4] = {1.0 / 6.0 / 2.0, -1.0 / 30.0 / 24.0, 1.0 / 42.0 / 720.0, -1.0 / 30.0 / 40320.0};
  double tail = std::pow(m, 1.0 - sigma) / (sigma - 1.0) + 0.5 * std::pow(m, -sigma);
  double rising = sigma;  // sigma (sigma+1) ... (sigma+2j-2)
  for (int j = 1; j <= 4; ++j) {
    tail += kB[j - 1] * rising * std::pow(m, -sigma - 2.0 * j + 1.0);
    rising *= (sigma + 2.0 * j - 1.0) * (sigma + 2.0 * j);
  }
  return tail;
}

// Neumaier-compensated sum of k^{-sigma} over [lo, hi], largest index first.
double compensated_power_sum(double sigma, std::int64_t lo, std::int64_t hi) {
  double sum = 0.0;
  double comp = 0.0;
  for (std::int64_t k = hi; k >= lo; --k) {
    const double term = std::pow(static_cast<double>(k), -sigma);
    const double t = sum + term;
    comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

}  // namespace

double riemann_zeta(double sigma) {
  if (!(sigma > 1.0)) throw PreconditionError("riemann_zeta requires sigma > 1");
  return compensated_power_sum(sigma, 1, kZetaCutoff - 1) +
         euler_maclaurin_tail(sigma, static_cast<double>(kZetaCutoff));
}

double zeta_partial(double sigma, std::int64_t kmax) {
  if (kmax <= 0) return 0.0;
  return compensated_power_sum(sigma, 1, kmax);
}

double zeta_tail(double sigma, std::int64_t kmax) {
  if (!(sigma > 1.0)) throw PreconditionError("zeta_tail requires sigma > 1");
  if (kmax < 0) kmax = 0;
  if (kmax + 1 >= 16) return euler_maclaurin_tail(sigma, static_cast<double>(kmax + 1));
  return riemann_zeta(sigma) - zeta_partial(sigma, kmax);
}

double zeta_tail_bound(double sigma, std::int64_t kmax) {
  if (!(sigma > 1.0)) throw PreconditionError("zeta_tail_bound requires sigma > 1");
  if (kmax < 1) throw PreconditionError("zeta_tail_bound requires kmax >= 1");
  return std::pow(static_cast<double>(kmax), 1.0 - sigma) / (sigma - 1.0);
}

double bernoulli_fourier_partial_sum(int tau, double x, std::int64_t kmax) {
  if (tau < 2) throw PreconditionError("Bernoulli Fourier series is only summed for tau >= 2");
  const double two_pi = 2.0 * std::numbers::pi;
  double s = 0.0;
  for (std::int64_t k = kmax; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    const double arg = two_pi * kd * x;
    s += (tau % 2 == 0 ? std::cos(arg) : std::sin(arg)) / std::pow(kd, tau);
  }
  // Even tau: (2 pi i)^tau = (2 pi)^tau (-1)^{tau/2}; odd: (2 pi)^tau i (-1)^{(tau-1)/2}.
  const int half = tau % 2 == 0 ? tau / 2 : (tau - 1) / 2;
  const double sign = half % 2 == 0 ? 1.0 : -1.0;
  return -2.0 * sign * s / std::pow(two_pi, tau);
}

}  // namespace latqmc
