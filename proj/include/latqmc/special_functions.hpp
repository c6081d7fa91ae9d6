#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace latqmc {

/// Exact rational number with 64-bit numerator and positive denominator,
/// always stored in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Bernoulli polynomials B_0 .. B_max_degree with exact rational coefficients.
///
/// Coefficients come from the recurrence sum_{k<=m} C(m+1,k) B_k = 0 for the
/// Bernoulli numbers (B_1 = -1/2 convention) and
/// B_n(x) = sum_k C(n,k) B_{n-k} x^k, all in 128-bit intermediate arithmetic.
class BernoulliTable {
 public:
  static constexpr int kDefaultMaxDegree = 16;

  explicit BernoulliTable(int max_degree = kDefaultMaxDegree);

  int max_degree() const { return max_degree_; }

  /// Exact coefficient of x^power in B_tau(x).
  Rational coefficient(int tau, int power) const;

  /// Ascending-power double coefficients of B_tau.
  std::span<const double> coefficients(int tau) const;

  /// B_tau(x) by Horner's scheme.
  double eval(int tau, double x) const;

 private:
  void check_degree(int tau) const;

  int max_degree_;
  std::vector<std::vector<Rational>> exact_;
  std::vector<std::vector<double>> coeffs_;
};

/// Process-wide table of degree 16, built on first use.
const BernoulliTable& bernoulli_table();

double factorial(int n);

/// B_tau(x). Throws PreconditionError when tau exceeds the table degree.
double bernoulli_poly(int tau, double x);

/// b_tau(x) = B_tau(x) / tau!.
double bernoulli_scaled(int tau, double x);

/// Ascending coefficients of b_tau = B_tau / tau!.
std::vector<double> bernoulli_scaled_coefficients(int tau);

/// Periodic extension B_tau(x - floor(x)); tau >= 2 only (B_1 is
/// discontinuous and never needed periodically).
double bernoulli_periodic(int tau, double x);

/// Riemann zeta for real sigma > 1: direct sum of 1e5 terms plus a
/// four-term Euler-Maclaurin remainder.
double riemann_zeta(double sigma);

/// sum_{k=1}^{kmax} k^{-sigma}.
double zeta_partial(double sigma, std::int64_t kmax);

/// sum_{k>kmax} k^{-sigma}, accurate value (Euler-Maclaurin).
double zeta_tail(double sigma, std::int64_t kmax);

/// Rigorous upper bound for sum_{k>kmax} k^{-sigma}: the integral
/// kmax^{1-sigma}/(sigma-1). Requires kmax >= 1.
double zeta_tail_bound(double sigma, std::int64_t kmax);

/// Truncated Fourier series of b_tau:
///   -(2 pi i)^{-tau} sum_{0<|k|<=kmax} e^{2 pi i k x} / k^tau,
/// reduced to its real cosine (even tau) or sine (odd tau) form. tau >= 2.
double bernoulli_fourier_partial_sum(int tau, double x, std::int64_t kmax);

}  // namespace latqmc
