#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace latqmc {

/// Coefficient of cos(2 pi k x) cos(2 pi l y) in pi^4 (K^sob_2(phi(x), phi(y)) - 1).
double c_phi(std::int64_t k, std::int64_t l);

/// Coefficient of cos(2 pi k x) cos(2 pi l y) in (2 pi)^{2 alpha} times the
/// reflection-averaged K^{sob,odd+alpha} - 1; alpha even.
double c_sym(std::int64_t k, std::int64_t l, int alpha);

/// Coefficient of cos(2 pi l x) in sin(2 pi k phi(x)).
double sin_tent_coeff(std::int64_t k, std::int64_t l);

/// (1/pi^4) sum_{k,l <= kmax} c_phi(k,l) cos(2 pi k x) cos(2 pi l y) in O(kmax).
///
/// Per parity class the double sum splits into a separable part and a
/// diagonal. With A_p = sum_{k odd} cos(2 pi k x)/k^p and B_p the same in y,
/// the odd block is 52/3 A_2 B_2 - 16/pi^2 (A_4 B_2 + A_2 B_4) plus the
/// diagonal excess 2 sum_{k odd} cos cos / k^4; with E, F the even-k analogues
/// of A_2, B_2 the even block is 4 E F + 2 sum_{k even} cos cos / k^4.
double tent_kernel_partial_sum(double x, double y, std::int64_t kmax);

/// (2 pi)^{-2 alpha} sum_{k,l <= kmax} c_sym(k,l) cos cos
///   = (2 pi)^{-2 alpha} (4 A_alpha B_alpha + 2 sum_k cos cos / k^{2 alpha}).
double sym_kernel_partial_sum(double x, double y, int alpha, std::int64_t kmax);

enum class TrigWeight { cos_2pi, sin_2pi, cos_pi };

/// integral_0^1 f(x) w(k x) dx by 8-point composite Gauss-Legendre, with
/// `panels` panels on each half of [0,1] (split at the tent kink x = 1/2).
/// A full Fourier-series coefficient is twice this integral.
double cosine_coeff_quadrature(const std::function<double(double)>& f, std::int64_t k, int panels,
                               TrigWeight weight = TrigWeight::cos_2pi);

struct InnerSum {
  double partial = 0.0;
  double closed = 0.0;
  /// Upper bound on |closed - partial| from an integral comparison.
  double tail_bound = 0.0;
};

enum class InnerSumKind { first, second };

/// first:  sum_k 1/(4k^2 - l^2)   = 1/(2 l^2)
/// second: sum_k 1/(4k^2 - l^2)^2 = (1/(4 l^2)) (pi^2/4 - 2/l^2)
/// for odd l, truncated after kmax terms.
InnerSum appendix_inner_sum(std::int64_t l, InnerSumKind which, std::int64_t kmax);

/// sum_k 1/(k^2 (4k^2 - l^2)(4k^2 - m^2)) for odd l, m against
///   (1/l^4)(5 pi^2/12 - 4/l^2)                    if l = m,
///   (1/(l^2 m^2))(pi^2/6 - 2/l^2 - 2/m^2)          otherwise.
InnerSum appendix_three_product_sum(std::int64_t l, std::int64_t m, std::int64_t kmax);

struct AppendixCheck {
  std::string name;
  bool pass = false;
  double worst = 0.0;      // largest observed deviation (or violation count)
  double tolerance = 0.0;
};

struct AppendixOptions {
  std::int64_t reconstruction_kmax = 10000;
  int reconstruction_points = 20;
  std::int64_t max_quadrature_index = 8;
  std::int64_t inner_sum_kmax = 1000000;
  std::int64_t coefficient_bound_max = 1000;
};

/// Runs the full set of Fourier-coefficient and series identities.
std::vector<AppendixCheck> verify_appendix(const AppendixOptions& options = {});

}  // namespace latqmc
