#include "doctest.h"
#include "latqmc/errors.hpp"
#include "latqmc/fourier_analysis.hpp"
#include "latqmc/kernels.hpp"
#include "oracles.hpp"

using namespace latqmc;
using oracle::pi;

TEST_SUITE("fourier_analysis") {
  TEST_CASE("tent kernel coefficients") {
    CHECK(c_phi(1, 1) == doctest::Approx(58.0 / 3 - 32 / (pi * pi)).epsilon(1e-15));
    CHECK(c_phi(1, 1) == doctest::Approx(16.091055).epsilon(1e-7));
    CHECK(c_phi(2, 2) == 0.375);
    CHECK(c_phi(1, 2) == 0.0);
    CHECK(c_phi(3, 5) == c_phi(5, 3));
    CHECK_THROWS_AS(c_phi(0, 1), PreconditionError);
  }

  TEST_CASE("symmetrized kernel coefficients") {
    CHECK(c_sym(2, 2, 2) == 0.375);
    CHECK(c_sym(1, 2, 2) == 1.0);
    CHECK(c_sym(3, 3, 4) == doctest::Approx(6 / std::pow(3.0, 8)).epsilon(1e-15));
    CHECK_THROWS_AS(c_sym(1, 1, 3), PreconditionError);
  }

  TEST_CASE("sine of tent coefficients") {
    CHECK(sin_tent_coeff(1, 1) == doctest::Approx(8 / (3 * pi)).epsilon(1e-15));
    CHECK(sin_tent_coeff(1, 2) == 0.0);
    CHECK(sin_tent_coeff(2, 3) == doctest::Approx(16 / (7 * pi)).epsilon(1e-15));
  }

  TEST_CASE("tent kernel series reconstruction") {
    // Limit at the origin: -1 + K(0, 0) = 1/4 + 1/144 + 1/720.
    const double tail = 2 * (58.0 / 3) / std::pow(pi, 4) * (pi * pi / 6) / 1e4;
    CHECK(std::fabs(tent_kernel_partial_sum(0, 0, 10000) - (0.25 + 1.0 / 144 + 1.0 / 720)) <= tail);
    const double ref = oracle::sobolev2_inc(oracle::tent(0.3), oracle::tent(0.7));
    CHECK(std::fabs(tent_kernel_partial_sum(0.3, 0.7, 1000) - ref) <= 2 * (58.0 / 3) / std::pow(pi, 4) * (pi * pi / 6) / 1e3);
    for (double x : {0.1, 0.27, 0.4})
      CHECK(std::fabs(tent_kernel_partial_sum(x, 0.6, 500) - tent_kernel_partial_sum(1 - x, 0.6, 500)) <= 1e-13);
  }

  TEST_CASE("separable partial sum equals the direct double sum") {
    for (double x : {0.05, 0.33})
      for (double y : {0.5, 0.81}) {
        double direct = 0;
        for (int k = 1; k <= 60; ++k)
          for (int l = 1; l <= 60; ++l) direct += c_phi(k, l) * std::cos(2 * pi * k * x) * std::cos(2 * pi * l * y);
        CHECK(tent_kernel_partial_sum(x, y, 60) == doctest::Approx(direct / std::pow(pi, 4)).epsilon(1e-12));
        double dsym = 0;
        for (int k = 1; k <= 60; ++k)
          for (int l = 1; l <= 60; ++l) dsym += c_sym(k, l, 2) * std::cos(2 * pi * k * x) * std::cos(2 * pi * l * y);
        CHECK(sym_kernel_partial_sum(x, y, 2, 60) == doctest::Approx(dsym / std::pow(2 * pi, 4)).epsilon(1e-12));
      }
  }

  TEST_CASE("sym kernel series reconstruction") {
    for (int alpha : {2, 4}) {
      const auto inc = sym_averaged_increment(alpha);
      for (double x : {0.0, 0.2, 0.7})
        for (double y : {0.1, 0.5}) CHECK(std::fabs(sym_kernel_partial_sum(x, y, alpha, 10000) - inc(x, y)) <= 5e-5);
    }
  }

  TEST_CASE("coefficient quadrature") {
    auto f = [](double x) { return std::sin(2 * pi * oracle::tent(x)); };
    CHECK(std::fabs(cosine_coeff_quadrature(f, 1, 64) - 0.5 * sin_tent_coeff(1, 1)) <= 1e-10);
    CHECK(std::fabs(cosine_coeff_quadrature(f, 1, 64) - 4 / (3 * pi)) <= 1e-10);
    CHECK(std::fabs(cosine_coeff_quadrature([](double) { return 1.0; }, 1, 8)) <= 1e-15);
    CHECK(cosine_coeff_quadrature([](double x) { return std::cos(6 * pi * x); }, 3, 8) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::fabs(cosine_coeff_quadrature(f, 2, 64, TrigWeight::sin_2pi)) <= 1e-12);
  }

  TEST_CASE("inner sums") {
    const auto a = appendix_inner_sum(1, InnerSumKind::first, 1000000);
    CHECK(a.closed == 0.5);
    CHECK(std::fabs(a.partial - 0.5) <= 1 / (4e6));
    CHECK(std::fabs(a.partial - a.closed) <= a.tail_bound + 1e-15);
    const auto b = appendix_inner_sum(3, InnerSumKind::first, 1000000);
    CHECK(b.closed == doctest::Approx(1.0 / 18).epsilon(1e-15));
    CHECK(std::fabs(b.partial - b.closed) <= b.tail_bound + 1e-15);
    const auto c = appendix_inner_sum(1, InnerSumKind::second, 10000);
    CHECK(c.closed == doctest::Approx(0.25 * (pi * pi / 4 - 2)).epsilon(1e-15));
    CHECK(std::fabs(c.partial - c.closed) <= c.tail_bound + 1e-15);
    for (int l = 1; l <= 7; l += 2)
      for (int m = 1; m <= 7; m += 2) {
        const auto t = appendix_three_product_sum(l, m, 100000);
        CHECK(std::fabs(t.partial - t.closed) <= t.tail_bound + 1e-15);
      }
    CHECK_THROWS_AS(appendix_inner_sum(2, InnerSumKind::first, 10), PreconditionError);
  }

  TEST_CASE("full verification suite passes") {
    for (const auto& c : verify_appendix()) {
      CAPTURE(c.name);
      CAPTURE(c.worst);
      CHECK(c.pass);
    }
  }
}
