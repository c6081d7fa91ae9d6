#include "doctest.h"
#include "latqmc/errors.hpp"
#include "latqmc/quadrature.hpp"
#include "latqmc/special_functions.hpp"
#include "oracles.hpp"

using namespace latqmc;
using oracle::pi;

TEST_SUITE("special_functions") {
  TEST_CASE("bernoulli polynomial values") {
    CHECK(bernoulli_poly(2, 0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(bernoulli_poly(1, 0.5) == 0.0);
    // x^4 - 2x^3 + x^2 - 1/30 at 1/4 is 7/3840.
    CHECK(bernoulli_poly(4, 0.25) == doctest::Approx(7.0 / 3840.0).epsilon(1e-14));
    CHECK(bernoulli_table().coefficient(4, 0) == Rational{-1, 30});
    CHECK(bernoulli_table().coefficient(12, 0) == Rational{-691, 2730});
    CHECK(bernoulli_table().coefficient(3, 1) == Rational{1, 2});
  }

  TEST_CASE("bernoulli table against hand-written closed forms") {
    for (double x : {0.0, 0.1, 0.37, 0.5, 0.93, 1.0}) {
      CHECK(bernoulli_poly(1, x) == doctest::Approx(oracle::B1(x)).epsilon(1e-15));
      CHECK(bernoulli_poly(2, x) == doctest::Approx(oracle::B2(x)).epsilon(1e-15));
      CHECK(bernoulli_poly(3, x) == doctest::Approx(oracle::B3(x)).epsilon(1e-14));
      CHECK(bernoulli_poly(4, x) == doctest::Approx(oracle::B4(x)).epsilon(1e-14));
    }
  }

  TEST_CASE("bernoulli symmetry and degree limit") {
    for (int tau = 1; tau <= 16; ++tau)
      for (double x : {0.1, 0.3, 0.45}) {
        const double sign = tau % 2 ? -1.0 : 1.0;
        CHECK(bernoulli_poly(tau, 1 - x) == doctest::Approx(sign * bernoulli_poly(tau, x)).epsilon(1e-12));
      }
    CHECK_THROWS_AS(bernoulli_poly(17, 0.5), PreconditionError);
    CHECK_THROWS_AS(bernoulli_poly(-1, 0.5), PreconditionError);
  }

  TEST_CASE("scaled bernoulli integrates to zero") {
    for (int tau = 1; tau <= 10; ++tau)
      CHECK(std::fabs(integrate_composite([&](double x) { return bernoulli_scaled(tau, x); }, 0, 1, 4)) < 1e-15);
  }

  TEST_CASE("periodic bernoulli") {
    CHECK(bernoulli_periodic(2, 1.25) == doctest::Approx(oracle::B2(0.25)).epsilon(1e-15));
    CHECK(bernoulli_periodic(2, -0.75) == doctest::Approx(oracle::B2(0.25)).epsilon(1e-15));
    CHECK(bernoulli_periodic(4, 3.0) == doctest::Approx(-1.0 / 30.0).epsilon(1e-15));
    CHECK_THROWS_AS(bernoulli_periodic(1, 0.2), PreconditionError);
  }

  TEST_CASE("riemann zeta") {
    CHECK(riemann_zeta(2) == doctest::Approx(pi * pi / 6).epsilon(1e-14));
    CHECK(riemann_zeta(4) == doctest::Approx(std::pow(pi, 4) / 90).epsilon(1e-14));
    // Reference values to 20 digits.
    CHECK(riemann_zeta(1.2) == doctest::Approx(5.5915824411777518836).epsilon(1e-12));
    CHECK(riemann_zeta(1.1) == doctest::Approx(10.584448464950800951).epsilon(1e-12));
    CHECK_THROWS_AS(riemann_zeta(1.0), PreconditionError);
    CHECK_THROWS_AS(riemann_zeta(0.5), PreconditionError);
  }

  TEST_CASE("zeta tails") {
    for (double sigma : {1.5, 2.0, 4.0}) {
      const double p = zeta_partial(sigma, 1000);
      const double t = zeta_tail(sigma, 1000);
      CHECK(p + t == doctest::Approx(riemann_zeta(sigma)).epsilon(1e-13));
      CHECK(t <= zeta_tail_bound(sigma, 1000));
      CHECK(t >= 0.0);
    }
  }

  TEST_CASE("bernoulli fourier partial sums") {
    // b_2(1/2) = -1/24, tail below 3/(2 pi^2 kmax).
    CHECK(std::fabs(bernoulli_fourier_partial_sum(2, 0.5, 10000) + 1.0 / 24.0) <= 3 / (2 * pi * pi * 1e4));
    // b_4(0) = -1/720 within 2 zeta-tail (2 pi)^-4.
    CHECK(std::fabs(bernoulli_fourier_partial_sum(4, 0.0, 1000) + 1.0 / 720.0) <=
          2 * zeta_tail_bound(4, 1000) / std::pow(2 * pi, 4));
    // Single term k = +-1 at x = 0: -(2 pi i)^{-2} * 2 = 1/(2 pi^2).
    CHECK(bernoulli_fourier_partial_sum(2, 0.0, 1) == doctest::Approx(1 / (2 * pi * pi)).epsilon(1e-15));
    // Odd degree: b_3(x) = (2 / (2 pi)^3) sum sin(2 pi k x) / k^3.
    CHECK(bernoulli_fourier_partial_sum(3, 0.2, 20000) == doctest::Approx(oracle::B3(0.2) / 6).epsilon(1e-8));
  }

  TEST_CASE("gauss-legendre exactness") {
    for (int n : {1, 2, 5, 8, 16}) {
      const auto r = gauss_legendre(n);
      for (int deg = 0; deg < 2 * n; ++deg) {
        double q = 0;
        for (int i = 0; i < n; ++i) q += r.weights[i] * std::pow(r.nodes[i], deg);
        const double exact = deg % 2 ? 0.0 : 2.0 / (deg + 1);
        CHECK(q == doctest::Approx(exact).epsilon(1e-13));
      }
    }
  }

  TEST_CASE("composite quadrature with a kink") {
    auto f = [](double x) { return std::fabs(x - 0.3); };
    CHECK(integrate_unit_interval(f, 4, {0.3}) == doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-15));
  }
}
