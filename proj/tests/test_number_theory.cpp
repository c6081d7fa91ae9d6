#include "doctest.h"
#include "latqmc/errors.hpp"
#include "latqmc/number_theory.hpp"

using namespace latqmc;

namespace {

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t order_of(std::uint64_t g, std::uint64_t n) {
  std::uint64_t x = g % n, k = 1;
  while (x != 1) {
    x = x * g % n;
    ++k;
  }
  return k;
}

}  // namespace

TEST_SUITE("number_theory") {
  TEST_CASE("primality against trial division") {
    for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == trial_prime(n));
    CHECK(is_prime(18446744073709551557ull));
    CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
  }

  TEST_CASE("primitive roots") {
    CHECK(primitive_root(5) == 2);
    CHECK(primitive_root(7) == 3);
    CHECK(primitive_root(13) == 2);
    CHECK(primitive_root(2) == 1);
    for (std::uint64_t p : {3ull, 11ull, 101ull, 251ull, 1009ull, 16381ull}) {
      const auto g = primitive_root(p);
      CHECK(order_of(g, p) == p - 1);
      for (std::uint64_t h = 2; h < g; ++h) CHECK(order_of(h, p) < p - 1);
    }
    CHECK_THROWS_AS(primitive_root(12), PreconditionError);
  }

  TEST_CASE("modular arithmetic") {
    CHECK(mulmod(0xFFFFFFFFFFFFFFFEull, 0xFFFFFFFFFFFFFFFDull, 0xFFFFFFFFFFFFFFFFull) == 2);
    CHECK(powmod(3, 200, 1000003) == powmod(9, 100, 1000003));
    CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
  }

  TEST_CASE("nearest primes of the power-of-two grid") {
    const std::vector<std::uint64_t> expect{61, 127, 257, 509, 1021, 2053, 4093, 8191, 16381};
    for (int e = 6; e <= 14; ++e) CHECK(nearest_prime(std::uint64_t{1} << e) == expect[e - 6]);
    CHECK(nearest_prime(4) == 3);  // 3 and 5 tie
  }
}
