#include "latqmc/number_theory.hpp"

#include <string>

#include "latqmc/errors.hpp"

namespace latqmc {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These bases are sufficient for every n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t primitive_root(std::uint64_t n) {
  if (!is_prime(n)) throw PreconditionError("primitive_root requires a prime modulus, got " + std::to_string(n));
  if (n == 2) return 1;
  const auto factors = prime_factors(n - 1);
  for (std::uint64_t g = 2; g < n; ++g) {
    bool generator = true;
    for (std::uint64_t p : factors) {
      if (powmod(g, (n - 1) / p, n) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw GuardError("no primitive root found");  // impossible for prime n
}

std::uint64_t nearest_prime(std::uint64_t target) {
  if (target <= 2) return 2;
  for (std::uint64_t d = 0;; ++d) {
    if (d < target && is_prime(target - d)) return target - d;
    if (is_prime(target + d)) return target + d;
  }
}

}  // namespace latqmc
