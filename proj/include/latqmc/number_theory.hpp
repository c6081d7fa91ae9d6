#pragma once

#include <cstdint>
#include <vector>

namespace latqmc {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Smallest generator of (Z/NZ)^* for prime N; 1 for N = 2.
/// Throws PreconditionError for composite N.
std::uint64_t primitive_root(std::uint64_t n);

/// Prime closest to `target` (ties resolved towards the smaller prime).
std::uint64_t nearest_prime(std::uint64_t target);

}  // namespace latqmc
