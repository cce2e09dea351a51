#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace saxl {

bool is_prime(std::uint64_t n);

/// Prime factorisation as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Euler's totient; phi(1) = 1.
std::uint64_t euler_phi(std::uint64_t n);

/// If n = p^f for a prime p and f >= 1, returns (p, f); otherwise (0, 0).
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n);

/// Exact b^e; throws std::overflow_error past 64 bits.
std::uint64_t ipow(std::uint64_t b, unsigned e);

}  // namespace saxl
