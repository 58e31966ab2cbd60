#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pdskit {

bool is_prime_u64(std::uint64_t n);

// Prime factorization by trial division; pairs (prime, exponent), primes
// ascending. Requires n >= 2.
std::vector<std::pair<std::uint64_t, std::uint64_t>> factor_u64(std::uint64_t n);

std::uint64_t isqrt_u64(std::uint64_t n);

// When n is a perfect square, returns true and stores the root if requested.
bool is_perfect_square_u64(std::uint64_t n, std::uint64_t* root = nullptr);

// Floor division for b > 0 (rounds toward negative infinity).
std::int64_t floor_div_i64(std::int64_t a, std::int64_t b);

// base^exp, throwing std::overflow_error past 2^64-1.
std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp);

}  // namespace pdskit
