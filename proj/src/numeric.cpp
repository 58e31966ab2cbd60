#include "pdskit/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace pdskit {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 7; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> factor_u64(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("factor_u64: argument must be >= 2");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;
  auto strip = [&](std::uint64_t p) {
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) parts.emplace_back(p, e);
  };
  strip(2);
  for (std::uint64_t d = 3; d <= n / d; d += 2) strip(d);
  if (n > 1) parts.emplace_back(n, 1);
  return parts;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

bool is_perfect_square_u64(std::uint64_t n, std::uint64_t* root) {
  std::uint64_t r = isqrt_u64(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

std::int64_t floor_div_i64(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) throw std::overflow_error("pow_u64: overflow");
    out *= base;
  }
  return out;
}

}  // namespace pdskit
