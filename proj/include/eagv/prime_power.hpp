#pragma once

#include <cstdint>
#include <optional>

namespace eagv {

struct PrimePower {
  std::uint64_t p;
  unsigned m;
};

constexpr bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Trial factorization; returns q = p^m or nothing when q is not a prime power.
constexpr std::optional<PrimePower> factor_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{q, 1};
  unsigned m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, m};
}

constexpr bool is_prime_power(std::uint64_t q) { return factor_prime_power(q).has_value(); }

} // namespace eagv
