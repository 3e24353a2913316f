#pragma once

#include "eagv/bigint.hpp"
#include "eagv/error.hpp"
#include "eagv/prime_power.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace eagv {

/// Parameters of the symplectic bound: code length n, dimension ell of
/// C ⊆ F_q^{2n}, entanglement degree c and the bit/phase detection targets.
struct BoundParamsNew {
  std::uint64_t q = 2;
  std::uint64_t n = 1;
  std::uint64_t ell = 1;
  std::uint64_t c = 0;
  std::uint64_t d_x = 1;
  std::uint64_t d_z = 1;
};

/// Parameters of the conventional direct-product bound.
struct BoundParamsOld {
  std::uint64_t q = 2;
  std::uint64_t n = 1;
  std::uint64_t k1 = 0;
  std::uint64_t k2 = 0;
  std::uint64_t c = 0;
  std::uint64_t d_z = 1;
  std::uint64_t d_x = 1;
};

/// An unreduced, exact fraction numerator / denominator.
struct ExactRatio {
  BigInt numerator;
  BigInt denominator{1};

  bool less_than_one() const { return numerator < denominator; }
  friend bool operator==(const ExactRatio&, const ExactRatio&) = default;
};

struct BoundResult {
  bool satisfied = false;
  ExactRatio lhs;
};

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Number of vectors of F_q^n with Hamming weight at most d - 1.
inline BigInt ball_sum(std::uint64_t n, std::uint64_t d, std::uint64_t q) {
  BigInt sum = 0;
  BigInt power = 1;
  for (std::uint64_t i = 0; i < d && i <= n; ++i) {
    sum += binomial(n, i) * power;
    power *= q - 1;
  }
  return sum;
}

/// All of ball_sum(n, d, q) for d = 0..d_max, computed incrementally.
inline std::vector<BigInt> ball_sums(std::uint64_t n, std::uint64_t d_max, std::uint64_t q) {
  std::vector<BigInt> out(d_max + 1);
  BigInt term = 1;  // C(n,i)(q-1)^i
  for (std::uint64_t d = 1; d <= d_max; ++d) {
    const std::uint64_t i = d - 1;
    if (i <= n) {
      if (i > 0) term = term * (n - i + 1) * (q - 1) / i;
      out[d] = out[d - 1] + term;
    } else {
      out[d] = out[d - 1];
    }
  }
  return out;
}

inline void require_prime_power(std::uint64_t q) {
  if (!is_prime_power(q))
    throw InvalidParameters("q=" + std::to_string(q) + " is not a prime power");
}

inline void validate(const BoundParamsNew& p) {
  require_prime_power(p.q);
  if (p.n < 1) throw InvalidParameters("n < 1");
  if (p.ell < 1) throw InvalidParameters("l < 1");
  if (p.ell >= p.n + p.c) throw InvalidParameters("l >= n + c");
  if (2 * p.c > p.ell) throw InvalidParameters("c > l/2");
  if (p.d_x < 1) throw InvalidParameters("dx < 1");
  if (p.d_z < 1) throw InvalidParameters("dz < 1");
  if (p.d_x - 1 > p.n) throw InvalidParameters("dx - 1 > n");
  if (p.d_z - 1 > p.n) throw InvalidParameters("dz - 1 > n");
}

inline void validate(const BoundParamsOld& p) {
  require_prime_power(p.q);
  if (p.n < 1) throw InvalidParameters("n < 1");
  if (p.k1 > p.n) throw InvalidParameters("k1 > n");
  if (p.k2 > p.n) throw InvalidParameters("k2 > n");
  if (p.k1 + p.k2 > p.n + p.c) throw InvalidParameters("c < k1 + k2 - n");
  if (p.c > std::min(p.k1, p.k2)) throw InvalidParameters("c > min(k1, k2)");
  if (p.d_x < 1) throw InvalidParameters("dx < 1");
  if (p.d_z < 1) throw InvalidParameters("dz < 1");
  if (p.d_x - 1 > p.n) throw InvalidParameters("dx - 1 > n");
  if (p.d_z - 1 > p.n) throw InvalidParameters("dz - 1 > n");
}

namespace detail {

// Parameter-only factors of the symplectic inequality:
//   coefficient * (S_x * S_z - 1) < denominator.
struct NewBoundFactors {
  BigInt coefficient;  // q^{2n-l} - q^{l-2c}
  BigInt denominator;  // q^{2n} - 1
};

inline NewBoundFactors new_bound_factors(const BoundParamsNew& p) {
  return {pow_big(p.q, 2 * p.n - p.ell) - pow_big(p.q, p.ell - 2 * p.c), pow_big(p.q, 2 * p.n) - 1};
}

struct OldBoundFactors {
  BigInt coef_z;       // q^{n-k1} - q^{k2-c}
  BigInt coef_x;       // q^{n-k2} - q^{k1-c}
  BigInt denominator;  // q^n - 1
};

inline OldBoundFactors old_bound_factors(const BoundParamsOld& p) {
  return {pow_big(p.q, p.n - p.k1) - pow_big(p.q, p.k2 - p.c),
          pow_big(p.q, p.n - p.k2) - pow_big(p.q, p.k1 - p.c), pow_big(p.q, p.n) - 1};
}

inline BoundResult evaluate_new(const NewBoundFactors& f, const BigInt& s_x, const BigInt& s_z) {
  BoundResult r;
  r.lhs.numerator = f.coefficient * (s_x * s_z - 1);
  r.lhs.denominator = f.denominator;
  r.satisfied = r.lhs.numerator < r.lhs.denominator;
  return r;
}

// s_z, s_x are full ball sums; the inequality sums start at i = 1.
inline BoundResult evaluate_old(const OldBoundFactors& f, const BigInt& s_z, const BigInt& s_x) {
  BoundResult r;
  r.lhs.numerator = f.coef_z * (s_z - 1) + f.coef_x * (s_x - 1);
  r.lhs.denominator = f.denominator;
  r.satisfied = r.lhs.numerator < r.lhs.denominator;
  return r;
}

} // namespace detail

/// Evaluates the symplectic GV inequality
///   (q^{2n-l} - q^{l-2c}) (S_x S_z - 1) / (q^{2n} - 1) < 1
/// exactly, where S_x = ball_sum(n, d_x, q) and S_z = ball_sum(n, d_z, q).
inline BoundResult check_new(const BoundParamsNew& p) {
  validate(p);
  return detail::evaluate_new(detail::new_bound_factors(p), ball_sum(p.n, p.d_x, p.q),
                              ball_sum(p.n, p.d_z, p.q));
}

/// Evaluates the conventional direct-product GV inequality
///   [(q^{n-k1} - q^{k2-c}) Σ_{i=1}^{d_z-1} + (q^{n-k2} - q^{k1-c}) Σ_{i=1}^{d_x-1}] / (q^n - 1) < 1.
inline BoundResult check_old(const BoundParamsOld& p) {
  validate(p);
  return detail::evaluate_old(detail::old_bound_factors(p), ball_sum(p.n, p.d_z, p.q),
                              ball_sum(p.n, p.d_x, p.q));
}

} // namespace eagv
