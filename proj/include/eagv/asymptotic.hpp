#pragma once

#include "eagv/error.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace eagv {

// Double precision is enough for the asymptotic statement; values within
// this distance of equality are reported as boundary cases.
inline constexpr double boundary_band = 1e-9;
inline constexpr double delta_tolerance = 1e-12;

struct AsymptoticParams {
  std::uint64_t q = 2;
  double L = 0;        // normalized dimension ell / n
  double lambda = 0;   // normalized entanglement c / n
  double delta_x = 0;
  double delta_z = 0;
};

struct AsymptoticVerdict {
  bool satisfied = false;
  bool boundary = false;
  double lhs = 0;
  double rate = 0;  // 1 - L + lambda
};

/// q-ary entropy h(x) = -x log_q x - (1-x) log_q(1-x), with 0 log 0 = 0.
inline double entropy_q(double x, std::uint64_t q) {
  if (q < 2) throw DomainError("q < 2");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("entropy argument outside [0,1]");
  const double lq = std::log(static_cast<double>(q));
  double h = 0;
  if (x > 0) h -= x * std::log(x);
  if (x < 1) h -= (1 - x) * std::log1p(-x);
  return h / lq;
}

/// h(δ) + δ log_q(q-1), the exponent of a Hamming ball of relative radius δ.
inline double ball_exponent(double delta, std::uint64_t q) {
  const double lq = std::log(static_cast<double>(q));
  return entropy_q(delta, q) + delta * std::log(static_cast<double>(q - 1)) / lq;
}

inline void validate(const AsymptoticParams& p) {
  if (p.q < 2) throw InvalidParameters("q < 2");
  if (!(p.L >= 0)) throw InvalidParameters("L < 0");
  if (!(p.lambda >= 0)) throw InvalidParameters("lambda < 0");
  if (p.L > 1 + p.lambda) throw InvalidParameters("L > 1 + lambda");
  if (p.lambda > p.L / 2) throw InvalidParameters("lambda > L/2");
  if (!(p.delta_x >= 0 && p.delta_x < 0.5)) throw InvalidParameters("delta_x outside [0, 1/2)");
  if (!(p.delta_z >= 0 && p.delta_z < 0.5)) throw InvalidParameters("delta_z outside [0, 1/2)");
}

/// h(δ_x) + δ_x log_q(q-1) + h(δ_z) + δ_z log_q(q-1) < L. Symmetric in the
/// two distances, so the order in which they are labelled does not matter.
inline AsymptoticVerdict check_asymptotic(const AsymptoticParams& p) {
  validate(p);
  AsymptoticVerdict v;
  v.lhs = ball_exponent(p.delta_x, p.q) + ball_exponent(p.delta_z, p.q);
  v.boundary = std::fabs(v.lhs - p.L) <= boundary_band;
  v.satisfied = !v.boundary && v.lhs < p.L;
  v.rate = 1 - p.L + p.lambda;
  return v;
}

/// Largest δ < 1/2 with ball_exponent(δ) <= L - ball_exponent(δ_other), by
/// bisection. Returns 0 when nothing is left and 1/2 - 1e-12 when the
/// residual reaches the supremum of the exponent on [0, 1/2).
inline double max_delta(std::uint64_t q, double L, double delta_other) {
  if (q < 2) throw InvalidParameters("q < 2");
  if (!(delta_other >= 0 && delta_other < 0.5)) throw InvalidParameters("delta_other outside [0, 1/2)");
  const double residual = L - ball_exponent(delta_other, q);
  if (residual <= 0) return 0;
  if (residual >= ball_exponent(0.5, q)) return 0.5 - delta_tolerance;
  double lo = 0, hi = 0.5;
  while (hi - lo > delta_tolerance) {
    const double mid = 0.5 * (lo + hi);
    (ball_exponent(mid, q) <= residual ? lo : hi) = mid;
  }
  return lo;
}

struct CurvePoint {
  double delta_x;
  double delta_z_max;
};

/// Samples δ_x on the uniform grid i / (2 points), i < points.
inline std::vector<CurvePoint> asymptotic_curve(std::uint64_t q, double L, std::size_t points = 512) {
  if (points < 1) throw InvalidParameters("points < 1");
  std::vector<CurvePoint> out;
  out.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double dx = 0.5 * static_cast<double>(i) / static_cast<double>(points);
    out.push_back({dx, max_delta(q, L, dx)});
  }
  return out;
}

} // namespace eagv
