#pragma once

#include "eagv/bound.hpp"

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <variant>
#include <vector>

namespace eagv {

/// (d1, d2) = (Z-distance d_z, X-distance d_x).
struct DistancePair {
  std::uint64_t d1 = 1;
  std::uint64_t d2 = 1;

  friend bool operator==(const DistancePair&, const DistancePair&) = default;
  friend auto operator<=>(const DistancePair&, const DistancePair&) = default;
};

/// Weak dominance: a is at least as good as b in both coordinates.
constexpr bool covers(const DistancePair& a, const DistancePair& b) {
  return a.d1 >= b.d1 && a.d2 >= b.d2;
}

constexpr bool dominates(const DistancePair& a, const DistancePair& b) {
  return covers(a, b) && a != b;
}

enum class FrontierSource { new_bound, old_bound, synthetic };

struct ParetoFrontier {
  std::vector<DistancePair> pairs;  // strictly decreasing d1
  FrontierSource source = FrontierSource::synthetic;
  std::variant<std::monostate, BoundParamsNew, BoundParamsOld> params;
};

template <typename F>
concept DistancePredicate = std::predicate<F, std::uint64_t, std::uint64_t>;

/// Pareto-maximal pairs of a downward-closed feasible set restricted to
/// [1, d_cap]^2: (d1, d2) is emitted iff it is feasible and both (d1+1, d2)
/// and (d1, d2+1) are not. Coordinates beyond d_cap count as infeasible.
///
/// Staircase sweep: d2 starts at its maximum for d1 = 1 and only moves down
/// as d1 grows, so the predicate is evaluated O(d_cap) times.
template <DistancePredicate F>
std::vector<DistancePair> frontier_pairs(F&& feasible, std::uint64_t d_cap) {
  std::vector<DistancePair> out;
  if (d_cap < 1 || !feasible(1, 1)) return out;

  std::vector<std::uint64_t> best(d_cap + 2, 0);  // best[d1] = max feasible d2, 0 if none
  std::uint64_t d2 = 1;
  while (d2 < d_cap && feasible(1, d2 + 1)) ++d2;
  best[1] = d2;
  for (std::uint64_t d1 = 2; d1 <= d_cap; ++d1) {
    while (d2 >= 1 && !feasible(d1, d2)) --d2;
    best[d1] = d2;
    if (d2 == 0) break;
  }
  for (std::uint64_t d1 = d_cap; d1 >= 1; --d1) {
    if (best[d1] == 0) continue;
    if (best[d1 + 1] < best[d1]) out.push_back({d1, best[d1]});
  }
  return out;
}

inline bool is_antichain(const std::vector<DistancePair>& pairs) {
  for (const auto& a : pairs)
    for (const auto& b : pairs)
      if (dominates(a, b)) return false;
  return true;
}

inline bool is_sorted_frontier(const std::vector<DistancePair>& pairs) {
  for (std::size_t i = 1; i < pairs.size(); ++i)
    if (!(pairs[i - 1].d1 > pairs[i].d1 && pairs[i - 1].d2 < pairs[i].d2)) return false;
  return true;
}

/// Distances are capped at n: no pair with a coordinate above the code length
/// is reported.
inline std::uint64_t default_distance_cap(std::uint64_t n) { return n; }

/// Frontier of the symplectic bound with d1 = d_z, d2 = d_x.
inline ParetoFrontier pareto_new(std::uint64_t q, std::uint64_t n, std::uint64_t ell, std::uint64_t c) {
  BoundParamsNew base{q, n, ell, c, 1, 1};
  validate(base);
  const std::uint64_t cap = default_distance_cap(n);
  const auto sums = ball_sums(n, cap, q);
  const auto factors = detail::new_bound_factors(base);
  auto feasible = [&](std::uint64_t dz, std::uint64_t dx) {
    return detail::evaluate_new(factors, sums[dx], sums[dz]).satisfied;
  };
  return {frontier_pairs(feasible, cap), FrontierSource::new_bound, base};
}

/// Frontier of the conventional bound with d1 = d_z, d2 = d_x.
inline ParetoFrontier pareto_old(std::uint64_t q, std::uint64_t n, std::uint64_t k1, std::uint64_t k2,
                                 std::uint64_t c) {
  BoundParamsOld base{q, n, k1, k2, c, 1, 1};
  validate(base);
  const std::uint64_t cap = default_distance_cap(n);
  const auto sums = ball_sums(n, cap, q);
  const auto factors = detail::old_bound_factors(base);
  auto feasible = [&](std::uint64_t dz, std::uint64_t dx) {
    return detail::evaluate_old(factors, sums[dz], sums[dx]).satisfied;
  };
  return {frontier_pairs(feasible, cap), FrontierSource::old_bound, base};
}

/// True iff every pair of old_f is covered by some pair of new_f.
inline bool improves(const ParetoFrontier& new_f, const ParetoFrontier& old_f) {
  return std::all_of(old_f.pairs.begin(), old_f.pairs.end(), [&](const DistancePair& o) {
    return std::any_of(new_f.pairs.begin(), new_f.pairs.end(),
                       [&](const DistancePair& p) { return covers(p, o); });
  });
}

inline bool is_swap_symmetric(const std::vector<DistancePair>& pairs) {
  return std::all_of(pairs.begin(), pairs.end(), [&](const DistancePair& p) {
    return std::find(pairs.begin(), pairs.end(), DistancePair{p.d2, p.d1}) != pairs.end();
  });
}

} // namespace eagv
