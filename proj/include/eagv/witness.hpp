#pragma once

#include "eagv/bigint.hpp"
#include "eagv/bound.hpp"
#include "eagv/error.hpp"
#include "eagv/galois_field.hpp"
#include "eagv/matrix.hpp"
#include "eagv/symplectic.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace eagv {

enum class SearchMode { random, exhaustive };

struct SearchConfig {
  BoundParamsNew params;
  SearchMode mode = SearchMode::random;
  std::uint64_t trials = 10'000;
  std::uint64_t seed = 1;
  std::uint64_t budget = default_detection_budget;      // per detection check
  std::uint64_t subspace_cap = 1'000'000;               // exhaustive mode only
};

struct WitnessStats {
  std::uint64_t rejected_wrong_c = 0;
  std::uint64_t rejected_detection = 0;

  friend bool operator==(const WitnessStats&, const WitnessStats&) = default;
};

struct WitnessReport {
  bool found = false;
  std::optional<Matrix> witness;  // RREF basis of the witness code
  std::uint64_t trials_used = 0;
  WitnessStats stats;
  bool bound_satisfied = false;
  bool completed = false;      // exhaustive enumeration ran to the end
  bool contradiction = false;  // bound satisfied, exhaustive search found nothing

  friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

/// Per-trial seed from (master seed, trial index), splitmix64 finalizer.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Uniform ell-dimensional subspace of F_q^{2n}: i.i.d. uniform ell x 2n
/// matrices are drawn until one has full rank.
template <typename Rng>
CodeSpace sample_subspace(const Field& f, std::size_t n, std::size_t ell, Rng& rng) {
  if (ell > 2 * n) throw InvalidParameters("l > 2n");
  std::uniform_int_distribution<Element> entry(0, f.q() - 1);
  for (;;) {
    Matrix h(ell, 2 * n);
    for (std::size_t r = 0; r < ell; ++r)
      for (std::size_t j = 0; j < 2 * n; ++j) h(r, j) = entry(rng);
    if (rank(f, h) == ell) return analyze_code(f, n, h);
  }
}

/// Number of k-dimensional subspaces of F_q^N (Gaussian binomial).
inline BigInt gaussian_binomial(std::uint64_t N, std::uint64_t k, std::uint64_t q) {
  if (k > N) return 0;
  BigInt num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= pow_big(q, N - i) - 1;
    den *= pow_big(q, i + 1) - 1;
  }
  return num / den;
}

/// Visits every k-dimensional subspace of F_q^N exactly once through its
/// reduced row-echelon basis. Pivot sets go in lexicographic order; within a
/// pivot set the free entries count up with the first free slot most
/// significant. The visitor returns true to stop early. Returns the number of
/// subspaces visited.
template <typename Visitor>
std::uint64_t for_each_subspace(const Field& f, std::size_t N, std::size_t k, Visitor&& visit) {
  const std::uint32_t q = f.q();
  std::uint64_t visited = 0;
  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  if (k > N) return 0;

  for (;;) {
    std::vector<bool> is_pivot(N, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t col = pivots[r] + 1; col < N; ++col)
        if (!is_pivot[col]) free_slots.emplace_back(r, col);

    std::vector<Element> values(free_slots.size(), 0);
    for (;;) {
      Matrix m(k, N);
      for (std::size_t r = 0; r < k; ++r) m(r, pivots[r]) = 1;
      for (std::size_t s = 0; s < free_slots.size(); ++s) m(free_slots[s].first, free_slots[s].second) = values[s];
      ++visited;
      if (visit(m)) return visited;

      std::size_t s = values.size();
      while (s > 0 && values[s - 1] + 1 == q) values[--s] = 0;
      if (s == 0) break;
      ++values[s - 1];
    }

    // next combination
    std::size_t i = k;
    while (i > 0 && pivots[i - 1] == N - k + i - 1) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return visited;
}

/// Looks for an ell-dimensional code with entanglement degree c that detects
/// d_x bit and d_z phase errors. Exhaustive mode enumerating everything
/// without success while the bound holds is flagged as a contradiction.
inline WitnessReport search_witness(const SearchConfig& cfg) {
  const auto& p = cfg.params;
  WitnessReport report;
  report.bound_satisfied = check_new(p).satisfied;
  const Field f = Field::make(p.q);
  const std::size_t n = p.n;

  auto accept = [&](const CodeSpace& cs) {
    if (cs.c() != p.c) {
      ++report.stats.rejected_wrong_c;
      return false;
    }
    if (!detection_check(cs, p.d_x, p.d_z, cfg.budget).ok) {
      ++report.stats.rejected_detection;
      return false;
    }
    report.found = true;
    report.witness = cs.basis();
    return true;
  };

  if (cfg.mode == SearchMode::random) {
    if (cfg.trials < 1) throw InvalidParameters("trials < 1");
    for (std::uint64_t t = 0; t < cfg.trials && !report.found; ++t) {
      std::mt19937_64 rng(trial_seed(cfg.seed, t));
      ++report.trials_used;
      accept(sample_subspace(f, n, p.ell, rng));
    }
  } else {
    const BigInt count = gaussian_binomial(2 * n, p.ell, p.q);
    if (count > cfg.subspace_cap)
      throw BudgetExceeded("exhaustive search needs " + count.str() + " subspaces, cap is " +
                               std::to_string(cfg.subspace_cap),
                           count > std::numeric_limits<std::uint64_t>::max()
                               ? std::numeric_limits<std::uint64_t>::max()
                               : static_cast<std::uint64_t>(count),
                           cfg.subspace_cap);
    report.trials_used = for_each_subspace(f, 2 * n, p.ell, [&](const Matrix& m) {
      return accept(analyze_code(f, n, m));
    });
    report.completed = !report.found;
    report.contradiction = report.completed && report.bound_satisfied;
  }

  if (report.found) {
    // independent re-check of the returned basis
    const auto cs = analyze_code(f, n, *report.witness);
    if (cs.ell() != p.ell || cs.c() != p.c || !detection_check(cs, p.d_x, p.d_z, cfg.budget).ok)
      throw std::logic_error("witness failed re-verification");
  }
  return report;
}

} // namespace eagv
