#include "eagv/witness.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

using namespace eagv;

TEST(GaussianBinomial, KnownValues) {
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
  EXPECT_EQ(gaussian_binomial(6, 3, 2), 1395);
  EXPECT_EQ(gaussian_binomial(4, 2, 3), 130);
  EXPECT_EQ(gaussian_binomial(5, 0, 7), 1);
  EXPECT_EQ(gaussian_binomial(5, 5, 7), 1);
  EXPECT_EQ(gaussian_binomial(3, 4, 2), 0);
}

TEST(ForEachSubspace, VisitsEachSubspaceOnce) {
  for (std::uint64_t q : {2, 3}) {
    const auto f = Field::make(q);
    for (std::size_t N = 1; N <= 4; ++N)
      for (std::size_t k = 0; k <= N; ++k) {
        std::set<std::set<std::vector<Element>>> spaces;
        const auto visited = for_each_subspace(f, N, k, [&](const Matrix& m) {
          EXPECT_EQ(rank(f, m), k);
          EXPECT_EQ(rref(f, m).basis, m);  // canonical form
          spaces.insert(oracle::span(f, m));
          return false;
        });
        EXPECT_EQ(visited, gaussian_binomial(N, k, q));
        EXPECT_EQ(spaces.size(), visited);
      }
  }
}

TEST(ForEachSubspace, StopsEarly) {
  const auto f = Field::make(2);
  int calls = 0;
  const auto visited = for_each_subspace(f, 4, 2, [&](const Matrix&) { return ++calls == 3; });
  EXPECT_EQ(visited, 3u);
}

TEST(SampleSubspace, Extremes) {
  std::mt19937_64 rng(41);
  const auto f = Field::make(3);
  const auto full = sample_subspace(f, 2, 4, rng);
  EXPECT_EQ(full.ell(), 4u);
  EXPECT_EQ(full.c(), 2u);
  const auto zero = sample_subspace(f, 2, 0, rng);
  EXPECT_EQ(zero.ell(), 0u);
  EXPECT_EQ(zero.c(), 0u);
  EXPECT_THROW(sample_subspace(f, 2, 5, rng), InvalidParameters);
}

TEST(SampleSubspace, UniformOverSubspaces) {
  const auto f = Field::make(2);
  std::mt19937_64 rng(42);
  std::map<std::vector<std::vector<Element>>, int> counts;
  const int samples = 10'000;
  for (int i = 0; i < samples; ++i) counts[sample_subspace(f, 2, 2, rng).basis().to_rows()]++;
  ASSERT_EQ(counts.size(), 35u);
  const double p = 1.0 / 35, mean = samples * p, sigma = std::sqrt(samples * p * (1 - p));
  double chi2 = 0;
  for (const auto& [key, c] : counts) {
    EXPECT_LT(std::fabs(c - mean), 5 * sigma);
    chi2 += (c - mean) * (c - mean) / mean;
  }
  EXPECT_LT(chi2, 65.25);  // 99.9% quantile of chi-square with 34 degrees of freedom
}

TEST(SearchWitness, ExhaustiveSmallExample) {
  SearchConfig cfg;
  cfg.params = {2, 2, 2, 1, 2, 1};
  cfg.mode = SearchMode::exhaustive;
  const auto r = search_witness(cfg);
  EXPECT_TRUE(r.bound_satisfied);  // 3 * 2 < 15
  ASSERT_TRUE(r.found);
  EXPECT_FALSE(r.contradiction);
  const auto cs = analyze_code(Field::make(2), 2, *r.witness);
  EXPECT_EQ(cs.c(), 1u);
  EXPECT_TRUE(detection_check(cs, 2, 1).ok);

  // the hand-checked witness is one of the admissible codes
  const auto known = analyze_code(Field::make(2), 2, Matrix::from_rows({{1, 0, 1, 0}, {1, 1, 0, 1}}, 4));
  EXPECT_EQ(known.c(), 1u);
  EXPECT_TRUE(detection_check(known, 2, 1).ok);
}

TEST(SearchWitness, TrivialDistances) {
  SearchConfig cfg;
  cfg.params = {2, 2, 2, 1, 1, 1};
  cfg.trials = 100;
  const auto r = search_witness(cfg);
  EXPECT_TRUE(r.found);
  EXPECT_EQ(r.stats.rejected_detection, 0u);
}

TEST(SearchWitness, UnsatisfiedBoundIsInformationalOnly) {
  SearchConfig cfg;
  cfg.params = {2, 3, 2, 1, 2, 2};
  cfg.seed = 1;
  cfg.trials = 10'000;
  const auto r = search_witness(cfg);
  EXPECT_FALSE(r.bound_satisfied);  // 15 * 15 = 225 >= 63
  EXPECT_FALSE(r.contradiction);
  if (r.found) {
    const auto cs = analyze_code(Field::make(2), 3, *r.witness);
    EXPECT_EQ(cs.c(), 1u);
    EXPECT_TRUE(detection_check(cs, 2, 2).ok);
  }
  cfg.mode = SearchMode::exhaustive;
  EXPECT_FALSE(search_witness(cfg).contradiction);
}

TEST(SearchWitness, Deterministic) {
  SearchConfig cfg;
  cfg.params = {3, 3, 3, 1, 2, 1};
  cfg.seed = 99;
  cfg.trials = 500;
  EXPECT_EQ(search_witness(cfg), search_witness(cfg));
  auto other = cfg;
  other.seed = 100;
  const auto a = search_witness(cfg), b = search_witness(other);
  EXPECT_TRUE(a.found);
  EXPECT_TRUE(b.found);
}

TEST(SearchWitness, TrialSeedsIndependentOfOrder) {
  EXPECT_NE(trial_seed(1, 0), trial_seed(1, 1));
  EXPECT_NE(trial_seed(1, 0), trial_seed(2, 0));
  EXPECT_EQ(trial_seed(7, 5), trial_seed(7, 5));
}

TEST(SearchWitness, Errors) {
  SearchConfig cfg;
  cfg.params = {2, 2, 2, 1, 2, 1};
  cfg.trials = 0;
  EXPECT_THROW(search_witness(cfg), InvalidParameters);
  cfg.params = {2, 2, 2, 2, 1, 1};  // c > l/2
  cfg.trials = 1;
  EXPECT_THROW(search_witness(cfg), InvalidParameters);
  cfg.params = {4, 6, 6, 2, 1, 1};
  cfg.mode = SearchMode::exhaustive;
  cfg.subspace_cap = 1000;
  EXPECT_THROW(search_witness(cfg), BudgetExceeded);
}

TEST(SearchWitness, ExistenceHoldsForTinyBinaryCodes) {
  // q = 2, n <= 2: every tuple satisfying the bound has a witness
  for (std::uint64_t n = 1; n <= 2; ++n)
    for (std::uint64_t ell = 1; ell <= 2 * n; ++ell)
      for (std::uint64_t c = 0; 2 * c <= ell; ++c) {
        if (ell >= n + c) continue;
        for (std::uint64_t dx = 1; dx <= n + 1; ++dx)
          for (std::uint64_t dz = 1; dz <= n + 1; ++dz) {
            SearchConfig cfg;
            cfg.params = {2, n, ell, c, dx, dz};
            cfg.mode = SearchMode::exhaustive;
            const auto r = search_witness(cfg);
            if (r.bound_satisfied) EXPECT_TRUE(r.found) << n << " " << ell << " " << c << " " << dx << " " << dz;
            EXPECT_FALSE(r.contradiction);
          }
      }
}
