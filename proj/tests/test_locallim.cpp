#include <doctest.h>

#include "baxter/coalescent.hpp"
#include "baxter/locallim.hpp"
#include "baxter/walk_sampler.hpp"
#include "oracles.hpp"

using namespace baxter;

TEST_CASE("consecutive pattern densities") {
  CHECK(consecutive_pattern_density(Permutation::identity(7), Permutation({1, 2})) == 1.0);
  CHECK(consecutive_pattern_density(Permutation({2, 1}), Permutation({1, 2})) == 0.0);
  const Permutation p({8, 6, 5, 7, 9, 1, 2, 4, 10, 3});
  CHECK(consecutive_pattern_count(p, Permutation({1, 2})) == 5);
  CHECK(consecutive_pattern_count(p, Permutation({2, 1})) == 4);
  CHECK(consecutive_pattern_count(p, Permutation({2, 3, 1})) == 2);
  CHECK(consecutive_pattern_density(p, p) == 1.0);
  CHECK_THROWS_AS(consecutive_pattern_density(Permutation({1}), Permutation({1, 2})), InvalidArgument);
}

TEST_CASE("size-2 densities sum to one exactly") {
  ExactExcursionSampler sampler(300, 300);
  Rng rng(8);
  for (const auto& w : sampler.sample(5, rng)) {
    const auto p = to_permutation(build(w));
    CHECK(consecutive_pattern_density(p, Permutation({1, 2})) +
              consecutive_pattern_density(p, Permutation({2, 1})) ==
          1.0);
    std::size_t total = 0;
    for (const auto& [pi, c] : consecutive_pattern_counts(p, 3)) total += c;
    CHECK(total == p.size() - 2);
  }
}

TEST_CASE("permutation windows") {
  const Permutation p({8, 6, 5, 7, 9, 1, 2, 4, 10, 3});
  CHECK(window(p, 4, 0) == Permutation({1}));
  CHECK(window(p, 4, 1) == Permutation({1, 2, 3}));
  CHECK(window(p, 9, 1) == Permutation({2, 3, 1}));
  CHECK_THROWS_AS(window(p, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(window(p, 10, 1), InvalidArgument);
}

TEST_CASE("walk windows and sigma-bar windows") {
  Rng rng(9);
  const auto w = sample_bidirectional(-20, 20, rng);
  const auto v = window(w, 3, 2);
  CHECK(v.t_min() == -2);
  CHECK(v.t_max() == 2);
  for (std::int64_t t = -1; t <= 2; ++t) CHECK(v.step_into(t) == w.step_into(t + 3));
  CHECK_THROWS_AS(window(w, 19, 2), InvalidArgument);
  CHECK(sigma_bar_window(w, 0, 0) == Permutation({1}));
  CHECK(sigma_bar_window(w, 5, 3).size() == 7);
  CHECK_THROWS_AS(sigma_bar_window(w, 19, 3), InvalidArgument);
  const auto s = sample_sigma_bar_window(0, 2, rng);
  CHECK(s.pattern.size() == 5);
  CHECK(s.expansions == 0);
}

TEST_CASE("sigma-bar windows are translation invariant") {
  std::map<Permutation, std::size_t> a, b;
  Rng rng(10);
  for (int i = 0; i < 20'000; ++i) {
    a[sample_sigma_bar_window(0, 1, rng).pattern] += 1;
    b[sample_sigma_bar_window(10, 1, rng).pattern] += 1;
  }
  CHECK(oracle::total_variation(oracle::normalize(a), oracle::normalize(b)) < 0.03);
}

TEST_CASE("sigma-bar radius-1 windows match rooted windows of large Baxter permutations") {
  std::map<Permutation, std::size_t> bar, finite;
  Rng rng(11);
  for (int i = 0; i < 20'000; ++i) bar[sample_sigma_bar_window(0, 1, rng).pattern] += 1;
  ExactExcursionSampler sampler(2000, 2000);
  for (const auto& w : sampler.sample(500, rng)) {
    const auto p = to_permutation(build(w));
    for (std::size_t c = 2; c < p.size(); ++c) finite[window(p, c, 1)] += 1;
  }
  const double tv = oracle::total_variation(oracle::normalize(bar), oracle::normalize(finite));
  MESSAGE("total variation " << tv);
  CHECK(tv < 0.03);
}
