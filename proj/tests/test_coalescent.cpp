#include <doctest.h>

#include <cmath>
#include <set>

#include "baxter/bipolar.hpp"
#include "baxter/coalescent.hpp"
#include "baxter/serialize.hpp"
#include "baxter/walk_sampler.hpp"
#include "oracles.hpp"

using namespace baxter;

namespace {

QuadrantWalk example_walk() { return walk_from_json(oracle::fixture("example_walk.json")); }

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t max_k) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1U << i)) s.push_back(i + 1);
    if (s.size() <= max_k) out.push_back(s);
  }
  return out;
}

std::vector<Permutation> all_permutations(std::size_t k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

TEST_CASE("size-1 process") {
  const auto z = build(validate_walk({{0, 0}}));
  CHECK(z.size() == 1);
  CHECK(z.value(1, 1) == 0);
  CHECK(to_permutation(z) == Permutation({1}));
  const auto f = forest(z);
  CHECK(f.parent == std::vector<std::size_t>{0});
  CHECK(f.exploration == std::vector<std::size_t>{1});
}

TEST_CASE("worked example") {
  const auto z = build(example_walk());
  CHECK(to_permutation(z) == permutation_from_json(oracle::fixture("example_permutation.json")));
  const auto f = forest(z);
  const auto expected = oracle::fixture("example_forest_exploration.json").get<std::vector<std::size_t>>();
  CHECK(f.exploration == expected);
  CHECK(f.parent == std::vector<std::size_t>{4, 3, 8, 8, 8, 0, 0, 10, 10, 0});
  // The first step is (0, +1), so Z^(1)_2 = 1 >= 0 and sigma(1) > sigma(2).
  CHECK(z.value(1, 2) == 1);
  CHECK(matches_pattern(z, {1, 2}, Permutation({2, 1})));
  CHECK_FALSE(matches_pattern(z, {1, 2}, Permutation({1, 2})));
  CHECK(pattern_at(to_permutation(z), {1, 2}) == Permutation({2, 1}));
}

TEST_CASE("recursion cases") {
  CHECK(coalescent_step(0, {1, -1}) == -1);
  CHECK(coalescent_step(2, {-3, 4}) == 6);
  CHECK(coalescent_step(-3, {-1, 5}) == -2);
  CHECK(coalescent_step(-3, {-3, 5}) == 5);
  CHECK(coalescent_step(-1, {1, -1}) == -2);
  CHECK_THROWS_AS(CoalescentWalkProcess({Step{2, 0}}), InvalidArgument);
}

TEST_CASE("compare is a total order for every process up to size 7") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t bad = 0;
    for (const auto& w : enumerate_walks(n)) {
      const auto z = build(w);
      for (std::size_t i = 1; i <= n; ++i) {
        if (z.compare(i, i) != 0) ++bad;
        for (std::size_t j = 1; j <= n; ++j)
          if (i != j && (z.compare(i, j) == 0 || (z.compare(i, j) < 0) == (z.compare(j, i) < 0))) ++bad;
      }
      if (n <= 6)
        for (std::size_t i = 1; i <= n; ++i)
          for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k)
              if (z.compare(i, j) < 0 && z.compare(j, k) < 0 && !(z.compare(i, k) < 0)) ++bad;
    }
    CHECK(bad == 0);
  }
  const auto z = build(example_walk());
  CHECK_THROWS_AS(z.compare(0, 1), InvalidArgument);
  CHECK_THROWS_AS(z.compare(1, 11), InvalidArgument);
  CHECK_THROWS_AS(z.value(3, 2), InvalidArgument);
}

TEST_CASE("to_permutation gives Baxter permutations, injectively, up to size 7") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<Permutation> image;
    for (const auto& w : enumerate_walks(n)) {
      const auto p = to_permutation(build(w));
      CHECK(oracle::avoids_vincular(p.values()));
      image.insert(p);
    }
    CHECK(image.size() == oracle::baxter_counts()[n]);
  }
}

TEST_CASE("sigma(i) counts the indices below i") {
  for (const auto& w : enumerate_walks(6)) {
    const auto z = build(w);
    const auto p = to_permutation(z);
    for (std::size_t i = 1; i <= 6; ++i) {
      int below = 0;
      for (std::size_t j = 1; j <= 6; ++j) below += z.compare(j, i) <= 0 ? 1 : 0;
      CHECK(p(i) == below);
    }
  }
}

TEST_CASE("monotone coupling and non-negative coalescent points") {
  auto check = [](const CoalescentWalkProcess& z) {
    std::size_t bad = 0;
    const std::size_t n = z.size();
    for (std::size_t t = 1; t <= n; ++t)
      for (std::size_t u = t + 1; u <= n; ++u) {
        bool met = false, ordered = false;
        for (std::size_t k = u; k <= n; ++k) {
          const int a = z.value(t, k), b = z.value(u, k);
          if (met && a != b) ++bad;
          if (!met && a == b) {
            met = true;
            if (k > u && a < 0) ++bad;  // meeting point after both started
          }
          if (ordered && a < b) ++bad;
          if (a >= b) ordered = true;
        }
      }
    return bad;
  };
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& w : enumerate_walks(n)) CHECK(check(build(w)) == 0);
  Rng rng(4);
  for (int trial = 0; trial < 3; ++trial) CHECK(check(build(sample_bidirectional(0, 199, rng), 0, 199)) == 0);
}

TEST_CASE("forest exploration is the inverse permutation and equals the dual tree") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& w : enumerate_walks(n)) {
      const auto z = build(w);
      const auto f = forest(z);
      const auto sigma_inv = inverse(to_permutation(z));
      std::vector<std::size_t> inv(sigma_inv.values().begin(), sigma_inv.values().end());
      CHECK(f.exploration == inv);

      const auto m = from_walk(w);
      const auto primal = down_right_tree(m).exploration;
      const auto dual_tree = down_right_tree(dual(m));
      std::vector<std::size_t> label(n);
      for (std::size_t i = 0; i < n; ++i) label[static_cast<std::size_t>(primal[i])] = i + 1;
      for (std::size_t i = 1; i <= n; ++i) {
        const int p = dual_tree.parent[static_cast<std::size_t>(primal[i - 1])];
        CHECK(f.parent[i - 1] == (p < 0 ? 0 : label[static_cast<std::size_t>(p)]));
      }
    }
  }
}

TEST_CASE("matches_pattern is consistent with the induced pattern") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& w : enumerate_walks(n)) {
      const auto z = build(w);
      const auto sigma = to_permutation(z);
      for (const auto& idx : subsets(n, 4)) {
        const auto induced = pattern_at(sigma, idx);
        for (const auto& pi : all_permutations(idx.size())) {
          const bool m = matches_pattern(z, idx, pi);
          if (m) CHECK(pi == induced);
          CHECK(m == matches_pattern(w, idx, pi));
        }
      }
    }
  }
  const auto z = build(example_walk());
  CHECK(matches_pattern(z, {4}, Permutation({1})));
  CHECK_THROWS_AS(matches_pattern(z, {1, 2}, Permutation({1})), InvalidArgument);
  CHECK_THROWS_AS(matches_pattern(z, {2, 1}, Permutation({1, 2})), InvalidArgument);
}

TEST_CASE("compact storage agrees with full storage") {
  Rng rng(10);
  ExactExcursionSampler sampler(300, 400);
  std::vector<CoalescentWalkProcess> pairs;
  for (const auto& w : sampler.sample(4, rng)) {
    const auto full = build(w, CoalescentStorage::Full);
    const auto compact = build(w, CoalescentStorage::Compact);
    CHECK(compact.compact());
    CHECK(compact.stored_values() < full.stored_values());
    std::size_t bad = 0;
    for (std::size_t t = 1; t <= w.size(); ++t)
      for (std::size_t k = t; k <= w.size(); ++k)
        if (full.value(t, k) != compact.value(t, k)) ++bad;
    CHECK(bad == 0);
    CHECK(to_permutation(full) == to_permutation(compact));
  }
  for (int trial = 0; trial < 3; ++trial) {
    const auto walk = sample_bidirectional(-150, 150, rng);
    const auto full = build(walk, -150, 150, CoalescentStorage::Full);
    const auto compact = build(walk, -150, 150, CoalescentStorage::Compact);
    std::size_t bad = 0;
    for (std::size_t t = 1; t <= full.size(); ++t)
      for (std::size_t k = t; k <= full.size(); ++k)
        if (full.value(t, k) != compact.value(t, k)) ++bad;
    CHECK(bad == 0);
  }
  CHECK(build(validate_walk(std::vector<Point>(2001, Point{0, 0}))).compact());
}

TEST_CASE("trajectory increments follow the reduced law") {
  // P(-1) = 1/2, P(j) = 2^{-j-2} for j >= 0.
  Rng rng(77);
  const auto walk = sample_bidirectional(0, 200'000, rng);
  std::vector<double> obs(6, 0.0);
  int z = 0;
  for (std::int64_t t = 1; t <= 200'000; ++t) {
    const int next = coalescent_step(z, walk.step_into(t));
    const int d = next - z;
    obs[static_cast<std::size_t>(std::clamp(d + 1, 0, 5))] += 1;
    z = next;
  }
  CHECK(oracle::chi_square_p(obs, {0.5, 0.25, 0.125, 0.0625, 0.03125, 0.03125}) > 1e-3);
}
