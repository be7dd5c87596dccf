#include "baxter/locallim.hpp"

#include <numeric>

#include "baxter/coalescent.hpp"
#include "baxter/error.hpp"

namespace baxter {

namespace {

std::vector<std::size_t> run(std::size_t first, std::size_t len) {
  std::vector<std::size_t> idx(len);
  std::iota(idx.begin(), idx.end(), first);
  return idx;
}

}  // namespace

std::size_t consecutive_pattern_count(const Permutation& p, const Permutation& pi) {
  const std::size_t k = pi.size();
  if (k > p.size()) throw InvalidArgument("pattern larger than permutation");
  std::size_t hits = 0;
  for (std::size_t i = 1; i + k - 1 <= p.size(); ++i)
    if (pattern_at(p, run(i, k)) == pi) ++hits;
  return hits;
}

double consecutive_pattern_density(const Permutation& p, const Permutation& pi) {
  const std::size_t windows = p.size() >= pi.size() ? p.size() - pi.size() + 1 : 0;
  const std::size_t hits = consecutive_pattern_count(p, pi);
  return static_cast<double>(hits) / static_cast<double>(windows);
}

std::map<Permutation, std::size_t> consecutive_pattern_counts(const Permutation& p, std::size_t k) {
  if (k == 0 || k > p.size()) throw InvalidArgument("pattern size out of range");
  std::map<Permutation, std::size_t> counts;
  for (std::size_t i = 1; i + k - 1 <= p.size(); ++i) ++counts[pattern_at(p, run(i, k))];
  return counts;
}

Permutation window(const Permutation& p, std::size_t center, std::size_t h) {
  if (center <= h || center + h > p.size()) throw InvalidArgument("window exceeds the permutation");
  return pattern_at(p, run(center - h, 2 * h + 1));
}

PlaneWalk window(const PlaneWalk& w, std::int64_t center, std::int64_t h) {
  if (h < 0 || center - h < w.t_min() || center + h > w.t_max())
    throw InvalidArgument("window exceeds the sampled range");
  std::vector<Point> values;
  for (std::int64_t t = center - h; t <= center + h; ++t) values.push_back(w.at(t));
  return PlaneWalk(-h, std::move(values));
}

Permutation sigma_bar_window(const PlaneWalk& w, std::int64_t center, std::int64_t h) {
  // i <= j is decided by the trajectory from i evaluated at j, which only
  // reads the increments between i and j.
  if (h < 0 || center - h < w.t_min() || center + h > w.t_max())
    throw InvalidArgument("window exceeds the sampled range");
  return to_permutation(build(w, center - h, center + h, CoalescentStorage::Full));
}

SigmaBarSample sample_sigma_bar_window(std::int64_t center, std::int64_t h, Rng& rng) {
  if (h < 0) throw InvalidArgument("radius must be non-negative");
  std::int64_t radius = 50 * std::max<std::int64_t>(h, 1);
  for (std::size_t expansions = 0; expansions <= 10; ++expansions, radius *= 2) {
    if (center - h < -radius || center + h > radius) continue;
    const PlaneWalk w = sample_bidirectional(-radius, radius, rng);
    return {sigma_bar_window(w, center, h), expansions};
  }
  throw InvalidArgument("window not covered after 10 expansions");
}

}  // namespace baxter
