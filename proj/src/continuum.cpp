#include "baxter/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "baxter/error.hpp"
#include "baxter/parallel.hpp"
#include "baxter/walk_sampler.hpp"

namespace baxter {

namespace {

// floor(n t), exact when t is the double nearest to i / n.
std::size_t scaled_floor(std::size_t n, double t) {
  const double nd = static_cast<double>(n);
  auto i = static_cast<std::size_t>(std::floor(nd * t));
  if (static_cast<double>(i + 1) / nd <= t) ++i;
  return i;
}

}  // namespace

CorrelatedPath sample_correlated_bm(double rho, double dt, double T, Rng& rng) {
  if (!(rho > -1.0 && rho < 1.0)) throw InvalidArgument("correlation must lie in (-1, 1)");
  if (!(dt > 0) || !(T >= 0)) throw InvalidArgument("need dt > 0 and T >= 0");
  const auto steps = static_cast<std::size_t>(std::llround(T / dt));
  CorrelatedPath p{dt, rho, std::vector<double>(steps + 1, 0.0), std::vector<double>(steps + 1, 0.0)};
  const double sd = std::sqrt(dt);
  const double c = std::sqrt(1.0 - rho * rho);
  for (std::size_t i = 1; i <= steps; ++i) {
    const double a = rng.normal();
    const double b = rng.normal();
    p.x[i] = p.x[i - 1] + sd * a;
    p.y[i] = p.y[i - 1] + sd * (rho * a + c * b);
  }
  return p;
}

SdePath solve_sde_euler(const CorrelatedPath& path, double u) {
  const std::size_t steps = path.steps();
  const double start = u / path.dt;
  if (!(start >= -0.5) || start > static_cast<double>(steps) + 0.5)
    throw InvalidArgument("start time outside the path");
  const auto i0 = static_cast<std::size_t>(std::llround(start));
  SdePath s{u, path.dt, std::vector<double>(steps + 1, 0.0)};
  for (std::size_t i = i0; i < steps; ++i) {
    const double z = s.z[i];
    s.z[i + 1] = z > 0 ? z + (path.y[i + 1] - path.y[i]) : z - (path.x[i + 1] - path.x[i]);
  }
  return s;
}

RescaledPath::RescaledPath(std::vector<double> values, std::size_t n)
    : values_(std::move(values)), n_(n), scale_(1.0 / std::sqrt(2.0 * static_cast<double>(n))) {
  if (n == 0) throw InvalidArgument("n must be positive");
  if (values_.empty()) throw InvalidArgument("empty sequence");
}

double RescaledPath::operator()(double t) const {
  const double pos = std::clamp(t * static_cast<double>(n_), 0.0,
                                static_cast<double>(values_.size() - 1));
  const auto k = static_cast<std::size_t>(pos);
  if (k + 1 >= values_.size()) return values_.back() * scale_;
  const double frac = pos - static_cast<double>(k);
  return ((1.0 - frac) * values_[k] + frac * values_[k + 1]) * scale_;
}

RescaledPath rescale_discrete(std::vector<double> values, std::size_t n) {
  return RescaledPath(std::move(values), n);
}

RescaledPath rescale_discrete(const std::vector<int>& values, std::size_t n) {
  return RescaledPath(std::vector<double>(values.begin(), values.end()), n);
}

PatternEstimate estimate_pattern_probability(const Permutation& pattern, std::size_t n,
                                             std::size_t samples, std::uint64_t seed,
                                             const PatternEstimateOptions& options) {
  const std::size_t k = pattern.size();
  if (samples == 0) throw InvalidArgument("samples must be positive");
  if (!(options.window >= 0 && options.window < 1)) throw InvalidArgument("window must lie in [0, 1)");
  if (options.batch_size == 0) throw InvalidArgument("batch size must be positive");
  const auto n_min = static_cast<std::size_t>(
      std::ceil(static_cast<double>(n) * (1.0 - options.window)));
  const auto n_max = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * (1.0 + options.window)));
  if (n_min < std::max<std::size_t>(k, 1) || n_min > n_max)
    throw InvalidArgument("size window must contain sizes >= k");

  PatternEstimate est;
  est.k = k;
  est.pattern = pattern;
  est.n = n;
  est.samples = samples;
  est.seed = seed;
  if (k == 1) {
    // The sign condition is empty.
    est.hits = samples;
    est.estimate = 1.0;
    return est;
  }

  std::unique_ptr<ExactExcursionSampler> exact;
  if (options.method == ExcursionMethod::Exact)
    exact = std::make_unique<ExactExcursionSampler>(n_min, n_max);
  const std::size_t batches = (samples + options.batch_size - 1) / options.batch_size;
  std::vector<std::size_t> hits(batches, 0);
  parallel_for(batches, [&](std::size_t b) {
    Rng rng = Rng::derived(seed, b);
    const std::size_t count = std::min(options.batch_size, samples - b * options.batch_size);
    std::vector<QuadrantWalk> walks;
    if (exact) {
      walks = exact->sample(count, rng);
    } else {
      for (std::size_t q = 0; q < count; ++q)
        walks.push_back(sample_uniform_excursion(n_min, n_max, rng));
    }
    std::vector<double> u(k);
    std::vector<std::size_t> idx(k);
    for (const auto& w : walks) {
      const std::size_t m = w.size();
      for (;;) {
        for (double& v : u) v = rng.uniform01();
        std::sort(u.begin(), u.end());
        for (std::size_t j = 0; j < k; ++j)
          idx[j] = static_cast<std::size_t>(std::floor(static_cast<double>(m) * u[j])) + 1;
        if (std::adjacent_find(idx.begin(), idx.end()) == idx.end()) break;
      }
      if (matches_pattern(w, idx, pattern)) ++hits[b];
    }
  });
  for (std::size_t h : hits) est.hits += h;
  est.estimate = static_cast<double>(est.hits) / static_cast<double>(samples);
  est.stderr_ = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
  return est;
}

double phi_estimate(const CoalescentWalkProcess& z, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("t must lie in [0, 1]");
  const std::size_t n = z.size();
  const auto i = std::max<std::size_t>(1, scaled_floor(n, t));
  std::size_t below = 0;
  for (std::size_t j = 1; j <= n; ++j)
    if (z.compare(j, i) <= 0) ++below;
  return static_cast<double>(below) / static_cast<double>(n);
}

StepDiscrepancy euler_step_discrepancy(const QuadrantWalk& w, double u) {
  const std::size_t n = w.size();
  const auto start = std::max<std::size_t>(1, scaled_floor(n, u));
  if (start > n) throw InvalidArgument("start outside the walk");
  StepDiscrepancy d;
  int z = 0;
  for (std::size_t t = start; t < n; ++t) {
    const Step s = w.step(t);
    const int euler = z > 0 ? z + s.dy : z - s.dx;
    const int next = coalescent_step(z, s);
    ++d.steps;
    if (euler != next) ++d.mismatches;
    z = next;
  }
  return d;
}

}  // namespace baxter
