#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "baxter/rng.hpp"
#include "baxter/walk.hpp"

namespace baxter {

struct ExactSamplerOptions {
  /// Coordinates are truncated at `sigmas` times the excursion scale
  /// sqrt(2 n_max), plus a margin of 8.
  double sigmas = 4.0;
};

/// Exact-law sampler for uniform elements of W_m with m in [n_min, n_max].
///
/// Produces the same law as the rejection sampler (size m drawn with
/// probability proportional to the number of excursions of m + 1 steps,
/// then a uniform walk of that size) by counting quadrant paths to the origin
/// and walking down the table. Coordinates are confined to [0, L]^2 with L
/// from `ExactSamplerOptions`. The excluded fraction of excursions decays like
/// exp(-2.6 sigmas^2): about 2e-6 at 2.5, below 1e-15 at the default 4.
class ExactExcursionSampler {
 public:
  ExactExcursionSampler(std::size_t n_min, std::size_t n_max, ExactSamplerOptions opts = {});

  /// `count` independent walks. Sizes come from `rng`; each walk uses its own
  /// stream derived from one draw of `rng`.
  std::vector<QuadrantWalk> sample(std::size_t count, Rng& rng) const;

  /// Probability of each size n_min..n_max.
  const std::vector<double>& size_distribution() const { return size_probs_; }
  std::size_t box() const { return bound_; }

 private:
  std::size_t n_min_, n_max_;
  std::size_t bound_;   // L: coordinates range over [0, L]
  std::size_t dim_;     // L + 1
  std::size_t levels_;  // R = n_max + 1
  std::size_t stride_;  // checkpoint spacing K
  std::vector<std::vector<float>> checkpoints_;
  std::vector<double> size_probs_;

  void advance(const std::vector<double>& prev, std::vector<double>& next,
               std::vector<double>& suffix, std::vector<double>& cumul, double& log_max) const;
  void partial_sums(const std::vector<double>& q, std::vector<double>& suffix,
                    std::vector<double>& cumul) const;
};

/// One uniform walk of size in [n_min, n_max] via ExactExcursionSampler.
QuadrantWalk sample_uniform_excursion_exact(std::size_t n_min, std::size_t n_max, Rng& rng);

}  // namespace baxter
