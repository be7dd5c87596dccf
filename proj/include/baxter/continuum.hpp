#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "baxter/coalescent.hpp"
#include "baxter/permutation.hpp"
#include "baxter/rng.hpp"
#include "baxter/walk.hpp"

namespace baxter {

/// Two-dimensional path on the grid t = i dt, starting at the origin.
struct CorrelatedPath {
  double dt = 0;
  double rho = 0;
  std::vector<double> x;
  std::vector<double> y;

  std::size_t steps() const { return x.empty() ? 0 : x.size() - 1; }
};

/// Brownian motion with covariance [[1, rho], [rho, 1]] per unit time on
/// [0, T], using round(T / dt) Gaussian steps.
CorrelatedPath sample_correlated_bm(double rho, double dt, double T, Rng& rng);

struct SdePath {
  double u = 0;
  double dt = 0;
  /// Z on the driving grid; zero up to the start index round(u / dt).
  std::vector<double> z;
};

/// Euler scheme for dZ = 1{Z > 0} dY - 1{Z <= 0} dX started from 0 at time u.
SdePath solve_sde_euler(const CorrelatedPath& path, double u);

/// Linear interpolation of the points (k / n, v_k / sqrt(2 n)), k = 0, 1, ...
class RescaledPath {
 public:
  RescaledPath(std::vector<double> values, std::size_t n);
  /// Clamped to the endpoints outside [0, (values - 1) / n].
  double operator()(double t) const;
  std::size_t n() const { return n_; }

 private:
  std::vector<double> values_;
  std::size_t n_;
  double scale_;
};

RescaledPath rescale_discrete(std::vector<double> values, std::size_t n);
RescaledPath rescale_discrete(const std::vector<int>& values, std::size_t n);

enum class ExcursionMethod { Exact, Rejection };

struct PatternEstimateOptions {
  /// Walk sizes are drawn from [n (1 - window), n (1 + window)].
  double window = 0.1;
  ExcursionMethod method = ExcursionMethod::Exact;
  /// Samples per batch; batch b uses the stream derived from (seed, b).
  std::size_t batch_size = 1000;
};

struct PatternEstimate {
  std::size_t k = 0;
  Permutation pattern;
  std::size_t n = 0;
  std::size_t samples = 0;
  std::size_t hits = 0;
  double estimate = 0;
  double stderr_ = 0;
  std::uint64_t seed = 0;
};

/// Monte-Carlo frequency of the sign condition for `pattern` at k sorted
/// uniform times of a uniform quadrant walk of size about n.
PatternEstimate estimate_pattern_probability(const Permutation& pattern, std::size_t n,
                                             std::size_t samples, std::uint64_t seed,
                                             const PatternEstimateOptions& options = {});

/// (1/n) #{j : j <=_Z max(1, floor(n t))}, for t in [0, 1].
double phi_estimate(const CoalescentWalkProcess& z, double t);

struct StepDiscrepancy {
  std::size_t steps = 0;
  std::size_t mismatches = 0;
  double fraction() const { return steps == 0 ? 0.0 : static_cast<double>(mismatches) / steps; }
};

/// Follows the discrete trajectory started at max(1, floor(n u)) and counts
/// the steps where the Euler update driven by the same increments disagrees
/// with the discrete recursion.
StepDiscrepancy euler_step_discrepancy(const QuadrantWalk& w, double u);

}  // namespace baxter
