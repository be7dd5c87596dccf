#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "baxter/permutation.hpp"
#include "baxter/rng.hpp"
#include "baxter/walk.hpp"

namespace baxter {

/// Number of windows of |pi| consecutive indices of p that induce pi.
std::size_t consecutive_pattern_count(const Permutation& p, const Permutation& pi);

/// Count divided by the number of windows, n - |pi| + 1.
double consecutive_pattern_density(const Permutation& p, const Permutation& pi);

/// Counts of every consecutive pattern of size k occurring in p.
std::map<Permutation, std::size_t> consecutive_pattern_counts(const Permutation& p, std::size_t k);

/// Pattern of p on the indices center - h .. center + h (1-based center).
Permutation window(const Permutation& p, std::size_t center, std::size_t h);

/// Restriction of w to [center - h, center + h], re-indexed so that the
/// center is time 0.
PlaneWalk window(const PlaneWalk& w, std::int64_t center, std::int64_t h);

/// Pattern of the infinite order on [center - h, center + h] given by a
/// sampled bidirectional walk. Throws InvalidArgument when a comparison
/// needs increments outside the sampled range.
Permutation sigma_bar_window(const PlaneWalk& w, std::int64_t center, std::int64_t h);

struct SigmaBarSample {
  Permutation pattern;
  /// Times the sampled range had to be enlarged.
  std::size_t expansions = 0;
};

/// Samples a bidirectional walk of radius 50 h (at least 1) around 0 and
/// returns the window of radius h at `center`, enlarging the range up to 10
/// times if the window is not covered.
SigmaBarSample sample_sigma_bar_window(std::int64_t center, std::int64_t h, Rng& rng);

}  // namespace baxter
