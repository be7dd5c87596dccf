#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "baxter/permutation.hpp"
#include "baxter/walk.hpp"

namespace baxter {

enum class CoalescentStorage {
  Automatic,  // Full up to kFullStorageLimit, Compact above
  Full,       // every trajectory at every time
  Compact,    // each trajectory kept only until it merges with an earlier one
};

inline constexpr std::size_t kFullStorageLimit = 2000;

/// Coalescent-walk process on the times {1..n} driven by n - 1 increments.
class CoalescentWalkProcess {
 public:
  /// `steps[k-1]` is the increment between times k and k + 1.
  explicit CoalescentWalkProcess(std::vector<Step> steps,
                                 CoalescentStorage storage = CoalescentStorage::Automatic);

  std::size_t size() const { return n_; }
  bool compact() const { return compact_; }
  const std::vector<Step>& steps() const { return steps_; }

  /// Z^{(t)}_k for 1 <= t <= k <= n.
  int value(std::size_t t, std::size_t k) const;

  /// Order of i and j under <=_Z (less means i comes before j).
  std::strong_ordering compare(std::size_t i, std::size_t j) const;

  /// Total number of stored trajectory values.
  std::size_t stored_values() const;

 private:
  std::size_t n_;
  bool compact_;
  std::vector<Step> steps_;
  // Full: rows_[t-1][k-t]. Compact: rows_[t-1] covers times t .. merge_time_[t-1]-1,
  // after which the trajectory follows merged_into_[t-1].
  std::vector<std::vector<int>> rows_;
  std::vector<std::size_t> merge_time_;
  std::vector<std::size_t> merged_into_;

  void build_full();
  void build_compact();
};

/// One step of the coalescent recursion.
inline int coalescent_step(int z, Step s) {
  if (z >= 0) return z + s.dy;
  if (z - s.dx < 0) return z - s.dx;
  return s.dy;
}

CoalescentWalkProcess build(const QuadrantWalk& w,
                            CoalescentStorage storage = CoalescentStorage::Automatic);
/// Process on the window [t_lo, t_hi] of an unconstrained walk; time t of the
/// walk becomes index t - t_lo + 1.
CoalescentWalkProcess build(const PlaneWalk& w, std::int64_t t_lo, std::int64_t t_hi,
                            CoalescentStorage storage = CoalescentStorage::Automatic);

Permutation to_permutation(const CoalescentWalkProcess& z);

struct CoalescentForest {
  /// parent[i-1] is the parent of point i, or 0 for the root.
  std::vector<std::size_t> parent;
  /// Points in exploration order.
  std::vector<std::size_t> exploration;
};

CoalescentForest forest(const CoalescentWalkProcess& z);

/// Sign condition: for all l < s, Z^{(i_l)}_{i_s} >= 0 iff pi(s) < pi(l).
bool matches_pattern(const CoalescentWalkProcess& z, const std::vector<std::size_t>& indices,
                     const Permutation& pi);
/// Same condition evaluated on the walk directly, following only the
/// trajectories started at `indices`.
bool matches_pattern(const QuadrantWalk& w, const std::vector<std::size_t>& indices,
                     const Permutation& pi);

}  // namespace baxter
