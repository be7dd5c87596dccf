#include "baxter/coalescent.hpp"

#include <algorithm>
#include <numeric>

#include "baxter/error.hpp"

namespace baxter {

CoalescentWalkProcess::CoalescentWalkProcess(std::vector<Step> steps, CoalescentStorage storage)
    : n_(steps.size() + 1), steps_(std::move(steps)) {
  for (std::size_t k = 0; k < steps_.size(); ++k)
    if (!steps_[k].admissible())
      throw InvalidArgument("increment " + std::to_string(k + 1) + " is not in A");
  compact_ = storage == CoalescentStorage::Compact ||
             (storage == CoalescentStorage::Automatic && n_ > kFullStorageLimit);
  if (compact_)
    build_compact();
  else
    build_full();
}

void CoalescentWalkProcess::build_full() {
  rows_.resize(n_);
  for (std::size_t t = 1; t <= n_; ++t) {
    auto& row = rows_[t - 1];
    row.resize(n_ - t + 1);
    row[0] = 0;
    for (std::size_t k = t + 1; k <= n_; ++k) row[k - t] = coalescent_step(row[k - t - 1], steps_[k - 2]);
  }
}

// Sweep over time keeping one group per distinct current value. Non-negative
// groups sit in `pos` (descending), negative ones in `neg` (ascending), each
// with a lazy additive offset, so the group nearest zero is at the back.
// Every group is represented by its earliest trajectory, which records the
// group's values; the other trajectories stop recording when they merge.
void CoalescentWalkProcess::build_compact() {
  struct Group {
    int base;  // value minus offset
    std::size_t rep;
  };
  rows_.assign(n_, {});
  merge_time_.assign(n_, n_ + 1);
  merged_into_.assign(n_, 0);
  std::vector<Group> pos, neg;
  int pos_off = 0, neg_off = 0;

  auto absorb = [&](std::size_t into, std::size_t from, std::size_t k) {
    const std::size_t keep = std::min(into, from), drop = std::max(into, from);
    merge_time_[drop - 1] = k;
    merged_into_[drop - 1] = keep;
    return keep;
  };
  auto record = [&] {
    for (const auto& g : pos) rows_[g.rep - 1].push_back(g.base + pos_off);
    for (const auto& g : neg) rows_[g.rep - 1].push_back(g.base + neg_off);
  };

  for (std::size_t k = 1; k <= n_; ++k) {
    if (k > 1) {
      const Step s = steps_[k - 2];
      if (s.dx == 1) {
        // Everything moves down by one; the zero group turns negative.
        pos_off -= 1;
        neg_off -= 1;
        if (!pos.empty() && pos.back().base + pos_off < 0) {
          neg.push_back({pos.back().base + pos_off - neg_off, pos.back().rep});
          pos.pop_back();
        }
      } else {
        // Old zero group and the negatives that cross zero all land on dy.
        std::size_t rep = 0;
        if (!pos.empty() && pos.back().base + pos_off == 0) {
          rep = pos.back().rep;
          pos.pop_back();
        }
        pos_off += s.dy;
        neg_off += -s.dx;
        while (!neg.empty() && neg.back().base + neg_off >= 0) {
          rep = rep == 0 ? neg.back().rep : absorb(rep, neg.back().rep, k);
          neg.pop_back();
        }
        if (rep != 0) pos.push_back({s.dy - pos_off, rep});
      }
    }
    // The trajectory started at k has value 0 now.
    if (!pos.empty() && pos.back().base + pos_off == 0) {
      pos.back().rep = absorb(pos.back().rep, k, k);
    } else {
      pos.push_back({-pos_off, k});
    }
    record();
  }
}

int CoalescentWalkProcess::value(std::size_t t, std::size_t k) const {
  if (t < 1 || k < t || k > n_) throw InvalidArgument("trajectory index out of range");
  if (!compact_) return rows_[t - 1][k - t];
  while (k >= merge_time_[t - 1]) t = merged_into_[t - 1];
  return rows_[t - 1][k - t];
}

std::strong_ordering CoalescentWalkProcess::compare(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw InvalidArgument("index out of range");
  if (i == j) return std::strong_ordering::equal;
  if (i < j) return value(i, j) < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return value(j, i) >= 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t CoalescentWalkProcess::stored_values() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.size();
  return total;
}

CoalescentWalkProcess build(const QuadrantWalk& w, CoalescentStorage storage) {
  std::vector<Step> steps;
  steps.reserve(w.size());
  for (std::size_t t = 1; t < w.size(); ++t) steps.push_back(w.step(t));
  return CoalescentWalkProcess(std::move(steps), storage);
}

CoalescentWalkProcess build(const PlaneWalk& w, std::int64_t t_lo, std::int64_t t_hi,
                            CoalescentStorage storage) {
  if (t_lo > t_hi || t_lo < w.t_min() || t_hi > w.t_max())
    throw InvalidArgument("window outside the sampled range");
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(t_hi - t_lo));
  for (std::int64_t t = t_lo + 1; t <= t_hi; ++t) steps.push_back(w.step_into(t));
  return CoalescentWalkProcess(std::move(steps), storage);
}

Permutation to_permutation(const CoalescentWalkProcess& z) {
  std::vector<std::size_t> order(z.size());
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return z.compare(a, b) < 0; });
  std::vector<int> sigma(z.size());
  for (std::size_t r = 0; r < order.size(); ++r) sigma[order[r] - 1] = static_cast<int>(r + 1);
  return Permutation(std::move(sigma));
}

CoalescentForest forest(const CoalescentWalkProcess& z) {
  const std::size_t n = z.size();
  CoalescentForest f;
  f.parent.assign(n, 0);
  std::vector<std::vector<std::size_t>> children(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (z.value(i, j) == 0) {
        f.parent[i - 1] = j;
        break;
      }
    }
    children[f.parent[i - 1]].push_back(i);  // increasing i
  }
  std::vector<std::size_t> stack(children[0].rbegin(), children[0].rend());
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    f.exploration.push_back(v);
    stack.insert(stack.end(), children[v].rbegin(), children[v].rend());
  }
  return f;
}

namespace {

void check_pattern_indices(std::size_t n, const std::vector<std::size_t>& indices,
                           const Permutation& pi) {
  if (indices.size() != pi.size()) throw InvalidArgument("pattern size mismatch");
  for (std::size_t q = 0; q < indices.size(); ++q) {
    if (indices[q] < 1 || indices[q] > n) throw InvalidArgument("index out of range");
    if (q > 0 && indices[q] <= indices[q - 1]) throw InvalidArgument("indices must increase");
  }
}

}  // namespace

bool matches_pattern(const QuadrantWalk& w, const std::vector<std::size_t>& indices,
                     const Permutation& pi) {
  check_pattern_indices(w.size(), indices, pi);
  for (std::size_t l = 0; l + 1 < indices.size(); ++l) {
    int z = 0;
    std::size_t s = l + 1;
    for (std::size_t t = indices[l] + 1; s < indices.size(); ++t) {
      z = coalescent_step(z, w.step(t - 1));
      if (t == indices[s]) {
        if ((z >= 0) != (pi(s + 1) < pi(l + 1))) return false;
        ++s;
      }
    }
  }
  return true;
}

bool matches_pattern(const CoalescentWalkProcess& z, const std::vector<std::size_t>& indices,
                     const Permutation& pi) {
  check_pattern_indices(z.size(), indices, pi);
  for (std::size_t s = 1; s < indices.size(); ++s)
    for (std::size_t l = 0; l < s; ++l) {
      const bool nonneg = z.value(indices[l], indices[s]) >= 0;
      if (nonneg != (pi(s + 1) < pi(l + 1))) return false;
    }
  return true;
}

}  // namespace baxter
