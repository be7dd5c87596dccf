#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "baxter/error.hpp"
#include "baxter/rng.hpp"

namespace baxter {

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// A walk increment; admissible steps form A = {(+1,-1)} U {(-i,j) : i,j >= 0}.
struct Step {
  int dx = 0;
  int dy = 0;
  bool admissible() const { return (dx == 1 && dy == -1) || (dx <= 0 && dy >= 0); }
  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step&, const Step&) = default;
};

inline Step step_between(Point a, Point b) { return {b.x - a.x, b.y - a.y}; }

enum class WalkErrorKind { Empty, StepNotInA, NegativeCoordinate, BadEndpoints };

std::string to_string(WalkErrorKind kind);

/// Validation failure; `index` is the 1-based offending position.
class WalkValidationError : public InvalidArgument {
 public:
  WalkValidationError(WalkErrorKind kind, std::size_t index);
  WalkErrorKind kind() const { return kind_; }
  std::size_t index() const { return index_; }

 private:
  WalkErrorKind kind_;
  std::size_t index_;
};

/// Walk in the non-negative quadrant with steps in A, from (0,h) to (k,0).
class QuadrantWalk {
 public:
  QuadrantWalk() = default;

  std::size_t size() const { return positions_.size(); }
  const std::vector<Point>& positions() const { return positions_; }
  /// 1-based position W_t.
  Point at(std::size_t t) const { return positions_[t - 1]; }
  /// Increment W_{t+1} - W_t, 1 <= t < size().
  Step step(std::size_t t) const { return step_between(positions_[t - 1], positions_[t]); }
  int h() const { return positions_.front().y; }
  int k() const { return positions_.back().x; }

  friend bool operator==(const QuadrantWalk&, const QuadrantWalk&) = default;
  friend auto operator<=>(const QuadrantWalk&, const QuadrantWalk&) = default;

 private:
  friend QuadrantWalk validate_walk(std::vector<Point> positions);
  explicit QuadrantWalk(std::vector<Point> p) : positions_(std::move(p)) {}
  std::vector<Point> positions_;
};

/// Throws WalkValidationError unless `positions` is a quadrant walk.
QuadrantWalk validate_walk(std::vector<Point> positions);

/// Every walk of W_n exactly once, 1 <= n <= 9.
std::vector<QuadrantWalk> enumerate_walks(std::size_t n);

/// Probability of `s` under the step law nu (0 outside A).
double nu_mass(Step s);

Step sample_nu_step(Rng& rng);

inline constexpr std::uint64_t kDefaultMaxAttempts = 10'000'000;

/// Rejection sampler: nu-walks from the origin until they leave the quadrant.
///
/// Accepts when the last in-quadrant position is the origin and the trimmed
/// size lies in [n_min, n_max]. The result is uniform on W_m for the realized
/// size m. `attempts`, when given, receives the number of walks drawn.
QuadrantWalk sample_uniform_excursion(std::size_t n_min, std::size_t n_max, Rng& rng,
                                      std::uint64_t max_attempts = kDefaultMaxAttempts,
                                      std::uint64_t* attempts = nullptr);

/// The pre-trim excursion from the same procedure (starts and ends at the origin).
std::vector<Point> sample_excursion_raw(std::size_t n_min, std::size_t n_max, Rng& rng,
                                        std::uint64_t max_attempts = kDefaultMaxAttempts,
                                        std::uint64_t* attempts = nullptr);

/// Unconstrained walk indexed by the integers of [t_min, t_max].
class PlaneWalk {
 public:
  PlaneWalk(std::int64_t t_min, std::vector<Point> values)
      : t_min_(t_min), values_(std::move(values)) {}
  std::int64_t t_min() const { return t_min_; }
  std::int64_t t_max() const { return t_min_ + static_cast<std::int64_t>(values_.size()) - 1; }
  Point at(std::int64_t t) const { return values_[static_cast<std::size_t>(t - t_min_)]; }
  /// Increment W_{t} - W_{t-1}.
  Step step_into(std::int64_t t) const { return step_between(at(t - 1), at(t)); }
  const std::vector<Point>& values() const { return values_; }

 private:
  std::int64_t t_min_;
  std::vector<Point> values_;
};

/// Bidirectional nu-walk anchored at the origin at time 0.
PlaneWalk sample_bidirectional(std::int64_t t_min, std::int64_t t_max, Rng& rng);

}  // namespace baxter
