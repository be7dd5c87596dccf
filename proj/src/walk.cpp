#include "baxter/walk.hpp"

#include <cmath>

namespace baxter {

std::string to_string(WalkErrorKind kind) {
  switch (kind) {
    case WalkErrorKind::Empty: return "empty";
    case WalkErrorKind::StepNotInA: return "step-not-in-A";
    case WalkErrorKind::NegativeCoordinate: return "negative-coordinate";
    case WalkErrorKind::BadEndpoints: return "bad-endpoints";
  }
  return "unknown";
}

WalkValidationError::WalkValidationError(WalkErrorKind kind, std::size_t index)
    : InvalidArgument(to_string(kind) + " at index " + std::to_string(index)),
      kind_(kind),
      index_(index) {}

QuadrantWalk validate_walk(std::vector<Point> positions) {
  if (positions.empty()) throw WalkValidationError(WalkErrorKind::Empty, 0);
  for (std::size_t t = 0; t < positions.size(); ++t) {
    if (t > 0 && !step_between(positions[t - 1], positions[t]).admissible())
      throw WalkValidationError(WalkErrorKind::StepNotInA, t + 1);
    if (positions[t].x < 0 || positions[t].y < 0)
      throw WalkValidationError(WalkErrorKind::NegativeCoordinate, t + 1);
  }
  if (positions.front().x != 0) throw WalkValidationError(WalkErrorKind::BadEndpoints, 1);
  if (positions.back().y != 0)
    throw WalkValidationError(WalkErrorKind::BadEndpoints, positions.size());
  return QuadrantWalk(std::move(positions));
}

namespace {

void extend(std::vector<Point>& path, std::size_t n, std::vector<QuadrantWalk>& out) {
  const Point cur = path.back();
  const auto remaining = static_cast<int>(n - path.size());
  if (remaining == 0) {
    if (cur.y == 0) out.push_back(validate_walk(path));
    return;
  }
  // y drops by at most one per step and must reach 0 at the end.
  auto feasible = [&](Point p) { return p.y <= remaining - 1; };
  if (cur.y >= 1) {
    const Point next{cur.x + 1, cur.y - 1};
    path.push_back(next);
    extend(path, n, out);
    path.pop_back();
  }
  for (int i = 0; i <= cur.x; ++i) {
    for (int j = 0;; ++j) {
      const Point next{cur.x - i, cur.y + j};
      if (!feasible(next)) break;
      path.push_back(next);
      extend(path, n, out);
      path.pop_back();
    }
  }
}

}  // namespace

std::vector<QuadrantWalk> enumerate_walks(std::size_t n) {
  if (n < 1 || n > 9) throw InvalidArgument("enumerate_walks supports 1 <= n <= 9");
  std::vector<QuadrantWalk> out;
  std::vector<Point> path;
  for (int h = 0; h < static_cast<int>(n); ++h) {
    path.assign(1, Point{0, h});
    extend(path, n, out);
  }
  return out;
}

double nu_mass(Step s) {
  if (s.dx == 1 && s.dy == -1) return 0.5;
  if (s.dx <= 0 && s.dy >= 0) return std::ldexp(1.0, s.dx - s.dy - 3);
  return 0.0;
}

Step sample_nu_step(Rng& rng) {
  if (rng.fair_bit()) return {1, -1};
  const int i = static_cast<int>(rng.geometric_half());
  const int j = static_cast<int>(rng.geometric_half());
  return {-i, j};
}

std::vector<Point> sample_excursion_raw(std::size_t n_min, std::size_t n_max, Rng& rng,
                                        std::uint64_t max_attempts, std::uint64_t* attempts) {
  if (n_min < 1 || n_min > n_max) throw InvalidArgument("need 1 <= n_min <= n_max");
  const std::size_t cap = n_max + 2;
  std::vector<Point> path;
  path.reserve(cap + 1);
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    path.assign(1, Point{0, 0});
    Point cur{0, 0};
    for (;;) {
      const Step s = sample_nu_step(rng);
      const Point next{cur.x + s.dx, cur.y + s.dy};
      if (next.x < 0 || next.y < 0) break;
      if (path.size() == cap) {
        path.clear();  // already too long to be accepted
        break;
      }
      path.push_back(next);
      cur = next;
    }
    if (path.size() >= n_min + 2 && path.back() == Point{0, 0}) {
      if (attempts != nullptr) *attempts = attempt + 1;
      return path;
    }
  }
  throw SamplingFailure("rejection sampler exceeded " + std::to_string(max_attempts) +
                        " attempts");
}

QuadrantWalk sample_uniform_excursion(std::size_t n_min, std::size_t n_max, Rng& rng,
                                      std::uint64_t max_attempts, std::uint64_t* attempts) {
  const auto path = sample_excursion_raw(n_min, n_max, rng, max_attempts, attempts);
  return validate_walk(std::vector<Point>(path.begin() + 1, path.end() - 1));
}

PlaneWalk sample_bidirectional(std::int64_t t_min, std::int64_t t_max, Rng& rng) {
  if (t_min > 0 || t_max < 0) throw InvalidArgument("need t_min <= 0 <= t_max");
  std::vector<Point> values(static_cast<std::size_t>(t_max - t_min + 1));
  const auto zero = static_cast<std::size_t>(-t_min);
  values[zero] = {0, 0};
  for (std::size_t t = zero + 1; t < values.size(); ++t) {
    const Step s = sample_nu_step(rng);
    values[t] = {values[t - 1].x + s.dx, values[t - 1].y + s.dy};
  }
  for (std::size_t t = zero; t > 0; --t) {
    const Step s = sample_nu_step(rng);  // increment from t-1 to t
    values[t - 1] = {values[t].x - s.dx, values[t].y - s.dy};
  }
  return PlaneWalk(t_min, std::move(values));
}

}  // namespace baxter
