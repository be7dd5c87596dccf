#include "baxter/walk_sampler.hpp"

#include <algorithm>
#include <cmath>

#include "baxter/error.hpp"

#if defined(__SSE__)
#include <xmmintrin.h>
#endif

namespace baxter {

namespace {

// Flush denormals to zero while the table is being built; tiny entries carry
// negligible probability and denormal arithmetic is very slow.
class FlushDenormals {
 public:
  FlushDenormals() {
#if defined(__SSE__)
    saved_ = _mm_getcsr();
    _mm_setcsr(saved_ | 0x8040U);
#endif
  }
  ~FlushDenormals() {
#if defined(__SSE__)
    _mm_setcsr(saved_);
#endif
  }
  FlushDenormals(const FlushDenormals&) = delete;
  FlushDenormals& operator=(const FlushDenormals&) = delete;

 private:
  unsigned saved_ = 0;
};

void round_to_float(std::vector<double>& v, std::vector<float>* keep) {
  if (keep != nullptr) keep->resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto f = static_cast<float>(v[i]);
    v[i] = f;
    if (keep != nullptr) (*keep)[i] = f;
  }
}

}  // namespace

ExactExcursionSampler::ExactExcursionSampler(std::size_t n_min, std::size_t n_max,
                                             ExactSamplerOptions opts)
    : n_min_(n_min), n_max_(n_max) {
  if (n_min < 1 || n_min > n_max) throw InvalidArgument("need 1 <= n_min <= n_max");
  if (!(opts.sigmas > 0)) throw InvalidArgument("truncation must be positive");
  levels_ = n_max + 1;
  const auto scale = static_cast<std::size_t>(
      std::ceil(opts.sigmas * std::sqrt(2.0 * static_cast<double>(n_max + 2))) + 8);
  bound_ = std::min(levels_, scale);
  dim_ = bound_ + 1;
  stride_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(levels_))));

  FlushDenormals guard;
  const std::size_t cells = dim_ * dim_;
  std::vector<double> cur(cells, 0.0), next(cells), suffix(cells), cumul(cells);
  cur[0] = 1.0;
  std::vector<double> log_scale(levels_ + 1, 0.0);
  std::vector<double> origin(levels_ + 1, 0.0);
  origin[0] = 1.0;
  checkpoints_.emplace_back(cur.begin(), cur.end());
  for (std::size_t r = 1; r <= levels_; ++r) {
    double log_max = 0;
    advance(cur, next, suffix, cumul, log_max);
    log_scale[r] = log_scale[r - 1] + log_max;
    std::swap(cur, next);
    if (r % stride_ == 0 && r < levels_) {
      checkpoints_.emplace_back();
      round_to_float(cur, &checkpoints_.back());
    }
    origin[r] = cur[0];
  }

  double top = -INFINITY;
  for (std::size_t m = n_min; m <= n_max; ++m)
    if (origin[m + 1] > 0) top = std::max(top, log_scale[m + 1] + std::log(origin[m + 1]));
  if (!std::isfinite(top)) throw SamplingFailure("no excursion of the requested sizes");
  double total = 0;
  for (std::size_t m = n_min; m <= n_max; ++m) {
    const double w = origin[m + 1] > 0
                         ? std::exp(log_scale[m + 1] + std::log(origin[m + 1]) - top)
                         : 0.0;
    size_probs_.push_back(w);
    total += w;
  }
  for (double& w : size_probs_) w /= total;
}

// The table holds q_r(x,y): the probability that a nu-walk from (x,y) stays
// in the quadrant and sits at the origin after r steps. One level is
//   q_r(x,y) = q_{r-1}(x+1,y-1) [y>=1] / 2 + sum_{i<=x, j>=0} 2^{-i-j-3} q_{r-1}(x-i,y+j),
// renormalized so that the largest entry is 1. On return `suffix` and
// `cumul` hold the half-weighted partial sums of `prev`:
//   suffix(x,y) = q(x,y) + suffix(x,y+1)/2,  cumul(x,y) = suffix(x,y) + cumul(x-1,y)/2.
void ExactExcursionSampler::advance(const std::vector<double>& prev, std::vector<double>& next,
                                    std::vector<double>& suffix, std::vector<double>& cumul,
                                    double& log_max) const {
  partial_sums(prev, suffix, cumul);
  const std::size_t d = dim_;
  double top = 0;
  for (std::size_t x = 0; x < d; ++x) {
    double* out = next.data() + x * d;
    const double* c = cumul.data() + x * d;
    out[0] = 0.125 * c[0];
    if (x + 1 < d) {
      const double* up = prev.data() + (x + 1) * d;
      for (std::size_t y = 1; y < d; ++y) out[y] = 0.125 * c[y] + 0.5 * up[y - 1];
    } else {
      for (std::size_t y = 1; y < d; ++y) out[y] = 0.125 * c[y];
    }
    for (std::size_t y = 0; y < d; ++y) top = std::max(top, out[y]);
  }
  if (!(top > 0)) throw SamplingFailure("excursion table vanished");
  const double inv = 1.0 / top;
  for (double& v : next) v *= inv;
  log_max = std::log(top);
}

void ExactExcursionSampler::partial_sums(const std::vector<double>& q, std::vector<double>& suffix,
                                         std::vector<double>& cumul) const {
  const std::size_t d = dim_;
  for (std::size_t x = 0; x < d; ++x) {
    const double* g = q.data() + x * d;
    double* h = suffix.data() + x * d;
    double acc = 0;
    for (std::size_t y = d; y-- > 0;) {
      acc = g[y] + 0.5 * acc;
      h[y] = acc;
    }
  }
  std::copy_n(suffix.begin(), d, cumul.begin());
  for (std::size_t i = d; i < d * d; ++i) cumul[i] = suffix[i] + 0.5 * cumul[i - d];
}

std::vector<QuadrantWalk> ExactExcursionSampler::sample(std::size_t count, Rng& rng) const {
  struct Active {
    std::size_t size;
    Rng rng;
    std::vector<Point> path;  // path[s] = excursion position after s steps
  };
  std::vector<Active> samples;
  samples.reserve(count);
  for (std::size_t q = 0; q < count; ++q) {
    double u = rng.uniform01();
    std::size_t idx = 0;
    while (idx + 1 < size_probs_.size() && u >= size_probs_[idx]) u -= size_probs_[idx++];
    const std::size_t m = n_min_ + idx;
    samples.push_back({m, Rng(rng.next_u64()), std::vector<Point>(m + 2)});
  }
  std::size_t top_level = 0;
  for (const auto& s : samples) top_level = std::max(top_level, s.size + 1);
  if (count == 0) return {};

  FlushDenormals guard;
  const std::size_t d = dim_;
  const std::size_t cells = d * d;
  std::vector<double> cur(cells), next(cells), suffix(cells), cumul(cells);
  std::vector<std::vector<float>> block;
  std::vector<Point> pos(count, Point{0, 0});

  // Target levels t are visited from top_level - 1 down to 0 in blocks that
  // start at a checkpoint.
  const std::size_t last_target = top_level - 1;
  for (std::size_t b = last_target / stride_ + 1; b-- > 0;) {
    const std::size_t lo = b * stride_;
    const std::size_t hi = std::min(last_target, lo + stride_ - 1);
    block.assign(hi - lo + 1, {});
    block[0] = checkpoints_[b];
    cur.assign(block[0].begin(), block[0].end());
    for (std::size_t t = lo + 1; t <= hi; ++t) {
      double unused = 0;
      advance(cur, next, suffix, cumul, unused);
      std::swap(cur, next);
      if (t % stride_ == 0) round_to_float(cur, nullptr);
      block[t - lo].assign(cur.begin(), cur.end());
    }
    for (std::size_t t = hi + 1; t-- > lo;) {
      const std::vector<float>& gt = block[t - lo];
      cur.assign(gt.begin(), gt.end());
      partial_sums(cur, suffix, cumul);

      for (std::size_t q = 0; q < count; ++q) {
        Active& s = samples[q];
        if (s.size < t) continue;  // starts below this level
        const std::size_t steps = s.size + 1 - t;  // index of the new position
        const Point p = pos[q];
        const auto x = static_cast<std::size_t>(p.x);
        const auto y = static_cast<std::size_t>(p.y);
        const double up = (y >= 1 && x + 1 < d) ? 0.5 * cur[(x + 1) * d + y - 1] : 0.0;
        const double jump = 0.125 * cumul[x * d + y];
        const double total = up + jump;
        if (!(total > 0)) throw SamplingFailure("exact sampler reached a dead state");
        const double u = s.rng.uniform01() * total;
        Point np;
        if (u < up) {
          np = {p.x + 1, p.y - 1};
        } else {
          // Jump weights in units of cumul(x, y): row x' carries
          // 2^{x'-x} suffix(x', y), and the rows up to x' sum to 2^{x'-x} cumul(x', y).
          const double v = std::min((u - up) * 8.0, std::nextafter(cumul[x * d + y], 0.0));
          auto upto = [&](std::size_t row) {
            return std::ldexp(cumul[row * d + y], static_cast<int>(row) - p.x);
          };
          std::size_t a = 0, bnd = x;
          while (a < bnd) {
            const std::size_t mid = (a + bnd) / 2;
            if (upto(mid) > v) bnd = mid; else a = mid + 1;
          }
          const std::size_t row = a;
          const double before = row > 0 ? upto(row - 1) : 0.0;
          // Within the row, y' carries 2^{y-y'} q(row, y'); the entries from y'
          // upwards sum to 2^{y-y'} suffix(row, y').
          const double w = std::clamp(std::ldexp(v - before, p.x - static_cast<int>(row)), 0.0,
                                      std::nextafter(suffix[row * d + y], 0.0));
          auto from = [&](std::size_t col) {
            return std::ldexp(suffix[row * d + col], p.y - static_cast<int>(col));
          };
          std::size_t lo_y = y, hi_y = d - 1;
          while (lo_y < hi_y) {
            const std::size_t mid = (lo_y + hi_y + 1) / 2;
            if (from(mid) > w) lo_y = mid; else hi_y = mid - 1;
          }
          np = {static_cast<int>(row), static_cast<int>(lo_y)};
        }
        pos[q] = np;
        s.path[steps] = np;
      }
    }
  }

  std::vector<QuadrantWalk> out;
  out.reserve(count);
  for (auto& s : samples) {
    if (s.path.back() != Point{0, 0}) throw SamplingFailure("exact sampler missed the origin");
    out.push_back(validate_walk(std::vector<Point>(s.path.begin() + 1, s.path.end() - 1)));
  }
  return out;
}

QuadrantWalk sample_uniform_excursion_exact(std::size_t n_min, std::size_t n_max, Rng& rng) {
  ExactExcursionSampler sampler(n_min, n_max);
  return std::move(sampler.sample(1, rng).front());
}

}  // namespace baxter
