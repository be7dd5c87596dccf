#include "baxter/permutation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "baxter/error.hpp"

namespace baxter {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const std::size_t n = values_.size();
  if (n == 0) throw InvalidArgument("permutation must be nonempty");
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v])
      throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

bool is_baxter_cubic(const Permutation& p) {
  const auto& s = p.values();
  const std::size_t n = s.size();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const int a = s[j], b = s[j + 1];
    for (std::size_t i = 0; i < j; ++i) {
      for (std::size_t k = j + 2; k < n; ++k) {
        if (b < s[i] && s[i] < s[k] && s[k] < a) return false;
        if (a < s[k] && s[k] < s[i] && s[i] < b) return false;
      }
    }
  }
  return true;
}

bool is_baxter_quadratic(const Permutation& p) {
  const auto& s = p.values();
  const std::size_t n = s.size();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const int lo = std::min(s[j], s[j + 1]);
    const int hi = std::max(s[j], s[j + 1]);
    if (hi - lo < 3) continue;
    int left_min = std::numeric_limits<int>::max(), left_max = 0;
    for (std::size_t i = 0; i < j; ++i) {
      if (s[i] > lo && s[i] < hi) {
        left_min = std::min(left_min, s[i]);
        left_max = std::max(left_max, s[i]);
      }
    }
    if (left_max == 0) continue;
    int right_min = std::numeric_limits<int>::max(), right_max = 0;
    for (std::size_t k = j + 2; k < n; ++k) {
      if (s[k] > lo && s[k] < hi) {
        right_min = std::min(right_min, s[k]);
        right_max = std::max(right_max, s[k]);
      }
    }
    if (right_max == 0) continue;
    if (s[j] > s[j + 1]) {
      if (left_min < right_max) return false;
    } else if (left_max > right_min) {
      return false;
    }
  }
  return true;
}

bool is_baxter(const Permutation& p) {
  return p.size() <= 512 ? is_baxter_cubic(p) : is_baxter_quadratic(p);
}

Permutation pattern_at(const Permutation& p, const std::vector<std::size_t>& indices) {
  if (indices.empty()) throw InvalidArgument("pattern index set must be nonempty");
  for (std::size_t q = 0; q < indices.size(); ++q) {
    if (indices[q] < 1 || indices[q] > p.size())
      throw InvalidArgument("pattern index out of range");
    if (q > 0 && indices[q] <= indices[q - 1])
      throw InvalidArgument("pattern indices must be strictly increasing");
  }
  const std::size_t k = indices.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p(indices[a]) < p(indices[b]);
  });
  std::vector<int> out(k);
  for (std::size_t r = 0; r < k; ++r) out[order[r]] = static_cast<int>(r + 1);
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> out(p.size());
  for (std::size_t i = 1; i <= p.size(); ++i) out[p(i) - 1] = static_cast<int>(i);
  return Permutation(std::move(out));
}

Permutation reverse_complement(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> out(p.size());
  for (int i = 1; i <= n; ++i) out[i - 1] = n + 1 - p(n + 1 - i);
  return Permutation(std::move(out));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw InvalidArgument("size mismatch in compose");
  std::vector<int> out(inner.size());
  for (std::size_t i = 1; i <= inner.size(); ++i) out[i - 1] = outer(inner(i));
  return Permutation(std::move(out));
}

PermutonHistogram permuton_histogram(const Permutation& p, std::size_t k,
                                     std::size_t exact_threshold) {
  if (k == 0) throw InvalidArgument("grid size must be positive");
  const auto n = static_cast<std::int64_t>(p.size());
  const auto kk = static_cast<std::int64_t>(k);
  PermutonHistogram h;
  h.k = k;
  h.exact = p.size() <= exact_threshold;
  h.mass.assign(k * k, 0.0);
  if (h.exact) {
    h.numerator.assign(k * k, 0);
    h.denominator = n * kk * kk;
  }
  // Coordinates measured in units of 1/(n k): point i occupies
  // [(i-1)k, ik] on each axis and grid cell a covers [a n, (a+1) n].
  auto overlaps = [&](std::int64_t lo, std::int64_t hi, auto&& emit) {
    for (std::int64_t a = lo / n; a < kk && a * n < hi; ++a) {
      const std::int64_t len = std::min(hi, (a + 1) * n) - std::max(lo, a * n);
      if (len > 0) emit(a, len);
    }
  };
  const double scale = 1.0 / (static_cast<double>(n) * kk * kk);
  for (std::int64_t i = 1; i <= n; ++i) {
    const std::int64_t v = p(static_cast<std::size_t>(i));
    overlaps((i - 1) * kk, i * kk, [&](std::int64_t a, std::int64_t ox) {
      overlaps((v - 1) * kk, v * kk, [&](std::int64_t b, std::int64_t oy) {
        const std::size_t cell = static_cast<std::size_t>(a * kk + b);
        if (h.exact)
          h.numerator[cell] += ox * oy;
        else
          h.mass[cell] += static_cast<double>(ox * oy) * scale;
      });
    });
  }
  if (h.exact) {
    for (std::size_t c = 0; c < k * k; ++c)
      h.mass[c] = static_cast<double>(h.numerator[c]) / static_cast<double>(h.denominator);
  }
  return h;
}

}  // namespace baxter
