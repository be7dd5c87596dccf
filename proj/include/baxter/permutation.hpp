#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace baxter {

/// A permutation of {1..n} in one-line notation, n >= 1.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless `values` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return values_.size(); }
  /// 1-based access: sigma(i) for i in [1, n].
  int operator()(std::size_t i) const { return values_[i - 1]; }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// True iff p avoids both vincular patterns 2-41-3 and 3-14-2.
bool is_baxter(const Permutation& p);
/// Direct triple scan; the reference used by `is_baxter` for n <= 512.
bool is_baxter_cubic(const Permutation& p);
/// Descent-indexed quadratic variant used above 512.
bool is_baxter_quadratic(const Permutation& p);

/// Pattern induced by the sorted, 1-based index set `indices`.
Permutation pattern_at(const Permutation& p, const std::vector<std::size_t>& indices);

Permutation inverse(const Permutation& p);
Permutation reverse_complement(const Permutation& p);
Permutation compose(const Permutation& outer, const Permutation& inner);

/// k-by-k grid masses of the permuton of a permutation.
///
/// `mass[a * k + b]` is the mass of [a/k,(a+1)/k] x [b/k,(b+1)/k] (0-based
/// cells, a = x-cell). When exact, `numerator` holds integers with
/// mass = numerator / denominator.
struct PermutonHistogram {
  std::size_t k = 0;
  std::vector<double> mass;
  bool exact = false;
  std::vector<std::int64_t> numerator;
  std::int64_t denominator = 1;

  double at(std::size_t a, std::size_t b) const { return mass[a * k + b]; }
};

inline constexpr std::size_t kExactHistogramThreshold = 10000;

PermutonHistogram permuton_histogram(const Permutation& p, std::size_t k,
                                     std::size_t exact_threshold = kExactHistogramThreshold);

}  // namespace baxter
