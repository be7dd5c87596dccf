#include "baxter/rng.hpp"

#include <array>
#include <bit>

namespace baxter {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

Rng Rng::derived(std::uint64_t seed, std::uint64_t stream) {
  std::array<std::uint32_t, 4> words{
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(stream),
      static_cast<std::uint32_t>(stream >> 32)};
  std::seed_seq seq(words.begin(), words.end());
  Rng rng(0);
  rng.engine_.seed(seq);
  return rng;
}

bool Rng::fair_bit() {
  if (bits_left_ == 0) {
    bits_ = engine_();
    bits_left_ = 64;
  }
  const bool bit = (bits_ & 1U) != 0;
  bits_ >>= 1;
  --bits_left_;
  return bit;
}

unsigned Rng::geometric_half() {
  unsigned failures = 0;
  for (;;) {
    if (bits_left_ == 0) {
      bits_ = engine_();
      bits_left_ = 64;
    }
    if (bits_ == 0) {
      // All remaining buffered bits are failures.
      failures += static_cast<unsigned>(bits_left_);
      bits_left_ = 0;
      continue;
    }
    const int zeros = std::countr_zero(bits_);
    if (zeros < bits_left_) {
      failures += static_cast<unsigned>(zeros);
      bits_ >>= zeros + 1;  // zeros + 1 <= 64 only when zeros < 63
      bits_left_ -= zeros + 1;
      if (bits_left_ == 0) bits_ = 0;
      return failures;
    }
    failures += static_cast<unsigned>(bits_left_);
    bits_left_ = 0;
  }
}

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform_open_closed() {
  return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
  return dist(engine_);
}

double Rng::normal() { return normal_(engine_); }

}  // namespace baxter
