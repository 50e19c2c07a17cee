#pragma once

#include <cstdint>
#include <limits>

namespace reprfn {

// splitmix64 (Steele, Lea, Flood). One state word, fully portable.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept {
    return std::numeric_limits<std::uint64_t>::max();
  }

  // Uniform integer in [-bound, +bound]. Draws once, and again only while the
  // draw falls in the top 2^64 mod width values that would bias the modulo.
  constexpr std::int64_t symmetric(std::uint64_t bound) noexcept {
    const std::uint64_t width = 2 * bound + 1;
    const std::uint64_t bias = (0 - width) % width;  // 2^64 mod width
    const std::uint64_t limit = max() - bias;         // accept x <= limit
    std::uint64_t x = (*this)();
    while (x > limit) x = (*this)();
    return static_cast<std::int64_t>(x % width) - static_cast<std::int64_t>(bound);
  }

 private:
  std::uint64_t state_;
};

}  // namespace reprfn
