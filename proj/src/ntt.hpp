#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace reprfn::detail {

// NTT-friendly prime 15 * 2^27 + 1 with primitive root 31. Supports
// transform lengths up to 2^27.
inline constexpr std::uint32_t kNttPrime = 2013265921u;
inline constexpr std::uint32_t kNttRoot = 31u;
inline constexpr std::size_t kNttMaxLength = std::size_t{1} << 27;

// Cyclic self-convolution of the 0/1 vector with ones at `positions`, over
// Z/pZ, using a transform of length `length` (power of two). Exact as long as
// every count stays below the prime, which holds since a count is at most
// the number of positions.
std::vector<std::uint32_t> square_indicator(std::span<const std::uint64_t> positions,
                                            std::size_t length);

}  // namespace reprfn::detail
