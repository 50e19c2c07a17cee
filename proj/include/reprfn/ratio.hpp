#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace reprfn {

// Non-negative exact rational, stored as written (never reduced). Ordering
// and equality are by value, through 128-bit cross-multiplication.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  friend constexpr std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept {
    const auto lhs = static_cast<unsigned __int128>(a.num) * b.den;
    const auto rhs = static_cast<unsigned __int128>(b.num) * a.den;
    return lhs <=> rhs;
  }
  friend constexpr bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return (a <=> b) == 0;
  }

  // Smallest integer not below the value.
  constexpr std::uint64_t ceil() const noexcept { return num / den + (num % den != 0); }

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) {
    return os << r.num << '/' << r.den;
  }
};

constexpr bool le_integer(const Ratio& r, std::uint64_t value) noexcept {
  return r.num <= static_cast<unsigned __int128>(value) * r.den;
}

}  // namespace reprfn
