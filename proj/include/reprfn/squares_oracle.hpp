#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace reprfn {

std::uint64_t isqrt(std::uint64_t n) noexcept;
bool is_perfect_square(std::uint64_t n) noexcept;

struct DivisorCountsMod4 {
  std::uint64_t d1 = 0;  // divisors = 1 mod 4
  std::uint64_t d3 = 0;  // divisors = 3 mod 4
  bool operator==(const DivisorCountsMod4&) const = default;
};

// Trial division up to sqrt(n). n >= 1.
DivisorCountsMod4 divisor_counts_mod4(std::uint64_t n);

// Lattice points (x, y) in Z^2 with x^2 + y^2 = n: 4 (d1 - d3).
std::uint64_t r2_lattice(std::uint64_t n);

// Ordered couples of positive squares summing to n.
std::uint64_t positive_ordered_count(std::uint64_t n);

// Same quantity by direct search over x = 1..floor(sqrt(n-1)).
std::uint64_t brute_positive_ordered_count(std::uint64_t n);

struct OracleMismatch {
  std::uint64_t n = 0;
  std::uint64_t jacobi = 0;
  std::uint64_t brute = 0;
  bool operator==(const OracleMismatch&) const = default;
};

struct OracleRow {
  std::uint64_t n = 0;
  std::uint64_t count = 0;
  bool is_record = false;
};

struct OracleReport {
  std::uint64_t range_max = 0;
  std::vector<OracleMismatch> mismatches;
  std::vector<OracleRow> rows;  // n = 1..range_max
  std::vector<OracleRow> records;

  bool ok() const noexcept { return mismatches.empty(); }
};

// Compares the divisor formula with brute force for every n <= range_max.
// threads > 1 splits the range; the report is identical for any thread count.
OracleReport cross_check(std::uint64_t range_max, unsigned threads = 1);

}  // namespace reprfn
