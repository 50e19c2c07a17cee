#include "reprfn/squares_oracle.hpp"

#include <algorithm>
#include <thread>

#include "reprfn/error.hpp"

namespace reprfn {

std::uint64_t isqrt(std::uint64_t n) noexcept {
  // Newton iteration from an upper bound; exact for the full 64-bit range.
  if (n < 2) return n;
  std::uint64_t x = std::uint64_t{1} << ((64 - __builtin_clzll(n) + 1) / 2);
  while (true) {
    const std::uint64_t y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

bool is_perfect_square(std::uint64_t n) noexcept {
  const std::uint64_t r = isqrt(n);
  return r * r == n;
}

DivisorCountsMod4 divisor_counts_mod4(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "divisor counts need n >= 1");
  DivisorCountsMod4 out;
  auto tally = [&out](std::uint64_t d) {
    if (d % 4 == 1) ++out.d1;
    else if (d % 4 == 3) ++out.d3;
  };
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    tally(d);
    if (d != n / d) tally(n / d);
  }
  return out;
}

std::uint64_t r2_lattice(std::uint64_t n) {
  const auto [d1, d3] = divisor_counts_mod4(n);
  return 4 * (d1 - d3);  // d1 >= d3 always
}

std::uint64_t positive_ordered_count(std::uint64_t n) {
  const std::uint64_t axis = is_perfect_square(n) ? 4 : 0;
  return (r2_lattice(n) - axis) / 4;
}

std::uint64_t brute_positive_ordered_count(std::uint64_t n) {
  if (n < 2) return 0;
  std::uint64_t count = 0;
  const std::uint64_t top = isqrt(n - 1);
  for (std::uint64_t x = 1; x <= top; ++x) {
    const std::uint64_t rest = n - x * x;
    if (rest > 0 && is_perfect_square(rest)) ++count;
  }
  return count;
}

OracleReport cross_check(std::uint64_t range_max, unsigned threads) {
  if (range_max == 0) throw Error(ErrorKind::InvalidArgument, "range_max must be at least 1");
  threads = std::max(1u, threads);

  std::vector<std::uint64_t> jacobi(range_max);
  std::vector<std::uint64_t> brute(range_max);
  auto work = [&](std::uint64_t first, std::uint64_t last) {
    for (std::uint64_t n = first; n <= last; ++n) {
      jacobi[n - 1] = positive_ordered_count(n);
      brute[n - 1] = brute_positive_ordered_count(n);
    }
  };
  if (threads == 1) {
    work(1, range_max);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (range_max + threads - 1) / threads;
    for (std::uint64_t first = 1; first <= range_max; first += chunk) {
      pool.emplace_back(work, first, std::min(range_max, first + chunk - 1));
    }
  }

  OracleReport report;
  report.range_max = range_max;
  report.rows.reserve(range_max);
  std::uint64_t best = 0;
  for (std::uint64_t n = 1; n <= range_max; ++n) {
    const auto j = jacobi[n - 1];
    const auto b = brute[n - 1];
    if (j != b) report.mismatches.push_back({n, j, b});
    const bool record = j > best;
    if (record) best = j;
    report.rows.push_back({n, j, record});
    if (record) report.records.push_back(report.rows.back());
  }
  return report;
}

}  // namespace reprfn
