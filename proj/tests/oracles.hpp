#pragma once

// Brute-force references used only by the tests. Nothing here calls into the
// library's counting code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "reprfn/splitmix64.hpp"

namespace reprfn::testing {

using BruteSpectrum = std::map<std::uint64_t, std::uint64_t>;

inline BruteSpectrum brute_spectrum(const std::vector<std::int64_t>& xs) {
  BruteSpectrum out;
  for (auto x : xs)
    for (auto y : xs) ++out[static_cast<std::uint64_t>(x + y)];
  return out;
}

inline std::uint64_t brute_count(const std::vector<std::int64_t>& xs, std::uint64_t n) {
  std::uint64_t c = 0;
  for (auto x : xs)
    for (auto y : xs) c += static_cast<std::uint64_t>(x + y) == n;
  return c;
}

inline std::uint64_t brute_max(const std::vector<std::int64_t>& xs) {
  std::uint64_t best = 0;
  for (const auto& [n, c] : brute_spectrum(xs)) best = std::max(best, c);
  return best;
}

inline std::vector<std::uint64_t> brute_u_trace(const std::vector<std::int64_t>& xs) {
  std::vector<std::uint64_t> out;
  for (std::size_t k = 1; k <= xs.size(); ++k) {
    out.push_back(brute_max(std::vector<std::int64_t>(xs.begin(), xs.begin() + k)));
  }
  return out;
}

inline std::vector<std::int64_t> squares(std::size_t k) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= static_cast<std::int64_t>(k); ++n) out.push_back(n * n);
  return out;
}

// k distinct values from [0, max_term], ascending. The range is widened to
// [0, k-1] when it cannot hold k values.
inline std::vector<std::int64_t> random_prefix(SplitMix64& rng, std::size_t k,
                                               std::uint64_t max_term) {
  max_term = std::max<std::uint64_t>(max_term, k == 0 ? 0 : k - 1);
  std::set<std::int64_t> chosen;
  while (chosen.size() < k) chosen.insert(static_cast<std::int64_t>(rng() % (max_term + 1)));
  return {chosen.begin(), chosen.end()};
}

}  // namespace reprfn::testing
