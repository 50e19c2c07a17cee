#include "reprfn/repfunc.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "ntt.hpp"

namespace reprfn {

namespace {

std::uint64_t as_sum(Term a, Term b) noexcept {
  return static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b);
}

}  // namespace

RepSpectrum::RepSpectrum(std::size_t k, std::vector<Entry> entries)
    : k_(k), entries_(std::move(entries)) {}

std::uint64_t RepSpectrum::count(std::uint64_t sum) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), sum,
                             [](const Entry& e, std::uint64_t s) { return e.first < s; });
  return it != entries_.end() && it->first == sum ? it->second : 0;
}

std::uint64_t RepSpectrum::total() const noexcept {
  std::uint64_t t = 0;
  for (const auto& [sum, c] : entries_) t += c;
  return t;
}

std::uint64_t rep_count(const SequencePrefix& prefix, std::uint64_t n) {
  const auto& t = prefix.terms;
  if (t.empty()) return 0;
  std::uint64_t count = 0;
  std::size_t i = 0;
  std::size_t j = t.size() - 1;
  while (i <= j) {
    const std::uint64_t s = as_sum(t[i], t[j]);
    if (s == n) {
      count += i == j ? 1 : 2;
      ++i;
      if (j == 0) break;
      --j;
    } else if (s < n) {
      ++i;
    } else {
      if (j == 0) break;
      --j;
    }
  }
  return count;
}

RepSpectrum spectrum_naive(const SequencePrefix& prefix) {
  const auto& t = prefix.terms;
  const std::size_t k = t.size();

  // Off-diagonal couples i < j contribute 2, the diagonal contributes 1.
  std::vector<std::uint64_t> off;
  off.reserve(k * (k - (k > 0)) / 2);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) off.push_back(as_sum(t[i], t[j]));
  std::sort(off.begin(), off.end());

  std::vector<RepSpectrum::Entry> entries;
  std::size_t a = 0;
  std::size_t d = 0;  // diagonal sums 2*t[d] are already ascending
  while (a < off.size() || d < k) {
    const std::uint64_t next_off = a < off.size() ? off[a] : UINT64_MAX;
    const std::uint64_t next_diag = d < k ? as_sum(t[d], t[d]) : UINT64_MAX;
    const std::uint64_t s = std::min(next_off, next_diag);
    std::uint64_t c = 0;
    while (a < off.size() && off[a] == s) {
      c += 2;
      ++a;
    }
    if (d < k && next_diag == s) {
      c += 1;
      ++d;
    }
    entries.emplace_back(s, c);
  }
  return RepSpectrum(k, std::move(entries));
}

RepSpectrum spectrum_convolution(const SequencePrefix& prefix) {
  const auto& t = prefix.terms;
  if (t.empty()) return RepSpectrum(0, {});
  if (2 * static_cast<std::uint64_t>(t.back()) > kConvolutionLimit) {
    throw Error(ErrorKind::ThresholdExceeded,
                "2*max_term = " + std::to_string(2 * static_cast<std::uint64_t>(t.back())) +
                    " exceeds 2^26");
  }
  // Shift by the minimum so the transform only spans the occupied range.
  const auto base = static_cast<std::uint64_t>(t.front());
  std::vector<std::uint64_t> positions;
  positions.reserve(t.size());
  for (auto x : t) positions.push_back(static_cast<std::uint64_t>(x) - base);
  const std::uint64_t top = 2 * positions.back();
  if (top == 0) return RepSpectrum(1, {{2 * base, 1}});

  // When top is a power of two, a cyclic transform of length top folds the
  // single couple (max, max) onto index 0, whose own count is the single
  // couple (min, min). Both are known, so the fold is undone afterwards.
  const bool fold = std::has_single_bit(top);
  const std::size_t length = fold ? top : std::bit_ceil(static_cast<std::size_t>(top + 1));
  auto square = detail::square_indicator(positions, length);
  if (fold) {
    square[0] = 1;
    square.push_back(1);
  }

  std::vector<RepSpectrum::Entry> entries;
  for (std::size_t i = 0; i <= top; ++i) {
    if (square[i] != 0) entries.emplace_back(i + 2 * base, square[i]);
  }
  return RepSpectrum(t.size(), std::move(entries));
}

RepSpectrum spectrum(const SequencePrefix& prefix) {
  if (prefix.empty() || 2 * static_cast<std::uint64_t>(prefix.back()) > kConvolutionLimit) {
    return spectrum_naive(prefix);
  }
  // The transform costs O(max log max); the direct sum costs O(k^2).
  const auto k = static_cast<std::uint64_t>(prefix.size());
  const auto span = static_cast<std::uint64_t>(prefix.back() - prefix.terms.front());
  if (k * k <= 64 * (span + 1)) return spectrum_naive(prefix);
  return spectrum_convolution(prefix);
}

MaxRep s_max(const RepSpectrum& spectrum) {
  if (spectrum.k() == 0) throw Error(ErrorKind::EmptyPrefix, "s_max of an empty prefix");
  MaxRep out;
  for (const auto& [sum, c] : spectrum) {
    if (c > out.value) {
      out.value = c;
      out.argmax.clear();
    }
    if (c == out.value) out.argmax.push_back(sum);
  }
  return out;
}

MaxRep s_max(const SequencePrefix& prefix) {
  if (prefix.empty()) throw Error(ErrorKind::EmptyPrefix, "s_max of an empty prefix");
  return s_max(spectrum(prefix));
}

namespace {

template <class Counter>
MaxRepTrace incremental_trace(const std::vector<Term>& t, Counter&& bump) {
  MaxRepTrace trace;
  trace.values.reserve(t.size());
  std::uint64_t best = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    for (std::size_t i = 0; i < k; ++i) best = std::max(best, bump(as_sum(t[i], t[k]), 2));
    best = std::max(best, bump(as_sum(t[k], t[k]), 1));
    trace.values.push_back(best);
  }
  return trace;
}

}  // namespace

MaxRepTrace u_trace(const SequencePrefix& prefix) {
  const auto& t = prefix.terms;
  if (t.empty()) return {};
  const auto base = 2 * static_cast<std::uint64_t>(t.front());
  const auto span = 2 * static_cast<std::uint64_t>(t.back() - t.front());
  const auto k = static_cast<std::uint64_t>(t.size());

  // Dense counters when the sum range is small relative to the k^2 updates.
  if (span <= kConvolutionLimit && span <= 16 * k * k) {
    std::vector<std::uint32_t> counts(span + 1, 0);
    return incremental_trace(t, [&](std::uint64_t s, std::uint32_t w) -> std::uint64_t {
      return counts[s - base] += w;
    });
  }
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  counts.reserve(t.size() * (t.size() + 1) / 2);
  return incremental_trace(t, [&](std::uint64_t s, std::uint64_t w) -> std::uint64_t {
    return counts[s] += w;
  });
}

MaxRepTrace u_trace(const SequenceSpec& spec, std::size_t K) {
  return u_trace(materialize(spec, K));
}

}  // namespace reprfn
