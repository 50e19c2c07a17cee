#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "reprfn/sequences.hpp"

namespace reprfn {

// Representation counts are over ORDERED couples: (1,4) and (4,1) are two
// representations of 5. Unordered conventions differ by about a factor 2.

// Sparse table sum -> number of ordered couples, sorted by sum, zero counts
// omitted.
class RepSpectrum {
 public:
  using Entry = std::pair<std::uint64_t, std::uint64_t>;

  RepSpectrum() = default;
  RepSpectrum(std::size_t k, std::vector<Entry> entries);

  std::size_t k() const noexcept { return k_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  std::uint64_t count(std::uint64_t sum) const noexcept;
  std::uint64_t total() const noexcept;

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool operator==(const RepSpectrum&) const = default;

 private:
  std::size_t k_ = 0;
  std::vector<Entry> entries_;
};

// Largest 2*max_term accepted by the dense convolution path.
inline constexpr std::uint64_t kConvolutionLimit = std::uint64_t{1} << 26;

std::uint64_t rep_count(const SequencePrefix& prefix, std::uint64_t n);

RepSpectrum spectrum_naive(const SequencePrefix& prefix);

// Squares the indicator polynomial with an exact number-theoretic transform.
// Throws ThresholdExceeded when 2*max_term > kConvolutionLimit.
RepSpectrum spectrum_convolution(const SequencePrefix& prefix);

// Convolution when the prefix fits under the limit, naive otherwise.
RepSpectrum spectrum(const SequencePrefix& prefix);

struct MaxRep {
  std::uint64_t value = 0;
  std::vector<std::uint64_t> argmax;  // ascending
  bool operator==(const MaxRep&) const = default;
};

MaxRep s_max(const RepSpectrum& spectrum);
MaxRep s_max(const SequencePrefix& prefix);

// values[k-1] = s(X(k)). Built incrementally: adding a_k bumps a_i + a_k
// twice for i < k and 2*a_k once.
struct MaxRepTrace {
  std::vector<std::uint64_t> values;

  std::size_t size() const noexcept { return values.size(); }
  std::uint64_t at(std::size_t k) const { return values.at(k - 1); }
  bool operator==(const MaxRepTrace&) const = default;
};

MaxRepTrace u_trace(const SequencePrefix& prefix);
MaxRepTrace u_trace(const SequenceSpec& spec, std::size_t K);

}  // namespace reprfn
