#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "reprfn/ratio.hpp"
#include "reprfn/repfunc.hpp"
#include "reprfn/sequences.hpp"

namespace reprfn {

// d(k) = max_{i<=k} |a_i - b_i| for k = 1..K.
std::vector<std::uint64_t> d_trace(const SequencePrefix& a, const SequencePrefix& b);

struct PairTraceRow {
  std::size_t k = 0;
  std::uint64_t u = 0;
  std::uint64_t v = 0;
  std::uint64_t d = 0;
  Ratio lower;            // u / (4d + 1)
  std::uint64_t upper = 0;  // (4d + 1) * u
  Ratio w_running;        // max_{j<=k} lower(j)

  bool operator==(const PairTraceRow&) const = default;
};

using PairTrace = std::vector<PairTraceRow>;

PairTrace pair_trace(const SequencePrefix& a, const SequencePrefix& b);
PairTrace pair_trace(const SequencePrefix& a, const SequencePrefix& b,
                     const MaxRepTrace& u, const MaxRepTrace& v);
PairTrace pair_trace(const SequenceSpec& a, const SequenceSpec& b, std::size_t K,
                     bool parallel = false);

enum class SandwichSide { Lower, Upper };
std::string_view to_string(SandwichSide side) noexcept;

struct SandwichCounterexample {
  std::size_t k = 0;
  SandwichSide side = SandwichSide::Lower;
  bool operator==(const SandwichCounterexample&) const = default;
};

// Checks u(k) <= (4d(k)+1) v(k) and v(k) <= (4d(k)+1) u(k) at every row in
// exact 128-bit arithmetic. nullopt means no counterexample.
std::optional<SandwichCounterexample> verify_sandwich(const PairTrace& trace);
std::optional<SandwichCounterexample> verify_sandwich(const SequenceSpec& a,
                                                      const SequenceSpec& b, std::size_t K);

struct WindowCheckReport {
  std::size_t k = 0;
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  std::int64_t window_lo = 0;  // n - 2d(k), may be negative
  std::int64_t window_hi = 0;  // n + 2d(k)
  std::vector<std::pair<std::size_t, std::size_t>> pairs;     // F(k,n), 1-based
  std::vector<std::pair<std::size_t, std::size_t>> offenders;  // a_i + a_j outside the window
  std::uint64_t window_total = 0;  // sum over m in the window of |E(k,m)|

  std::size_t pairs_checked() const noexcept { return pairs.size(); }
  bool covered() const noexcept { return window_total >= pairs.size(); }
  bool ok() const noexcept { return offenders.empty() && covered(); }
};

WindowCheckReport window_cover_check(const SequencePrefix& a, const SequencePrefix& b,
                                     std::uint64_t n);

// Ordered couples (i,j) of A with lo <= a_i + a_j <= hi.
std::uint64_t count_pairs_in_range(const SequencePrefix& a, std::int64_t lo, std::int64_t hi);

struct EvidenceRecord {
  std::size_t k = 0;
  Ratio w;
  std::uint64_t u = 0;
  std::uint64_t d = 0;
  std::vector<std::uint64_t> witnesses;  // sums attaining u(k) in A(k)
};

// Finite-horizon reading of s(A)/(4d+1) <= s(B) <= (4d+1) s(A) with d(K)
// standing in for d. d may exceed d(K), so this is no statement about s.
struct FiniteHorizonView {
  std::size_t K = 0;
  std::uint64_t d = 0;
  std::uint64_t u = 0;
  std::uint64_t v = 0;
  bool holds = false;
};

FiniteHorizonView finite_horizon_view(const PairTrace& trace);

inline constexpr std::string_view kEvidenceLabel =
    "finite-horizon lower-bound evidence only; not a class determination";

struct UpperClassEvidence {
  std::vector<EvidenceRecord> records;  // horizons where w_running strictly rises
  Ratio final_w;
  std::uint64_t implied_lower_bound = 0;  // s(A), s(B) >= ceil(final_w)
  FiniteHorizonView view;
  std::string_view label = kEvidenceLabel;
};

UpperClassEvidence upper_class_evidence(const SequencePrefix& a, const PairTrace& trace);
UpperClassEvidence upper_class_evidence(const SequenceSpec& a, const SequenceSpec& b,
                                        std::size_t K);

}  // namespace reprfn
