#include "reprfn/proximity.hpp"

#include <algorithm>
#include <future>
#include <limits>

namespace reprfn {

namespace {

using u128 = unsigned __int128;

void require_same_length(const SequencePrefix& a, const SequencePrefix& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch, "prefixes have lengths " + std::to_string(a.size()) +
                                               " and " + std::to_string(b.size()));
  }
  if (a.empty()) throw Error(ErrorKind::EmptyPrefix, "prefixes must be nonempty");
}

u128 window_factor(std::uint64_t d) noexcept { return u128{4} * d + 1; }

std::uint64_t narrow(u128 value, const char* what) {
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorKind::Overflow, std::string(what) + " exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace

std::string_view to_string(SandwichSide side) noexcept {
  return side == SandwichSide::Lower ? "lower" : "upper";
}

std::vector<std::uint64_t> d_trace(const SequencePrefix& a, const SequencePrefix& b) {
  require_same_length(a, b);
  std::vector<std::uint64_t> d;
  d.reserve(a.size());
  std::uint64_t running = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Term x = a.terms[i];
    const Term y = b.terms[i];
    const auto gap = x > y ? static_cast<std::uint64_t>(x - y) : static_cast<std::uint64_t>(y - x);
    running = std::max(running, gap);
    d.push_back(running);
  }
  return d;
}

PairTrace pair_trace(const SequencePrefix& a, const SequencePrefix& b, const MaxRepTrace& u,
                     const MaxRepTrace& v) {
  const auto d = d_trace(a, b);
  if (u.size() != a.size() || v.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch, "traces do not match prefix lengths");
  }
  PairTrace rows;
  rows.reserve(a.size());
  Ratio w{0, 1};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t factor = narrow(window_factor(d[i]), "4d+1");
    PairTraceRow row;
    row.k = i + 1;
    row.u = u.values[i];
    row.v = v.values[i];
    row.d = d[i];
    row.lower = Ratio{row.u, factor};
    row.upper = narrow(u128{factor} * row.u, "(4d+1)u");
    if (i == 0 || row.lower > w) w = row.lower;
    row.w_running = w;
    rows.push_back(row);
  }
  return rows;
}

PairTrace pair_trace(const SequencePrefix& a, const SequencePrefix& b) {
  return pair_trace(a, b, u_trace(a), u_trace(b));
}

PairTrace pair_trace(const SequenceSpec& a, const SequenceSpec& b, std::size_t K, bool parallel) {
  if (!parallel) {
    const auto pa = materialize(a, K);
    const auto pb = materialize(b, K);
    return pair_trace(pa, pb);
  }
  auto side = [K](const SequenceSpec& spec) {
    auto prefix = materialize(spec, K);
    auto trace = u_trace(prefix);
    return std::pair{std::move(prefix), std::move(trace)};
  };
  auto fa = std::async(std::launch::async, side, std::cref(a));
  auto [pb, vb] = side(b);
  auto [pa, ua] = fa.get();
  return pair_trace(pa, pb, ua, vb);
}

std::optional<SandwichCounterexample> verify_sandwich(const PairTrace& trace) {
  for (const auto& row : trace) {
    const u128 factor = window_factor(row.d);
    if (u128{row.u} > factor * row.v) return SandwichCounterexample{row.k, SandwichSide::Lower};
    if (u128{row.v} > factor * row.u) return SandwichCounterexample{row.k, SandwichSide::Upper};
  }
  return std::nullopt;
}

std::optional<SandwichCounterexample> verify_sandwich(const SequenceSpec& a,
                                                      const SequenceSpec& b, std::size_t K) {
  return verify_sandwich(pair_trace(a, b, K));
}

std::uint64_t count_pairs_in_range(const SequencePrefix& a, std::int64_t lo, std::int64_t hi) {
  if (hi < lo || a.empty()) return 0;
  const auto& t = a.terms;
  // Ordered couples with a_i + a_j <= bound.
  auto at_most = [&t](__int128 bound) -> std::uint64_t {
    std::uint64_t count = 0;
    std::size_t j = t.size();
    for (std::size_t i = 0; i < t.size(); ++i) {
      while (j > 0 && static_cast<__int128>(t[i]) + t[j - 1] > bound) --j;
      if (j == 0) break;
      count += j;
    }
    return count;
  };
  return at_most(hi) - at_most(static_cast<__int128>(lo) - 1);
}

WindowCheckReport window_cover_check(const SequencePrefix& a, const SequencePrefix& b,
                                     std::uint64_t n) {
  require_same_length(a, b);
  WindowCheckReport report;
  report.k = a.size();
  report.n = n;
  report.d = d_trace(a, b).back();

  const __int128 lo = static_cast<__int128>(n) - 2 * static_cast<__int128>(report.d);
  const __int128 hi = static_cast<__int128>(n) + 2 * static_cast<__int128>(report.d);
  constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  if (lo < kMin || hi > kMax) throw Error(ErrorKind::Overflow, "window exceeds 64-bit range");
  report.window_lo = static_cast<std::int64_t>(lo);
  report.window_hi = static_cast<std::int64_t>(hi);

  // F(k,n) by a two-pointer scan over B.
  const auto& tb = b.terms;
  std::size_t i = 0;
  std::size_t j = tb.size();
  while (i < j) {
    const u128 s = u128(tb[i]) + u128(tb[j - 1]);
    if (s == n) {
      report.pairs.emplace_back(i + 1, j);
      if (i + 1 != j) report.pairs.emplace_back(j, i + 1);
      ++i;
      --j;
    } else if (s < n) {
      ++i;
    } else {
      --j;
    }
  }
  std::sort(report.pairs.begin(), report.pairs.end());

  for (const auto& [p, q] : report.pairs) {
    const __int128 s = static_cast<__int128>(a.term(p)) + a.term(q);
    if (s < lo || s > hi) report.offenders.emplace_back(p, q);
  }
  report.window_total = count_pairs_in_range(a, report.window_lo, report.window_hi);
  return report;
}

FiniteHorizonView finite_horizon_view(const PairTrace& trace) {
  if (trace.empty()) throw Error(ErrorKind::EmptyPrefix, "empty pair trace");
  const auto& last = trace.back();
  FiniteHorizonView view{last.k, last.d, last.u, last.v, false};
  view.holds = !verify_sandwich(PairTrace{last}).has_value();
  return view;
}

UpperClassEvidence upper_class_evidence(const SequencePrefix& a, const PairTrace& trace) {
  if (trace.empty()) throw Error(ErrorKind::EmptyPrefix, "empty pair trace");
  if (a.size() != trace.size()) {
    throw Error(ErrorKind::LengthMismatch, "prefix and trace lengths differ");
  }
  UpperClassEvidence ev;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& row = trace[i];
    if (i > 0 && !(row.w_running > trace[i - 1].w_running)) continue;
    EvidenceRecord rec;
    rec.k = row.k;
    rec.w = row.w_running;
    rec.u = row.u;
    rec.d = row.d;
    rec.witnesses = s_max(a.head(row.k)).argmax;
    ev.records.push_back(std::move(rec));
  }
  ev.final_w = trace.back().w_running;
  ev.implied_lower_bound = ev.final_w.ceil();
  ev.view = finite_horizon_view(trace);
  return ev;
}

UpperClassEvidence upper_class_evidence(const SequenceSpec& a, const SequenceSpec& b,
                                        std::size_t K) {
  const auto pa = materialize(a, K);
  const auto pb = materialize(b, K);
  return upper_class_evidence(pa, pair_trace(pa, pb));
}

}  // namespace reprfn
