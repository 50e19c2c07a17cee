// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Thresholds are fixed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "reprfn/cli.hpp"
#include "reprfn/proximity.hpp"
#include "reprfn/repfunc.hpp"
#include "reprfn/squares_oracle.hpp"

using namespace reprfn;
using reprfn::testing::random_prefix;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// A perturbed-squares spec drawn from the three growth forms.
PerturbedSquares random_perturbation(SplitMix64& rng) {
  const double c = static_cast<double>(1 + rng() % 400) / 100.0;
  const double alpha = static_cast<double>(rng() % 150) / 100.0;
  switch (rng() % 3) {
    case 0: return {GrowthSpec::constant(c), rng()};
    case 1: return {GrowthSpec::power(c, alpha), rng()};
    default: return {GrowthSpec::inv_log(c), rng()};
  }
}

Outcome squares_utrace() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = cli({"utrace", "--seq", "squares", "-K", "8"});
  const double secs = seconds_since(t0);
  const std::string expected = "k,u\n1,1\n2,2\n3,2\n4,2\n5,2\n6,2\n7,3\n8,4\n";
  return {r.status == 0 && r.out == expected && secs < 1.0,
          "u = [1,2,2,2,2,2,3,4] expected, " + std::to_string(secs) + " s (< 1 s)"};
}

Outcome jacobi_audit() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto report = cross_check(100000);
  const double secs = seconds_since(t0);
  return {report.ok() && secs < 30.0,
          std::to_string(report.mismatches.size()) + " mismatches up to 100000, " +
              std::to_string(secs) + " s (< 30 s)"};
}

Outcome engine_oracle_consistency() {
  const auto prefix = materialize(Squares{}, 1000);
  const std::uint64_t top = static_cast<std::uint64_t>(prefix.back()) + 1;
  SplitMix64 rng(3);
  std::size_t bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t n = 1 + rng() % top;
    bad += rep_count(prefix, n) != positive_ordered_count(n);
  }
  return {bad == 0, std::to_string(bad) + " of 1000 sampled n <= " + std::to_string(top) +
                        " disagree"};
}

Outcome sandwich_audit() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t failures = 0;
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"squares", "poly:1,0,1"}, {"squares", "poly:1,1,0"}, {"poly:0,1,0", "squares"}}) {
    const auto r = cli({"verify", "--seq-a", a, "--seq-b", b, "-K", "500"});
    failures += r.status != 0;
  }
  SplitMix64 rng(500);
  for (int i = 0; i < 100; ++i) {
    const SequenceSpec b = random_perturbation(rng);
    const SequenceSpec a = i % 2 == 0 ? SequenceSpec{Squares{}} : SequenceSpec{random_perturbation(rng)};
    const auto pa = materialize(a, 500);
    const auto pb = materialize(b, 500);
    const auto u = u_trace(pa);
    const auto v = u_trace(pb);
    failures += verify_sandwich(pair_trace(pa, pb, u, v)).has_value();
    failures += verify_sandwich(pair_trace(pb, pa, v, u)).has_value();
  }
  const double secs = seconds_since(t0);
  return {failures == 0 && secs < 60.0, std::to_string(failures) +
                                            " failures over 3 named + 100 perturbed pairs at K=500, " +
                                            std::to_string(secs) + " s (< 60 s)"};
}

Outcome window_covering() {
  SplitMix64 rng(200);
  std::size_t sums = 0;
  std::size_t failures = 0;
  for (int i = 0; i < 20; ++i) {
    SequencePrefix a, b;
    if (i < 10) {
      a = materialize(Squares{}, 200);
      b = materialize(random_perturbation(rng), 200);
    } else {
      a.terms = random_prefix(rng, 200, 1 + rng() % 100000);
      b.terms = random_prefix(rng, 200, 1 + rng() % 100000);
    }
    for (const auto& [n, count] : spectrum(b)) {
      const auto rep = window_cover_check(a, b, n);
      ++sums;
      failures += !rep.offenders.empty() || rep.window_total < rep.pairs_checked() ||
                  rep.pairs_checked() != count;
    }
  }
  return {failures == 0, std::to_string(failures) + " failing sums of " + std::to_string(sums) +
                             " over 20 pairs at k=200"};
}

Outcome sum_and_parity() {
  SplitMix64 rng(6);
  std::size_t failures = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t k = 1 + rng() % 300;
    const auto xs = random_prefix(rng, k, 1 + rng() % 1000000);
    const auto spec = spectrum(SequencePrefix{xs});
    failures += spec.total() != k * k;
    for (const auto& [n, c] : spec) {
      const bool half_is_term =
          n % 2 == 0 && std::binary_search(xs.begin(), xs.end(), static_cast<Term>(n / 2));
      failures += (c % 2 == 1) != half_is_term;
    }
  }
  return {failures == 0, std::to_string(failures) + " violations over 50 prefixes (k <= 300)"};
}

Outcome convolution_fast_path() {
  SplitMix64 rng(7);
  std::size_t failures = 0;
  std::uint64_t largest = 0;
  for (int i = 0; i < 25; ++i) {
    const std::size_t k = 1 + rng() % 2048;
    // Log-uniform max term; the first prefix sits exactly at 2^25.
    const std::uint64_t cap = std::uint64_t{1} << (11 + rng() % 15);
    auto xs = random_prefix(rng, k, i == 0 ? (std::uint64_t{1} << 25) : cap);
    if (i == 0) xs.back() = std::int64_t{1} << 25;
    largest = std::max(largest, static_cast<std::uint64_t>(xs.back()));
    const SequencePrefix p{xs};
    failures += !(spectrum_convolution(p) == spectrum_naive(p));
  }
  return {failures == 0, std::to_string(failures) + " of 25 prefixes differ (k <= 2048, max term " +
                             std::to_string(largest) + " <= 2^25)"};
}

Outcome covariance() {
  SplitMix64 rng(8);
  std::size_t failures = 0;
  for (int i = 0; i < 25; ++i) {
    const auto xs = random_prefix(rng, 1 + rng() % 300, 1 + rng() % 100000);
    const auto c = static_cast<Term>(rng() % 1001);
    const auto m = static_cast<Term>(1 + rng() % 10);
    std::vector<Term> shifted, dilated;
    for (auto x : xs) {
      shifted.push_back(x + c);
      dilated.push_back(m * x);
    }
    const auto base = spectrum(SequencePrefix{xs});
    const auto s_shift = spectrum(SequencePrefix{shifted});
    const auto s_dil = spectrum(SequencePrefix{dilated});
    if (s_shift.size() != base.size() || s_dil.size() != base.size()) {
      ++failures;
      continue;
    }
    for (std::size_t j = 0; j < base.size(); ++j) {
      const auto [n, cnt] = base.entries()[j];
      failures += s_shift.entries()[j] != RepSpectrum::Entry{n + 2 * static_cast<std::uint64_t>(c), cnt};
      failures += s_dil.entries()[j] != RepSpectrum::Entry{n * static_cast<std::uint64_t>(m), cnt};
    }
    failures += s_max(s_shift).value != s_max(base).value;
    failures += s_max(s_dil).value != s_max(base).value;
  }
  return {failures == 0, std::to_string(failures) + " mismatches over 25 prefixes"};
}

Outcome unboundedness_evidence() {
  const auto ev = upper_class_evidence(Squares{}, Squares{}, 18);
  for (const auto& rec : ev.records) {
    const bool at_325 = std::find(rec.witnesses.begin(), rec.witnesses.end(), 325) != rec.witnesses.end();
    if (rec.w >= Ratio{6, 1} && at_325) {
      return {true, "record w = " + std::to_string(rec.w.num) + "/" + std::to_string(rec.w.den) +
                        " at k = " + std::to_string(rec.k) + ", witnessed by sum 325"};
    }
  }
  return {false, "no record >= 6 witnessed at 325"};
}

Outcome determinism() {
  const std::vector<std::string> args{"classify", "--g", "pow:1.0,1.0", "--seed", "1", "-K", "200"};
  const auto a = cli(args);
  const auto b = cli(args);
  return {a.status == 0 && a.out == b.out && a.err == b.err && !a.out.empty(),
          std::to_string(a.out.size()) + " bytes, identical across two runs"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 squares u-trace", squares_utrace},
      {"AC2 Jacobi oracle audit", jacobi_audit},
      {"AC3 engine-oracle consistency", engine_oracle_consistency},
      {"AC4 sandwich audit", sandwich_audit},
      {"AC5 window covering", window_covering},
      {"AC6 sum rule and parity", sum_and_parity},
      {"AC7 convolution fast path", convolution_fast_path},
      {"AC8 translation/dilation covariance", covariance},
      {"AC9 unboundedness evidence", unboundedness_evidence},
      {"AC10 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
