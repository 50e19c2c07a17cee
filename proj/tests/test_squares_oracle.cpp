#include <doctest.h>

#include "oracles.hpp"
#include "reprfn/repfunc.hpp"
#include "reprfn/squares_oracle.hpp"

using namespace reprfn;

TEST_CASE("isqrt and perfect squares") {
  for (std::uint64_t n = 0; n < 10000; ++n) {
    const auto r = isqrt(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
  }
  CHECK(isqrt(UINT64_MAX) == 4294967295ULL);
  CHECK(isqrt(4294967295ULL * 4294967295ULL) == 4294967295ULL);
  CHECK(isqrt(4294967295ULL * 4294967295ULL - 1) == 4294967294ULL);
  CHECK(is_perfect_square(0));
  CHECK(is_perfect_square(1));
  CHECK_FALSE(is_perfect_square(2));
  CHECK(is_perfect_square(1ULL << 62));
}

TEST_CASE("divisor counts mod 4") {
  CHECK(divisor_counts_mod4(25) == DivisorCountsMod4{3, 0});
  CHECK(divisor_counts_mod4(3) == DivisorCountsMod4{1, 1});
  CHECK(divisor_counts_mod4(2) == DivisorCountsMod4{1, 0});
  CHECK(divisor_counts_mod4(1) == DivisorCountsMod4{1, 0});
  CHECK_THROWS_AS(divisor_counts_mod4(0), Error);

  for (std::uint64_t n = 1; n <= 500; ++n) {
    DivisorCountsMod4 expected;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      expected.d1 += d % 4 == 1;
      expected.d3 += d % 4 == 3;
    }
    REQUIRE(divisor_counts_mod4(n) == expected);
  }
}

TEST_CASE("r2_lattice") {
  CHECK(r2_lattice(1) == 4);
  CHECK(r2_lattice(5) == 8);
  CHECK(r2_lattice(3) == 0);
  // Direct lattice enumeration, signs and zeros included.
  for (std::int64_t n = 1; n <= 300; ++n) {
    std::uint64_t points = 0;
    for (std::int64_t x = -20; x <= 20; ++x)
      for (std::int64_t y = -20; y <= 20; ++y) points += x * x + y * y == n;
    REQUIRE(r2_lattice(static_cast<std::uint64_t>(n)) == points);
  }
}

TEST_CASE("positive_ordered_count") {
  CHECK(positive_ordered_count(25) == 2);
  CHECK(positive_ordered_count(50) == 3);
  CHECK(positive_ordered_count(1) == 0);
  CHECK(positive_ordered_count(2) == 1);
  CHECK(positive_ordered_count(325) == 6);
  CHECK(brute_positive_ordered_count(325) == 6);
  CHECK(brute_positive_ordered_count(1) == 0);
}

TEST_CASE("cross_check") {
  const auto small = cross_check(100);
  CHECK(small.ok());
  CHECK(small.rows.size() == 100);
  using Rec = std::pair<std::uint64_t, std::uint64_t>;
  std::vector<Rec> recs;
  for (const auto& r : small.records) recs.emplace_back(r.n, r.count);
  CHECK(recs == std::vector<Rec>{{2, 1}, {5, 2}, {50, 3}, {65, 4}});

  const auto mid = cross_check(400);
  CHECK(mid.ok());
  CHECK(mid.records.back().n == 325);
  CHECK(mid.records.back().count == 6);
  for (std::size_t i = 1; i < mid.records.size(); ++i) {
    CHECK(mid.records[i - 1].count < mid.records[i].count);
  }

  const auto one = cross_check(1);
  CHECK(one.ok());
  CHECK(one.records.empty());
  CHECK_THROWS_AS(cross_check(0), Error);
}

TEST_CASE("cross_check is independent of thread count") {
  const auto serial = cross_check(5000, 1);
  for (unsigned threads : {2u, 3u, 7u}) {
    const auto par = cross_check(5000, threads);
    CHECK(par.mismatches == serial.mismatches);
    REQUIRE(par.rows.size() == serial.rows.size());
    for (std::size_t i = 0; i < par.rows.size(); ++i) {
      REQUIRE(par.rows[i].count == serial.rows[i].count);
      REQUIRE(par.rows[i].is_record == serial.rows[i].is_record);
    }
  }
}

TEST_CASE("squares prefix agrees with the divisor formula") {
  const auto prefix = materialize(Squares{}, 60);
  const auto spec = spectrum_naive(prefix);
  for (std::uint64_t n = 1; n <= 3601; ++n) {
    REQUIRE(spec.count(n) == positive_ordered_count(n));
    REQUIRE(rep_count(prefix, n) == positive_ordered_count(n));
  }
}
