#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "scrollrank/bounds.hpp"

using namespace scrollrank;

namespace {

// Independent binomial oracle (Pascal's triangle over big integers).
Int pascal(long n, long k) {
  if (k < 0 || k > n) return 0;
  std::vector<Int> row{1};
  for (long i = 1; i <= n; ++i) {
    std::vector<Int> next(static_cast<std::size_t>(i) + 1, 0);
    for (long j = 0; j <= i; ++j) {
      if (j > 0) next[j] += row[j - 1];
      if (j < i) next[j] += row[j];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace

TEST_CASE("binomial matches the Pascal oracle") {
  for (long n = 0; n <= 40; ++n) {
    for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal(n, k));
  }
}

TEST_CASE("rank quotient") {
  CHECK(rank_quotient(3, 3) == make_rat(10, 3));
  CHECK(rank_quotient(2, 3) == 2);
  CHECK(rank_quotient(10, 4) == make_rat(715, 10));
  CHECK(rank_quotient(10, 4) == make_rat(pascal(13, 4), Int(10)));
}

TEST_CASE("generic Waring rank with exception policies") {
  const auto paper = AHExceptionPolicy::paper();
  CHECK(ah_generic_rank(2, 3, paper) == 2);
  CHECK(ah_generic_rank(4, 3, paper) == 6);  // ceil(20/4) + 1, listed cell
  CHECK(ah_generic_rank(3, 4, paper) == 5);  // unlisted in the printed list

  AHExceptionPolicy audited{{{3, 4}}, AHExceptionPolicy::Source::ProbeAudited};
  CHECK(ah_generic_rank(3, 4, audited) == 6);

  CHECK_THROWS_AS(ah_generic_rank(3, 2, paper), std::invalid_argument);
}

TEST_CASE("identifiability thresholds") {
  CHECK(waring_ident_limit(5, 3) == 7);
  CHECK(waring_ident_limit(4, 4) == make_rat(35, 4) - 1);  // listed drop cell
  CHECK(weak_defectivity_limit(3, 3) == 3);
  CHECK(weak_defectivity_limit(3, 4) == make_rat(15, 3));
  CHECK(joint_rank_quotient(3, 2, 3) == make_rat(5, 2));
  CHECK(joint_ident_limit(3, 2, 3) == make_rat(5, 2));
  CHECK(joint_ident_limit(5, 1, 3) == 7);
}

TEST_CASE("the joint threshold usually equals the joint quotient for several outputs") {
  // The threshold is min(joint quotient, weak-defectivity limit). For d = 3
  // the degree-3 correction makes the weak-defectivity limit the smaller of
  // the two once m is large relative to n; the first such cells on this grid
  // are (m,n) = (7,2) and (8,2). Everywhere else the quotient wins.
  std::set<std::pair<int, int>> quotient_loses;
  for (int m = 2; m <= 8; ++m) {
    for (int n = 2; n <= 8; ++n) {
      for (int d = 3; d <= 6; ++d) {
        const Rat limit = joint_ident_limit(m, n, d);
        const Rat quotient = joint_rank_quotient(m, n, d);
        CHECK(limit == std::min(quotient, weak_defectivity_limit(m, d)));
        if (limit != quotient) {
          CHECK(d == 3);
          quotient_loses.insert({m, n});
        }
      }
    }
  }
  CHECK(quotient_loses == std::set<std::pair<int, int>>{{7, 2}, {8, 2}});
}

TEST_CASE("identifiability bound") {
  CHECK(identifiability_bound({1, 2, 3}, 2, 1) == 1);
  CHECK(identifiability_bound({1, 2, 3}, 3, 2) == 4);
  CHECK(identifiability_bound({2, 3}, 5, 1) == 6);
  CHECK(identifiability_bound({1, 2, 3, 4}, 4, 2) == 8);
  CHECK_THROWS_AS(identifiability_bound({1, 2}, 3, 1), std::invalid_argument);
}

TEST_CASE("identifiability bound never exceeds the m*n cap") {
  for (int m = 2; m <= 8; ++m) {
    for (int n = 1; n <= 6; ++n) {
      for (int d = 3; d <= 6; ++d) {
        std::vector<int> profile;
        for (int k = 1; k <= d; ++k) profile.push_back(k);
        CHECK(identifiability_bound(profile, m, n) <= mn_cap(m, n));
      }
    }
  }
}

TEST_CASE("heuristic pair-count bound") {
  CHECK(dis_bound(3, 2) == 3);
  CHECK(dis_bound(2, 1) == 1);
  CHECK(dis_bound(4, 4) == 9);
  // Exhaustive check of maximality on a grid.
  for (int m = 1; m <= 7; ++m) {
    for (int n = 1; n <= 7; ++n) {
      const long r = dis_bound(m, n);
      const long lhs = static_cast<long>(m - 1) * m * (n - 1) * n;
      CHECK(2 * (r - 1) * r <= lhs);
      CHECK(2 * r * (r + 1) > lhs);
    }
  }
}

TEST_CASE("defect formula") {
  const auto a = defect_formula({1, 3}, 5, 1, 6);
  CHECK(a.defect == 1);
  CHECK(a.valid);

  const auto b = defect_formula({2, 3}, 5, 1, 4);
  CHECK(b.defect == 0);
  CHECK(b.valid);

  // Below the lowest-degree dimension the predicted defect is always zero.
  for (int m = 2; m <= 5; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const long low = static_cast<long>(n) * delta_size(1, m);
      for (long r = 1; r <= low; ++r) {
        CHECK(defect_formula({1, 2, 3}, m, n, r).defect == 0);
      }
    }
  }

  // Repeated top degree violates the hypotheses.
  CHECK_FALSE(defect_formula({3, 3}, 4, 1, 2).valid);
  // Out of range r is computed but flagged invalid.
  CHECK_FALSE(defect_formula({1, 2, 3}, 2, 1, 2).valid);
}

TEST_CASE("two-block generic rank bounds") {
  const auto big = rgen_d1d_bounds(10, 4);
  CHECK(big.lower == 85);
  CHECK(big.upper == 87);
  REQUIRE(big.exact.has_value());
  CHECK(*big.exact == 85);

  const auto mid = rgen_d1d_bounds(6, 4);
  CHECK(mid.lower == 26);
  CHECK(mid.upper == 27);
  CHECK_FALSE(mid.exact.has_value());

  CHECK_THROWS_AS(rgen_d1d_bounds(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(rgen_d1d_bounds(10, 3), std::invalid_argument);

  for (int d = 4; d <= 7; ++d) {
    for (int m = 6; m <= 30; ++m) {
      const auto bounds = rgen_d1d_bounds(m, d);
      CHECK(bounds.lower <= bounds.upper);
    }
  }
}

TEST_CASE("maximal rank bounds") {
  const auto big = rmax_bounds(10, 4);
  REQUIRE(big.ours.has_value());
  CHECK(*big.ours == 170);
  CHECK(big.bbs == 220);
  CHECK(big.naive == 715);

  const auto small = rmax_bounds(5, 3);
  CHECK_FALSE(small.ours.has_value());
  CHECK(small.bbs == 15);
  CHECK(small.naive == 35);

  // The two-block bound improves on the direct one roughly by 2/d for large m.
  const auto wide = rmax_bounds(200, 4);
  REQUIRE(wide.ours.has_value());
  const double ratio = static_cast<double>(*wide.ours) / wide.bbs.get_d();
  CHECK(ratio > 0.5 * 0.95);
  CHECK(ratio < 0.5 * 1.05);
}

TEST_CASE("partial identifiability window") {
  const auto none = partial_identifiability_range(2, 1, 5, 2);
  CHECK_FALSE(none.applies);

  const auto some = partial_identifiability_range(3, 1, 5, 2);
  CHECK(some.applies);
  CHECK(some.max_r == 6);

  const auto joint = partial_identifiability_range(3, 2, 5, 2);
  CHECK_FALSE(joint.applies);

  CHECK_THROWS_AS(partial_identifiability_range(3, 1, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(partial_identifiability_range(3, 1, 5, 5), std::invalid_argument);
}

TEST_CASE("generic rank never drops below the quotient ceiling") {
  const auto paper = AHExceptionPolicy::paper();
  for (int m = 2; m <= 8; ++m) {
    for (int d = 3; d <= 7; ++d) {
      CHECK(ah_generic_rank(m, d, paper) >= to_long(ceil_of(rank_quotient(m, d))));
    }
  }
}

TEST_CASE("ambient/cone inequalities behind the two-degree reduction") {
  for (int m = 2; m <= 30; ++m) {
    for (int d = 3; d <= 8; ++d) {
      CHECK(rank_quotient(m, d) < Rat(binomial(m + d - 2, d - 1)));
      if (static_cast<long>(m) > static_cast<long>(d - 2) * (d - 1)) {
        CHECK(Rat(binomial(m + d - 3, d - 2)) < rank_quotient(m, d));
      }
    }
  }
}

TEST_CASE("bounds report aggregates and omits correctly") {
  const auto rep = bounds_report(3, 2, 3);
  CHECK(rep.r1 == make_rat(10, 3));
  REQUIRE(rep.ident_bound.has_value());
  CHECK(*rep.ident_bound == 4);
  CHECK(rep.mn_cap == 6);
  CHECK(rep.dis_bound == 3);

  const auto low = bounds_report(2, 1, 2);
  CHECK_FALSE(low.r2.has_value());
  CHECK_FALSE(low.ident_bound.has_value());
  REQUIRE(low.omitted_reason.has_value());
  CHECK(*low.omitted_reason == "d < 3");

  const auto big = bounds_report(10, 1, 4);
  REQUIRE(big.rgen_d1d.has_value());
  CHECK(big.rgen_d1d->exact.has_value());
  CHECK(*big.rgen_d1d->exact == 85);
  REQUIRE(big.rmax.ours.has_value());
  CHECK(*big.rmax.ours == 170);
}
