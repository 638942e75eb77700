#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scrollrank/terracini.hpp"

using namespace scrollrank;

TEST_CASE("rank_of agrees with hand values under all backends") {
  RatMat id = RatMat::Identity(5, 5);
  RatMat dep(2, 2);
  dep << 1, 2, 2, 4;
  for (const auto& backend : {RankBackend::exact_rational(), RankBackend::prime_field(),
                              RankBackend::float_svd()}) {
    CHECK(rank_of(id, backend) == 5);
    CHECK(rank_of(dep, backend) == 1);
  }
}

TEST_CASE("prime-field and exact ranks agree on random integer matrices") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    RatMat M(20, 30);
    // Low-rank-ish structure plus noise keeps the ranks varied.
    const long rank_target = uniform_int(rng, 1, 12);
    RatMat A(20, rank_target), B(rank_target, 30);
    for (long i = 0; i < A.rows(); ++i) {
      for (long j = 0; j < A.cols(); ++j) A(i, j) = Rat(uniform_int(rng, -9, 9));
    }
    for (long i = 0; i < B.rows(); ++i) {
      for (long j = 0; j < B.cols(); ++j) B(i, j) = Rat(uniform_int(rng, -9, 9));
    }
    M = A * B;
    CHECK(rank_of(M, RankBackend::exact_rational()) ==
          rank_of(M, RankBackend::prime_field()));
  }
}

TEST_CASE("backend validation") {
  RankBackend broken;
  broken.kind = BackendKind::PrimeField;
  broken.prime.reset();
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
  CHECK_THROWS_AS(backend_from_name("nope"), std::invalid_argument);
  CHECK(backend_from_name("exact-rational") == BackendKind::ExactRational);
}

TEST_CASE("probe: plane cubics fill in two steps") {
  const auto probe = secant_dim_probe({3}, 3, 1, 2);
  CHECK(probe.measured_dim == 6);
  CHECK(probe.expected_dim == 6);
  CHECK(probe.defect == 0);
  CHECK_FALSE(probe.warning.has_value());
}

TEST_CASE("probe: the classical defective quartic case") {
  const auto probe = secant_dim_probe({4}, 3, 1, 5);
  CHECK(probe.measured_dim == 14);
  CHECK(probe.expected_dim == 15);
  CHECK(probe.defect == 1);
}

TEST_CASE("probe: single point of the ladder profile") {
  const auto probe = secant_dim_probe({1, 2, 3}, 2, 1, 1);
  CHECK(probe.measured_dim == 4);  // m + n + d - 2
  CHECK(probe.defect == 0);
}

TEST_CASE("probe agrees across exact and prime-field backends") {
  for (auto [profile, m] :
       std::vector<std::pair<std::vector<int>, int>>{{{3}, 3}, {{1, 2, 3}, 2}, {{1, 3}, 3}}) {
    for (long r = 1; r <= 3; ++r) {
      const auto fast = secant_dim_probe(profile, m, 1, r, 2, 5);
      const auto exact =
          secant_dim_probe(profile, m, 1, r, 2, 5, RankBackend::exact_rational());
      CHECK(fast.measured_dim == exact.measured_dim);
    }
  }
  // Multi-output slice of the probe grid.
  for (int n = 1; n <= 2; ++n) {
    for (long r = 1; r <= 4; ++r) {
      const auto fast = secant_dim_probe({1, 2, 3}, 3, n, r, 1, 7);
      const auto exact =
          secant_dim_probe({1, 2, 3}, 3, n, r, 1, 7, RankBackend::exact_rational());
      CHECK(fast.measured_dim == exact.measured_dim);
    }
  }
}

TEST_CASE("float-svd backend reproduces small probe dimensions") {
  const auto probe = secant_dim_probe({3}, 3, 1, 2, 2, 0, RankBackend::float_svd());
  CHECK(probe.measured_dim == 6);
  CHECK(secant_dim_probe({4}, 3, 1, 5, 1, 0, RankBackend::float_svd(1e-7)).measured_dim == 14);
}

TEST_CASE("measured dimension is monotone with bounded increments") {
  const std::vector<int> profile{1, 2, 3};
  const int m = 3, n = 2;
  long prev = 0;
  for (long r = 1; r <= 6; ++r) {
    const auto probe = secant_dim_probe(profile, m, n, r, 2, 9);
    CHECK(probe.measured_dim >= prev);
    CHECK(probe.measured_dim - prev <= m + n + 3 - 2);
    prev = probe.measured_dim;
  }
}

TEST_CASE("repeated degrees still give the closed-form point dimension") {
  const auto probe = secant_dim_probe({2, 2, 3}, 3, 2, 1);
  CHECK(probe.measured_dim == 6);  // m + n + d - 2
  CHECK_FALSE(probe.warning.has_value());
}

TEST_CASE("probe results are stable across seeds") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL}) {
    CHECK(secant_dim_probe({4}, 3, 1, 5, 1, seed).measured_dim == 14);
    CHECK(secant_dim_probe({3}, 3, 1, 3, 1, seed).measured_dim == 9);
  }
}

TEST_CASE("measured dimensions are seed-stable on a probe subgrid") {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 1; n <= 2; ++n) {
      for (long r = 1; r <= std::min<long>(4, static_cast<long>(m) * n); ++r) {
        const long base = secant_dim_probe({1, 2, 3}, m, n, r, 1, 100).measured_dim;
        for (std::uint64_t seed : {101ULL, 102ULL, 103ULL, 104ULL}) {
          CHECK(secant_dim_probe({1, 2, 3}, m, n, r, 1, seed).measured_dim == base);
        }
      }
    }
  }
}

TEST_CASE("max_nondefective_rank") {
  const long r = max_nondefective_rank({1, 2, 3}, 2, 1);
  CHECK(r >= 1);
  CHECK(r <= 2);  // cap defaults to m*n
  // Every rank up to the reported one must indeed be non-defective.
  for (long rr = 1; rr <= r; ++rr) {
    CHECK(secant_dim_probe({1, 2, 3}, 2, 1, rr).defect == 0);
  }

  // The cap is binding.
  CHECK(max_nondefective_rank({1, 2, 3}, 2, 1, RankBackend::prime_field(), 1) == 1);
}

TEST_CASE("generic_rank_probe on binary cubics") {
  CHECK(generic_rank_probe({3}, 2, 1) == 2);
}

TEST_CASE("degenerate profile of zero degrees triggers the warning path") {
  // All blocks constant: the direction parameters drop out entirely and the
  // single-point dimension falls below the closed form, which the probe
  // reports and substitutes.
  const auto probe = secant_dim_probe({0, 0}, 2, 2, 1);
  CHECK(probe.measured_dim == 3);
  CHECK(probe.expected_dim == 3);
  CHECK(probe.warning.has_value());
}
