#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scrollrank/catalecticant.hpp"
#include "scrollrank/scroll.hpp"
#include "scrollrank/terracini.hpp"

using namespace scrollrank;

namespace {

RatVec rvec(std::initializer_list<long> xs) {
  RatVec v(static_cast<long>(xs.size()));
  long i = 0;
  for (long x : xs) v[i++] = Rat(x);
  return v;
}

bool vec_eq(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return false;
  for (long i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool vec_zero(const RatVec& a) {
  for (long i = 0; i < a.size(); ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("psi builds per-degree powers") {
  const auto f = psi(rvec({1, 1}), rvec({1, 1}), {1, 2});
  CHECK(f.block(0, 0) == power_coords(rvec({1, 1}), 1));
  CHECK(f.block(0, 1) == power_coords(rvec({1, 1}), 2));

  const auto zero = psi(rvec({3, -2}), rvec({0, 0}), {1, 2});
  CHECK(zero.is_zero());

  CHECK_THROWS_AS(psi(rvec({1, 1}), rvec({1}), {1, 2}), std::invalid_argument);
}

TEST_CASE("psi scaling identity: scaling v is absorbed by the coefficients") {
  std::mt19937_64 rng(2);
  const auto p = sample_params({1, 2, 3}, 3, 1, rng, 20);
  const Rat lambda(3);
  RatVec scaled_v = p.v * lambda;
  RatVec adjusted_c = p.c;
  Rat pw(1);
  for (int k = 0; k < 3; ++k) {
    pw *= lambda;  // lambda^{a_k} with a_k = k+1
    adjusted_c[k] = p.c[k] * pw;
  }
  CHECK(psi(scaled_v, p.c, p.profile) == psi(p.v, adjusted_c, p.profile));
}

TEST_CASE("psi_m reduces to psi for one output and is linear in w") {
  std::mt19937_64 rng(4);
  const auto p = sample_params({1, 2}, 2, 1, rng, 20);
  CHECK(psi_m(rvec({1}), p.v, p.c, p.profile) == psi(p.v, p.c, p.profile));

  const auto z = psi_m(rvec({0, 0}), p.v, p.c, p.profile);
  CHECK(z.is_zero());

  const RatVec w1 = rvec({2, -1});
  const RatVec w2 = rvec({1, 5});
  const auto lhs = psi_m(w1 + w2, p.v, p.c, p.profile);
  auto rhs = psi_m(w1, p.v, p.c, p.profile);
  const auto part = psi_m(w2, p.v, p.c, p.profile);
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) rhs.add_to_block(i, k, part.block(i, k));
  }
  CHECK(lhs == rhs);
}

TEST_CASE("psi over a single top degree is the plain power map") {
  std::mt19937_64 rng(6);
  const auto p = sample_params({4}, 3, 1, rng, 20);
  const auto f = psi(p.v, rvec({1}), {4});
  CHECK(f.block(0, 0) == power_coords(p.v, 4));
}

TEST_CASE("psi_m samples lie on the rank-one locus") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = sample_params({1, 2, 3}, 2, 1, rng, 99);
    CHECK(scroll_membership(psi(p.v, p.c, p.profile)));
  }
}

TEST_CASE("jacobian rank at a generic point is m+n+d-2") {
  std::mt19937_64 rng(10);
  const auto backend = RankBackend::prime_field();
  for (int d = 1; d <= 5; ++d) {
    std::vector<int> profile;
    for (int k = 1; k <= d; ++k) profile.push_back(k);
    for (int m = 2; m <= 6; ++m) {
      for (int n = 1; n <= 4; ++n) {
        const auto p = sample_params(profile, m, n, rng, 99);
        const long rank = rank_of(jacobian_at(p), backend);
        CHECK(rank == m + n + d - 2);
      }
    }
  }
}

TEST_CASE("jacobian example: profile (1,2,3), m=2, n=1 has rank 4") {
  std::mt19937_64 rng(12);
  const auto p = sample_params({1, 2, 3}, 2, 1, rng, 99);
  CHECK(rank_bareiss(jacobian_at(p)) == 4);
}

TEST_CASE("jacobian at zero parameters") {
  ScrollParams p;
  p.w = rvec({1});
  p.v = rvec({0, 0});
  p.c = rvec({0, 0});
  p.profile = {1, 2};
  const RatMat Z = jacobian_at(p);
  bool zero = true;
  for (long i = 0; i < Z.rows(); ++i) {
    for (long j = 0; j < Z.cols(); ++j) zero = zero && Z(i, j) == 0;
  }
  CHECK(zero);

  // A degree-0 block keeps its coefficient column even at v = 0.
  ScrollParams q;
  q.w = rvec({1});
  q.v = rvec({0, 0});
  q.c = rvec({0, 0});
  q.profile = {0, 2};
  const RatMat J = jacobian_at(q);
  CHECK(rank_bareiss(J) == 1);
  CHECK(J(0, 2) == 1);  // d/dc_1 of the constant coordinate
}

TEST_CASE("finite differences approximate the jacobian columns") {
  std::mt19937_64 rng(14);
  const auto p = sample_params({1, 2, 3}, 2, 2, rng, 9);
  const RatMat J = jacobian_at(p);
  const double h = 1e-6;

  auto point_vec = [&](const ScrollParams& params) {
    const RatVec v = psi_m(params.w, params.v, params.c, params.profile).vec();
    Eigen::VectorXd out(v.size());
    for (long i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
    return out;
  };

  const Eigen::VectorXd base = point_vec(p);
  const long cols = J.cols();
  for (long col = 0; col < cols; ++col) {
    ScrollParams q = p;
    // Column layout: [w | v | c].
    if (col < 2) {
      q.w[col] += make_rat(1, 1000000);
    } else if (col < 4) {
      q.v[col - 2] += make_rat(1, 1000000);
    } else {
      q.c[col - 4] += make_rat(1, 1000000);
    }
    const Eigen::VectorXd fd = (point_vec(q) - base) / h;
    for (long i = 0; i < J.rows(); ++i) {
      CHECK(fd[i] == doctest::Approx(J(i, col).get_d()).epsilon(1e-3).scale(1.0));
    }
  }
}

TEST_CASE("sample_params is reproducible and respects the bound") {
  std::mt19937_64 rng1(42), rng2(42);
  const auto a = sample_params({1, 2, 3}, 3, 2, rng1, 99);
  const auto b = sample_params({1, 2, 3}, 3, 2, rng2, 99);
  CHECK(vec_eq(a.v, b.v));
  CHECK(vec_eq(a.w, b.w));
  CHECK(vec_eq(a.c, b.c));
  CHECK_FALSE(vec_zero(a.v));
  CHECK_FALSE(vec_zero(a.w));
  CHECK_FALSE(vec_zero(a.c));
  for (int j = 0; j < 3; ++j) {
    CHECK(abs(a.v[j].get_num()) <= 99);
    CHECK(a.v[j].get_den() == 1);
  }
}

TEST_CASE("jacobian entries of bounded samples stay in machine range") {
  // Top degree 4 with parameters in [-99, 99]: the largest possible partial is
  // w * c * a_k * v^(a_k - 1) * v^alpha-products, far below 2^63 for m <= 12.
  std::mt19937_64 rng(20);
  const auto p = sample_params({3, 4}, 12, 1, rng, 99);
  const RatMat J = jacobian_at(p);
  Int cap = Int(99) * 99 * 4;
  for (int t = 0; t < 3; ++t) cap *= 99;
  CHECK(cap < Int("9223372036854775807"));
  for (long i = 0; i < J.rows(); ++i) {
    for (long j = 0; j < J.cols(); ++j) {
      CHECK(J(i, j).get_den() == 1);
      CHECK(abs(J(i, j).get_num()) <= cap);
    }
  }
}
