#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scrollrank/bounds.hpp"
#include "scrollrank/linalg.hpp"
#include "scrollrank/profile_point.hpp"
#include "scrollrank/scroll.hpp"

namespace scrollrank {

/// Sum-of-ridge-terms model f(u) = W g(V^T u) with g_l(t) = sum_k C(k,l) t^k.
/// Column l of V is the direction of term l, column l of W its mixing vector,
/// and C holds the coefficients of the internal univariate polynomials (row k
/// is the degree-(k+1) coefficient; there is no constant row).
struct DecoupledModel {
  RatMat V;  // m x r
  RatMat W;  // n x r
  RatMat C;  // d x r

  int m() const { return static_cast<int>(V.rows()); }
  int n() const { return static_cast<int>(W.rows()); }
  int d() const { return static_cast<int>(C.rows()); }
  long r() const { return V.cols(); }

  void validate() const {
    if (V.cols() != W.cols() || V.cols() != C.cols()) {
      throw std::invalid_argument("DecoupledModel: V, W, C must share the column count");
    }
    if (V.rows() < 1 || W.rows() < 1 || C.rows() < 1) {
      throw std::invalid_argument("DecoupledModel: need m,n,d >= 1");
    }
  }
};

/// Exact evaluation W * (g_1(t_1), ..., g_r(t_r)) with t = V^T u.
inline RatVec evaluate(const DecoupledModel& model, const RatVec& u) {
  model.validate();
  if (u.size() != model.m()) throw std::invalid_argument("evaluate: point arity mismatch");
  const long r = model.r();
  const int d = model.d();
  RatVec g = RatVec::Zero(r);
  for (long l = 0; l < r; ++l) {
    Rat t(0);
    for (int j = 0; j < model.m(); ++j) t += model.V(j, l) * u[j];
    // Horner over the coefficient column (no constant term).
    Rat acc(0);
    for (int k = d - 1; k >= 0; --k) acc = acc * t + model.C(k, l);
    g[l] = acc * t;
  }
  return model.W * g;
}

/// Coordinates of the model in the graded space over degrees (1, ..., d):
/// block (i,k) = sum_l W(i,l) C(k,l) v_l^(k+1).
inline ProfilePoint embed(const DecoupledModel& model) {
  model.validate();
  std::vector<int> profile(static_cast<std::size_t>(model.d()));
  for (int k = 0; k < model.d(); ++k) profile[static_cast<std::size_t>(k)] = k + 1;
  ProfilePoint out(profile, model.m(), model.n());
  for (long l = 0; l < model.r(); ++l) {
    for (int k = 0; k < model.d(); ++k) {
      if (model.C(k, l) == 0) continue;
      const SymPoly pw = power_coords(model.V.col(l), k + 1);
      for (int i = 0; i < model.n(); ++i) {
        const Rat factor = model.W(i, l) * model.C(k, l);
        if (factor == 0) continue;
        out.add_to_block(i, k, pw.scaled(factor));
      }
    }
  }
  return out;
}

/// Random integer model with entries in [-bound, bound]. Guarantees pairwise
/// non-proportional nonzero direction columns, nonzero mixing columns, and a
/// nonzero top coefficient in every term.
inline DecoupledModel synth(int m, int n, int d, long r, std::uint64_t seed, long bound = 99) {
  if (m < 1 || n < 1 || d < 1 || r < 1) throw std::invalid_argument("synth: need all >= 1");
  if (bound < 1) throw std::invalid_argument("synth: bound must be >= 1");
  std::mt19937_64 rng(seed);
  DecoupledModel model;
  model.V = RatMat::Zero(m, r);
  model.W = RatMat::Zero(n, r);
  model.C = RatMat::Zero(d, r);

  auto proportional = [&](long l1, long l2) {
    RatMat pair(2, m);
    pair.row(0) = model.V.col(l1).transpose();
    pair.row(1) = model.V.col(l2).transpose();
    return rank_bareiss(pair) < 2;
  };

  constexpr int kMaxAttempts = 4096;
  for (long l = 0; l < r; ++l) {
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt >= kMaxAttempts) {
        throw std::invalid_argument("synth: cannot satisfy direction constraints; raise bound");
      }
      bool nonzero = false;
      for (int j = 0; j < m; ++j) {
        const long x = uniform_int(rng, -bound, bound);
        model.V(j, l) = Rat(x);
        nonzero = nonzero || x != 0;
      }
      if (!nonzero) continue;
      bool clash = false;
      for (long l2 = 0; l2 < l && !clash; ++l2) clash = proportional(l, l2);
      if (!clash) break;
    }
    for (;;) {
      bool nonzero = false;
      for (int i = 0; i < n; ++i) {
        const long x = uniform_int(rng, -bound, bound);
        model.W(i, l) = Rat(x);
        nonzero = nonzero || x != 0;
      }
      if (nonzero) break;
    }
    for (int k = 0; k < d; ++k) {
      long x = uniform_int(rng, -bound, bound);
      while (k == d - 1 && x == 0) x = uniform_int(rng, -bound, bound);
      model.C(k, l) = Rat(x);
    }
  }
  return model;
}

/// One decomposition term's known parameters: a direction and mixing vector.
struct Direction {
  RatVec v;
  RatVec w;
};

/// Per-degree linear coefficient recovery given the directions.
struct RecoveryReport {
  RatMat C;  // d x r, one solution per degree row
  std::vector<bool> unique_per_degree;
  std::vector<bool> consistent_per_degree;
};

/// Recovers the coefficient matrix degree by degree: degree slice k of the
/// point is matched against the span of vec(v_l^{a_k} (x) w_l). Each degree
/// system is solved exactly; underdetermined consistent systems return the
/// minimum-norm solution, inconsistent ones an exact least-squares witness
/// with the consistency flag cleared.
inline RecoveryReport recover_coefficients(const ProfilePoint& point,
                                           const std::vector<Direction>& directions) {
  const int m = point.m();
  const int n = point.n();
  const int d = point.block_count();
  const long r = static_cast<long>(directions.size());
  auto zero_vec = [](const RatVec& v) {
    for (long i = 0; i < v.size(); ++i) {
      if (v[i] != 0) return false;
    }
    return true;
  };
  for (const auto& dir : directions) {
    if (dir.v.size() != m || dir.w.size() != n) {
      throw std::invalid_argument("recover_coefficients: direction shape mismatch");
    }
    if (zero_vec(dir.v) || zero_vec(dir.w)) {
      throw std::invalid_argument("recover_coefficients: directions must be nonzero");
    }
  }

  RecoveryReport report;
  report.C = RatMat::Zero(d, r);
  report.unique_per_degree.assign(static_cast<std::size_t>(d), false);
  report.consistent_per_degree.assign(static_cast<std::size_t>(d), false);

  for (int k = 0; k < d; ++k) {
    const int a = point.profile()[static_cast<std::size_t>(k)];
    const long blk = delta_size(a, m);
    RatMat A(static_cast<long>(n) * blk, r);
    for (long l = 0; l < r; ++l) {
      const SymPoly pw = power_coords(directions[static_cast<std::size_t>(l)].v, a);
      RatVec pv = RatVec::Zero(blk);
      for (const auto& [alpha, value] : pw.coords()) pv[multi_index_rank(alpha)] = value;
      for (int i = 0; i < n; ++i) {
        A.block(static_cast<long>(i) * blk, l, blk, 1) =
            pv * directions[static_cast<std::size_t>(l)].w[i];
      }
    }
    const RatVec b = point.degree_slice(k);
    const ExactSolveResult sol = solve_rational(A, b);
    report.consistent_per_degree[static_cast<std::size_t>(k)] = sol.consistent;
    report.unique_per_degree[static_cast<std::size_t>(k)] = sol.unique;
    RatVec x;
    if (sol.unique) {
      x = sol.particular;
    } else if (sol.consistent) {
      x = min_norm_solution(A, b);
    } else {
      x = least_squares_min_norm(A, b);
    }
    if (x.size() == r) report.C.row(k) = x.transpose();
  }
  return report;
}

/// One monomial term of a dense polynomial map.
struct DenseTerm {
  int output = 1;  // 1-based
  MultiIndex alpha;
  Rat coeff;
};

/// Converts monomial coefficients to graded tensor coordinates over degrees
/// (1, ..., d): coordinate = coefficient / multinomial weight. Constant terms
/// and terms above degree d are rejected.
inline ProfilePoint parse_dense(const std::vector<DenseTerm>& terms, int m, int n, int d) {
  if (d < 1) throw std::invalid_argument("parse_dense: need d >= 1");
  std::vector<int> profile(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) profile[static_cast<std::size_t>(k)] = k + 1;
  ProfilePoint out(profile, m, n);
  for (const auto& term : terms) {
    if (term.alpha.arity() != m) throw std::invalid_argument("parse_dense: arity mismatch");
    const int deg = term.alpha.degree();
    if (deg == 0) throw std::invalid_argument("parse_dense: constant terms are not allowed");
    if (deg > d) throw std::invalid_argument("parse_dense: term degree exceeds d");
    if (term.output < 1 || term.output > n) {
      throw std::invalid_argument("parse_dense: output index out of range");
    }
    SymPoly blk = out.block(term.output - 1, deg - 1);
    blk.add_coord(term.alpha, term.coeff / Rat(multinomial(term.alpha)));
    out.set_block(term.output - 1, deg - 1, std::move(blk));
  }
  return out;
}

/// Inverse of parse_dense: nonzero monomial coefficients of the point.
inline std::vector<DenseTerm> dense_terms(const ProfilePoint& point) {
  std::vector<DenseTerm> out;
  for (int i = 0; i < point.n(); ++i) {
    for (int k = 0; k < point.block_count(); ++k) {
      for (const auto& [alpha, value] : point.block(i, k).coords()) {
        out.push_back({i + 1, alpha, value * Rat(multinomial(alpha))});
      }
    }
  }
  return out;
}

}  // namespace scrollrank
