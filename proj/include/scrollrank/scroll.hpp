#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "scrollrank/linalg.hpp"
#include "scrollrank/profile_point.hpp"

namespace scrollrank {

/// Parameters of one rank-one point: mixing weights w (one per output),
/// direction v, and one coefficient per degree block.
struct ScrollParams {
  RatVec w;
  RatVec v;
  RatVec c;
  std::vector<int> profile;

  int n() const { return static_cast<int>(w.size()); }
  int m() const { return static_cast<int>(v.size()); }
  int d() const { return static_cast<int>(c.size()); }

  void validate() const {
    if (w.size() < 1 || v.size() < 1 || c.size() < 1) {
      throw std::invalid_argument("ScrollParams: empty parameter vector");
    }
    if (static_cast<std::size_t>(c.size()) != profile.size()) {
      throw std::invalid_argument("ScrollParams: coefficient count must match profile");
    }
    for (std::size_t k = 0; k + 1 < profile.size(); ++k) {
      if (profile[k] > profile[k + 1]) {
        throw std::invalid_argument("ScrollParams: profile must be nondecreasing");
      }
    }
    for (int a : profile) {
      if (a < 0) throw std::invalid_argument("ScrollParams: negative degree");
    }
  }
};

/// Single-output rank-one point: block k is c_k * v^{a_k}.
inline ProfilePoint psi(const RatVec& v, const RatVec& c, const std::vector<int>& profile) {
  if (static_cast<std::size_t>(c.size()) != profile.size()) {
    throw std::invalid_argument("psi: coefficient count must match profile");
  }
  if (v.size() < 1) throw std::invalid_argument("psi: empty direction");
  ProfilePoint out(profile, static_cast<int>(v.size()), 1);
  for (int k = 0; k < out.block_count(); ++k) {
    if (c[k] == 0) continue;
    out.set_block(0, k, power_coords(v, profile[static_cast<std::size_t>(k)]).scaled(c[k]));
  }
  return out;
}

/// Multi-output rank-one point: block (i,k) is w_i * c_k * v^{a_k}.
inline ProfilePoint psi_m(const RatVec& w, const RatVec& v, const RatVec& c,
                          const std::vector<int>& profile) {
  if (static_cast<std::size_t>(c.size()) != profile.size()) {
    throw std::invalid_argument("psi_m: coefficient count must match profile");
  }
  if (v.size() < 1 || w.size() < 1) throw std::invalid_argument("psi_m: empty parameter");
  ProfilePoint out(profile, static_cast<int>(v.size()), static_cast<int>(w.size()));
  for (int k = 0; k < out.block_count(); ++k) {
    if (c[k] == 0) continue;
    const SymPoly pw = power_coords(v, profile[static_cast<std::size_t>(k)]);
    for (int i = 0; i < out.n(); ++i) {
      if (w[i] == 0) continue;
      out.set_block(i, k, pw.scaled(w[i] * c[k]));
    }
  }
  return out;
}

// Scalar policies for assembling Jacobians in different arithmetic.
struct RatField {
  using value_type = Rat;
  value_type from_rat(const Rat& x) const { return x; }
  value_type from_int(long v) const { return Rat(v); }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type zero() const { return Rat(0); }
};

struct RealField {
  using value_type = double;
  value_type from_rat(const Rat& x) const { return x.get_d(); }
  value_type from_int(long v) const { return static_cast<double>(v); }
  value_type mul(value_type a, value_type b) const { return a * b; }
  value_type zero() const { return 0.0; }
};

struct ModField {
  using value_type = std::uint64_t;
  PrimeField field;
  value_type from_rat(const Rat& x) const { return field.from_rat(x); }
  value_type from_int(long v) const { return field.from_int(v); }
  value_type mul(value_type a, value_type b) const { return field.mul(a, b); }
  value_type zero() const { return 0; }
};

/// Jacobian of the rank-one parametrization at the given parameters, assembled
/// from the closed-form partials of coordinate (i, k, alpha) = w_i c_k v^alpha:
///   d/dw_j = [j == i] c_k v^alpha
///   d/dv_j = w_i c_k alpha_j v^(alpha - e_j)
///   d/dc_l = [l == k] w_i v^alpha
/// Rows follow the ProfilePoint coordinate layout. Columns are [w | v | c];
/// for a single output the w-columns are dropped (w enters only as a common
/// scale there).
template <typename Field>
Mat<typename Field::value_type> jacobian_in(const ScrollParams& params, const Field& fld) {
  using T = typename Field::value_type;
  params.validate();
  const int m = params.m();
  const int n = params.n();
  const int d = params.d();
  const long rows = space_dim(params.profile, m, n);
  const long cols = (n == 1 ? 0 : n) + m + d;
  const long vcol0 = (n == 1 ? 0 : n);
  const long ccol0 = vcol0 + m;

  std::vector<T> w(static_cast<std::size_t>(n)), v(static_cast<std::size_t>(m)),
      c(static_cast<std::size_t>(d));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = fld.from_rat(params.w[i]);
  for (int j = 0; j < m; ++j) v[static_cast<std::size_t>(j)] = fld.from_rat(params.v[j]);
  for (int k = 0; k < d; ++k) c[static_cast<std::size_t>(k)] = fld.from_rat(params.c[k]);

  // Power table v_j^t for t up to the top degree.
  const int top = params.profile.back();
  std::vector<std::vector<T>> pw(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    auto& col = pw[static_cast<std::size_t>(j)];
    col.resize(static_cast<std::size_t>(top) + 1, fld.from_int(1));
    for (int t = 1; t <= top; ++t) {
      col[static_cast<std::size_t>(t)] = fld.mul(col[static_cast<std::size_t>(t - 1)],
                                                 v[static_cast<std::size_t>(j)]);
    }
  }
  auto monomial = [&](const MultiIndex& alpha, int skip_j, int lower_by) -> T {
    T acc = fld.from_int(1);
    for (int j = 0; j < m; ++j) {
      int e = alpha[j] - (j == skip_j ? lower_by : 0);
      acc = fld.mul(acc, pw[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)]);
    }
    return acc;
  };

  Mat<T> J(rows, cols);
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < cols; ++j) J(i, j) = fld.zero();
  }

  long row = 0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < d; ++k) {
      const int a = params.profile[static_cast<std::size_t>(k)];
      for (const auto& alpha : multi_index_set(a, m)) {
        const T va = monomial(alpha, -1, 0);
        const T wc = fld.mul(w[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(k)]);
        if (n > 1) {
          J(row, i) = fld.mul(c[static_cast<std::size_t>(k)], va);
        }
        for (int j = 0; j < m; ++j) {
          if (alpha[j] == 0) continue;
          const T part = fld.mul(fld.from_int(alpha[j]), monomial(alpha, j, 1));
          J(row, vcol0 + j) = fld.mul(wc, part);
        }
        J(row, ccol0 + k) = fld.mul(w[static_cast<std::size_t>(i)], va);
        ++row;
      }
    }
  }
  return J;
}

/// Exact Jacobian over the rationals.
inline RatMat jacobian_at(const ScrollParams& params) {
  return jacobian_in(params, RatField{});
}

/// Portable bounded uniform integer draw (rejection sampling).
inline long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t reject_from =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = rng();
  while (x >= reject_from) x = rng();
  return lo + static_cast<long>(x % span);
}

/// Random integer parameters in [-bound, bound], redrawn until w, v, c are all
/// nonzero vectors. For a single output w is fixed to (1). Draw order is
/// w (when n > 1), then v, then c.
inline ScrollParams sample_params(const std::vector<int>& profile, int m, int n,
                                  std::mt19937_64& rng, long bound = 99) {
  if (bound < 1) throw std::invalid_argument("sample_params: bound must be >= 1");
  if (m < 1 || n < 1) throw std::invalid_argument("sample_params: need m,n >= 1");
  if (profile.empty()) throw std::invalid_argument("sample_params: empty profile");

  auto draw_nonzero = [&](int len) {
    RatVec out(len);
    bool any = false;
    while (!any) {
      for (int i = 0; i < len; ++i) {
        const long x = uniform_int(rng, -bound, bound);
        out[i] = Rat(x);
        any = any || x != 0;
      }
    }
    return out;
  };

  ScrollParams p;
  p.profile = profile;
  if (n == 1) {
    p.w = RatVec::Ones(1);
  } else {
    p.w = draw_nonzero(n);
  }
  p.v = draw_nonzero(m);
  p.c = draw_nonzero(static_cast<int>(profile.size()));
  return p;
}

}  // namespace scrollrank
