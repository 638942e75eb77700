#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "scrollrank/linalg.hpp"
#include "scrollrank/scroll.hpp"

namespace scrollrank {

enum class BackendKind { ExactRational, PrimeField, FloatSvd };

inline const char* backend_name(BackendKind k) {
  switch (k) {
    case BackendKind::ExactRational: return "exact-rational";
    case BackendKind::PrimeField: return "prime-field";
    case BackendKind::FloatSvd: return "float-svd";
  }
  return "?";
}

inline BackendKind backend_from_name(const std::string& s) {
  if (s == "exact-rational") return BackendKind::ExactRational;
  if (s == "prime-field") return BackendKind::PrimeField;
  if (s == "float-svd") return BackendKind::FloatSvd;
  throw std::invalid_argument("unknown backend: " + s);
}

/// How matrix ranks are computed. The prime-field backend is exact with
/// overwhelming probability on random integer matrices and far faster than
/// rational elimination; the exact backend is the audit path.
struct RankBackend {
  BackendKind kind = BackendKind::PrimeField;
  std::optional<std::uint64_t> prime;   // required iff kind == PrimeField
  std::optional<double> tolerance;      // required iff kind == FloatSvd

  static RankBackend exact_rational() { return {BackendKind::ExactRational, {}, {}}; }
  static RankBackend prime_field(std::uint64_t p = kDefaultPrime) {
    return {BackendKind::PrimeField, p, {}};
  }
  static RankBackend float_svd(double tol = 1e-9) {
    return {BackendKind::FloatSvd, {}, tol};
  }

  void validate() const {
    if (kind == BackendKind::PrimeField && !prime) {
      throw std::invalid_argument("prime-field backend needs a prime");
    }
    if (kind == BackendKind::FloatSvd && !tolerance) {
      throw std::invalid_argument("float-svd backend needs a tolerance");
    }
  }
};

inline long rank_of(const RatMat& M, const RankBackend& backend) {
  backend.validate();
  if (M.size() == 0) return 0;
  switch (backend.kind) {
    case BackendKind::ExactRational:
      return rank_bareiss(M);
    case BackendKind::PrimeField:
      return rank_mod(M, PrimeField(*backend.prime));
    case BackendKind::FloatSvd: {
      Eigen::MatrixXd D(M.rows(), M.cols());
      for (long i = 0; i < M.rows(); ++i) {
        for (long j = 0; j < M.cols(); ++j) D(i, j) = M(i, j).get_d();
      }
      return rank_svd(D, *backend.tolerance);
    }
  }
  return 0;
}

/// Result of one secant-dimension measurement.
struct SecantProbe {
  std::vector<int> profile;
  int m = 0;
  int n = 0;
  long r = 0;
  long measured_dim = 0;
  long expected_dim = 0;
  long defect = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  RankBackend backend;
  std::optional<std::string> warning;
};

namespace detail {

/// Tangent-space accumulator for one trial: appends the Jacobian columns of
/// successive sample points and tracks the rank of their span.
class TangentAccumulator {
 public:
  TangentAccumulator(long rows, const RankBackend& backend) {
    backend.validate();
    switch (backend.kind) {
      case BackendKind::PrimeField:
        state_.emplace<FpState>(FpState{ModField{PrimeField(*backend.prime)},
                                        FpColumnSpace(PrimeField(*backend.prime), rows)});
        break;
      case BackendKind::ExactRational:
        state_.emplace<RatColumnSpace>(rows);
        break;
      case BackendKind::FloatSvd:
        state_.emplace<FloatState>(FloatState{Eigen::MatrixXd(rows, 0), *backend.tolerance});
        break;
    }
  }

  long add_point(const ScrollParams& p) {
    if (auto* fp = std::get_if<FpState>(&state_)) {
      Mat<std::uint64_t> J = jacobian_in(p, fp->field);
      for (long j = 0; j < J.cols(); ++j) {
        std::vector<std::uint64_t> col(static_cast<std::size_t>(J.rows()));
        for (long i = 0; i < J.rows(); ++i) col[static_cast<std::size_t>(i)] = J(i, j);
        fp->space.insert(col);
      }
      return fp->space.rank();
    }
    if (auto* ex = std::get_if<RatColumnSpace>(&state_)) {
      RatMat J = jacobian_at(p);
      for (long j = 0; j < J.cols(); ++j) {
        std::vector<Rat> col(static_cast<std::size_t>(J.rows()));
        for (long i = 0; i < J.rows(); ++i) col[static_cast<std::size_t>(i)] = J(i, j);
        ex->insert(col);
      }
      return ex->rank();
    }
    auto& fl = std::get<FloatState>(state_);
    Eigen::MatrixXd J = jacobian_in(p, RealField{});
    Eigen::MatrixXd grown(fl.cols.rows(), fl.cols.cols() + J.cols());
    grown << fl.cols, J;
    fl.cols = std::move(grown);
    return rank();
  }

  long rank() const {
    if (const auto* fp = std::get_if<FpState>(&state_)) return fp->space.rank();
    if (const auto* ex = std::get_if<RatColumnSpace>(&state_)) return ex->rank();
    const auto& fl = std::get<FloatState>(state_);
    return rank_svd(fl.cols, fl.tolerance);
  }

 private:
  struct FpState {
    ModField field;
    FpColumnSpace space;
  };
  struct FloatState {
    Eigen::MatrixXd cols;
    double tolerance;
  };
  std::variant<std::monostate, FpState, RatColumnSpace, FloatState> state_;
};

/// Measured span dimensions for 1..r_max accumulated points, maximized over
/// trials. Also reports the best single-point dimension (cone dimension).
struct CumulativeDims {
  std::vector<long> dims;  // dims[r-1] = measured dimension with r points
  long point_dim = 0;
};

inline CumulativeDims cumulative_dims(const std::vector<int>& profile, int m, int n,
                                      long r_max, int trials, std::uint64_t seed,
                                      const RankBackend& backend, long bound = 99) {
  if (r_max < 1) throw std::invalid_argument("cumulative_dims: need r >= 1");
  if (trials < 1) throw std::invalid_argument("cumulative_dims: need trials >= 1");
  const long rows = space_dim(profile, m, n);
  CumulativeDims out;
  out.dims.assign(static_cast<std::size_t>(r_max), 0);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    TangentAccumulator acc(rows, backend);
    for (long l = 0; l < r_max; ++l) {
      const long rk = acc.add_point(sample_params(profile, m, n, rng, bound));
      auto& best = out.dims[static_cast<std::size_t>(l)];
      best = std::max(best, rk);
    }
    out.point_dim = std::max(out.point_dim, out.dims[0]);
  }
  return out;
}

/// Closed-form cone dimension of the rank-one locus: m + n + d - 2 parameters
/// net of the two scaling redundancies (one for a single output).
inline long cone_dim_closed_form(int m, int n, int d) { return m + n + d - 2; }

}  // namespace detail

/// Measures dim of the span of r generic tangent spaces, the probe behind all
/// dimension/defect questions. The expected dimension is
/// min(r * (m+n+d-2), ambient); if the single-point probe disagrees with the
/// closed-form cone dimension, the measured value is used and a warning set.
inline SecantProbe secant_dim_probe(const std::vector<int>& profile, int m, int n, long r,
                                    int trials = 3, std::uint64_t seed = 0,
                                    const RankBackend& backend = RankBackend::prime_field(),
                                    long bound = 99) {
  if (r < 1) throw std::invalid_argument("secant_dim_probe: need r >= 1");
  const long ambient = space_dim(profile, m, n);
  const auto cum = detail::cumulative_dims(profile, m, n, r, trials, seed, backend, bound);

  SecantProbe probe;
  probe.profile = profile;
  probe.m = m;
  probe.n = n;
  probe.r = r;
  probe.trials = trials;
  probe.seed = seed;
  probe.backend = backend;
  probe.measured_dim = cum.dims.back();

  const long closed = detail::cone_dim_closed_form(m, n, static_cast<int>(profile.size()));
  long cone = std::min(closed, ambient);
  if (cum.point_dim != cone) {
    cone = cum.point_dim;
    probe.warning = "single-point dimension " + std::to_string(cum.point_dim) +
                    " differs from closed form " + std::to_string(closed) +
                    "; expected dimension uses the measured value";
  }
  probe.expected_dim = std::min(r * cone, ambient);
  probe.defect = probe.expected_dim - probe.measured_dim;
  return probe;
}

/// Measured span dimensions for every rank 1..r_max in one accumulation pass
/// (the r points of rank r are the first r sample points of the stream).
inline std::vector<long> secant_dim_profile(const std::vector<int>& profile, int m, int n,
                                            long r_max, int trials = 3, std::uint64_t seed = 0,
                                            const RankBackend& backend = RankBackend::prime_field(),
                                            long bound = 99) {
  return detail::cumulative_dims(profile, m, n, r_max, trials, seed, backend, bound).dims;
}

/// Largest r <= cap whose probes report no defect for any r' <= r
/// (0 when already defective at r = 1). cap < 1 means the default cap m*n.
inline long max_nondefective_rank(const std::vector<int>& profile, int m, int n,
                                  const RankBackend& backend = RankBackend::prime_field(),
                                  long cap = -1, int trials = 3, std::uint64_t seed = 0,
                                  long bound = 99) {
  if (cap < 1) cap = static_cast<long>(m) * n;
  const long ambient = space_dim(profile, m, n);
  const auto cum = detail::cumulative_dims(profile, m, n, cap, trials, seed, backend, bound);
  // Equals min(m+n+d-2, ambient) except on degenerate profiles, where the
  // measured single-point dimension is the honest cone dimension.
  const long cone = cum.point_dim;
  for (long r = 1; r <= cap; ++r) {
    const long expected = std::min(r * cone, ambient);
    if (cum.dims[static_cast<std::size_t>(r - 1)] < expected) return r - 1;
  }
  return cap;
}

/// Smallest r whose measured span fills the ambient space. Span dimensions
/// grow strictly until saturation, so the ascent terminates.
inline long generic_rank_probe(const std::vector<int>& profile, int m, int n,
                               const RankBackend& backend = RankBackend::prime_field(),
                               int trials = 3, std::uint64_t seed = 0, long bound = 99) {
  const long ambient = space_dim(profile, m, n);
  const long hard_cap = 2 * ambient + 8;
  long best = -1;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    detail::TangentAccumulator acc(ambient, backend);
    for (long l = 1; l <= hard_cap; ++l) {
      if (acc.add_point(sample_params(profile, m, n, rng, bound)) == ambient) {
        best = best < 0 ? l : std::min(best, l);
        break;
      }
      if (best > 0 && l >= best) break;  // cannot improve on an earlier trial
    }
  }
  if (best < 0) {
    throw std::runtime_error("generic_rank_probe: span never filled the ambient space");
  }
  return best;
}

}  // namespace scrollrank
