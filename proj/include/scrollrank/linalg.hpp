#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "scrollrank/rational.hpp"

namespace scrollrank {

inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;  // 2^61 - 1

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL}) {
    if (n % p == 0) return n == p;
  }
  const auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  const auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                          31ULL, 37ULL}) {
    std::uint64_t x = powmod(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s && witness; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

/// Arithmetic modulo a runtime prime < 2^62. The default Mersenne prime gets
/// a shift-based reduction; other moduli go through 128-bit division.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p), mersenne61_(p == kDefaultPrime) {
    if (p < 3 || p >= (1ULL << 62)) {
      throw std::invalid_argument("prime must satisfy 3 <= p < 2^62");
    }
    if (p != kDefaultPrime && !is_prime_u64(p)) {
      throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    }
  }

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    if (s >= p_) s -= p_;
    return s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    if (mersenne61_) {
      std::uint64_t lo = static_cast<std::uint64_t>(t) & kDefaultPrime;
      std::uint64_t hi = static_cast<std::uint64_t>(t >> 61);
      std::uint64_t s = lo + hi;
      s = (s & kDefaultPrime) + (s >> 61);
      if (s >= kDefaultPrime) s -= kDefaultPrime;
      return s;
    }
    return static_cast<std::uint64_t>(t % p_);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero in prime field");
    return pow(a, p_ - 2);
  }

  std::uint64_t from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<std::uint64_t>(r);
  }

  std::uint64_t from_rat(const Rat& x) const {
    std::uint64_t num = mpz_fdiv_ui(x.get_num().get_mpz_t(), p_);
    std::uint64_t den = mpz_fdiv_ui(x.get_den().get_mpz_t(), p_);
    if (den == 0) {
      throw std::runtime_error("prime divides a denominator; pick another prime");
    }
    return mul(num, inv(den));
  }

 private:
  std::uint64_t p_;
  bool mersenne61_;
};

/// Incremental basis of a column space over F_p. Inserted columns are reduced
/// against the stored pivots; the rank is the number of stored columns.
class FpColumnSpace {
 public:
  FpColumnSpace(PrimeField field, long rows)
      : field_(field), pivot_of_row_(static_cast<std::size_t>(rows), -1) {}

  long rows() const { return static_cast<long>(pivot_of_row_.size()); }
  long rank() const { return static_cast<long>(basis_.size()); }

  /// Reduces col in place; keeps it as a new basis column if independent.
  bool insert(std::vector<std::uint64_t>& col) {
    const long nrows = rows();
    long lead = 0;
    while (lead < nrows) {
      while (lead < nrows && col[static_cast<std::size_t>(lead)] == 0) ++lead;
      if (lead == nrows) return false;
      const int b = pivot_of_row_[static_cast<std::size_t>(lead)];
      if (b < 0) break;
      // Basis columns are normalized to a unit pivot.
      const std::uint64_t factor = col[static_cast<std::size_t>(lead)];
      const auto& bc = basis_[static_cast<std::size_t>(b)];
      for (long i = lead; i < nrows; ++i) {
        const std::uint64_t bi = bc[static_cast<std::size_t>(i)];
        if (bi != 0) {
          auto& ci = col[static_cast<std::size_t>(i)];
          ci = field_.sub(ci, field_.mul(factor, bi));
        }
      }
    }
    const std::uint64_t piv = field_.inv(col[static_cast<std::size_t>(lead)]);
    for (long i = lead; i < nrows; ++i) {
      auto& ci = col[static_cast<std::size_t>(i)];
      if (ci != 0) ci = field_.mul(ci, piv);
    }
    pivot_of_row_[static_cast<std::size_t>(lead)] = static_cast<int>(basis_.size());
    basis_.push_back(std::move(col));
    col.clear();
    return true;
  }

 private:
  PrimeField field_;
  std::vector<int> pivot_of_row_;
  std::vector<std::vector<std::uint64_t>> basis_;
};

/// Same incremental column-space basis over the rationals.
class RatColumnSpace {
 public:
  explicit RatColumnSpace(long rows)
      : pivot_of_row_(static_cast<std::size_t>(rows), -1) {}

  long rows() const { return static_cast<long>(pivot_of_row_.size()); }
  long rank() const { return static_cast<long>(basis_.size()); }

  bool insert(std::vector<Rat>& col) {
    const long nrows = rows();
    long lead = 0;
    while (lead < nrows) {
      while (lead < nrows && col[static_cast<std::size_t>(lead)] == 0) ++lead;
      if (lead == nrows) return false;
      const int b = pivot_of_row_[static_cast<std::size_t>(lead)];
      if (b < 0) break;
      const Rat factor = col[static_cast<std::size_t>(lead)];
      const auto& bc = basis_[static_cast<std::size_t>(b)];
      for (long i = lead; i < nrows; ++i) {
        const Rat& bi = bc[static_cast<std::size_t>(i)];
        if (bi != 0) col[static_cast<std::size_t>(i)] -= factor * bi;
      }
    }
    const Rat piv = col[static_cast<std::size_t>(lead)];
    for (long i = lead; i < nrows; ++i) {
      auto& ci = col[static_cast<std::size_t>(i)];
      if (ci != 0) ci /= piv;
    }
    pivot_of_row_[static_cast<std::size_t>(lead)] = static_cast<int>(basis_.size());
    basis_.push_back(std::move(col));
    col.clear();
    return true;
  }

 private:
  std::vector<int> pivot_of_row_;
  std::vector<std::vector<Rat>> basis_;
};

/// Exact rank by fraction-free elimination: per-row denominators are cleared,
/// then Bareiss steps keep every intermediate value an integer.
inline long rank_bareiss(const RatMat& M) {
  const long rows = M.rows();
  const long cols = M.cols();
  if (rows == 0 || cols == 0) return 0;

  std::vector<std::vector<Int>> A(static_cast<std::size_t>(rows));
  for (long i = 0; i < rows; ++i) {
    Int lcm = 1;
    for (long j = 0; j < cols; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), M(i, j).get_den().get_mpz_t());
    }
    auto& row = A[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(cols));
    for (long j = 0; j < cols; ++j) {
      const Rat& x = M(i, j);
      row[static_cast<std::size_t>(j)] = x.get_num() * (lcm / x.get_den());
    }
  }

  long rank = 0;
  Int prev = 1;
  for (long step = 0; step < std::min(rows, cols); ++step) {
    long pi = -1, pj = -1;
    for (long i = step; i < rows && pi < 0; ++i) {
      for (long j = step; j < cols; ++j) {
        if (A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) break;
    std::swap(A[static_cast<std::size_t>(step)], A[static_cast<std::size_t>(pi)]);
    if (pj != step) {
      for (long i = 0; i < rows; ++i) {
        std::swap(A[static_cast<std::size_t>(i)][static_cast<std::size_t>(step)],
                  A[static_cast<std::size_t>(i)][static_cast<std::size_t>(pj)]);
      }
    }
    const Int pivot = A[static_cast<std::size_t>(step)][static_cast<std::size_t>(step)];
    for (long i = step + 1; i < rows; ++i) {
      auto& ai = A[static_cast<std::size_t>(i)];
      const auto& as = A[static_cast<std::size_t>(step)];
      const Int head = ai[static_cast<std::size_t>(step)];
      for (long j = step + 1; j < cols; ++j) {
        Int t = pivot * ai[static_cast<std::size_t>(j)] - head * as[static_cast<std::size_t>(j)];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        ai[static_cast<std::size_t>(j)] = t;
      }
      ai[static_cast<std::size_t>(step)] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

/// Rank over F_p after reducing every rational entry mod p.
inline long rank_mod(const RatMat& M, const PrimeField& field) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  FpColumnSpace space(field, M.rows());
  std::vector<std::uint64_t> col(static_cast<std::size_t>(M.rows()));
  for (long j = 0; j < M.cols(); ++j) {
    for (long i = 0; i < M.rows(); ++i) {
      col[static_cast<std::size_t>(i)] = field.from_rat(M(i, j));
    }
    std::vector<std::uint64_t> tmp = col;
    space.insert(tmp);
  }
  return space.rank();
}

/// Numerical rank: singular values above tolerance * largest.
inline long rank_svd(const Eigen::MatrixXd& M, double tolerance) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(M);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) return 0;
  const double cut = tolerance * sv[0];
  long r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > cut) ++r;
  }
  return r;
}

struct ExactSolveResult {
  bool consistent = false;
  bool unique = false;
  long rank = 0;
  RatVec particular;  // free variables set to zero; valid iff consistent
};

/// Row-reduces [A | b] exactly. Returns rank(A), consistency, uniqueness and
/// the particular solution with all free variables at zero.
inline ExactSolveResult solve_rational(const RatMat& A, const RatVec& b) {
  const long rows = A.rows();
  const long cols = A.cols();
  if (b.size() != rows) throw std::invalid_argument("solve_rational: size mismatch");

  RatMat T(rows, cols + 1);
  if (cols > 0) T.leftCols(cols) = A;
  T.col(cols) = b;

  std::vector<long> pivot_col;
  long row = 0;
  for (long col = 0; col < cols && row < rows; ++col) {
    long p = -1;
    for (long i = row; i < rows; ++i) {
      if (T(i, col) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    T.row(row).swap(T.row(p));
    const Rat piv = T(row, col);
    for (long j = col; j <= cols; ++j) T(row, j) /= piv;
    for (long i = 0; i < rows; ++i) {
      if (i == row || T(i, col) == 0) continue;
      const Rat f = T(i, col);
      for (long j = col; j <= cols; ++j) T(i, j) -= f * T(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }

  ExactSolveResult out;
  out.rank = static_cast<long>(pivot_col.size());
  out.consistent = true;
  for (long i = out.rank; i < rows; ++i) {
    if (T(i, cols) != 0) {
      out.consistent = false;
      break;
    }
  }
  out.unique = out.consistent && out.rank == cols;
  if (out.consistent) {
    out.particular = RatVec::Zero(cols);
    for (long k = 0; k < out.rank; ++k) out.particular[pivot_col[static_cast<std::size_t>(k)]] = T(k, cols);
  }
  return out;
}

/// Minimum-norm solution of a consistent system: x = A^T z with (A A^T) z = b.
inline RatVec min_norm_solution(const RatMat& A, const RatVec& b) {
  const RatMat G = A * A.transpose();
  ExactSolveResult s = solve_rational(G, b);
  if (!s.consistent) {
    throw std::invalid_argument("min_norm_solution: system is inconsistent");
  }
  return A.transpose() * s.particular;
}

/// Exact least squares: minimum-norm minimizer of |A x - b|, via the normal
/// equations. Coincides with min_norm_solution when the system is consistent.
inline RatVec least_squares_min_norm(const RatMat& A, const RatVec& b) {
  const RatMat N = A.transpose() * A;
  const RatVec rhs = A.transpose() * b;
  // Minimizers solve N x = rhs (always consistent); pick the minimum-norm one.
  return min_norm_solution(N, rhs);
}

/// All 2x2 minors, row-major over ordered row pairs then ordered column pairs.
inline std::vector<Rat> minors_2x2(const RatMat& S) {
  if (S.rows() < 2) throw std::invalid_argument("minors_2x2: need at least 2 rows");
  std::vector<Rat> out;
  for (long r1 = 0; r1 < S.rows(); ++r1) {
    for (long r2 = r1 + 1; r2 < S.rows(); ++r2) {
      for (long c1 = 0; c1 < S.cols(); ++c1) {
        for (long c2 = c1 + 1; c2 < S.cols(); ++c2) {
          out.push_back(S(r1, c1) * S(r2, c2) - S(r1, c2) * S(r2, c1));
        }
      }
    }
  }
  return out;
}

}  // namespace scrollrank
