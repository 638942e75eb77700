#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "scrollrank/rational.hpp"

namespace scrollrank {

/// Exponent tuple of a monomial in a fixed number of variables.
class MultiIndex {
 public:
  MultiIndex() = default;

  explicit MultiIndex(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw std::invalid_argument("MultiIndex needs arity >= 1");
    for (int e : exps_) {
      if (e < 0) throw std::invalid_argument("MultiIndex entries must be nonnegative");
    }
  }

  static MultiIndex zeros(int arity) { return MultiIndex(std::vector<int>(arity, 0)); }

  int arity() const { return static_cast<int>(exps_.size()); }
  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
  int operator[](int j) const { return exps_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& exponents() const { return exps_; }

  /// This index with entry j incremented.
  MultiIndex raised(int j) const {
    auto e = exps_;
    e[static_cast<std::size_t>(j)] += 1;
    return MultiIndex(std::move(e));
  }

  /// This index with entry j decremented; entry j must be positive.
  MultiIndex lowered(int j) const {
    auto e = exps_;
    if (e[static_cast<std::size_t>(j)] == 0) {
      throw std::invalid_argument("cannot lower a zero exponent");
    }
    e[static_cast<std::size_t>(j)] -= 1;
    return MultiIndex(std::move(e));
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) {
    return !(a == b);
  }

  /// Canonical ordering of coordinate positions: lexicographically
  /// decreasing exponent tuples. Fixes every matrix row/column layout.
  struct PolyspaceLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
      return a.exps_ > b.exps_;  // lexicographic on std::vector
    }
  };

 private:
  std::vector<int> exps_;
};

/// All exponent tuples of the given degree and arity, lexicographically
/// decreasing. Length is binomial(arity + degree - 1, degree).
inline std::vector<MultiIndex> multi_index_set(int degree, int arity) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  if (arity < 1) throw std::invalid_argument("arity must be >= 1");
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(arity), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == arity - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

/// Number of exponent tuples of the given degree and arity.
inline long delta_size(int degree, int arity) {
  return to_long(binomial(arity + degree - 1, degree));
}

/// degree! / (alpha_1! ... alpha_m!)
inline Int multinomial(const MultiIndex& alpha) {
  Int r = 1;
  long partial = 0;
  for (int j = 0; j < alpha.arity(); ++j) {
    partial += alpha[j];
    r *= binomial(partial, alpha[j]);
  }
  return r;
}

/// Position of alpha within multi_index_set(alpha.degree(), alpha.arity()).
inline long multi_index_rank(const MultiIndex& alpha) {
  long pos = 0;
  int remaining = alpha.degree();
  int m = alpha.arity();
  for (int j = 0; j < m - 1; ++j) {
    // Tuples whose entry j is larger than alpha[j] come first.
    int skipped_to = remaining - alpha[j];  // entries alpha[j]+1 .. remaining
    pos += to_long(binomial(skipped_to - 1 + m - 1 - j, m - 1 - j));
    remaining -= alpha[j];
  }
  return pos;
}

}  // namespace scrollrank
