#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scrollrank/multiindex.hpp"
#include "scrollrank/rational.hpp"

namespace scrollrank {

/// Homogeneous polynomial of fixed degree, stored as sparse symmetric-tensor
/// coordinates f_alpha. The monomial coefficient of u^alpha is
/// multinomial(alpha) * f_alpha; the multinomial weight enters only in
/// evaluation, so coordinates of powers of linear forms stay multiplicative.
class SymPoly {
 public:
  using CoordMap = std::map<MultiIndex, Rat, MultiIndex::PolyspaceLess>;

  SymPoly(int arity, int degree) : m_(arity), degree_(degree) {
    if (arity < 1) throw std::invalid_argument("SymPoly arity must be >= 1");
    if (degree < 0) throw std::invalid_argument("SymPoly degree must be >= 0");
  }

  int arity() const { return m_; }
  int degree() const { return degree_; }

  /// Coordinate at alpha; absent keys are zero.
  Rat coord(const MultiIndex& alpha) const {
    auto it = coords_.find(alpha);
    return it == coords_.end() ? Rat(0) : it->second;
  }

  void set_coord(const MultiIndex& alpha, Rat value) {
    check_key(alpha);
    if (value == 0) {
      coords_.erase(alpha);
    } else {
      coords_[alpha] = std::move(value);
    }
  }

  void add_coord(const MultiIndex& alpha, const Rat& value) {
    check_key(alpha);
    if (value == 0) return;
    auto [it, inserted] = coords_.emplace(alpha, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) coords_.erase(it);
    }
  }

  /// Stored (nonzero) coordinates in canonical polyspace order.
  const CoordMap& coords() const { return coords_; }

  bool is_zero() const { return coords_.empty(); }

  SymPoly& operator+=(const SymPoly& other) {
    if (other.m_ != m_ || other.degree_ != degree_) {
      throw std::invalid_argument("SymPoly shape mismatch in +=");
    }
    for (const auto& [alpha, value] : other.coords_) add_coord(alpha, value);
    return *this;
  }

  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }

  SymPoly scaled(const Rat& factor) const {
    SymPoly out(m_, degree_);
    if (factor == 0) return out;
    for (const auto& [alpha, value] : coords_) out.coords_[alpha] = factor * value;
    return out;
  }

  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.m_ == b.m_ && a.degree_ == b.degree_ && a.coords_ == b.coords_;
  }

 private:
  void check_key(const MultiIndex& alpha) const {
    if (alpha.arity() != m_ || alpha.degree() != degree_) {
      throw std::invalid_argument("coordinate index has wrong arity or degree");
    }
  }

  int m_;
  int degree_;
  CoordMap coords_;
};

/// Coordinates of the a-th power of the linear form with coefficient vector v:
/// coordinate at alpha is v^alpha.
inline SymPoly power_coords(const RatVec& v, int a) {
  const int m = static_cast<int>(v.size());
  SymPoly out(m, a);
  for (const auto& alpha : multi_index_set(a, m)) {
    Rat c(1);
    for (int j = 0; j < m && c != 0; ++j) {
      for (int t = 0; t < alpha[j]; ++t) c *= v[j];
    }
    if (c != 0) out.set_coord(alpha, c);
  }
  return out;
}

/// Exact evaluation: sum over alpha of multinomial(alpha) * f_alpha * u^alpha.
inline Rat poly_eval(const SymPoly& p, const RatVec& u) {
  if (static_cast<int>(u.size()) != p.arity()) {
    throw std::invalid_argument("poly_eval: point arity mismatch");
  }
  Rat acc(0);
  for (const auto& [alpha, value] : p.coords()) {
    Rat term(multinomial(alpha));
    term *= value;
    for (int j = 0; j < p.arity(); ++j) {
      for (int t = 0; t < alpha[j]; ++t) term *= u[j];
    }
    acc += term;
  }
  return acc;
}

/// Dimension of the direct sum of n copies of the symmetric-power spaces in
/// the degree profile: n * sum_k binomial(m + a_k - 1, a_k).
inline long space_dim(const std::vector<int>& profile, int m, int n) {
  if (profile.empty()) throw std::invalid_argument("space_dim: empty profile");
  if (m < 1 || n < 1) throw std::invalid_argument("space_dim: need m,n >= 1");
  long total = 0;
  for (int a : profile) {
    if (a < 0) throw std::invalid_argument("space_dim: negative degree");
    total += delta_size(a, m);
  }
  return static_cast<long>(n) * total;
}

}  // namespace scrollrank
