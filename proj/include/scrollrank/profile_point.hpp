#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "scrollrank/sympoly.hpp"

namespace scrollrank {

/// Element of a graded coefficient space: an n-by-d grid of homogeneous
/// polynomials, where block (i,k) is the degree-profile[k] part of output i.
/// Coordinates are linearized with blocks (i,k) in row-major order (output
/// index outer) and polyspace order inside each block.
class ProfilePoint {
 public:
  ProfilePoint(std::vector<int> profile, int m, int n)
      : profile_(std::move(profile)), m_(m), n_(n) {
    if (profile_.empty()) throw std::invalid_argument("ProfilePoint: empty profile");
    if (m < 1 || n < 1) throw std::invalid_argument("ProfilePoint: need m,n >= 1");
    for (std::size_t k = 0; k + 1 < profile_.size(); ++k) {
      if (profile_[k] > profile_[k + 1]) {
        throw std::invalid_argument("ProfilePoint: profile must be nondecreasing");
      }
    }
    for (int a : profile_) {
      if (a < 0) throw std::invalid_argument("ProfilePoint: negative degree");
    }
    blocks_.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      std::vector<SymPoly> row;
      row.reserve(profile_.size());
      for (int a : profile_) row.emplace_back(m, a);
      blocks_.push_back(std::move(row));
    }
  }

  const std::vector<int>& profile() const { return profile_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int block_count() const { return static_cast<int>(profile_.size()); }

  const SymPoly& block(int output, int k) const {
    return blocks_.at(static_cast<std::size_t>(output)).at(static_cast<std::size_t>(k));
  }

  void set_block(int output, int k, SymPoly p) {
    auto& slot = blocks_.at(static_cast<std::size_t>(output)).at(static_cast<std::size_t>(k));
    if (p.arity() != m_ || p.degree() != profile_[static_cast<std::size_t>(k)]) {
      throw std::invalid_argument("set_block: shape mismatch");
    }
    slot = std::move(p);
  }

  void add_to_block(int output, int k, const SymPoly& p) {
    auto& slot = blocks_.at(static_cast<std::size_t>(output)).at(static_cast<std::size_t>(k));
    slot += p;
  }

  long dim() const { return space_dim(profile_, m_, n_); }

  bool is_zero() const {
    for (const auto& row : blocks_) {
      for (const auto& p : row) {
        if (!p.is_zero()) return false;
      }
    }
    return true;
  }

  /// Stacked coordinate vector in the canonical layout.
  RatVec vec() const {
    RatVec out = RatVec::Zero(dim());
    Index at = 0;
    for (int i = 0; i < n_; ++i) {
      for (int k = 0; k < block_count(); ++k) {
        const SymPoly& p = block(i, k);
        const long blk = delta_size(p.degree(), m_);
        for (const auto& [alpha, value] : p.coords()) {
          out[at + multi_index_rank(alpha)] = value;
        }
        at += blk;
      }
    }
    return out;
  }

  /// Coordinates of the degree-slice k across all outputs (output-major).
  RatVec degree_slice(int k) const {
    const long blk = delta_size(profile_.at(static_cast<std::size_t>(k)), m_);
    RatVec out = RatVec::Zero(static_cast<long>(n_) * blk);
    for (int i = 0; i < n_; ++i) {
      for (const auto& [alpha, value] : block(i, k).coords()) {
        out[static_cast<long>(i) * blk + multi_index_rank(alpha)] = value;
      }
    }
    return out;
  }

  friend bool operator==(const ProfilePoint& a, const ProfilePoint& b) {
    return a.profile_ == b.profile_ && a.m_ == b.m_ && a.n_ == b.n_ &&
           a.blocks_ == b.blocks_;
  }

 private:
  std::vector<int> profile_;
  int m_;
  int n_;
  std::vector<std::vector<SymPoly>> blocks_;
};

}  // namespace scrollrank
