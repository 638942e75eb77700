#pragma once

#include <stdexcept>
#include <vector>

#include "scrollrank/linalg.hpp"
#include "scrollrank/profile_point.hpp"

namespace scrollrank {

/// First catalecticant of a degree-s form: rows are the variables, columns the
/// degree-(s-1) multi-indices in canonical order, entry (j, beta) the source
/// coordinate at beta + e_j.
struct CatalecticantMatrix {
  RatMat entries;
  std::vector<MultiIndex> columns;
};

inline CatalecticantMatrix catalecticant(const SymPoly& p) {
  if (p.degree() < 1) {
    throw std::invalid_argument("catalecticant: undefined for degree-0 forms");
  }
  const int m = p.arity();
  CatalecticantMatrix out;
  out.columns = multi_index_set(p.degree() - 1, m);
  out.entries = RatMat::Zero(m, static_cast<long>(out.columns.size()));
  for (long col = 0; col < out.entries.cols(); ++col) {
    const MultiIndex& beta = out.columns[static_cast<std::size_t>(col)];
    for (int j = 0; j < m; ++j) {
      Rat v = p.coord(beta.raised(j));
      if (v != 0) out.entries(j, col) = std::move(v);
    }
  }
  return out;
}

/// Horizontal concatenation of the catalecticants of every block of a
/// single-output point. Blocks of degree 0 have no catalecticant and are
/// rejected.
inline RatMat stacked_catalecticant(const ProfilePoint& f) {
  if (f.n() != 1) {
    throw std::invalid_argument("stacked_catalecticant: single-output points only");
  }
  for (int a : f.profile()) {
    if (a < 1) {
      throw std::invalid_argument("stacked_catalecticant: profile degrees must be >= 1");
    }
  }
  long cols = 0;
  for (int a : f.profile()) cols += delta_size(a - 1, f.m());
  RatMat out(f.m(), cols);
  long at = 0;
  for (int k = 0; k < f.block_count(); ++k) {
    const CatalecticantMatrix cat = catalecticant(f.block(0, k));
    out.middleCols(at, cat.entries.cols()) = cat.entries;
    at += cat.entries.cols();
  }
  return out;
}

/// Exact determinantal membership test for the rank-one locus: true iff the
/// stacked catalecticant has rank at most 1.
inline bool scroll_membership(const ProfilePoint& f) {
  return rank_bareiss(stacked_catalecticant(f)) <= 1;
}

}  // namespace scrollrank
