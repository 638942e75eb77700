#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scrollrank/multiindex.hpp"
#include "scrollrank/rational.hpp"

namespace scrollrank {

/// Quotient of the ambient dimension by the cone dimension for degree-d forms
/// in m variables: binomial(m+d-1, d) / m. Ceil of this is the expected
/// generic Waring rank.
inline Rat rank_quotient(int m, int d) {
  if (m < 1 || d < 1) throw std::invalid_argument("rank_quotient: need m,d >= 1");
  return make_rat(binomial(m + d - 1, d), Int(m));
}

/// Exceptional (m,d) cells where the generic Waring rank exceeds the ceiling
/// of the rank quotient by one.
struct AHExceptionPolicy {
  enum class Source { Paper, ProbeAudited };

  std::set<std::pair<int, int>> exception_pairs;
  Source source = Source::Paper;

  /// The published exception list, taken as printed.
  static AHExceptionPolicy paper() {
    return {{{3, 3}, {4, 3}, {4, 5}, {4, 6}}, Source::Paper};
  }

  bool contains(int m, int d) const { return exception_pairs.count({m, d}) > 0; }
};

/// Generic Waring rank of degree-d forms in m variables, d >= 3:
/// ceil(rank_quotient) plus one on the policy's exception cells.
inline long ah_generic_rank(int m, int d,
                            const AHExceptionPolicy& policy = AHExceptionPolicy::paper()) {
  if (d < 3) throw std::invalid_argument("ah_generic_rank: requires d >= 3");
  if (m < 1) throw std::invalid_argument("ah_generic_rank: requires m >= 1");
  long r = to_long(ceil_of(rank_quotient(m, d)));
  if (policy.contains(m, d)) r += 1;
  return r;
}

/// Waring decompositions are generically unique below this threshold.
inline Rat waring_ident_limit(int m, int d) {
  if (d < 3 || m < 2) throw std::invalid_argument("waring_ident_limit: need d >= 3, m >= 2");
  Rat r = rank_quotient(m, d);
  const bool drop = (m == 4 && d == 4) || (m == 3 && d == 6) || (m == 6 && d == 3);
  return drop ? r - 1 : r;
}

/// The degree-d Veronese is not r-weakly-defective below this threshold.
inline Rat weak_defectivity_limit(int m, int d) {
  if (d < 3 || m < 2) throw std::invalid_argument("weak_defectivity_limit: need d >= 3, m >= 2");
  Rat r = rank_quotient(m, d);
  if (d == 3) r -= make_rat(m - 2, 3);
  return r;
}

/// Dimension quotient for joint decompositions of n forms:
/// binomial(m+d-1, d) / (m+n-1).
inline Rat joint_rank_quotient(int m, int n, int d) {
  if (d < 3 || m < 2 || n < 1) {
    throw std::invalid_argument("joint_rank_quotient: need d >= 3, m >= 2, n >= 1");
  }
  return make_rat(binomial(m + d - 1, d), Int(m + n - 1));
}

/// Identifiability threshold for joint decompositions: the single-output
/// limit when n = 1, otherwise the smaller of the joint quotient and the
/// weak-defectivity limit.
inline Rat joint_ident_limit(int m, int n, int d) {
  if (n == 1) return waring_ident_limit(m, d);
  return std::min(joint_rank_quotient(m, n, d), weak_defectivity_limit(m, d));
}

/// Largest r for which decompositions over the given degree profile are
/// generically unique: min(ceil(limit) - 1, dim of the lowest-degree space)
/// times n. Requires top degree >= 3.
inline long identifiability_bound(const std::vector<int>& profile, int m, int n) {
  if (profile.empty()) throw std::invalid_argument("identifiability_bound: empty profile");
  const int a_low = profile.front();
  const int a_top = profile.back();
  if (a_top < 3) throw std::invalid_argument("identifiability_bound: top degree must be >= 3");
  if (m < 2) throw std::invalid_argument("identifiability_bound: need m >= 2");
  const long limit = to_long(ceil_of(joint_ident_limit(m, n, a_top))) - 1;
  const long low_dim = delta_size(a_low, m);
  return std::min(limit, low_dim) * n;
}

/// Hard cap: no decomposition with more terms than this can be unique.
inline long mn_cap(int m, int n) { return static_cast<long>(m) * n; }

/// Largest r with (m-1)m(n-1)n >= 2(r-1)r, the Kruskal-style heuristic cap.
inline long dis_bound(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("dis_bound: need m,n >= 1");
  const Int lhs = Int(m - 1) * m * (n - 1) * n;
  // Solve r(r-1) <= lhs/2 exactly: start from the floor of the real root and
  // adjust by the integer inequality.
  Int half = lhs / 2;
  Int r = (Int(1) + sqrt(Int(4) * half + 1)) / 2;  // mpz sqrt: floor
  while (r * (r - 1) > half) r -= 1;
  while ((r + 1) * r <= half) r += 1;
  return r < 0 ? 0 : to_long(r);
}

struct DefectFormula {
  long defect = 0;
  bool valid = false;
};

/// Predicted secant defect sum_j max(r - n*dim S^{a_j}, 0), plus whether the
/// closed formula's hypotheses hold: degrees 1 <= a_1 <= ... <= a_{d-1} < a_d,
/// a_d >= 3, m >= 2, and r <= (ceil(joint_ident_limit) - 1) * n.
inline DefectFormula defect_formula(const std::vector<int>& profile, int m, int n, long r) {
  if (profile.empty()) throw std::invalid_argument("defect_formula: empty profile");
  DefectFormula out;
  for (int a : profile) {
    const long dim = static_cast<long>(n) * delta_size(a, m);
    if (r > dim) out.defect += r - dim;
  }
  const int d = static_cast<int>(profile.size());
  bool ok = m >= 2 && r >= 1 && profile.front() >= 1 && profile.back() >= 3;
  if (d >= 2 && profile[static_cast<std::size_t>(d - 2)] >= profile.back()) ok = false;
  if (ok) {
    const long limit = to_long(ceil_of(joint_ident_limit(m, n, profile.back()))) - 1;
    ok = r <= limit * n;
  }
  out.valid = ok;
  return out;
}

struct RgenBounds {
  long lower = 0;
  long upper = 0;
  std::optional<long> exact;
};

/// Generic-rank bounds for the two-block profile (d-1, d) with a single
/// output; requires d >= 4 and m > 5. The lower bound is exact once
/// m > (d-1)^2.
inline RgenBounds rgen_d1d_bounds(int m, int d) {
  if (d < 4 || m <= 5) throw std::invalid_argument("rgen_d1d_bounds: need d >= 4, m > 5");
  const Int top = binomial(m + d - 1, d);
  const Int next = binomial(m + d - 2, d - 1);
  RgenBounds out;
  out.lower = to_long(ceil_of(make_rat(next + top, Int(m + 1))));
  const Int inner = ceil_of(make_rat(top, Int(m)));
  out.upper = to_long(ceil_of(make_rat(next + (m - 1) * inner, Int(m))));
  if (static_cast<long>(m) > static_cast<long>(d - 1) * (d - 1)) out.exact = out.lower;
  return out;
}

struct RmaxBounds {
  std::optional<long> ours;  // 2 * rgen_d1d lower bound, when its hypotheses hold
  Int bbs;                   // binomial(m+d-2, d-1)
  Int naive;                 // binomial(m+d-1, d)
};

/// Upper bounds on the maximal decomposition rank.
inline RmaxBounds rmax_bounds(int m, int d) {
  if (m < 2 || d < 1) throw std::invalid_argument("rmax_bounds: need m >= 2, d >= 1");
  RmaxBounds out;
  out.bbs = binomial(m + d - 2, d - 1);
  out.naive = binomial(m + d - 1, d);
  if (d >= 4 && static_cast<long>(m) > static_cast<long>(d - 1) * (d - 1)) {
    out.ours = 2 * rgen_d1d_bounds(m, d).lower;
  }
  return out;
}

struct PartialIdentRange {
  bool applies = false;
  long max_r = 0;
};

/// Partial-uniqueness window: when dim S^s V < joint_ident_limit, terms of
/// degree >= s are unique for all r up to n * dim S^s V.
inline PartialIdentRange partial_identifiability_range(int m, int n, int d, int s) {
  if (!(1 < s && s < d)) {
    throw std::invalid_argument("partial_identifiability_range: need 1 < s < d");
  }
  PartialIdentRange out;
  const long dim_s = delta_size(s, m);
  if (Rat(dim_s) < joint_ident_limit(m, n, d)) {
    out.applies = true;
    out.max_r = dim_s * static_cast<long>(n);
  }
  return out;
}

/// Aggregate of the closed-form quantities; members keep the compact report
/// labels used in the tables (r1..r5 in increasing specialization).
struct BoundsReport {
  int m = 0, n = 0, d = 0;
  Rat r1;                              // rank_quotient
  std::optional<long> ah_generic_rank;  // absent when d < 3
  std::optional<Rat> r2, r3, r4, r5;    // absent when d < 3
  std::optional<long> ident_bound;      // absent when d < 3
  long mn_cap = 0;
  long dis_bound = 0;
  std::optional<RgenBounds> rgen_d1d;   // present when d >= 4, m > 5
  RmaxBounds rmax;
  std::optional<std::string> omitted_reason;
};

inline BoundsReport bounds_report(int m, int n, int d,
                                  const AHExceptionPolicy& policy = AHExceptionPolicy::paper()) {
  if (m < 2 || n < 1 || d < 1) {
    throw std::invalid_argument("bounds_report: need m >= 2, n >= 1, d >= 1");
  }
  BoundsReport rep;
  rep.m = m;
  rep.n = n;
  rep.d = d;
  rep.r1 = rank_quotient(m, d);
  rep.mn_cap = mn_cap(m, n);
  rep.dis_bound = scrollrank::dis_bound(m, n);
  rep.rmax = rmax_bounds(m, d);
  if (d >= 3) {
    rep.ah_generic_rank = scrollrank::ah_generic_rank(m, d, policy);
    rep.r2 = waring_ident_limit(m, d);
    rep.r3 = weak_defectivity_limit(m, d);
    rep.r4 = joint_rank_quotient(m, n, d);
    rep.r5 = joint_ident_limit(m, n, d);
    std::vector<int> profile(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) profile[static_cast<std::size_t>(k)] = k + 1;
    rep.ident_bound = identifiability_bound(profile, m, n);
  } else {
    rep.omitted_reason = "d < 3";
  }
  if (d >= 4 && m > 5) rep.rgen_d1d = rgen_d1d_bounds(m, d);
  return rep;
}

}  // namespace scrollrank
