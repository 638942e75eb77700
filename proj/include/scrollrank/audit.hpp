#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "scrollrank/bounds.hpp"
#include "scrollrank/terracini.hpp"

namespace scrollrank {

/// Probe summary for one (m, d) Waring cell.
struct AHAuditEntry {
  int m = 0;
  int d = 0;
  long ceil_quotient = 0;    // ceil(rank_quotient)
  long probed_generic_rank = 0;
  bool defective = false;
  long first_defective_r = 0;  // 0 when non-defective
  long max_defect = 0;
};

/// Comparison of probe-detected defective cells against the published
/// exception list.
struct AHAuditReport {
  int m_max = 0;
  int d_max = 0;
  std::uint64_t seed = 0;
  std::vector<AHAuditEntry> entries;
  std::set<std::pair<int, int>> probe_defective;
  std::set<std::pair<int, int>> printed_exceptions;
  std::set<std::pair<int, int>> defective_but_unlisted;
  std::set<std::pair<int, int>> listed_but_not_defective;
};

/// Probes every cell 2 <= m <= m_max, 3 <= d <= d_max for secant defects of
/// degree-d Waring decompositions in m variables.
AHAuditReport audit_ah(int m_max, int d_max,
                       const RankBackend& backend = RankBackend::prime_field(),
                       int trials = 3, std::uint64_t seed = 0, long bound = 99);

/// Exception policy rebuilt from the probe instead of the printed list.
AHExceptionPolicy audited_exception_policy(
    int m_max = 5, int d_max = 6,
    const RankBackend& backend = RankBackend::prime_field(), int trials = 3,
    std::uint64_t seed = 0);

}  // namespace scrollrank
