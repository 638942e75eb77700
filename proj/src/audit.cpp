#include "scrollrank/audit.hpp"

#include <algorithm>

namespace scrollrank {

AHAuditReport audit_ah(int m_max, int d_max, const RankBackend& backend, int trials,
                       std::uint64_t seed, long bound) {
  if (m_max < 2 || d_max < 3) {
    throw std::invalid_argument("audit_ah: need m_max >= 2, d_max >= 3");
  }
  AHAuditReport report;
  report.m_max = m_max;
  report.d_max = d_max;
  report.seed = seed;
  report.printed_exceptions = AHExceptionPolicy::paper().exception_pairs;

  for (int m = 2; m <= m_max; ++m) {
    for (int d = 3; d <= d_max; ++d) {
      const std::vector<int> profile{d};
      const long ambient = space_dim(profile, m, 1);
      // Accumulate points past the expected filling rank so a defect-delayed
      // fill is still observed.
      const long r_cap = to_long(ceil_of(rank_quotient(m, d))) + 2 + m;
      const auto cum =
          detail::cumulative_dims(profile, m, 1, r_cap, trials, seed, backend, bound);

      AHAuditEntry entry;
      entry.m = m;
      entry.d = d;
      entry.ceil_quotient = to_long(ceil_of(rank_quotient(m, d)));
      entry.probed_generic_rank = 0;
      for (long r = 1; r <= r_cap; ++r) {
        const long measured = cum.dims[static_cast<std::size_t>(r - 1)];
        const long expected = std::min(r * m, ambient);
        if (measured < expected) {
          if (!entry.defective) entry.first_defective_r = r;
          entry.defective = true;
          entry.max_defect = std::max(entry.max_defect, expected - measured);
        }
        if (measured == ambient && entry.probed_generic_rank == 0) {
          entry.probed_generic_rank = r;
        }
      }
      if (entry.probed_generic_rank == 0) {
        throw std::runtime_error("audit_ah: probe never filled the ambient space");
      }
      if (entry.defective) report.probe_defective.insert({m, d});
      report.entries.push_back(entry);
    }
  }

  for (const auto& cell : report.probe_defective) {
    if (!report.printed_exceptions.count(cell)) report.defective_but_unlisted.insert(cell);
  }
  for (const auto& cell : report.printed_exceptions) {
    const bool in_grid =
        cell.first >= 2 && cell.first <= m_max && cell.second >= 3 && cell.second <= d_max;
    if (in_grid && !report.probe_defective.count(cell)) {
      report.listed_but_not_defective.insert(cell);
    }
  }
  return report;
}

AHExceptionPolicy audited_exception_policy(int m_max, int d_max, const RankBackend& backend,
                                           int trials, std::uint64_t seed) {
  const AHAuditReport report = audit_ah(m_max, d_max, backend, trials, seed);
  return {report.probe_defective, AHExceptionPolicy::Source::ProbeAudited};
}

}  // namespace scrollrank
