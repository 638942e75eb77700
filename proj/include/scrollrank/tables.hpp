#pragma once

#include <cstdint>
#include <string>

#include "scrollrank/terracini.hpp"

namespace scrollrank {

enum class TableKind { Bound, Terracini, Dis, Dims };

TableKind table_kind_from_name(const std::string& name);
const char* table_kind_name(TableKind kind);

/// One table sweep over an (m, n) grid. Cells are computed concurrently with
/// per-cell seeds seed XOR cell-index; SCROLLRANK_THREADS caps the workers.
struct TableSpec {
  TableKind kind = TableKind::Bound;
  int d = 3;
  int m_lo = 2, m_hi = 8;
  int n_lo = 1, n_hi = 8;
  long r = 1;  // Dims tables only
  long cap = -1;  // Terracini tables; negative means the m*n default
  std::uint64_t seed = 0;
  int trials = 3;
  long bound = 99;
  RankBackend backend = RankBackend::prime_field();

  void validate() const;
};

/// Comma-separated table: header row carries the n values, first column the
/// m values. Rank cells equal to m*n get a '*' suffix; cells where the bound
/// is undefined are empty.
std::string render_table_csv(const TableSpec& spec);

}  // namespace scrollrank
