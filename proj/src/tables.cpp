#include "scrollrank/tables.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <vector>

#include "scrollrank/bounds.hpp"

namespace scrollrank {

TableKind table_kind_from_name(const std::string& name) {
  if (name == "bound") return TableKind::Bound;
  if (name == "terracini") return TableKind::Terracini;
  if (name == "dis") return TableKind::Dis;
  if (name == "dims") return TableKind::Dims;
  throw std::invalid_argument("unknown table kind: " + name);
}

const char* table_kind_name(TableKind kind) {
  switch (kind) {
    case TableKind::Bound: return "bound";
    case TableKind::Terracini: return "terracini";
    case TableKind::Dis: return "dis";
    case TableKind::Dims: return "dims";
  }
  return "?";
}

void TableSpec::validate() const {
  if (m_lo > m_hi || n_lo > n_hi) throw std::invalid_argument("table: empty range");
  if (m_lo < 1 || n_lo < 1) throw std::invalid_argument("table: ranges start at 1");
  if (d < 1) throw std::invalid_argument("table: d must be >= 1");
  if (kind == TableKind::Dims && r < 1) throw std::invalid_argument("table: dims needs r >= 1");
  backend.validate();
}

namespace {

int worker_count(std::size_t cells) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("SCROLLRANK_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned long>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  if (static_cast<std::size_t>(hw) > cells) hw = static_cast<unsigned>(cells);
  return static_cast<int>(hw);
}

std::vector<int> ladder_profile(int d) {
  std::vector<int> profile(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) profile[static_cast<std::size_t>(k)] = k + 1;
  return profile;
}

std::string cell_value(const TableSpec& spec, int m, int n, std::uint64_t cell_seed) {
  const auto star = [&](long value) {
    std::string s = std::to_string(value);
    if (value == static_cast<long>(m) * n) s += "*";
    return s;
  };
  try {
    switch (spec.kind) {
      case TableKind::Bound:
        return star(identifiability_bound(ladder_profile(spec.d), m, n));
      case TableKind::Terracini:
        return star(max_nondefective_rank(ladder_profile(spec.d), m, n, spec.backend,
                                          spec.cap, spec.trials, cell_seed, spec.bound));
      case TableKind::Dis:
        return star(dis_bound(m, n));
      case TableKind::Dims:
        return std::to_string(secant_dim_probe(ladder_profile(spec.d), m, n, spec.r,
                                               spec.trials, cell_seed, spec.backend,
                                               spec.bound)
                                  .measured_dim);
    }
  } catch (const std::invalid_argument&) {
    return "";  // bound undefined at this cell
  }
  return "";
}

}  // namespace

std::string render_table_csv(const TableSpec& spec) {
  spec.validate();
  const int m_count = spec.m_hi - spec.m_lo + 1;
  const int n_count = spec.n_hi - spec.n_lo + 1;
  const std::size_t cells = static_cast<std::size_t>(m_count) * n_count;
  std::vector<std::string> values(cells);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= cells) return;
      const int m = spec.m_lo + static_cast<int>(idx) / n_count;
      const int n = spec.n_lo + static_cast<int>(idx) % n_count;
      values[idx] = cell_value(spec, m, n, spec.seed ^ static_cast<std::uint64_t>(idx));
    }
  };

  const int workers = worker_count(cells);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  std::ostringstream csv;
  csv << "m";
  for (int n = spec.n_lo; n <= spec.n_hi; ++n) csv << "," << n;
  csv << "\n";
  for (int row = 0; row < m_count; ++row) {
    csv << (spec.m_lo + row);
    for (int col = 0; col < n_count; ++col) {
      csv << "," << values[static_cast<std::size_t>(row) * n_count + col];
    }
    csv << "\n";
  }
  return csv.str();
}

}  // namespace scrollrank
