#include "scrollrank/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace scrollrank {

namespace {

Json rat_json(const Rat& x) { return Json(to_string(x)); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  return rat_from_string(j.get<std::string>());
}

RatVec vec_from_json(const Json& j) {
  RatVec out(static_cast<long>(j.size()));
  long i = 0;
  for (const auto& e : j) out[i++] = rat_from_json(e);
  return out;
}

Json vec_to_json(const RatVec& v) {
  Json out = Json::array();
  for (long i = 0; i < v.size(); ++i) out.push_back(rat_json(v[i]));
  return out;
}

Json mat_to_json(const RatMat& a) {
  Json rows = Json::array();
  for (long i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < a.cols(); ++j) row.push_back(rat_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMat mat_from_json(const Json& j, long expected_rows) {
  if (!j.is_array() || static_cast<long>(j.size()) != expected_rows) {
    throw std::invalid_argument("matrix JSON has the wrong row count");
  }
  const long cols = j.empty() ? 0 : static_cast<long>(j.at(0).size());
  RatMat out(expected_rows, cols);
  for (long i = 0; i < expected_rows; ++i) {
    const auto& row = j.at(static_cast<std::size_t>(i));
    if (static_cast<long>(row.size()) != cols) {
      throw std::invalid_argument("matrix JSON has ragged rows");
    }
    for (long c = 0; c < cols; ++c) out(i, c) = rat_from_json(row.at(static_cast<std::size_t>(c)));
  }
  return out;
}

MultiIndex alpha_from_json(const Json& j) {
  std::vector<int> e;
  for (const auto& x : j) e.push_back(x.get<int>());
  return MultiIndex(std::move(e));
}

}  // namespace

Json to_json(const SymPoly& p) {
  Json coords = Json::array();
  for (const auto& [alpha, value] : p.coords()) {
    coords.push_back(Json{{"alpha", alpha.exponents()}, {"value", rat_json(value)}});
  }
  return Json{{"m", p.arity()}, {"degree", p.degree()}, {"coords", std::move(coords)}};
}

SymPoly sympoly_from_json(const Json& j) {
  SymPoly p(j.at("m").get<int>(), j.at("degree").get<int>());
  for (const auto& entry : j.at("coords")) {
    p.add_coord(alpha_from_json(entry.at("alpha")), rat_from_json(entry.at("value")));
  }
  return p;
}

Json to_json(const ProfilePoint& p) {
  Json blocks = Json::array();
  for (int i = 0; i < p.n(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < p.block_count(); ++k) row.push_back(to_json(p.block(i, k)));
    blocks.push_back(std::move(row));
  }
  return Json{{"m", p.m()},
              {"n", p.n()},
              {"profile", p.profile()},
              {"blocks", std::move(blocks)}};
}

ProfilePoint profile_point_from_json(const Json& j) {
  ProfilePoint p(j.at("profile").get<std::vector<int>>(), j.at("m").get<int>(),
                 j.at("n").get<int>());
  const auto& blocks = j.at("blocks");
  if (static_cast<int>(blocks.size()) != p.n()) {
    throw std::invalid_argument("ProfilePoint JSON: wrong output count");
  }
  for (int i = 0; i < p.n(); ++i) {
    const auto& row = blocks.at(static_cast<std::size_t>(i));
    if (static_cast<int>(row.size()) != p.block_count()) {
      throw std::invalid_argument("ProfilePoint JSON: wrong block count");
    }
    for (int k = 0; k < p.block_count(); ++k) {
      p.set_block(i, k, sympoly_from_json(row.at(static_cast<std::size_t>(k))));
    }
  }
  return p;
}

Json to_json(const DecoupledModel& model) {
  return Json{{"m", model.m()},     {"n", model.n()},     {"d", model.d()},
              {"r", model.r()},     {"V", mat_to_json(model.V)},
              {"W", mat_to_json(model.W)}, {"C", mat_to_json(model.C)}};
}

DecoupledModel model_from_json(const Json& j) {
  DecoupledModel model;
  const int m = j.at("m").get<int>();
  const int n = j.at("n").get<int>();
  const int d = j.at("d").get<int>();
  model.V = mat_from_json(j.at("V"), m);
  model.W = mat_from_json(j.at("W"), n);
  model.C = mat_from_json(j.at("C"), d);
  model.validate();
  if (j.contains("r") && j.at("r").get<long>() != model.r()) {
    throw std::invalid_argument("model JSON: r does not match the matrices");
  }
  return model;
}

Json dense_terms_to_json(const std::vector<DenseTerm>& terms, int m, int n, int d) {
  Json arr = Json::array();
  for (const auto& t : terms) {
    arr.push_back(Json{{"output", t.output},
                       {"alpha", t.alpha.exponents()},
                       {"coeff", rat_json(t.coeff)}});
  }
  return Json{{"m", m}, {"n", n}, {"d", d}, {"terms", std::move(arr)}};
}

std::vector<DenseTerm> dense_terms_from_json(const Json& j, int& m, int& n, int& d) {
  m = j.at("m").get<int>();
  n = j.at("n").get<int>();
  d = j.at("d").get<int>();
  std::vector<DenseTerm> terms;
  for (const auto& t : j.at("terms")) {
    terms.push_back({t.at("output").get<int>(), alpha_from_json(t.at("alpha")),
                     rat_from_json(t.at("coeff"))});
  }
  return terms;
}

Json directions_to_json(const std::vector<Direction>& dirs) {
  Json arr = Json::array();
  for (const auto& dir : dirs) {
    arr.push_back(Json{{"v", vec_to_json(dir.v)}, {"w", vec_to_json(dir.w)}});
  }
  return Json{{"directions", std::move(arr)}};
}

std::vector<Direction> directions_from_json(const Json& j) {
  std::vector<Direction> out;
  for (const auto& entry : j.at("directions")) {
    out.push_back({vec_from_json(entry.at("v")), vec_from_json(entry.at("w"))});
  }
  return out;
}

Json to_json(const RecoveryReport& report) {
  return Json{{"C", mat_to_json(report.C)},
              {"unique_per_degree", report.unique_per_degree},
              {"consistent_per_degree", report.consistent_per_degree}};
}

Json to_json(const SecantProbe& probe) {
  Json j{{"profile", probe.profile},
         {"m", probe.m},
         {"n", probe.n},
         {"r", probe.r},
         {"measured_dim", probe.measured_dim},
         {"expected_dim", probe.expected_dim},
         {"defect", probe.defect},
         {"trials", probe.trials},
         {"seed", probe.seed},
         {"backend", backend_name(probe.backend.kind)}};
  if (probe.backend.prime) j["prime"] = *probe.backend.prime;
  if (probe.backend.tolerance) j["tolerance"] = *probe.backend.tolerance;
  if (probe.warning) j["warning"] = *probe.warning;
  return j;
}

Json to_json(const BoundsReport& report) {
  Json j{{"m", report.m}, {"n", report.n}, {"d", report.d}};
  j["r1"] = rat_json(report.r1);
  if (report.ah_generic_rank) j["ah_generic_rank"] = *report.ah_generic_rank;
  if (report.r2) j["r2"] = rat_json(*report.r2);
  if (report.r3) j["r3"] = rat_json(*report.r3);
  if (report.r4) j["r4"] = rat_json(*report.r4);
  if (report.r5) j["r5"] = rat_json(*report.r5);
  if (report.ident_bound) j["ident_bound"] = *report.ident_bound;
  j["mn_cap"] = report.mn_cap;
  j["dis_bound"] = report.dis_bound;
  if (report.rgen_d1d) {
    Json g{{"lower", report.rgen_d1d->lower}, {"upper", report.rgen_d1d->upper}};
    if (report.rgen_d1d->exact) g["exact"] = *report.rgen_d1d->exact;
    j["rgen_d1d"] = std::move(g);
  }
  Json rmax;
  if (report.rmax.ours) rmax["ours"] = *report.rmax.ours;
  rmax["bbs"] = report.rmax.bbs.get_str();
  rmax["naive"] = report.rmax.naive.get_str();
  j["rmax"] = std::move(rmax);
  if (report.omitted_reason) j["omitted"] = *report.omitted_reason;
  return j;
}

Json to_json(const AHAuditReport& report) {
  auto pairs_json = [](const std::set<std::pair<int, int>>& cells) {
    Json arr = Json::array();
    for (const auto& [m, d] : cells) arr.push_back(Json{{"m", m}, {"d", d}});
    return arr;
  };
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json row{{"m", e.m},
             {"d", e.d},
             {"ceil_quotient", e.ceil_quotient},
             {"probed_generic_rank", e.probed_generic_rank},
             {"defective", e.defective}};
    if (e.defective) {
      row["first_defective_r"] = e.first_defective_r;
      row["max_defect"] = e.max_defect;
    }
    entries.push_back(std::move(row));
  }
  return Json{{"m_max", report.m_max},
              {"d_max", report.d_max},
              {"seed", report.seed},
              {"entries", std::move(entries)},
              {"probe_defective", pairs_json(report.probe_defective)},
              {"printed_exceptions", pairs_json(report.printed_exceptions)},
              {"defective_but_unlisted", pairs_json(report.defective_but_unlisted)},
              {"listed_but_not_defective", pairs_json(report.listed_but_not_defective)}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace scrollrank
