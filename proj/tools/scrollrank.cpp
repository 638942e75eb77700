// Command-line front end: closed-form bound reports, reproducible table
// sweeps, secant-dimension probes, rank-one membership tests, instance
// synthesis and coefficient recovery.
//
// Exit codes: 0 success, 1 computation error, 2 input error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scrollrank/audit.hpp"
#include "scrollrank/bounds.hpp"
#include "scrollrank/catalecticant.hpp"
#include "scrollrank/json_io.hpp"
#include "scrollrank/tables.hpp"
#include "scrollrank/terracini.hpp"

namespace sr = scrollrank;

namespace {

struct GlobalOpts {
  std::uint64_t seed = 0;
  int trials = 3;
  std::string backend = "prime-field";
  std::uint64_t prime = sr::kDefaultPrime;
  double tolerance = 1e-9;
  long bound = 99;

  sr::RankBackend rank_backend() const {
    switch (sr::backend_from_name(backend)) {
      case sr::BackendKind::ExactRational: return sr::RankBackend::exact_rational();
      case sr::BackendKind::PrimeField: return sr::RankBackend::prime_field(prime);
      case sr::BackendKind::FloatSvd: return sr::RankBackend::float_svd(tolerance);
    }
    return sr::RankBackend::prime_field(prime);
  }
};

std::vector<int> parse_profile(const std::string& text) {
  std::vector<int> out;
  std::string token;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!token.empty()) out.push_back(std::stoi(token));
      token.clear();
    } else {
      token += ch;
    }
  }
  if (out.empty()) throw std::invalid_argument("empty profile");
  return out;
}

// "2..8", "2:8" or a single value.
std::pair<int, int> parse_range(const std::string& text) {
  auto split = [&](const std::string& sep) -> std::optional<std::pair<int, int>> {
    const auto pos = text.find(sep);
    if (pos == std::string::npos) return std::nullopt;
    return std::pair<int, int>{std::stoi(text.substr(0, pos)),
                               std::stoi(text.substr(pos + sep.size()))};
  };
  if (auto r = split("..")) return *r;
  if (auto r = split(":")) return *r;
  const int v = std::stoi(text);
  return {v, v};
}

// Point files come either as graded blocks or as a dense monomial map.
sr::ProfilePoint point_from_file(const std::string& path) {
  const sr::Json j = sr::load_json_file(path);
  if (j.contains("terms")) {
    int m = 0, n = 0, d = 0;
    const auto terms = sr::dense_terms_from_json(j, m, n, d);
    return sr::parse_dense(terms, m, n, d);
  }
  return sr::profile_point_from_json(j);
}

void emit(const sr::Json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    for (const auto& [key, value] : j.items()) {
      std::cout << key << "," << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
    }
  } else {
    throw std::invalid_argument("unknown format: " + format);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded rank-one decompositions: bounds, probes, membership, recovery"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
  app.add_option("--trials", g.trials, "probe repetitions, maximum rank wins")
      ->capture_default_str();
  app.add_option("--backend", g.backend, "rank backend: prime-field, exact-rational, float-svd")
      ->capture_default_str();
  app.add_option("--prime", g.prime, "modulus for the prime-field backend")
      ->capture_default_str();
  app.add_option("--tol", g.tolerance, "relative tolerance for the float-svd backend")
      ->capture_default_str();
  app.add_option("--bound", g.bound, "sampling bound for random integer parameters")
      ->capture_default_str();

  std::string format;  // default: csv for table, json elsewhere
  app.add_option("--format", format, "output format: json or csv");

  // bounds
  int b_m = 2, b_n = 1, b_d = 3;
  std::string b_policy = "paper";
  auto* cmd_bounds = app.add_subcommand("bounds", "closed-form bound report for one (m,n,d)")->fallthrough();
  cmd_bounds->add_option("--m", b_m)->required();
  cmd_bounds->add_option("--n", b_n)->capture_default_str();
  cmd_bounds->add_option("--d", b_d)->required();
  cmd_bounds->add_option("--policy", b_policy, "exception policy: paper or probe-audited")
      ->capture_default_str();

  // table
  std::string t_kind = "bound", t_m_range = "2..8", t_n_range = "1..8";
  int t_d = 3;
  long t_r = 1, t_cap = -1;
  auto* cmd_table = app.add_subcommand("table", "CSV sweep over an (m,n) grid")->fallthrough();
  cmd_table->add_option("--kind", t_kind, "bound, terracini, dis or dims")
      ->capture_default_str();
  cmd_table->add_option("--d", t_d)->capture_default_str();
  cmd_table->add_option("--m-range", t_m_range, "inclusive, e.g. 2..8")->capture_default_str();
  cmd_table->add_option("--n-range", t_n_range, "inclusive, e.g. 1..8")->capture_default_str();
  cmd_table->add_option("--r", t_r, "rank for dims tables")->capture_default_str();
  cmd_table->add_option("--cap", t_cap, "rank cap for terracini tables (default m*n)")
      ->capture_default_str();

  // probe
  std::string p_profile;
  int p_m = 2, p_n = 1;
  long p_r = 1;
  auto* cmd_probe = app.add_subcommand("probe", "secant-dimension probe")->fallthrough();
  cmd_probe->add_option("--profile", p_profile, "comma-separated degrees, e.g. 1,2,3")
      ->required();
  cmd_probe->add_option("--m", p_m)->required();
  cmd_probe->add_option("--n", p_n)->capture_default_str();
  cmd_probe->add_option("--r", p_r)->required();

  // member
  std::string mem_file;
  bool mem_print_stacked = false;
  auto* cmd_member = app.add_subcommand("member", "rank-one membership test for a point file")->fallthrough();
  cmd_member->add_option("--point", mem_file, "ProfilePoint JSON file")->required();
  cmd_member->add_flag("--print-stacked", mem_print_stacked,
                       "also print the stacked catalecticant as CSV on stderr");

  // synth
  int s_m = 2, s_n = 1, s_d = 3;
  long s_r = 1;
  std::string s_out, s_point_out, s_dirs_out;
  auto* cmd_synth = app.add_subcommand("synth", "generate a random integer model")->fallthrough();
  cmd_synth->add_option("--m", s_m)->required();
  cmd_synth->add_option("--n", s_n)->capture_default_str();
  cmd_synth->add_option("--d", s_d)->required();
  cmd_synth->add_option("--r", s_r)->required();
  cmd_synth->add_option("--out", s_out, "write the model JSON here (default stdout)");
  cmd_synth->add_option("--point-out", s_point_out, "also write the embedded point JSON");
  cmd_synth->add_option("--directions-out", s_dirs_out, "also write the directions JSON");

  // recover
  std::string r_point, r_dirs, r_model;
  auto* cmd_recover = app.add_subcommand("recover", "per-degree coefficient recovery")->fallthrough();
  cmd_recover->add_option("--point", r_point, "ProfilePoint JSON file")->required();
  cmd_recover->add_option("--directions", r_dirs, "directions JSON file");
  cmd_recover->add_option("--model", r_model, "model JSON file to take directions from");

  // audit-ah
  int a_m_max = 5, a_d_max = 6;
  auto* cmd_audit = app.add_subcommand("audit-ah",
                                       "compare probed Waring defects with the printed "
                                       "exception list")->fallthrough();
  cmd_audit->add_option("--m-max", a_m_max)->capture_default_str();
  cmd_audit->add_option("--d-max", a_d_max)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (format.empty()) format = cmd_table->parsed() ? "csv" : "json";

  try {
    if (cmd_bounds->parsed()) {
      sr::AHExceptionPolicy policy = sr::AHExceptionPolicy::paper();
      if (b_policy == "probe-audited") {
        policy = sr::audited_exception_policy(5, 6, g.rank_backend(), g.trials, g.seed);
      } else if (b_policy != "paper") {
        throw std::invalid_argument("unknown policy: " + b_policy);
      }
      emit(sr::to_json(sr::bounds_report(b_m, b_n, b_d, policy)), format);
    } else if (cmd_table->parsed()) {
      sr::TableSpec spec;
      spec.kind = sr::table_kind_from_name(t_kind);
      spec.d = t_d;
      std::tie(spec.m_lo, spec.m_hi) = parse_range(t_m_range);
      std::tie(spec.n_lo, spec.n_hi) = parse_range(t_n_range);
      spec.r = t_r;
      spec.cap = t_cap;
      spec.seed = g.seed;
      spec.trials = g.trials;
      spec.bound = g.bound;
      spec.backend = g.rank_backend();
      if (format == "json") {
        // Same cells, wrapped for machine use.
        const std::string csv = sr::render_table_csv(spec);
        sr::Json rows = sr::Json::array();
        std::istringstream lines(csv);
        std::string line;
        while (std::getline(lines, line)) rows.push_back(line);
        emit(sr::Json{{"kind", t_kind}, {"d", spec.d}, {"csv_rows", rows}}, "json");
      } else {
        std::cout << sr::render_table_csv(spec);
      }
    } else if (cmd_probe->parsed()) {
      const auto probe = sr::secant_dim_probe(parse_profile(p_profile), p_m, p_n, p_r,
                                              g.trials, g.seed, g.rank_backend(), g.bound);
      emit(sr::to_json(probe), format);
    } else if (cmd_member->parsed()) {
      const sr::ProfilePoint point = point_from_file(mem_file);
      const sr::RatMat stacked = sr::stacked_catalecticant(point);
      if (mem_print_stacked) {
        for (long i = 0; i < stacked.rows(); ++i) {
          for (long j = 0; j < stacked.cols(); ++j) {
            std::cerr << (j ? "," : "") << sr::to_string(stacked(i, j));
          }
          std::cerr << "\n";
        }
      }
      emit(sr::Json{{"member", sr::rank_bareiss(stacked) <= 1}}, format);
    } else if (cmd_synth->parsed()) {
      const sr::DecoupledModel model = sr::synth(s_m, s_n, s_d, s_r, g.seed, g.bound);
      const sr::Json mj = sr::to_json(model);
      if (s_out.empty()) {
        emit(mj, format);
      } else {
        sr::save_json_file(s_out, mj);
      }
      if (!s_point_out.empty()) sr::save_json_file(s_point_out, sr::to_json(sr::embed(model)));
      if (!s_dirs_out.empty()) {
        std::vector<sr::Direction> dirs;
        for (long l = 0; l < model.r(); ++l) dirs.push_back({model.V.col(l), model.W.col(l)});
        sr::save_json_file(s_dirs_out, sr::directions_to_json(dirs));
      }
    } else if (cmd_recover->parsed()) {
      if (r_dirs.empty() == r_model.empty()) {
        throw std::invalid_argument("recover: pass exactly one of --directions / --model");
      }
      const sr::ProfilePoint point = point_from_file(r_point);
      std::vector<sr::Direction> dirs;
      if (!r_dirs.empty()) {
        dirs = sr::directions_from_json(sr::load_json_file(r_dirs));
      } else {
        const sr::DecoupledModel model = sr::model_from_json(sr::load_json_file(r_model));
        for (long l = 0; l < model.r(); ++l) dirs.push_back({model.V.col(l), model.W.col(l)});
      }
      emit(sr::to_json(sr::recover_coefficients(point, dirs)), format);
    } else if (cmd_audit->parsed()) {
      emit(sr::to_json(sr::audit_ah(a_m_max, a_d_max, g.rank_backend(), g.trials, g.seed,
                                    g.bound)),
           format);
    }
  } catch (const sr::Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
