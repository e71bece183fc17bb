// cdquench: defect statistics for digitized TFIM quenches.
//
// Subcommands:
//   agp      alpha1(lambda) tables for a lattice
//   exact1d  free-fermion cumulant sweeps for the periodic chain
//   circuit  digitized quench on a statevector, sampled or exact stats
//
// Every command writes a manifest JSON next to its outputs so a run is
// reproducible from the manifest alone. Exit codes: 0 success, 2 usage
// error, 3 capacity error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cdquench/agp.hpp"
#include "cdquench/circuit.hpp"
#include "cdquench/errors.hpp"
#include "cdquench/exact1d.hpp"
#include "cdquench/lattice.hpp"
#include "cdquench/statevector.hpp"
#include "cdquench/stats.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonOpts {
  std::string out_dir = ".";
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out", opts.out_dir, "Output directory")
      ->capture_default_str();
  cmd->add_option("--format", opts.format, "Output table format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

std::vector<double> parse_t_list(const std::string& spec) {
  std::vector<double> values;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size())
      throw CLI::ValidationError("--T", "not a number: " + token);
    values.push_back(v);
  }
  if (values.empty()) throw CLI::ValidationError("--T", "empty list");
  return values;
}

std::string format_t(double T) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", T);
  return buf;
}

/// Writes via a temporary file so sweep points never leave partial outputs.
void write_atomic(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, path);
}

void write_manifest(const fs::path& out_dir, const std::string& command,
                    const json& config, const std::vector<std::string>& outputs) {
  json manifest = {
      {"command", command},
      {"config", config},
      {"version", kVersion},
      {"outputs", outputs},
  };
  write_atomic(out_dir / (command + "_manifest.json"), manifest.dump(2) + "\n");
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// ---------------------------------------------------------------------------

int cmd_agp(const std::string& lattice_spec, double g, double J, int grid,
            const CommonOpts& opts) {
  if (grid < 2) throw CLI::ValidationError("--grid", "needs at least 2 points");
  const auto graph = cdq::parse_lattice_spec(lattice_spec);
  const bool is_chain = graph.geometry == cdq::Geometry::chain;
  const cdq::VariationalAlpha1 variational(graph, g, J);

  json rows = json::array();
  std::ostringstream csv;
  csv << "lambda,alpha1_variational,alpha1_periodic_continuum";
  if (is_chain) csv << ",alpha1_chain_obc";
  csv << "\n";
  for (int i = 0; i < grid; ++i) {
    const double lambda = static_cast<double>(i) / (grid - 1);
    json row = {
        {"lambda", lambda},
        {"alpha1_variational", variational(lambda)},
        {"alpha1_periodic_continuum",
         cdq::alpha1_periodic_continuum(g, J, lambda).alpha1},
    };
    csv << csv_number(lambda) << ',' << csv_number(variational(lambda)) << ','
        << csv_number(cdq::alpha1_periodic_continuum(g, J, lambda).alpha1);
    if (is_chain) {
      const double closed = cdq::alpha1_chain_obc(graph.n_sites, g, J, lambda).alpha1;
      row["alpha1_chain_obc"] = closed;
      csv << ',' << csv_number(closed);
    }
    csv << "\n";
    rows.push_back(std::move(row));
  }

  const fs::path out_dir(opts.out_dir);
  fs::create_directories(out_dir);
  const std::string filename = opts.format == "csv" ? "agp.csv" : "agp.json";
  write_atomic(out_dir / filename,
               opts.format == "csv" ? csv.str() : rows.dump(2) + "\n");
  write_manifest(out_dir, "agp",
                 {{"lattice", lattice_spec},
                  {"g", g},
                  {"J", J},
                  {"grid", grid},
                  {"format", opts.format}},
                 {filename});
  std::printf("wrote %s\n", (out_dir / filename).string().c_str());
  return 0;
}

int cmd_exact1d(int n, const std::vector<double>& t_list, bool cd, bool emit_pmf,
                const CommonOpts& opts) {
  const fs::path out_dir(opts.out_dir);
  fs::create_directories(out_dir);
  std::vector<std::string> outputs;

  json rows = json::array();
  std::ostringstream csv;
  csv << "T,kappa1_density,kappa2_density,kappa3_density,cd_flag\n";
  for (double T : t_list) {
    cdq::QuenchConfig cfg;
    cfg.T = T;
    cfg.steps = 1;
    cfg.dt = T;
    cfg.cd = cd;
    const auto profile = cdq::quench_profile(n, cfg, cd);
    const auto c = cdq::density_cumulants(cdq::cumulants_from_profile(profile), n);
    csv << csv_number(T) << ',' << csv_number(c.kappa1) << ','
        << csv_number(c.kappa2) << ',' << csv_number(c.kappa3) << ','
        << (cd ? 1 : 0) << "\n";
    rows.push_back({{"T", T},
                    {"kappa1_density", c.kappa1},
                    {"kappa2_density", c.kappa2},
                    {"kappa3_density", c.kappa3},
                    {"cd_flag", cd}});

    if (emit_pmf) {
      const auto pmf = cdq::kink_distribution(profile);
      json pairs = json::array();
      for (std::size_t k = 0; k < pmf.size(); ++k)
        if (pmf[k] > 0.0) pairs.push_back({k, pmf[k]});
      const std::string name = "exact1d_pmf_T" + format_t(T) + ".json";
      write_atomic(out_dir / name, pairs.dump(2) + "\n");
      outputs.push_back(name);
    }
  }

  const std::string filename =
      opts.format == "csv" ? "exact1d.csv" : "exact1d.json";
  write_atomic(out_dir / filename,
               opts.format == "csv" ? csv.str() : rows.dump(2) + "\n");
  outputs.insert(outputs.begin(), filename);
  write_manifest(out_dir, "exact1d",
                 {{"n", n},
                  {"T", t_list},
                  {"cd", cd},
                  {"pmf", emit_pmf},
                  {"format", opts.format}},
                 outputs);
  std::printf("wrote %s\n", (out_dir / filename).string().c_str());
  return 0;
}

int cmd_circuit(const std::string& lattice_spec, const std::vector<double>& t_list,
                double dt, bool cd, int shots, std::uint64_t seed, bool exact,
                const std::string& policy_name, std::optional<int> step_cap,
                const CommonOpts& opts) {
  const auto graph = cdq::parse_lattice_spec(lattice_spec);
  const auto policy = cdq::parse_eval_policy(policy_name);

  const fs::path out_dir(opts.out_dir);
  fs::create_directories(out_dir);
  std::vector<std::string> outputs;

  std::ostringstream csv;
  csv << "T,steps,dt,cd,kappa1,kappa2,kappa3,se1,se2,se3,n_e,shots\n";
  for (double T : t_list) {
    const auto cfg = cdq::make_quench_config(1.0, 1.0, T, dt, cd, policy, step_cap);
    auto state = cdq::zero_state(graph.n_sites);
    cdq::run(cdq::build_trotter(graph, cfg), state);

    cdq::DefectStats stats;
    const std::string tag = format_t(T);
    if (exact) {
      stats = cdq::cumulants_from_pmf(cdq::kink_distribution_exact(state, graph),
                                      graph.n_edges());
    } else {
      const auto samples = cdq::sample_bitstrings(state, shots, seed);
      stats = cdq::cumulants_from_samples(samples, graph);
      std::ostringstream lines;
      for (const auto& s : samples) lines << s << "\n";
      const std::string samples_name = "samples_T" + tag + ".txt";
      write_atomic(out_dir / samples_name, lines.str());
      outputs.push_back(samples_name);
    }

    const std::string stats_name = "stats_T" + tag + ".json";
    write_atomic(out_dir / stats_name, cdq::stats_to_json(stats) + "\n");
    outputs.push_back(stats_name);
    csv << csv_number(T) << ',' << cfg.steps << ',' << csv_number(cfg.dt) << ','
        << (cd ? 1 : 0) << ',' << csv_number(stats.kappa1) << ','
        << csv_number(stats.kappa2) << ',' << csv_number(stats.kappa3) << ','
        << csv_number(stats.se1) << ',' << csv_number(stats.se2) << ','
        << csv_number(stats.se3) << ',' << stats.n_e << ',' << stats.shots
        << "\n";
  }

  if (opts.format == "csv") {
    write_atomic(out_dir / "circuit.csv", csv.str());
    outputs.insert(outputs.begin(), "circuit.csv");
  }

  json config = {{"lattice", lattice_spec}, {"T", t_list},
                 {"dt", dt},                {"cd", cd},
                 {"shots", shots},          {"seed", seed},
                 {"exact", exact},          {"eval_policy", policy_name},
                 {"format", opts.format}};
  if (step_cap) config["step_cap"] = *step_cap;
  write_manifest(out_dir, "circuit", config, outputs);
  std::printf("wrote %zu output file(s) under %s\n", outputs.size(),
              out_dir.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digitized TFIM quench toolkit: counterdiabatic circuits and "
               "kink statistics"};
  app.require_subcommand(1);

  // agp
  CommonOpts agp_opts;
  std::string agp_lattice = "chain:100";
  double g = 1.0, J = 1.0;
  int grid = 101;
  auto* agp = app.add_subcommand("agp", "alpha1(lambda) coefficient table");
  agp->add_option("--lattice", agp_lattice, "Lattice spec, e.g. chain:100")
      ->capture_default_str();
  agp->add_option("--g", g, "Transverse field")->capture_default_str();
  agp->add_option("--J", J, "Ising coupling")->capture_default_str();
  agp->add_option("--grid", grid, "Number of lambda points")->capture_default_str();
  add_common(agp, agp_opts);

  // exact1d
  CommonOpts e1_opts;
  int n = 100;
  std::string e1_t = "0.01";
  bool e1_cd = false;
  bool e1_pmf = false;
  auto* e1 = app.add_subcommand("exact1d", "Free-fermion cumulants, periodic chain");
  e1->add_option("--n", n, "Chain length (even, >= 4)")->capture_default_str();
  e1->add_option("--T", e1_t, "Quench time, single value or comma list")
      ->capture_default_str();
  e1->add_flag("--cd,!--no-cd", e1_cd, "Counterdiabatic term");
  e1->add_flag("--pmf", e1_pmf, "Also export the exact kink PMF per T");
  add_common(e1, e1_opts);

  // circuit
  CommonOpts c_opts;
  c_opts.format = "json";
  std::string c_lattice = "chain:16";
  std::string c_t = "0.2";
  double dt = 0.1;
  bool c_cd = false;
  int shots = 20000;
  std::uint64_t seed = 1;
  bool exact = false;
  std::string policy = "mid";
  int step_cap_value = 0;
  auto* circuit = app.add_subcommand("circuit", "Digitized quench on a statevector");
  circuit->add_option("--lattice", c_lattice, "Lattice spec")->capture_default_str();
  circuit->add_option("--T", c_t, "Quench time, single value or comma list")
      ->capture_default_str();
  circuit->add_option("--dt", dt, "Requested Trotter step")->capture_default_str();
  circuit->add_flag("--cd,!--no-cd", c_cd, "Counterdiabatic gates");
  circuit->add_option("--shots", shots, "Sample count")->capture_default_str();
  circuit->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  circuit->add_flag("--exact", exact, "Exact kink PMF instead of sampling");
  circuit->add_option("--eval-policy", policy, "lambda sampling: left|mid|right")
      ->check(CLI::IsMember({"left", "mid", "right"}))
      ->capture_default_str();
  auto* cap_opt = circuit->add_option("--step-cap", step_cap_value,
                                      "Override the Trotter step cap");
  add_common(circuit, c_opts);

  try {
    app.parse(argc, argv);
    if (agp->parsed()) return cmd_agp(agp_lattice, g, J, grid, agp_opts);
    if (e1->parsed())
      return cmd_exact1d(n, parse_t_list(e1_t), e1_cd, e1_pmf, e1_opts);
    std::optional<int> step_cap;
    if (cap_opt->count() > 0) step_cap = step_cap_value;
    return cmd_circuit(c_lattice, parse_t_list(c_t), dt, c_cd, shots, seed, exact,
                       policy, step_cap, c_opts);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const cdq::capacity_error& e) {
    std::fprintf(stderr, "capacity error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
