#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>

#include <CLI11.hpp>

#include "chainbands/band_analysis.hpp"
#include "chainbands/builders.hpp"
#include "chainbands/floquet.hpp"
#include "chainbands/io.hpp"
#include "chainbands/quantum_map.hpp"

namespace chainbands::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string graph_path;
  int samples = kDefaultSamples;
  double refine_tol = 1e-6;
  double flat_tol = 1e-9;
  std::optional<double> e_max;
  std::string output_path;
  std::string format = "csv";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_config(const RunConfig& config) {
  const int min_samples = config.command == "bands" ? 2 : kMinCoarseSamples;
  if (config.samples < min_samples) {
    throw UsageError("--samples must be at least " + std::to_string(min_samples) + " for " +
                     config.command);
  }
  if (!(config.refine_tol > 0) || !(config.flat_tol > 0)) {
    throw UsageError("tolerances must be positive");
  }
  if (config.format == "svg" && config.command != "bands") {
    throw UsageError("--format svg is only available for bands");
  }
  if (config.command == "quantum" && (!config.e_max || !(*config.e_max > 0) ||
                                      !std::isfinite(*config.e_max))) {
    throw UsageError("quantum needs a finite --emax > 0");
  }
}

std::string execute(const RunConfig& config, const PeriodicChainGraph& g) {
  const auto grid = half_zone_grid(config.samples);
  if (config.command == "bands") {
    const BandTable table = sample_bands(g, grid);
    return config.format == "svg" ? io::band_plot_svg(table) : io::band_table_csv(table);
  }
  if (config.command == "edges") {
    Tolerances tol;
    tol.refine_k = config.refine_tol;
    tol.flat = config.flat_tol;
    const auto edges = locate_all_band_edges(g, config.samples, tol);
    return io::band_edges_report(edges);
  }
  if (config.command == "flat") {
    std::vector<double> probes{0.0, 0.5, std::numbers::pi * (std::sqrt(5.0) - 1.0) / 2.0};
    probes.insert(probes.end(), grid.begin(), grid.end());
    auto values = detect_flat_bands(g, probes, config.flat_tol);
    for (double& v : values) {
      if (std::abs(v) < config.flat_tol) v = 0.0;  // drop the sign of solver noise around zero
    }
    return io::flat_band_report(values);
  }
  std::vector<QuantumBandPoint> points;
  for (double k : grid) points.push_back(quantum_bands(g, k, {*config.e_max}));
  return io::quantum_csv(points);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Band structure of Z-periodic chain graphs", "chainbands"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&config](CLI::App* sub) {
    sub->add_option("--graph", config.graph_path, "graph description file (.json optional)")
        ->required();
    sub->add_option("--samples", config.samples, "points on the [0, pi] grid")
        ->capture_default_str();
    sub->add_option("--output", config.output_path, "write results here instead of stdout");
  };
  CLI::App* bands = app.add_subcommand("bands", "sample all band functions on [0, pi]");
  add_common(bands);
  bands->add_option("--format", config.format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();
  CLI::App* edges = app.add_subcommand("edges", "locate and classify band edges");
  add_common(edges);
  edges->add_option("--refine-tol", config.refine_tol, "golden-section tolerance in k")
      ->capture_default_str();
  edges->add_option("--flat-tol", config.flat_tol, "band spread counted as flat")
      ->capture_default_str();
  CLI::App* flat = app.add_subcommand("flat", "list flat band values");
  add_common(flat);
  flat->add_option("--flat-tol", config.flat_tol, "band spread counted as flat")
      ->capture_default_str();
  CLI::App* quantum = app.add_subcommand("quantum", "lift bands to quantum-graph energies");
  add_common(quantum);
  quantum->add_option("--emax", config.e_max, "upper end of the energy window")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "chainbands: " << e.what() << '\n';
    return kInputError;
  }
  for (const CLI::App* sub : app.get_subcommands()) config.command = sub->get_name();

  try {
    check_config(config);
    const PeriodicChainGraph g = validate(io::read_graph_file(config.graph_path));
    const std::string result = execute(config, g);
    if (config.output_path.empty()) {
      out << result;
    } else {
      std::ofstream file(config.output_path, std::ios::binary);
      if (!file || !(file << result)) {
        err << "chainbands: cannot write " << config.output_path << '\n';
        return kInputError;
      }
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "chainbands: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "chainbands: " << to_string(e.code()) << ": " << e.what() << '\n';
    if (e.code() == ErrorCode::FileError || e.code() == ErrorCode::ParseError) return kInputError;
    if (e.is_validation_error()) return kValidationError;
    return kNumericalError;
  }
}

}  // namespace chainbands::cli
