// wfsim — command-line front end for the Wigner's-friend simulation library.
//
// Subcommands:
//   simulate      evaluate one scenario file and report its metrics
//   sweep         evaluate a scenario across a parameter grid
//   theorem1      randomized sandwich-bound checks on shielded ensembles
//   discriminate  trace-distance / optimal-measurement comparison of two states
//
// Exit codes: 0 success; 1 a theorem1 sandwich violation (reported with the
// offending instance serialized); 2 invalid input; 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wfsim/json_io.hpp"
#include "wfsim/random.hpp"
#include "wfsim/report.hpp"

namespace {

using namespace wfsim;

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw input_error("cannot open output file: " + out_path);
  out << content;
  if (!out) throw input_error("write failed: " + out_path);
}

// Accepts either a bare matrix document or a full density-matrix document;
// always validates state-ness (Hermitian, unit trace, PSD).
ComplexMatrix load_state(const std::string& path) {
  const nlohmann::json j = load_json_file(path);
  ComplexMatrix mat = j.contains("mat")
                          ? density_from_json(j).mat()
                          : matrix_from_json(j);
  if (!mat.is_square()) throw input_error(path + ": state must be square");
  DensityMatrix check(SubsystemLayout{{{"A", mat.rows()}}}, mat);
  return mat;
}

int cmd_simulate(const std::string& scenario_path, const std::string& out,
                 const std::string& format) {
  const Scenario s = scenario_from_json(load_json_file(scenario_path));
  const RunReport report = run_scenario(s);
  if (format == "json")
    write_output(out, to_json(report).dump(2) + "\n");
  else
    write_output(out, report_csv(report));
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  return 0;
}

int cmd_sweep(const std::string& scenario_path, const std::string& param,
              const std::string& out, const std::string& format) {
  const Scenario s = scenario_from_json(load_json_file(scenario_path));
  const SweepSpec spec = parse_sweep(param);
  if (format == "json")
    write_output(out, sweep_json(spec, s).dump(2) + "\n");
  else
    write_output(out, sweep_csv(spec, s));
  return 0;
}

int cmd_theorem1(std::uint64_t seed, bool seed_set, long long trials,
                 std::size_t members, std::size_t shield_dim, bool disjoint,
                 const std::string& out, const std::string& format) {
  if (!seed_set)
    throw input_error("theorem1: --seed is required for reproducibility");
  if (trials < 1) throw input_error("theorem1: --trials must be >= 1");

  CounterRng rng(seed);
  std::string csv =
      "trial,lower,value_xz_y,value_x_yz,upper,shields_disjoint,sandwich_ok,"
      "equality_gap\n";
  nlohmann::json rows = nlohmann::json::array();
  bool all_ok = true;
  for (long long t = 0; t < trials; ++t) {
    const Theorem1Instance inst =
        random_theorem1_instance(rng, members, shield_dim, disjoint);
    const Theorem1Report rep = theorem1_bounds(inst);
    csv += std::to_string(t) + "," + format_g17(rep.lower) + "," +
           format_g17(rep.value_xz_y) + "," + format_g17(rep.value_x_yz) +
           "," + format_g17(rep.upper) + "," +
           (rep.shields_disjoint ? "1" : "0") + "," +
           (rep.sandwich_ok ? "1" : "0") + "," +
           format_g17(rep.equality_gap) + "\n";
    rows.push_back(nlohmann::json{{"trial", t},
                                  {"lower", rep.lower},
                                  {"value_xz_y", rep.value_xz_y},
                                  {"value_x_yz", rep.value_x_yz},
                                  {"upper", rep.upper},
                                  {"shields_disjoint", rep.shields_disjoint},
                                  {"sandwich_ok", rep.sandwich_ok},
                                  {"equality_gap", rep.equality_gap}});
    if (!rep.sandwich_ok) {
      all_ok = false;
      std::cerr << "sandwich violation at trial " << t
                << "; offending instance:\n"
                << to_json(inst).dump(2) << "\n";
    }
  }
  if (format == "json")
    write_output(out,
                 nlohmann::json{{"seed", seed},
                                {"trials", trials},
                                {"all_sandwiches_hold", all_ok},
                                {"rows", rows}}
                         .dump(2) +
                     "\n");
  else
    write_output(out, csv);
  return all_ok ? 0 : 1;
}

int cmd_discriminate(const std::string& tau_path,
                     const std::string& upsilon_path,
                     const std::string& povm_path, const std::string& out,
                     const std::string& format) {
  const ComplexMatrix tau = load_state(tau_path);
  const ComplexMatrix upsilon = load_state(upsilon_path);
  if (tau.rows() != upsilon.rows())
    throw input_error("discriminate: state dimensions differ");

  std::vector<std::pair<std::string, double>> values;
  const double td = trace_distance(tau, upsilon);
  values.emplace_back("trace_distance", td);
  values.emplace_back(
      "helstrom_distance",
      povm_classical_distance(tau, upsilon, helstrom_povm(tau, upsilon)));
  if (!povm_path.empty()) {
    const POVM povm = povm_from_json(load_json_file(povm_path));
    if (!povm.effects.empty() && povm.effects.front().rows() != tau.rows())
      throw input_error("discriminate: POVM dimension differs from states");
    const double pd = povm_classical_distance(tau, upsilon, povm);
    values.emplace_back("povm_distance", pd);
    values.emplace_back("gap", td - pd);
  }

  if (format == "json") {
    nlohmann::json j;
    for (const auto& [name, value] : values) j[name] = value;
    write_output(out, j.dump(2) + "\n");
  } else {
    std::string csv = "metric,value\n";
    for (const auto& [name, value] : values)
      csv += name + "," + format_g17(value) + "\n";
    write_output(out, csv);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wfsim: negativity, witnesses, and key security for the "
               "observer-dependent source model"};
  app.require_subcommand(1);
  // Let global flags (--out, --seed, ...) appear after the subcommand name.
  app.fallthrough();

  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 0;
  bool seed_set = false;
  app.add_option("--out", out, "Output path ('-' or empty for stdout)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", seed, "64-bit seed for randomized commands")
      ->each([&](const std::string&) { seed_set = true; });

  // Advanced tolerance overrides (see the library's Tolerances record).
  double tol_eq = tolerances().eq;
  double tol_herm = tolerances().herm;
  double tol_trace = tolerances().trace;
  double tol_psd = tolerances().psd;
  double tol_recon = tolerances().recon;
  app.add_option("--tol-eq", tol_eq, "Value-equality tolerance")
      ->group("Tolerances");
  app.add_option("--tol-herm", tol_herm, "Hermiticity tolerance")
      ->group("Tolerances");
  app.add_option("--tol-trace", tol_trace, "Unit-trace tolerance")
      ->group("Tolerances");
  app.add_option("--tol-psd", tol_psd,
                 "Positive-semidefiniteness floor (negative number)")
      ->group("Tolerances");
  app.add_option("--tol-recon", tol_recon,
                 "Eigendecomposition reconstruction tolerance")
      ->group("Tolerances");

  std::string scenario_path, param, tau_path, upsilon_path, povm_path;
  long long trials = 100;
  std::size_t members = 2, shield_dim = 2;
  bool disjoint = false;

  CLI::App* simulate =
      app.add_subcommand("simulate", "Evaluate one scenario file");
  simulate->add_option("scenario", scenario_path, "Scenario JSON path")
      ->required();

  CLI::App* sweep =
      app.add_subcommand("sweep", "Evaluate a scenario over a grid");
  sweep->add_option("scenario", scenario_path, "Scenario JSON path")
      ->required();
  sweep->add_option("param", param, "Grid 'name=start:stop:step'")->required();

  CLI::App* theorem1 = app.add_subcommand(
      "theorem1", "Randomized sandwich-bound checks (requires --seed)");
  theorem1->add_option("--trials", trials, "Number of random instances");
  theorem1->add_option("--members", members, "Ensemble members per instance");
  theorem1->add_option("--shield-dim", shield_dim, "Shield dimension");
  theorem1->add_flag("--disjoint", disjoint,
                     "Use orthogonal rank-1 shields (saturation regime)");

  CLI::App* discriminate = app.add_subcommand(
      "discriminate", "Compare two memory states under measurements");
  discriminate->add_option("tau", tau_path, "First state JSON path")
      ->required();
  discriminate->add_option("upsilon", upsilon_path, "Second state JSON path")
      ->required();
  discriminate->add_option("--povm", povm_path, "Optional POVM JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  tolerances().eq = tol_eq;
  tolerances().herm = tol_herm;
  tolerances().trace = tol_trace;
  tolerances().psd = tol_psd;
  tolerances().recon = tol_recon;

  try {
    if (simulate->parsed()) return cmd_simulate(scenario_path, out, format);
    if (sweep->parsed()) return cmd_sweep(scenario_path, param, out, format);
    if (theorem1->parsed())
      return cmd_theorem1(seed, seed_set, trials, members, shield_dim,
                          disjoint, out, format);
    if (discriminate->parsed())
      return cmd_discriminate(tau_path, upsilon_path, povm_path, out, format);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
