#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "wfsim/protocol.hpp"

namespace wfsim {

// One scenario evaluation. Every requested metric either appears in the
// value maps or is explained in `warnings` (e.g. key_security away from
// p = ½). Insertion order of `values` follows the request order, so reports
// are deterministic.
struct RunReport {
  Scenario scenario;
  // Partition string → negativity, in request order.
  std::vector<std::pair<std::string, double>> partition_negativity;
  // Metric name → value, in request order (witness metrics expand into
  // expectation_w1/expectation_w2/violation).
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::string> warnings;
};

RunReport run_scenario(const Scenario& s);

nlohmann::json to_json(const RunReport& r);

// 17-significant-digit, locale-independent numeric formatting used by every
// CSV writer (lossless double round trips).
std::string format_g17(double v);

// CSV for a single report: header "metric,value", one row per entry.
std::string report_csv(const RunReport& r);

// Sweep grammar "name=start:stop:step" with name ∈ {p, epsilon,
// channel.strength}; the grid is start, start+step, … with the endpoint
// snapped when |v−stop| <= |step|·1e-9. Throws input_error on malformed
// text, unknown names, or an empty grid.
struct SweepSpec {
  std::string name;
  double start, stop, step;
  std::vector<double> grid() const;
};
SweepSpec parse_sweep(const std::string& text);

// One row per grid point: swept value first, then every metric column in
// report order. All rows share the header derived from the first report.
std::string sweep_csv(const SweepSpec& spec, const Scenario& base);
nlohmann::json sweep_json(const SweepSpec& spec, const Scenario& base);

}  // namespace wfsim
