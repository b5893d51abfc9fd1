#include "wfsim/report.hpp"

#include <algorithm>
#include <cmath>
#include <locale>
#include <set>
#include <sstream>

#include "wfsim/json_io.hpp"

namespace wfsim {

namespace {

// Labels a partition may draw from, routing it to the state that carries
// them: anything naming m is evaluated on the lab state, anything naming A
// on the external description, and partitions inside {a,t} on the lab state
// (the two marginals coincide). Labels absent from the partition are traced
// out first.
struct PartitionRoute {
  std::vector<std::string> keep;  // original-order labels to keep
  bool uses_m = false;
  bool uses_A = false;
};

PartitionRoute route_partition(const std::string& text, std::size_t d_A) {
  SubsystemLayout all{{{"a", 2}, {"t", 2}, {"m", 2}, {"A", d_A}}};
  const Bipartition bip = parse_bipartition(text, all);
  PartitionRoute route;
  std::set<std::string> seen(bip.left.begin(), bip.left.end());
  seen.insert(bip.right.begin(), bip.right.end());
  route.uses_m = seen.count("m") > 0;
  route.uses_A = seen.count("A") > 0;
  if (route.uses_m && route.uses_A)
    throw input_error("partition '" + text +
                      "' mixes the lab wire m with the external memory A");
  for (const char* label : {"a", "t", "m", "A"})
    if (seen.count(label)) route.keep.push_back(label);
  return route;
}

DensityMatrix reduced_for(const PartitionRoute& route, const Scenario& s,
                          const ComplexMatrix& tau,
                          const ComplexMatrix& upsilon) {
  const DensityMatrix state = route.uses_A
                                  ? wigner_state(s.p, tau, upsilon)
                                  : alice_lab_state(s.p);
  if (route.keep.size() == state.layout().count()) return state;
  return partial_trace(state, route.keep);
}

}  // namespace

RunReport run_scenario(const Scenario& s) {
  RunReport report;
  report.scenario = s;

  const KrausChannel channel = realize_channel(s.alice.channel, s.alice.d_A);
  const auto [tau, upsilon] =
      alice_state_pair(s.alice.d_A, s.alice.epsilon, channel);

  for (const std::string& metric : s.metrics) {
    if (metric == "negativity") {
      if (s.partitions.empty())
        report.warnings.push_back(
            "negativity requested but no partitions given");
      for (const std::string& part : s.partitions) {
        const PartitionRoute route = route_partition(part, s.alice.d_A);
        const DensityMatrix reduced = reduced_for(route, s, tau, upsilon);
        report.partition_negativity.emplace_back(
            part, negativity(reduced, part));
      }
    } else if (metric == "witnesses") {
      const auto [w1, w2] = build_witnesses(
          s.alice.d_A, up_projector(s.alice.d_A), down_projector(s.alice.d_A));
      const DensityMatrix w = wigner_state(s.p, tau, upsilon);
      const double e1 = witness_expectation(w, w1);
      const double e2 = witness_expectation(w, w2);
      report.values.emplace_back("expectation_w1", e1);
      report.values.emplace_back("expectation_w2", e2);
      report.values.emplace_back("violation", witness_violation(w, w1, w2));
    } else if (metric == "key_security") {
      if (std::abs(s.p - 0.5) > 1e-12) {
        report.warnings.push_back(
            "key_security skipped: the private-state analysis is defined at "
            "p = 1/2 only (use negativity for general p)");
      } else {
        report.values.emplace_back(
            "key_security", key_security(wigner_state(s.p, tau, upsilon)));
      }
    } else if (metric == "semiclassical_bound") {
      POVM ud{{up_projector(s.alice.d_A), down_projector(s.alice.d_A)}};
      report.values.emplace_back("semiclassical_bound",
                                 semiclassical_bound(tau, upsilon, ud));
    } else if (metric == "traced_negativity") {
      report.values.emplace_back("traced_negativity",
                                 traced_negativity(s.p, tau, upsilon));
    } else {
      throw input_error("unknown metric '" + metric + "'");
    }
  }
  return report;
}

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& [name, value] : r.partition_negativity)
    parts.push_back(nlohmann::json{{"partition", name}, {"value", value}});
  nlohmann::json values = nlohmann::json::array();
  for (const auto& [name, value] : r.values)
    values.push_back(nlohmann::json{{"metric", name}, {"value", value}});
  return nlohmann::json{{"scenario", to_json(r.scenario)},
                        {"partition_negativity", parts},
                        {"values", values},
                        {"warnings", r.warnings}};
}

std::string format_g17(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << v;
  return os.str();
}

namespace {

// Column list of a report: partition negativities first, then the metric
// values, in request order.
std::vector<std::pair<std::string, double>> report_columns(
    const RunReport& r) {
  std::vector<std::pair<std::string, double>> cols;
  for (const auto& [part, value] : r.partition_negativity)
    cols.emplace_back("negativity[" + part + "]", value);
  cols.insert(cols.end(), r.values.begin(), r.values.end());
  return cols;
}

}  // namespace

std::string report_csv(const RunReport& r) {
  std::string out = "metric,value\n";
  for (const auto& [name, value] : report_columns(r))
    out += name + "," + format_g17(value) + "\n";
  return out;
}

std::vector<double> SweepSpec::grid() const {
  if (step == 0.0) {
    if (start != stop) throw input_error("sweep: zero step with start != stop");
    return {start};
  }
  std::vector<double> values;
  const double snap = std::abs(step) * 1e-9;
  for (std::size_t k = 0;; ++k) {
    double v = start + static_cast<double>(k) * step;
    if (std::abs(v - stop) <= snap) v = stop;
    if (step > 0.0 ? v > stop : v < stop) break;
    values.push_back(v);
    if (v == stop) break;
  }
  if (values.empty()) throw input_error("sweep: empty grid");
  return values;
}

SweepSpec parse_sweep(const std::string& text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string::npos)
    throw input_error("sweep: expected 'name=start:stop:step', got '" + text +
                      "'");
  SweepSpec spec;
  spec.name = text.substr(0, eq);
  if (spec.name != "p" && spec.name != "epsilon" &&
      spec.name != "channel.strength")
    throw input_error("sweep: unknown parameter '" + spec.name +
                      "' (expected p, epsilon, or channel.strength)");
  const std::string rest = text.substr(eq + 1);
  const std::size_t c1 = rest.find(':');
  const std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                                 : rest.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos ||
      rest.find(':', c2 + 1) != std::string::npos)
    throw input_error("sweep: expected 'name=start:stop:step', got '" + text +
                      "'");
  const auto parse_num = [&](const std::string& s) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(s, &pos);
      if (pos != s.size() || !std::isfinite(v))
        throw input_error("sweep: bad number '" + s + "'");
      return v;
    } catch (const input_error&) {
      throw;
    } catch (const std::exception&) {
      throw input_error("sweep: bad number '" + s + "'");
    }
  };
  spec.start = parse_num(rest.substr(0, c1));
  spec.stop = parse_num(rest.substr(c1 + 1, c2 - c1 - 1));
  spec.step = parse_num(rest.substr(c2 + 1));
  return spec;
}

namespace {

Scenario with_value(const Scenario& base, const std::string& name, double v) {
  Scenario s = base;
  if (name == "p")
    s.p = v;
  else if (name == "epsilon")
    s.alice.epsilon = v;
  else
    s.alice.channel.strength = v;
  return s;
}

}  // namespace

std::string sweep_csv(const SweepSpec& spec, const Scenario& base) {
  const std::vector<double> values = spec.grid();
  std::vector<RunReport> reports;
  reports.reserve(values.size());
  for (double v : values)
    reports.push_back(run_scenario(with_value(base, spec.name, v)));

  // Union of columns over all rows in first-occurrence order; a metric a row
  // skipped (with a warning) renders as nan to keep the table rectangular.
  std::vector<std::string> columns;
  for (const auto& r : reports)
    for (const auto& [name, value] : report_columns(r))
      if (std::find(columns.begin(), columns.end(), name) == columns.end())
        columns.push_back(name);

  std::string out = spec.name;
  for (const auto& c : columns) out += "," + c;
  out += "\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto cols = report_columns(reports[i]);
    out += format_g17(values[i]);
    for (const auto& name : columns) {
      const auto it =
          std::find_if(cols.begin(), cols.end(),
                       [&](const auto& kv) { return kv.first == name; });
      out += ",";
      out += it == cols.end() ? "nan" : format_g17(it->second);
    }
    out += "\n";
  }
  return out;
}

nlohmann::json sweep_json(const SweepSpec& spec, const Scenario& base) {
  const std::vector<double> values = spec.grid();
  nlohmann::json rows = nlohmann::json::array();
  for (double v : values) {
    RunReport r = run_scenario(with_value(base, spec.name, v));
    nlohmann::json row = to_json(r);
    row["swept_value"] = v;
    rows.push_back(std::move(row));
  }
  return nlohmann::json{
      {"parameter", spec.name}, {"grid", values}, {"rows", rows}};
}

}  // namespace wfsim
