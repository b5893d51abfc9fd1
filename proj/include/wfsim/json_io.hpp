#pragma once

#include <string>

#include <json.hpp>

#include "wfsim/channels.hpp"
#include "wfsim/density.hpp"
#include "wfsim/metrics.hpp"
#include "wfsim/protocol.hpp"

// JSON wire formats shared by every module:
//   ComplexMatrix  {"rows": n, "cols": m, "re": [...], "im": [...]}  row-major
//   DensityMatrix  {"layout": [["a",2],...], "mat": <ComplexMatrix>}
//   KrausChannel   {"dim": n, "kraus": [<ComplexMatrix>, ...]}
//   POVM           {"effects": [<ComplexMatrix>, ...]}
//   Scenario       {"p":0.5, "alice":{"dim":2,"epsilon":0.0,"channel":{...}},
//                   "partitions":[...], "metrics":[...]}
// Malformed documents throw input_error with the offending key in the
// message.

namespace wfsim {

nlohmann::json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

nlohmann::json to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const nlohmann::json& j);

nlohmann::json to_json(const POVM& povm);
POVM povm_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ChannelSpec& spec);
ChannelSpec channel_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Scenario& s);
Scenario scenario_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Theorem1Instance& inst);

// Builds the Kraus form for a scenario channel; "kraus" reads kraus_file.
KrausChannel realize_channel(const ChannelSpec& spec, std::size_t dim);

// File helpers; I/O and parse failures map to input_error.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace wfsim
