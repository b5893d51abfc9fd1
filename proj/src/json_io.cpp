#include "wfsim/json_io.hpp"

#include <fstream>

namespace wfsim {

namespace {

const nlohmann::json& require_key(const nlohmann::json& j, const char* key,
                                  const char* where) {
  if (!j.is_object() || !j.contains(key))
    throw input_error(std::string(where) + ": missing key '" + key + "'");
  return j.at(key);
}

double require_number(const nlohmann::json& j, const char* key,
                      const char* where) {
  const nlohmann::json& v = require_key(j, key, where);
  if (!v.is_number())
    throw input_error(std::string(where) + ": key '" + key +
                      "' must be a number");
  return v.get<double>();
}

std::size_t require_count(const nlohmann::json& j, const char* key,
                          const char* where) {
  const nlohmann::json& v = require_key(j, key, where);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
    throw input_error(std::string(where) + ": key '" + key +
                      "' must be a positive integer");
  return v.get<std::size_t>();
}

std::string require_string(const nlohmann::json& j, const char* key,
                           const char* where) {
  const nlohmann::json& v = require_key(j, key, where);
  if (!v.is_string())
    throw input_error(std::string(where) + ": key '" + key +
                      "' must be a string");
  return v.get<std::string>();
}

}  // namespace

nlohmann::json to_json(const ComplexMatrix& m) {
  const std::size_t n = m.entries().size();
  std::vector<double> re(n), im(n);
  for (std::size_t i = 0; i < n; ++i) {
    re[i] = m.data()[i].real();
    im[i] = m.data()[i].imag();
  }
  return nlohmann::json{
      {"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  const std::size_t rows = require_count(j, "rows", "matrix");
  const std::size_t cols = require_count(j, "cols", "matrix");
  const nlohmann::json& re = require_key(j, "re", "matrix");
  const nlohmann::json& im = require_key(j, "im", "matrix");
  if (!re.is_array() || !im.is_array() || re.size() != rows * cols ||
      im.size() != rows * cols)
    throw input_error("matrix: 're'/'im' must be arrays of rows*cols numbers");
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    if (!re[i].is_number() || !im[i].is_number())
      throw input_error("matrix: 're'/'im' entries must be numbers");
    m.data()[i] = cd{re[i].get<double>(), im[i].get<double>()};
  }
  m.require_finite("matrix");
  return m;
}

nlohmann::json to_json(const DensityMatrix& rho) {
  nlohmann::json layout = nlohmann::json::array();
  for (std::size_t k = 0; k < rho.layout().count(); ++k)
    layout.push_back(nlohmann::json::array(
        {rho.layout().at(k).label, rho.layout().at(k).dim}));
  return nlohmann::json{{"layout", layout}, {"mat", to_json(rho.mat())}};
}

DensityMatrix density_from_json(const nlohmann::json& j) {
  const nlohmann::json& jl = require_key(j, "layout", "density");
  if (!jl.is_array() || jl.empty())
    throw input_error("density: 'layout' must be a nonempty array");
  std::vector<Subsystem> subs;
  for (const auto& e : jl) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_number_unsigned())
      throw input_error("density: layout entries must be [label, dim] pairs");
    subs.push_back({e[0].get<std::string>(), e[1].get<std::size_t>()});
  }
  return DensityMatrix(SubsystemLayout{std::move(subs)},
                       matrix_from_json(require_key(j, "mat", "density")));
}

nlohmann::json to_json(const KrausChannel& ch) {
  nlohmann::json ops = nlohmann::json::array();
  for (const auto& k : ch.kraus) ops.push_back(to_json(k));
  return nlohmann::json{{"dim", ch.dim}, {"kraus", ops}};
}

KrausChannel channel_from_json(const nlohmann::json& j) {
  const std::size_t dim = require_count(j, "dim", "channel");
  const nlohmann::json& ops = require_key(j, "kraus", "channel");
  if (!ops.is_array() || ops.empty())
    throw input_error("channel: 'kraus' must be a nonempty array");
  std::vector<ComplexMatrix> kraus;
  for (const auto& op : ops) kraus.push_back(matrix_from_json(op));
  return KrausChannel::from_kraus(dim, std::move(kraus));
}

nlohmann::json to_json(const POVM& povm) {
  nlohmann::json effects = nlohmann::json::array();
  for (const auto& e : povm.effects) effects.push_back(to_json(e));
  return nlohmann::json{{"effects", effects}};
}

POVM povm_from_json(const nlohmann::json& j) {
  const nlohmann::json& effects = require_key(j, "effects", "povm");
  if (!effects.is_array() || effects.empty())
    throw input_error("povm: 'effects' must be a nonempty array");
  POVM povm;
  for (const auto& e : effects) povm.effects.push_back(matrix_from_json(e));
  validate_povm(povm, povm.effects.front().rows());
  return povm;
}

nlohmann::json to_json(const ChannelSpec& spec) {
  nlohmann::json j{{"type", spec.type}, {"strength", spec.strength}};
  if (spec.type == "dephasing") j["basis"] = spec.basis;
  if (spec.type == "kraus") j["kraus_file"] = spec.kraus_file;
  return j;
}

ChannelSpec channel_spec_from_json(const nlohmann::json& j) {
  ChannelSpec spec;
  spec.type = require_string(j, "type", "channel spec");
  if (spec.type != "identity" && spec.type != "dephasing" &&
      spec.type != "depolarizing" && spec.type != "kraus")
    throw input_error("channel spec: unknown 'type' \"" + spec.type + "\"");
  if (spec.type == "dephasing" || spec.type == "depolarizing") {
    spec.strength = require_number(j, "strength", "channel spec");
    if (spec.strength < 0.0 || spec.strength > 1.0)
      throw input_error("channel spec: 'strength' outside [0,1]");
  }
  if (spec.type == "dephasing" && j.contains("basis")) {
    spec.basis = require_string(j, "basis", "channel spec");
    if (spec.basis != "computational" && spec.basis != "ud")
      throw input_error("channel spec: unknown 'basis' \"" + spec.basis +
                        "\"");
  }
  if (spec.type == "kraus")
    spec.kraus_file = require_string(j, "kraus_file", "channel spec");
  return spec;
}

nlohmann::json to_json(const Scenario& s) {
  return nlohmann::json{{"p", s.p},
                        {"alice",
                         {{"dim", s.alice.d_A},
                          {"epsilon", s.alice.epsilon},
                          {"channel", to_json(s.alice.channel)}}},
                        {"partitions", s.partitions},
                        {"metrics", s.metrics}};
}

Scenario scenario_from_json(const nlohmann::json& j) {
  Scenario s;
  s.p = require_number(j, "p", "scenario");
  if (s.p < 0.0 || s.p > 1.0)
    throw input_error("scenario: 'p' outside [0,1]");
  const nlohmann::json& alice = require_key(j, "alice", "scenario");
  s.alice.d_A = require_count(alice, "dim", "scenario.alice");
  if (s.alice.d_A < 2)
    throw input_error("scenario.alice: 'dim' must be >= 2");
  s.alice.epsilon = require_number(alice, "epsilon", "scenario.alice");
  if (s.alice.epsilon < 0.0 || s.alice.epsilon > 1.0)
    throw input_error("scenario.alice: 'epsilon' outside [0,1]");
  s.alice.channel =
      channel_spec_from_json(require_key(alice, "channel", "scenario.alice"));
  const nlohmann::json& parts = require_key(j, "partitions", "scenario");
  if (!parts.is_array())
    throw input_error("scenario: 'partitions' must be an array");
  for (const auto& p : parts) {
    if (!p.is_string())
      throw input_error("scenario: 'partitions' entries must be strings");
    s.partitions.push_back(p.get<std::string>());
  }
  const nlohmann::json& metrics = require_key(j, "metrics", "scenario");
  if (!metrics.is_array())
    throw input_error("scenario: 'metrics' must be an array");
  for (const auto& m : metrics) {
    if (!m.is_string())
      throw input_error("scenario: 'metrics' entries must be strings");
    s.metrics.push_back(m.get<std::string>());
  }
  return s;
}

nlohmann::json to_json(const Theorem1Instance& inst) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& m : inst.members)
    members.push_back(nlohmann::json{{"weight", m.weight},
                                     {"pair_state", to_json(m.pair_state)},
                                     {"shield", to_json(m.shield)}});
  return nlohmann::json{{"dim_x", inst.dim_x},
                        {"dim_y", inst.dim_y},
                        {"dim_z", inst.dim_z},
                        {"members", members}};
}

KrausChannel realize_channel(const ChannelSpec& spec, std::size_t dim) {
  if (spec.type == "identity")
    return make_channel(ChannelKind::identity, dim, 0.0);
  if (spec.type == "depolarizing")
    return make_channel(ChannelKind::depolarizing, dim, spec.strength);
  if (spec.type == "dephasing") {
    if (spec.basis == "ud") {
      std::vector<ComplexMatrix> blocks{up_projector(dim),
                                        down_projector(dim)};
      return make_channel(ChannelKind::dephasing, dim, spec.strength, {},
                          blocks);
    }
    return make_channel(ChannelKind::dephasing, dim, spec.strength);
  }
  if (spec.type == "kraus") {
    KrausChannel ch = channel_from_json(load_json_file(spec.kraus_file));
    if (ch.dim != dim)
      throw input_error("channel spec: kraus_file dimension mismatch");
    return ch;
  }
  throw input_error("channel spec: unknown 'type' \"" + spec.type + "\"");
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw input_error("cannot parse " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot open file for writing: " + path);
  out << j.dump(2) << "\n";
  if (!out) throw input_error("write failed: " + path);
}

}  // namespace wfsim
