// Copyright 2026 The toffoli-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tforge/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

namespace tforge {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json gate_json(const Gate& g) {
  ordered_json j;
  j["kind"] = std::string(to_string(g.kind));
  if (g.kind == GateKind::swap) {
    j["a"] = g.control;
    j["b"] = g.target;
    return j;
  }
  j["control"] = g.control;
  j["target"] = g.target;
  j["angle"] = {{"num", g.angle.numerator()}, {"den_exp", g.angle.denom_exp()}};
  return j;
}

ordered_json circuit_json(const Circuit& c) {
  ordered_json j;
  j["version"] = std::string(Circuit::kFormatVersion);
  j["n_qubits"] = c.n_qubits();
  ordered_json gates = ordered_json::array();
  for (const Gate& g : c.gates()) {
    gates.push_back(gate_json(g));
  }
  j["gates"] = std::move(gates);
  if (c.has_sections()) {
    ordered_json sections = ordered_json::array();
    for (const Section& s : c.sections()) {
      sections.push_back(
          {{"label", std::string(to_string(s.label))}, {"start", s.begin}, {"end", s.end}});
    }
    j["sections"] = std::move(sections);
  }
  if (c.has_basis_layer()) {
    ordered_json layer = ordered_json::array();
    for (const std::uint8_t k : c.basis_layer()) {
      layer.push_back(k);
    }
    j["basis_layer"] = std::move(layer);
  }
  return j;
}

template <typename T>
T get_int(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("field \"") + key + "\" must be an integer");
  }
  if constexpr (std::is_unsigned_v<T>) {
    if (v.is_number_unsigned()) {
      const auto u = v.get<std::uint64_t>();
      if (u > std::numeric_limits<T>::max()) {
        throw ParseError(std::string("field \"") + key + "\" out of range");
      }
      return static_cast<T>(u);
    }
    const auto s = v.get<std::int64_t>();
    if (s < 0) {
      throw ParseError(std::string("field \"") + key + "\" must be non-negative");
    }
    if (static_cast<std::uint64_t>(s) > std::numeric_limits<T>::max()) {
      throw ParseError(std::string("field \"") + key + "\" out of range");
    }
    return static_cast<T>(s);
  } else {
    if (v.is_number_unsigned() &&
        v.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw ParseError(std::string("field \"") + key + "\" out of range");
    }
    return static_cast<T>(v.get<std::int64_t>());
  }
}

Gate parse_gate(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("gate needs a string \"kind\"");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "swap") {
    return Gate::swap(get_int<Qubit>(j, "a"), get_int<Qubit>(j, "b"));
  }
  if (kind != "crx" && kind != "cprx") {
    throw ParseError("unknown gate kind \"" + kind + "\"");
  }
  if (!j.contains("angle")) {
    throw ParseError("rotation gate needs an \"angle\"");
  }
  const json& a = j["angle"];
  const auto num = get_int<std::int64_t>(a, "num");
  const auto exp = get_int<std::uint32_t>(a, "den_exp");
  const DyadicAngle angle(num, exp);
  const auto control = get_int<Qubit>(j, "control");
  const auto target = get_int<Qubit>(j, "target");
  return kind == "crx" ? Gate::crx(angle, control, target)
                       : Gate::cprx(angle, control, target);
}

Circuit parse_circuit(const json& j) {
  if (!j.is_object()) {
    throw ParseError("circuit document must be a JSON object");
  }
  if (!j.contains("version") || !j["version"].is_string() ||
      j["version"].get<std::string>() != Circuit::kFormatVersion) {
    throw ParseError("unsupported or missing circuit format version");
  }
  const auto n = get_int<std::size_t>(j, "n_qubits");
  if (!j.contains("gates") || !j["gates"].is_array()) {
    throw ParseError("missing \"gates\" array");
  }
  std::vector<Gate> gates;
  for (const json& g : j["gates"]) {
    gates.push_back(parse_gate(g));
  }
  std::vector<Section> sections;
  if (j.contains("sections")) {
    if (!j["sections"].is_array()) {
      throw ParseError("\"sections\" must be an array");
    }
    for (const json& s : j["sections"]) {
      if (!s.is_object() || !s.contains("label") || !s["label"].is_string()) {
        throw ParseError("section needs a string \"label\"");
      }
      const auto label = parse_section_label(s["label"].get<std::string>());
      if (!label) {
        throw ParseError("unknown section label");
      }
      sections.push_back(
          {*label, get_int<std::size_t>(s, "start"), get_int<std::size_t>(s, "end")});
    }
  }
  std::vector<std::uint8_t> layer;
  if (j.contains("basis_layer")) {
    if (!j["basis_layer"].is_array()) {
      throw ParseError("\"basis_layer\" must be an array");
    }
    for (const json& k : j["basis_layer"]) {
      if (!k.is_number_integer() || k.get<std::int64_t>() < 0 ||
          k.get<std::int64_t>() > 3) {
        throw ParseError("basis layer exponents must be integers in 0..3");
      }
      layer.push_back(static_cast<std::uint8_t>(k.get<int>()));
    }
  }
  return Circuit(n, std::move(gates), std::move(sections), std::move(layer));
}

std::string qasm_qubit(Qubit q) { return "q[" + std::to_string(q) + "]"; }

// Display width of a UTF-8 string, one column per code point.
std::size_t text_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char ch) { return (static_cast<unsigned char>(ch) & 0xC0) != 0x80; }));
}

} // namespace

std::string circuit_to_json(const Circuit& circuit) {
  return circuit_json(circuit).dump(2) + "\n";
}

Circuit circuit_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return parse_circuit(j);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  } catch (const std::overflow_error& e) {
    throw ParseError(e.what());
  }
}

std::string schedule_to_json(const Schedule& schedule) {
  ordered_json j;
  j["layers"] = schedule.layers;
  j["group_barriers"] = schedule.group_barriers;
  j["depth"] = depth(schedule);
  j["group_depths"] = schedule.group_depths();
  return j.dump(2) + "\n";
}

std::string routed_to_json(const RoutedCircuit& routed) {
  ordered_json j = circuit_json(routed.circuit);
  j["depth"] = routed.depth();
  j["layers"] = routed.layer_offsets;
  ordered_json groups = ordered_json::array();
  for (const RoutedGroup& g : routed.groups) {
    groups.push_back({{"label", g.label}, {"first_layer", g.first_layer}, {"depth", g.depth}});
  }
  j["groups"] = std::move(groups);
  ordered_json trace = ordered_json::array();
  for (const LayoutSnapshot& s : routed.trace.snapshots) {
    const auto m = s.layout.mapping();
    trace.push_back({{"layer", s.layer}, {"layout", std::vector<Qubit>(m.begin(), m.end())}});
  }
  j["trace"] = std::move(trace);
  return j.dump(2) + "\n";
}

std::string to_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 3.0;\ninclude \"stdgates.inc\";\n";
  if (count_kind(circuit, GateKind::cprx) > 0) {
    out << "gate cprx(theta) c, t { p(theta/2) c; crx(theta) c, t; }\n";
  }
  out << "qubit[" << circuit.n_qubits() << "] q;\n";

  const auto layer = circuit.basis_layer();
  const auto emit_layer = [&](bool adjoint) {
    static constexpr const char* kNames[4] = {nullptr, "s", "z", "sdg"};
    for (std::size_t q = 0; q < layer.size(); ++q) {
      const unsigned k = adjoint ? (4 - layer[q]) % 4 : layer[q];
      if (k != 0) {
        out << kNames[k] << " " << qasm_qubit(static_cast<Qubit>(q)) << ";\n";
      }
    }
  };
  emit_layer(false);
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::swap) {
      out << "swap " << qasm_qubit(g.control) << ", " << qasm_qubit(g.target) << ";\n";
    } else {
      out << to_string(g.kind) << "(" << g.angle.to_string() << ") "
          << qasm_qubit(g.control) << ", " << qasm_qubit(g.target) << ";\n";
    }
  }
  emit_layer(true);
  return out.str();
}

std::string to_ascii(const Circuit& circuit) {
  const std::size_t n = circuit.n_qubits();
  // Column placement: a gate occupies every row between its two qubits.
  std::vector<std::size_t> free_from(n, 0);
  std::vector<std::vector<std::string>> cells;
  for (const Gate& g : circuit.gates()) {
    const Qubit lo = std::min(g.control, g.target);
    const Qubit hi = std::max(g.control, g.target);
    std::size_t col = 0;
    for (Qubit q = lo; q <= hi; ++q) {
      col = std::max(col, free_from[q]);
    }
    for (Qubit q = lo; q <= hi; ++q) {
      free_from[q] = col + 1;
    }
    if (cells.size() <= col) {
      cells.resize(col + 1, std::vector<std::string>(n));
    }
    auto& column = cells[col];
    for (Qubit q = lo + 1; q < hi; ++q) {
      column[q] = "┼";
    }
    if (g.kind == GateKind::swap) {
      column[g.control] = column[g.target] = "×";
    } else {
      column[g.control] = "●";
      column[g.target] = "[" + g.angle.to_string() + "]";
    }
  }

  const std::string label_pad = std::to_string(n > 0 ? n - 1 : 0);
  std::vector<std::string> rows(n);
  for (std::size_t q = 0; q < n; ++q) {
    std::string name = "q" + std::to_string(q) + ":";
    name.append(label_pad.size() + 3 - name.size(), ' ');
    rows[q] = name + "─";
  }
  for (const auto& column : cells) {
    std::size_t width = 1;
    for (const auto& cell : column) {
      width = std::max(width, text_width(cell));
    }
    for (std::size_t q = 0; q < n; ++q) {
      const std::string& cell = column[q].empty() ? std::string("─") : column[q];
      const std::size_t pad = width - text_width(cell);
      std::string row = "─";
      for (std::size_t i = 0; i < pad / 2; ++i) {
        row += "─";
      }
      row += cell;
      for (std::size_t i = 0; i < pad - pad / 2; ++i) {
        row += "─";
      }
      rows[q] += row + "─";
    }
  }
  std::string out;
  for (const auto& row : rows) {
    out += row + "\n";
  }
  return out;
}

} // namespace tforge
