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

#include "tforge/circuit.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace tforge {

namespace {

constexpr std::array<std::string_view, kSectionCount> kSectionNames = {
    "C1", "C2", "C3", "C4", "C5", "C6"};

} // namespace

std::string_view to_string(SectionLabel label) noexcept {
  return kSectionNames[static_cast<std::size_t>(label)];
}

std::optional<SectionLabel> parse_section_label(std::string_view text) noexcept {
  for (std::size_t i = 0; i < kSectionCount; ++i) {
    if (kSectionNames[i] == text) {
      return static_cast<SectionLabel>(i);
    }
  }
  return std::nullopt;
}

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0) {
    throw std::invalid_argument("circuit needs at least one qubit");
  }
}

Circuit::Circuit(std::size_t n_qubits, std::vector<Gate> gates,
                 std::vector<Section> sections,
                 std::vector<std::uint8_t> basis_layer)
    : Circuit(n_qubits) {
  for (const Gate& g : gates) {
    check_gate(g);
  }
  gates_ = std::move(gates);
  set_sections(std::move(sections));
  set_basis_layer(std::move(basis_layer));
}

void Circuit::check_gate(const Gate& gate) const {
  if (gate.control >= n_qubits_ || gate.target >= n_qubits_) {
    throw std::invalid_argument("gate qubit index out of range for " +
                                std::to_string(n_qubits_) + " qubits");
  }
  if (gate.control == gate.target) {
    throw std::invalid_argument("gate acts twice on the same qubit");
  }
  if (gate.kind == GateKind::swap && !gate.angle.is_zero()) {
    throw std::invalid_argument("swap gate carries an angle");
  }
}

std::span<const Gate> Circuit::section_gates(SectionLabel label) const {
  for (const Section& s : sections_) {
    if (s.label == label) {
      return std::span<const Gate>(gates_).subspan(s.begin, s.size());
    }
  }
  return {};
}

void Circuit::append(const Gate& gate) {
  if (!sections_.empty()) {
    throw std::logic_error("cannot append to a sectioned circuit");
  }
  check_gate(gate);
  gates_.push_back(gate);
}

void Circuit::set_sections(std::vector<Section> sections) {
  if (!sections.empty()) {
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < sections.size(); ++i) {
      const Section& s = sections[i];
      if (i > 0 && s.label <= sections[i - 1].label) {
        throw std::invalid_argument("sections are not ordered C1..C6");
      }
      if (s.begin != cursor || s.end < s.begin) {
        throw std::invalid_argument("sections are not contiguous");
      }
      cursor = s.end;
    }
    if (cursor != gates_.size()) {
      throw std::invalid_argument("sections do not cover every gate");
    }
  }
  sections_ = std::move(sections);
}

void Circuit::set_basis_layer(std::vector<std::uint8_t> exponents) {
  if (!exponents.empty() && exponents.size() != n_qubits_) {
    throw std::invalid_argument("basis layer needs one entry per qubit");
  }
  for (auto& k : exponents) {
    k %= 4;
  }
  basis_layer_ = std::move(exponents);
}

Circuit inverse(const Circuit& circuit) {
  std::vector<Gate> gates;
  gates.reserve(circuit.size());
  for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
    gates.push_back(it->adjoint());
  }
  const auto layer = circuit.basis_layer();
  return Circuit(circuit.n_qubits(), std::move(gates), {},
                 {layer.begin(), layer.end()});
}

Circuit permute_outputs(const Circuit& circuit, const Permutation& p) {
  if (p.size() != circuit.n_qubits()) {
    throw std::invalid_argument("permutation size does not match circuit width");
  }
  std::vector<Gate> gates;
  gates.reserve(circuit.size());
  for (Gate g : circuit.gates()) {
    g.control = p[g.control];
    g.target = p[g.target];
    gates.push_back(g);
  }
  std::vector<std::uint8_t> layer;
  if (circuit.has_basis_layer()) {
    layer.resize(circuit.n_qubits());
    for (std::size_t q = 0; q < circuit.n_qubits(); ++q) {
      layer[p[q]] = circuit.basis_layer()[q];
    }
  }
  const auto sections = circuit.sections();
  return Circuit(circuit.n_qubits(), std::move(gates),
                 {sections.begin(), sections.end()}, std::move(layer));
}

std::size_t count_kind(const Circuit& circuit, GateKind kind) {
  return static_cast<std::size_t>(
      std::count_if(circuit.gates().begin(), circuit.gates().end(),
                    [kind](const Gate& g) { return g.kind == kind; }));
}

std::size_t program_order_depth(const Circuit& circuit) {
  std::vector<std::size_t> busy_until(circuit.n_qubits(), 0);
  std::size_t depth = 0;
  for (const Gate& g : circuit.gates()) {
    const std::size_t layer =
        std::max(busy_until[g.control], busy_until[g.target]) + 1;
    busy_until[g.control] = busy_until[g.target] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

} // namespace tforge
