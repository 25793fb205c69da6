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

#pragma once

#include "tforge/gate.hpp"
#include "tforge/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace tforge {

/// The six regions C1..C6 of the flat Toffoli construction.
enum class SectionLabel : std::uint8_t { c1, c2, c3, c4, c5, c6 };

inline constexpr std::size_t kSectionCount = 6;

std::string_view to_string(SectionLabel label) noexcept;
std::optional<SectionLabel> parse_section_label(std::string_view text) noexcept;

/// Half-open gate index range [begin, end) tagged with its region.
struct Section {
  SectionLabel label = SectionLabel::c1;
  std::size_t begin = 0;
  std::size_t end = 0;

  [[nodiscard]] std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const Section&, const Section&) = default;
};

/**
 * Ordered list of 2-qubit gates over a fixed number of qubits.
 *
 * Optional metadata:
 *  - sections: contiguous, strictly ordered by label, covering every gate.
 *  - basis layer: one exponent k (mod 4) per wire; the circuit is then
 *    understood as D . gates . D^dagger with D = diag(1, i^k) applied to each
 *    wire before the gates.
 *
 * Every mutation validates qubit indices against n_qubits and throws
 * std::invalid_argument on violation.
 */
class Circuit {
public:
  static constexpr std::string_view kFormatVersion = "1";

  explicit Circuit(std::size_t n_qubits);
  Circuit(std::size_t n_qubits, std::vector<Gate> gates,
          std::vector<Section> sections = {},
          std::vector<std::uint8_t> basis_layer = {});

  [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
  [[nodiscard]] std::span<const Gate> gates() const noexcept { return gates_; }
  [[nodiscard]] const Gate& operator[](std::size_t i) const { return gates_.at(i); }
  [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
  [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }

  [[nodiscard]] std::span<const Section> sections() const noexcept {
    return sections_;
  }
  [[nodiscard]] bool has_sections() const noexcept { return !sections_.empty(); }
  /// Gates of one region; empty when the region is absent.
  [[nodiscard]] std::span<const Gate> section_gates(SectionLabel label) const;

  [[nodiscard]] std::span<const std::uint8_t> basis_layer() const noexcept {
    return basis_layer_;
  }
  [[nodiscard]] bool has_basis_layer() const noexcept {
    return !basis_layer_.empty();
  }

  /// Appends a gate. Not allowed once sections are attached.
  void append(const Gate& gate);
  void set_sections(std::vector<Section> sections);
  void clear_sections() noexcept { sections_.clear(); }
  void set_basis_layer(std::vector<std::uint8_t> exponents);

  friend bool operator==(const Circuit&, const Circuit&) = default;

private:
  void check_gate(const Gate& gate) const;

  std::size_t n_qubits_;
  std::vector<Gate> gates_;
  std::vector<Section> sections_;
  std::vector<std::uint8_t> basis_layer_;
};

/// Reversed gate order with every rotation angle negated. Sections are
/// dropped (their order no longer holds); the basis layer is kept.
Circuit inverse(const Circuit& circuit);

/// Relabels qubit i as p[i] in every gate (and in the basis layer).
Circuit permute_outputs(const Circuit& circuit, const Permutation& p);

std::size_t count_kind(const Circuit& circuit, GateKind kind);

/// Depth with gates kept in program order: each gate starts right after the
/// last gate touching either of its qubits.
std::size_t program_order_depth(const Circuit& circuit);

} // namespace tforge
