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

#include "tforge/angle.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string_view>

namespace tforge {

/// Qubit index, 0-based. Wire a_i of the usual 1-based notation is index i-1.
using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t {
  /// Controlled Rx(theta), Rx(theta) = exp(-i theta X / 2).
  crx,
  /// Controlled e^{i theta/2} Rx(theta). At theta = pi this is exactly CNOT.
  cprx,
  swap,
};

std::string_view to_string(GateKind kind) noexcept;

/**
 * A 2-qubit gate on explicit qubit indices.
 *
 * For SWAP, `control` and `target` simply name the two exchanged qubits and
 * `angle` is zero.
 */
struct Gate {
  GateKind kind = GateKind::crx;
  Qubit control = 0;
  Qubit target = 0;
  DyadicAngle angle;

  static Gate crx(DyadicAngle angle, Qubit control, Qubit target);
  static Gate cprx(DyadicAngle angle, Qubit control, Qubit target);
  static Gate swap(Qubit a, Qubit b);

  [[nodiscard]] bool is_rotation() const noexcept {
    return kind != GateKind::swap;
  }
  [[nodiscard]] std::array<Qubit, 2> qubits() const noexcept {
    return {control, target};
  }
  [[nodiscard]] bool acts_on(Qubit q) const noexcept {
    return control == q || target == q;
  }
  [[nodiscard]] bool shares_qubit(const Gate& other) const noexcept {
    return acts_on(other.control) || acts_on(other.target);
  }
  [[nodiscard]] Gate adjoint() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

std::ostream& operator<<(std::ostream& os, const Gate& gate);

} // namespace tforge
