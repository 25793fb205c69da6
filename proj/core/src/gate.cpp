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

#include "tforge/gate.hpp"

#include <ostream>
#include <stdexcept>

namespace tforge {

std::string_view to_string(GateKind kind) noexcept {
  switch (kind) {
  case GateKind::crx:
    return "crx";
  case GateKind::cprx:
    return "cprx";
  case GateKind::swap:
    return "swap";
  }
  return "?";
}

Gate Gate::crx(DyadicAngle angle, Qubit control, Qubit target) {
  if (control == target) {
    throw std::invalid_argument("crx: control equals target");
  }
  return {GateKind::crx, control, target, angle};
}

Gate Gate::cprx(DyadicAngle angle, Qubit control, Qubit target) {
  if (control == target) {
    throw std::invalid_argument("cprx: control equals target");
  }
  return {GateKind::cprx, control, target, angle};
}

Gate Gate::swap(Qubit a, Qubit b) {
  if (a == b) {
    throw std::invalid_argument("swap: both qubits are equal");
  }
  return {GateKind::swap, a, b, DyadicAngle{}};
}

Gate Gate::adjoint() const {
  Gate out = *this;
  if (is_rotation()) {
    out.angle = -angle;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Gate& gate) {
  if (gate.kind == GateKind::swap) {
    return os << "swap(" << gate.control << ", " << gate.target << ")";
  }
  return os << to_string(gate.kind) << "(" << gate.angle << ", "
            << gate.control << "->" << gate.target << ")";
}

} // namespace tforge
