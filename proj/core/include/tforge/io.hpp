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

#include "tforge/circuit.hpp"
#include "tforge/route.hpp"
#include "tforge/sched.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace tforge {

/// Malformed or unsupported circuit document.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/*
 * Circuit JSON (version "1"):
 *
 *   { "version": "1", "n_qubits": N,
 *     "gates": [ {"kind":"crx","control":c,"target":t,"angle":{"num":s,"den_exp":e}},
 *                {"kind":"swap","a":i,"b":j}, ... ],
 *     "sections": [ {"label":"C1","start":0,"end":k}, ... ],
 *     "basis_layer": [3, 3, ...] }
 *
 * Qubit indices are 0-based; section ends are exclusive. "sections" and
 * "basis_layer" are omitted when absent.
 */
std::string circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(std::string_view text);

/// {"layers": [[...], ...], "group_barriers": [...], "depth": d,
///  "group_depths": [...]}
std::string schedule_to_json(const Schedule& schedule);

/// Circuit JSON of the routed circuit plus "layers" (gate index offsets),
/// "groups" and "trace": [{"layer":k,"layout":[...]}, ...].
std::string routed_to_json(const RoutedCircuit& routed);

/**
 * OpenQASM 3 text. Angles are written exactly ("pi/4", "-pi"); CPRX gates
 * get a custom definition in the prologue; a basis layer becomes s/z/sdg
 * gates before the body and their adjoints after it. Output depends only on
 * the circuit.
 */
std::string to_qasm(const Circuit& circuit);

/// One row per qubit, one column per layer: "●" control, "[angle]" target,
/// "×" swap, "┼" crossing wire.
std::string to_ascii(const Circuit& circuit);

} // namespace tforge
