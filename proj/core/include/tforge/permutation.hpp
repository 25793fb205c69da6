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

#include <cstddef>
#include <span>
#include <vector>

namespace tforge {

/// Bijection over [0, n). Position p holds logical qubit mapping()[p].
class Permutation {
public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `mapping` is a bijection on [0, n).
  explicit Permutation(std::vector<Qubit> mapping);

  static Permutation identity(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return mapping_.size(); }
  [[nodiscard]] Qubit operator[](std::size_t position) const {
    return mapping_.at(position);
  }
  [[nodiscard]] std::span<const Qubit> mapping() const noexcept {
    return mapping_;
  }
  [[nodiscard]] bool is_identity() const noexcept;
  [[nodiscard]] Permutation inverse() const;

  /// Exchanges the logical qubits held at two positions.
  void swap_positions(Qubit a, Qubit b);

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<Qubit> mapping_;
};

} // namespace tforge
