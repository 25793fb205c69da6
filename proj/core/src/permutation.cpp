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

#include "tforge/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace tforge {

Permutation::Permutation(std::vector<Qubit> mapping)
    : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (const Qubit q : mapping_) {
    if (q >= mapping_.size() || seen[q]) {
      throw std::invalid_argument("permutation is not a bijection");
    }
    seen[q] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Qubit> mapping(n);
  std::iota(mapping.begin(), mapping.end(), Qubit{0});
  return Permutation(std::move(mapping));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t p = 0; p < mapping_.size(); ++p) {
    if (mapping_[p] != p) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Qubit> out(mapping_.size());
  for (std::size_t p = 0; p < mapping_.size(); ++p) {
    out[mapping_[p]] = static_cast<Qubit>(p);
  }
  return Permutation(std::move(out));
}

void Permutation::swap_positions(Qubit a, Qubit b) {
  if (a >= mapping_.size() || b >= mapping_.size()) {
    throw std::out_of_range("swap position out of range");
  }
  std::swap(mapping_[a], mapping_[b]);
}

} // namespace tforge
