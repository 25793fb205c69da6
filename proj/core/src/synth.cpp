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

#include "tforge/synth.hpp"

#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tforge {

namespace {

void require_width(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("n must be >= 2");
  }
  if (n > DyadicAngle::kMaxDenomExp) {
    throw std::invalid_argument("n too large for exact angles");
  }
}

// Wires are 1-based here to keep the column formulas readable.
Gate rot(std::int64_t sign, std::size_t exp, std::size_t control,
         std::size_t target) {
  return Gate::crx(DyadicAngle(sign, static_cast<std::uint32_t>(exp)),
                   static_cast<Qubit>(control - 1),
                   static_cast<Qubit>(target - 1));
}

class SectionBuilder {
public:
  explicit SectionBuilder(std::size_t n) : n_(n) {}

  void open(SectionLabel label) {
    sections_.push_back({label, gates_.size(), gates_.size()});
  }
  void add(const Gate& g) {
    gates_.push_back(g);
    sections_.back().end = gates_.size();
  }
  Circuit finish() && {
    return Circuit(n_, std::move(gates_), std::move(sections_));
  }

private:
  std::size_t n_;
  std::vector<Gate> gates_;
  std::vector<Section> sections_;
};

// C^{|controls|} Rx(sign * pi) onto `target`, expanded recursively.
void emit_recursive(std::span<const Qubit> controls, Qubit target,
                    std::int64_t sign, std::vector<Gate>& out) {
  const std::size_t k = controls.size();
  if (k == 1) {
    out.push_back(Gate::crx(DyadicAngle(sign, 0), controls[0], target));
    return;
  }
  // Rotations onto the target before the cascade: control controls[i]
  // (wire a_{i+1}) contributes pi/2^{k-i} for i >= 1, and a_1 repeats the
  // smallest angle pi/2^{k-1}.
  std::vector<Gate> before;
  for (std::size_t i = k - 1; i >= 1; --i) {
    before.push_back(Gate::crx(
        DyadicAngle(sign, static_cast<std::uint32_t>(k - i)), controls[i], target));
  }
  before.push_back(Gate::crx(DyadicAngle(sign, static_cast<std::uint32_t>(k - 1)),
                             controls[0], target));

  // Cascade: C^{m-1}Rx(pi) onto controls[m-1] for m = k down to 2.
  std::vector<Gate> cascade;
  for (std::size_t m = k; m >= 2; --m) {
    emit_recursive(controls.first(m - 1), controls[m - 1], 1, cascade);
  }

  out.insert(out.end(), before.begin(), before.end());
  out.insert(out.end(), cascade.begin(), cascade.end());
  for (std::size_t i = 1; i < k; ++i) {
    out.push_back(Gate::crx(
        DyadicAngle(-sign, static_cast<std::uint32_t>(k - i)), controls[i], target));
  }
  for (auto it = cascade.rbegin(); it != cascade.rend(); ++it) {
    out.push_back(it->adjoint());
  }
}

} // namespace

std::size_t toffoli_gate_count(std::size_t n) {
  return 2 * n * n - 6 * n + 5;
}

Circuit synth_toffoli(std::size_t n) {
  require_width(n);
  SectionBuilder b(n);

  b.open(SectionLabel::c1);
  for (std::size_t k = n - 1; k >= 2; --k) {
    for (std::size_t j = k + 1; j <= n; ++j) {
      b.add(rot(1, j - k, k, j));
    }
  }

  b.open(SectionLabel::c2);
  b.add(rot(1, 0, 1, 2));
  for (std::size_t j = 3; j <= n; ++j) {
    b.add(rot(1, j - 2, 1, j));
  }

  b.open(SectionLabel::c3);
  for (std::size_t k = 2; k + 1 <= n; ++k) {
    for (std::size_t j = k + 1; j <= n; ++j) {
      b.add(rot(-1, j - k, k, j));
    }
  }

  b.open(SectionLabel::c4);
  for (std::size_t k = n - 2; k >= 2 && n >= 4; --k) {
    for (std::size_t j = k + 1; j + 1 <= n; ++j) {
      b.add(rot(1, j - k, k, j));
    }
  }

  b.open(SectionLabel::c5);
  if (n >= 3) {
    b.add(rot(-1, 0, 1, 2));
    for (std::size_t j = 3; j + 1 <= n; ++j) {
      b.add(rot(-1, j - 2, 1, j));
    }
  }

  b.open(SectionLabel::c6);
  for (std::size_t k = 2; k + 2 <= n; ++k) {
    for (std::size_t j = k + 1; j + 1 <= n; ++j) {
      b.add(rot(-1, j - k, k, j));
    }
  }

  return std::move(b).finish();
}

Circuit synth_recursive(std::size_t n) {
  require_width(n);
  std::vector<Qubit> controls(n - 1);
  std::iota(controls.begin(), controls.end(), Qubit{0});
  std::vector<Gate> gates;
  emit_recursive(controls, static_cast<Qubit>(n - 1), 1, gates);
  return Circuit(n, std::move(gates));
}

Circuit truncate_rotations(const Circuit& circuit, std::uint32_t kmax) {
  const auto keep = [kmax](const Gate& g) {
    return !g.is_rotation() || g.angle.denom_exp() <= kmax;
  };
  std::vector<Gate> gates;
  std::vector<Section> sections;
  if (circuit.has_sections()) {
    for (const Section& s : circuit.sections()) {
      Section kept{s.label, gates.size(), gates.size()};
      for (const Gate& g : circuit.section_gates(s.label)) {
        if (keep(g)) {
          gates.push_back(g);
        }
      }
      kept.end = gates.size();
      sections.push_back(kept);
    }
  } else {
    for (const Gate& g : circuit.gates()) {
      if (keep(g)) {
        gates.push_back(g);
      }
    }
  }
  const auto layer = circuit.basis_layer();
  return Circuit(circuit.n_qubits(), std::move(gates), std::move(sections),
                 {layer.begin(), layer.end()});
}

Circuit synth_approx(std::size_t n, std::uint32_t kmax) {
  if (kmax == 0) {
    throw std::invalid_argument("kmax must be >= 1");
  }
  return truncate_rotations(synth_toffoli(n), kmax);
}

Circuit basis_conjugate(const Circuit& circuit) {
  Circuit out = circuit;
  out.set_basis_layer(
      std::vector<std::uint8_t>(circuit.n_qubits(), kHatBasisExponent));
  return out;
}

Circuit synthesize(const SynthConfig& config) {
  if (config.approx_kmax && *config.approx_kmax == 0) {
    throw std::invalid_argument("kmax must be >= 1");
  }
  Circuit c = config.variant == SynthVariant::flat
                  ? synth_toffoli(config.n)
                  : synth_recursive(config.n);
  if (config.approx_kmax) {
    c = truncate_rotations(c, *config.approx_kmax);
  }
  if (config.basis_wrap) {
    c = basis_conjugate(c);
  }
  return c;
}

} // namespace tforge
