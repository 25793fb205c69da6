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

#include "tforge/bench.hpp"

#include "tforge/baseline.hpp"
#include "tforge/route.hpp"
#include "tforge/sched.hpp"
#include "tforge/synth.hpp"

#include <bit>
#include <stdexcept>

namespace tforge {

namespace {

const char* const kGroupNames[] = {"C1+C2", "C3", "C4+C5", "C6"};

Circuit build(std::size_t n, Construction construction) {
  switch (construction) {
  case Construction::paper:
    return synth_toffoli(n);
  case Construction::recursive:
    return synth_recursive(n);
  case Construction::barenco:
    return barenco_toffoli(n);
  case Construction::approx:
    return synth_approx(n, approx_kmax(n));
  }
  throw std::invalid_argument("unknown construction");
}

} // namespace

std::string_view to_string(Construction c) noexcept {
  switch (c) {
  case Construction::paper:
    return "paper";
  case Construction::recursive:
    return "recursive";
  case Construction::barenco:
    return "barenco";
  case Construction::approx:
    return "approx";
  }
  return "?";
}

std::string_view to_string(Arch a) noexcept {
  return a == Arch::full ? "full" : "line";
}

std::uint32_t approx_kmax(std::size_t n) noexcept {
  if (n <= 1) {
    return 1;
  }
  return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::bit_width(n - 1)));
}

BenchRow bench_row(std::size_t n, Construction construction, Arch arch) {
  BenchRow row;
  row.n = n;
  row.construction = construction;
  row.arch = arch;
  row.formula_size = toffoli_gate_count(n);

  const Circuit c = build(n, construction);
  if (arch == Arch::line) {
    const RoutedCircuit routed = route_circuit(c);
    const RoutedMetrics m = routed_metrics(routed);
    row.crx_count = m.crx_count;
    row.swap_count = m.swap_count;
    row.depth = m.depth;
    row.groups = m.per_group_depths;
  } else {
    row.crx_count = c.size() - count_kind(c, GateKind::swap);
    row.swap_count = count_kind(c, GateKind::swap);
    if (construction == Construction::barenco) {
      row.depth = c.size();
      row.groups.emplace_back("serial", row.depth);
    } else {
      const Schedule s = asap_schedule(c);
      row.depth = depth(s);
      const auto depths = s.group_depths();
      for (std::size_t i = 0; i < depths.size(); ++i) {
        row.groups.emplace_back(depths.size() == 4 ? kGroupNames[i] : "all", depths[i]);
      }
    }
    if (construction == Construction::paper && n >= 4) {
      row.formula_depth = 8 * n - 20;
    }
  }
  row.matches_formula = row.crx_count == row.formula_size &&
                        (!row.formula_depth || row.depth == *row.formula_depth);
  return row;
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  if (options.n_min < 2 || options.n_min > options.n_max) {
    throw std::invalid_argument("need 2 <= n-min <= n-max");
  }
  std::vector<BenchRow> rows;
  for (std::size_t n = options.n_min; n <= options.n_max; ++n) {
    for (const Construction c : {Construction::paper, Construction::recursive,
                                 Construction::barenco, Construction::approx}) {
      const bool exponential = c == Construction::recursive || c == Construction::barenco;
      if (exponential && n > std::min(options.exponential_max, kBarencoMaxQubits)) {
        continue;
      }
      if (options.full) {
        rows.push_back(bench_row(n, c, Arch::full));
      }
      if (options.line && !exponential && n >= 3) {
        rows.push_back(bench_row(n, c, Arch::line));
      }
    }
  }
  return rows;
}

std::string bench_csv_header() {
  return "n,construction,arch,crx_count,swap_count,depth,formula_depth,formula_size,"
         "matches_formula\n";
}

std::string bench_csv_line(const BenchRow& row) {
  std::string out = std::to_string(row.n);
  out += ",";
  out += to_string(row.construction);
  out += ",";
  out += to_string(row.arch);
  out += "," + std::to_string(row.crx_count);
  out += "," + std::to_string(row.swap_count);
  out += "," + std::to_string(row.depth);
  out += "," + (row.formula_depth ? std::to_string(*row.formula_depth) : std::string());
  out += "," + std::to_string(row.formula_size);
  out += row.matches_formula ? ",true\n" : ",false\n";
  return out;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = bench_csv_header();
  for (const BenchRow& row : rows) {
    out += bench_csv_line(row);
  }
  return out;
}

std::string bench_groups_csv(const std::vector<BenchRow>& rows) {
  std::string out = "n,construction,arch,group,depth\n";
  for (const BenchRow& row : rows) {
    for (const auto& [label, d] : row.groups) {
      out += std::to_string(row.n) + "," + std::string(to_string(row.construction)) + "," +
             std::string(to_string(row.arch)) + "," + label + "," + std::to_string(d) + "\n";
    }
  }
  return out;
}

} // namespace tforge
