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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tforge {

enum class Construction : std::uint8_t { paper, recursive, barenco, approx };
enum class Arch : std::uint8_t { full, line };

std::string_view to_string(Construction c) noexcept;
std::string_view to_string(Arch a) noexcept;

/// One metrics line; CSV column order follows the field order.
struct BenchRow {
  std::size_t n = 0;
  Construction construction = Construction::paper;
  Arch arch = Arch::full;
  /// Rotation gates (CRX, or CPRX for the Barenco baseline).
  std::size_t crx_count = 0;
  std::size_t swap_count = 0;
  std::size_t depth = 0;
  /// 8n-20, only for the exact construction on the full architecture, n >= 4.
  std::optional<std::size_t> formula_depth;
  std::size_t formula_size = 0;
  bool matches_formula = false;
  /// Per-group depths (schedule groups, or routed groups including restores).
  std::vector<std::pair<std::string, std::size_t>> groups;
};

struct BenchOptions {
  std::size_t n_min = 4;
  std::size_t n_max = 8;
  bool full = true;
  bool line = true;
  /// Largest n for the exponential constructions (recursive, barenco).
  std::size_t exponential_max = 12;
};

/// ceil(log2 n), the truncation level used for the approx rows.
std::uint32_t approx_kmax(std::size_t n) noexcept;

/**
 * Rows ordered by (n, construction, arch). Line rows exist only for the
 * sectioned constructions (paper, approx). Barenco depth is its serial
 * depth (gate count). Throws std::invalid_argument if n_min < 2 or
 * n_min > n_max.
 */
std::vector<BenchRow> run_bench(const BenchOptions& options);

BenchRow bench_row(std::size_t n, Construction construction, Arch arch);

std::string bench_csv_header();
std::string bench_csv_line(const BenchRow& row);
std::string bench_csv(const std::vector<BenchRow>& rows);
/// n,construction,arch,group,depth
std::string bench_groups_csv(const std::vector<BenchRow>& rows);

} // namespace tforge
