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

#include <cstdint>
#include <iosfwd>
#include <string>

namespace tforge {

/**
 * An exact rotation angle of the form numerator * pi / 2^denom_exp.
 *
 * Values are always kept canonical: a zero angle has denom_exp == 0, and a
 * non-zero angle has an odd numerator unless denom_exp == 0. Arithmetic is
 * exact; any result that does not fit in 64-bit integers throws
 * std::overflow_error instead of rounding.
 */
class DyadicAngle {
public:
  /// Largest exponent accepted (pi / 2^1023 is still a normal double).
  static constexpr std::uint32_t kMaxDenomExp = 1023;

  constexpr DyadicAngle() = default;
  DyadicAngle(std::int64_t numerator, std::uint32_t denom_exp);

  /// pi / 2^e, or its negation.
  static DyadicAngle pi_over_pow2(std::uint32_t e, bool negative = false);
  static DyadicAngle pi() { return {1, 0}; }

  [[nodiscard]] std::int64_t numerator() const noexcept { return numerator_; }
  [[nodiscard]] std::uint32_t denom_exp() const noexcept { return denom_exp_; }
  [[nodiscard]] bool is_zero() const noexcept { return numerator_ == 0; }

  /// Floating value in radians. Only the simulator should need this.
  [[nodiscard]] double radians() const noexcept;

  /// Renders as "0", "pi", "-pi/8", "3*pi/4", ...; denominators beyond
  /// 2^62 are written as "pi/2**e".
  [[nodiscard]] std::string to_string() const;

  DyadicAngle operator-() const;
  DyadicAngle& operator+=(const DyadicAngle& other);
  DyadicAngle& operator-=(const DyadicAngle& other);

  friend DyadicAngle operator+(DyadicAngle a, const DyadicAngle& b) { return a += b; }
  friend DyadicAngle operator-(DyadicAngle a, const DyadicAngle& b) { return a -= b; }
  friend bool operator==(const DyadicAngle&, const DyadicAngle&) = default;

private:
  std::int64_t numerator_ = 0;
  std::uint32_t denom_exp_ = 0;
};

/// Exact canonical sum. Same as a + b; kept as a named operation for callers
/// that prefer a function.
DyadicAngle angle_add(const DyadicAngle& a, const DyadicAngle& b);

std::ostream& operator<<(std::ostream& os, const DyadicAngle& angle);

} // namespace tforge
