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

#include "tforge/angle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace tforge {

namespace {

std::int64_t checked_shift(std::int64_t value, std::uint32_t shift) {
  if (shift == 0 || value == 0) {
    return value;
  }
  std::int64_t out = 0;
  if (shift >= 63 ||
      __builtin_mul_overflow(value, std::int64_t{1} << shift, &out)) {
    throw std::overflow_error("dyadic angle numerator overflow");
  }
  return out;
}

} // namespace

DyadicAngle::DyadicAngle(std::int64_t numerator, std::uint32_t denom_exp)
    : numerator_(numerator), denom_exp_(denom_exp) {
  if (denom_exp_ > kMaxDenomExp) {
    throw std::overflow_error("dyadic angle exponent out of range");
  }
  if (numerator_ == 0) {
    denom_exp_ = 0;
    return;
  }
  while (denom_exp_ > 0 && numerator_ % 2 == 0) {
    numerator_ /= 2;
    --denom_exp_;
  }
}

DyadicAngle DyadicAngle::pi_over_pow2(std::uint32_t e, bool negative) {
  return {negative ? -1 : 1, e};
}

double DyadicAngle::radians() const noexcept {
  return std::ldexp(static_cast<double>(numerator_) * std::numbers::pi,
                    -static_cast<int>(denom_exp_));
}

std::string DyadicAngle::to_string() const {
  if (numerator_ == 0) {
    return "0";
  }
  std::string out = numerator_ < 0 ? "-" : "";
  const auto magnitude = numerator_ < 0
                             ? -static_cast<unsigned long long>(numerator_)
                             : static_cast<unsigned long long>(numerator_);
  if (magnitude != 1) {
    out += std::to_string(magnitude) + "*";
  }
  out += "pi";
  if (denom_exp_ > 62) {
    out += "/2**" + std::to_string(denom_exp_);
  } else if (denom_exp_ > 0) {
    out += "/" + std::to_string(std::uint64_t{1} << denom_exp_);
  }
  return out;
}

DyadicAngle DyadicAngle::operator-() const {
  if (numerator_ == std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("dyadic angle negation overflow");
  }
  DyadicAngle out;
  out.numerator_ = -numerator_;
  out.denom_exp_ = denom_exp_;
  return out;
}

DyadicAngle& DyadicAngle::operator+=(const DyadicAngle& other) {
  const std::uint32_t exp = std::max(denom_exp_, other.denom_exp_);
  const std::int64_t lhs = checked_shift(numerator_, exp - denom_exp_);
  const std::int64_t rhs = checked_shift(other.numerator_, exp - other.denom_exp_);
  std::int64_t sum = 0;
  if (__builtin_add_overflow(lhs, rhs, &sum)) {
    throw std::overflow_error("dyadic angle numerator overflow");
  }
  *this = DyadicAngle(sum, exp);
  return *this;
}

DyadicAngle& DyadicAngle::operator-=(const DyadicAngle& other) {
  return *this += -other;
}

DyadicAngle angle_add(const DyadicAngle& a, const DyadicAngle& b) {
  return a + b;
}

std::ostream& operator<<(std::ostream& os, const DyadicAngle& angle) {
  return os << angle.to_string();
}

} // namespace tforge
