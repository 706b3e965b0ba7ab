// Copyright 2026 The morphplan Authors
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

#ifndef MORPHPLAN_DECIMAL_HPP
#define MORPHPLAN_DECIMAL_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "morphplan/errors.hpp"

namespace morphplan {

/// Fixed-point quantity in tenths of a unit: 3.6 is stored as 36.
///
/// Every profit, cost and budget in the library is a Tenths value so that
/// solvers compare and sum exactly.
class Tenths {
 public:
  constexpr Tenths() = default;
  constexpr explicit Tenths(std::int64_t raw) : raw_(raw) {}

  constexpr std::int64_t raw() const { return raw_; }

  constexpr Tenths& operator+=(Tenths o) {
    raw_ += o.raw_;
    return *this;
  }
  constexpr Tenths& operator-=(Tenths o) {
    raw_ -= o.raw_;
    return *this;
  }
  friend constexpr Tenths operator+(Tenths a, Tenths b) { return a += b; }
  friend constexpr Tenths operator-(Tenths a, Tenths b) { return a -= b; }
  friend constexpr auto operator<=>(Tenths, Tenths) = default;

 private:
  std::int64_t raw_ = 0;
};

namespace literals {
constexpr Tenths operator""_t(unsigned long long raw) {
  return Tenths(static_cast<std::int64_t>(raw));
}
}  // namespace literals

/// Parses "17", "17.5" or "-3.0". At most one fractional digit is accepted,
/// so the conversion is exact.
inline Tenths parse_tenths(std::string_view text) {
  const std::string original(text);
  auto fail = [&](const char* why) -> Tenths {
    throw SchemaError("malformed decimal \"" + original + "\": " + why);
  };
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return fail("empty");
  constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 100;
  std::int64_t whole = 0;
  std::size_t i = 0;
  for (; i < text.size() && text[i] != '.'; ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') return fail("unexpected character");
    whole = whole * 10 + (c - '0');
    if (whole > kLimit) return fail("out of range");
  }
  if (i == 0) return fail("missing integer part");
  std::int64_t frac = 0;
  if (i < text.size()) {
    const std::string_view rest = text.substr(i + 1);
    if (rest.empty()) return fail("missing fractional digit");
    if (rest.size() > 1) return fail("more than one fractional digit");
    if (rest[0] < '0' || rest[0] > '9') return fail("unexpected character");
    frac = rest[0] - '0';
  }
  const std::int64_t raw = whole * 10 + frac;
  return Tenths(negative ? -raw : raw);
}

/// Always prints exactly one fractional digit: 170 -> "17.0".
inline std::string format_tenths(Tenths value) {
  std::int64_t raw = value.raw();
  std::string sign;
  if (raw < 0) {
    sign = "-";
    raw = -raw;
  }
  return sign + std::to_string(raw / 10) + "." + std::to_string(raw % 10);
}

}  // namespace morphplan

#endif  // MORPHPLAN_DECIMAL_HPP
