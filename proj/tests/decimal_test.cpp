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

#include "morphplan/decimal.hpp"

#include <random>
#include <string>

#include "gtest/gtest.h"

namespace morphplan {
namespace {

TEST(TenthsTest, ParsesOneFractionalDigitExactly) {
  EXPECT_EQ(parse_tenths("3.6").raw(), 36);
  EXPECT_EQ(parse_tenths("17.5").raw(), 175);
  EXPECT_EQ(parse_tenths("19.0").raw(), 190);
  EXPECT_EQ(parse_tenths("0").raw(), 0);
  EXPECT_EQ(parse_tenths("12").raw(), 120);
  EXPECT_EQ(parse_tenths("-2.5").raw(), -25);
}

TEST(TenthsTest, RejectsMalformedDecimals) {
  for (const char* bad : {"", ".5", "1.", "1.25", "abc", "1,5", "1.x", "-", "1e3"})
    EXPECT_THROW(parse_tenths(bad), SchemaError) << bad;
}

TEST(TenthsTest, FormatsWithExactlyOneFractionalDigit) {
  EXPECT_EQ(format_tenths(Tenths(170)), "17.0");
  EXPECT_EQ(format_tenths(Tenths(36)), "3.6");
  EXPECT_EQ(format_tenths(Tenths(0)), "0.0");
  EXPECT_EQ(format_tenths(Tenths(5)), "0.5");
  EXPECT_EQ(format_tenths(Tenths(-25)), "-2.5");
}

TEST(TenthsTest, FormatParseRoundTripIsLossless) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-1'000'000, 1'000'000);
  for (int i = 0; i < 5000; ++i) {
    const Tenths t(dist(rng));
    ASSERT_EQ(parse_tenths(format_tenths(t)), t);
  }
}

}  // namespace
}  // namespace morphplan
