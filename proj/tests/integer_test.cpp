// Copyright 2026 The pnrepair Authors
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


#include "pnrepair/integer.hpp"

#include <cstdint>
#include <limits>
#include <random>

#include <gtest/gtest.h>

namespace pnrepair {
namespace {

TEST(IntegerTest, SmallArithmetic) {
  Integer a = 7;
  Integer b = -3;
  EXPECT_EQ(a + b, Integer(4));
  EXPECT_EQ(a - b, Integer(10));
  EXPECT_EQ(a * b, Integer(-21));
  EXPECT_EQ(a / b, Integer(-2));
  EXPECT_EQ(a % b, Integer(1));
  EXPECT_LT(b, a);
  EXPECT_EQ(abs(b), Integer(3));
}

TEST(IntegerTest, OverflowPromotesAndDemotes) {
  const Integer max = std::numeric_limits<std::int64_t>::max();
  Integer big = max + Integer(1);
  EXPECT_FALSE(big.is_small());
  EXPECT_EQ(big.to_string(), "9223372036854775808");
  Integer back = big - Integer(1);
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, max);

  Integer square = big * big;
  EXPECT_EQ(square.to_string(), "85070591730234615865843651857942052864");
  EXPECT_EQ(divide_exact(square, big), big);
}

TEST(IntegerTest, MinValueNegationPromotes) {
  const Integer min = std::numeric_limits<std::int64_t>::min();
  Integer neg = -min;
  EXPECT_FALSE(neg.is_small());
  EXPECT_EQ(neg.to_string(), "9223372036854775808");
  EXPECT_EQ(-neg, min);
  EXPECT_TRUE((-neg).is_small());
}

TEST(IntegerTest, ParseAndCompareAcrossRepresentations) {
  Integer huge = Integer::parse("-123456789012345678901234567890");
  EXPECT_EQ(huge.sign(), -1);
  EXPECT_LT(huge, Integer(std::numeric_limits<std::int64_t>::min()));
  EXPECT_EQ(Integer::parse("42"), Integer(42));
  EXPECT_THROW(Integer::parse("4x2"), std::invalid_argument);
}

TEST(IntegerTest, GcdAndExactDivision) {
  EXPECT_EQ(gcd(Integer(12), Integer(-18)), Integer(6));
  EXPECT_EQ(gcd(Integer(0), Integer(5)), Integer(5));
  EXPECT_EQ(gcd(Integer(0), Integer(0)), Integer(0));
  EXPECT_THROW(divide_exact(Integer(7), Integer(2)), std::logic_error);
}

// Agreement with __int128 on random operands near the 64-bit boundary.
TEST(IntegerTest, RandomAgreementWithWideArithmetic) {
  std::mt19937_64 rng(20260101);
  auto to_int128 = [](const Integer& v) {
    return static_cast<__int128>(std::stoll(v.to_string()));
  };
  for (int i = 0; i < 2000; ++i) {
    auto a = static_cast<std::int64_t>(rng()) >> (rng() % 40);
    auto b = static_cast<std::int64_t>(rng()) >> (rng() % 40);
    __int128 sum = static_cast<__int128>(a) + b;
    Integer s = Integer(a) + Integer(b);
    if (s.is_small()) EXPECT_EQ(to_int128(s), sum);
    __int128 product = static_cast<__int128>(a) * b;
    Integer p = Integer(a) * Integer(b);
    if (p.is_small()) {
      EXPECT_EQ(to_int128(p), product);
    } else {
      EXPECT_TRUE(product > std::numeric_limits<std::int64_t>::max() ||
                  product < std::numeric_limits<std::int64_t>::min());
    }
    if (b != 0) {
      EXPECT_EQ(Integer(a) / Integer(b) * Integer(b) + Integer(a) % Integer(b), Integer(a));
    }
  }
}

}  // namespace
}  // namespace pnrepair
