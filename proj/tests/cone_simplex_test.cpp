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


#include "pnrepair/cone_simplex.hpp"

#include <random>

#include <gtest/gtest.h>

namespace pnrepair {
namespace {

std::vector<Integer> row(std::initializer_list<int> values) {
  std::vector<Integer> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer sum;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

TEST(ConeSimplexTest, EqualityPinsObjective) {
  ConeSimplex lp(2);
  lp.add_equality(row({1, -1}));
  lp.prepare();
  EXPECT_FALSE(lp.find_positive_ray(row({1, -1})).has_value());
  auto ray = lp.find_positive_ray(row({1, 0}));
  ASSERT_TRUE(ray.has_value());
  EXPECT_EQ(*ray, row({1, 1}));
}

TEST(ConeSimplexTest, InequalityAllowsBoundedRatio) {
  ConeSimplex lp(2);
  lp.add_inequality(row({-1, 2}));  // x <= 2y
  lp.prepare();
  auto ray = lp.find_positive_ray(row({1, -1}));
  ASSERT_TRUE(ray.has_value());
  EXPECT_GE(dot(row({1, -1}), *ray), Integer(1));
  EXPECT_GE(dot(row({-1, 2}), *ray).sign(), 0);
  EXPECT_FALSE(lp.find_positive_ray(row({1, -2})).has_value());
}

TEST(ConeSimplexTest, NegativeObjectiveIsZeroAtBest) {
  ConeSimplex lp(3);
  lp.prepare();
  EXPECT_FALSE(lp.find_positive_ray(row({-1, 0, -3})).has_value());
  EXPECT_FALSE(lp.find_positive_ray(row({0, 0, 0})).has_value());
}

TEST(ConeSimplexTest, RequiresPrepare) {
  ConeSimplex lp(1);
  EXPECT_THROW(lp.find_positive_ray(row({1})), std::logic_error);
  EXPECT_THROW(lp.add_equality(row({1, 2})), std::invalid_argument);
}

TEST(ConeSimplexTest, RayIsPrimitive) {
  ConeSimplex lp(2);
  lp.add_equality(row({2, -4}));
  lp.prepare();
  auto ray = lp.find_positive_ray(row({1, 0}));
  ASSERT_TRUE(ray.has_value());
  EXPECT_EQ(*ray, row({2, 1}));
}

// Random small cones against exhaustive search over a box: whenever the box
// contains a point with positive objective the solver must find a ray, and
// every ray it returns must satisfy all constraints.
TEST(ConeSimplexPropertyTest, AgreesWithBoxSearch) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> count(0, 3);
  int positives = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t n = 3;
    ConeSimplex lp(n);
    std::vector<std::vector<Integer>> eqs;
    std::vector<std::vector<Integer>> ges;
    auto random_row = [&] {
      std::vector<Integer> r;
      for (std::size_t i = 0; i < n; ++i) r.emplace_back(coeff(rng));
      return r;
    };
    for (int k = count(rng) % 2; k > 0; --k) eqs.push_back(random_row());
    for (int k = count(rng); k > 0; --k) ges.push_back(random_row());
    for (const auto& r : eqs) lp.add_equality(r);
    for (const auto& r : ges) lp.add_inequality(r);
    lp.prepare();
    std::vector<Integer> objective = random_row();

    bool box_positive = false;
    for (int a = 0; a <= 4 && !box_positive; ++a) {
      for (int b = 0; b <= 4 && !box_positive; ++b) {
        for (int c = 0; c <= 4 && !box_positive; ++c) {
          std::vector<Integer> x = row({a, b, c});
          bool feasible = true;
          for (const auto& r : eqs) feasible = feasible && dot(r, x).is_zero();
          for (const auto& r : ges) feasible = feasible && dot(r, x).sign() >= 0;
          box_positive = feasible && dot(objective, x).sign() > 0;
        }
      }
    }
    auto ray = lp.find_positive_ray(objective);
    if (box_positive) {
      ASSERT_TRUE(ray.has_value()) << "trial " << trial;
      ++positives;
    }
    if (ray) {
      for (const Integer& v : *ray) EXPECT_GE(v.sign(), 0);
      for (const auto& r : eqs) EXPECT_TRUE(dot(r, *ray).is_zero());
      for (const auto& r : ges) EXPECT_GE(dot(r, *ray).sign(), 0);
      EXPECT_GE(dot(objective, *ray), Integer(1));
    }
  }
  EXPECT_GT(positives, 100);
}

}  // namespace
}  // namespace pnrepair
