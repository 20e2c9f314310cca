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


#include "pnrepair/region.hpp"

#include <map>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace pnrepair {
namespace {

using testing::data_path;

std::vector<Integer> by_event(const Lts& lts, const std::map<std::string, int>& values) {
  std::vector<Integer> out(lts.num_events());
  for (const auto& [name, v] : values) out[*lts.find_event(name)] = v;
  return out;
}

Region example_2_11(const Lts& a) {
  return expand_region(a, 8, by_event(a, {{"v", 5}, {"w", 7}, {"u", 1}, {"x", 1}, {"y", 1}, {"a", 1}}),
                       by_event(a, {}));
}

Integer sup_at(const Lts& lts, const Region& r, const std::string& state) {
  return r.sup[*lts.find_state(state)];
}

TEST(RegionTest, ExpandSystemARegion) {
  Lts a = load_lts(data_path("a.lts"));
  Region r = example_2_11(a);
  EXPECT_EQ(sup_at(a, r, "bot"), Integer(8));
  for (int i = 0; i < 4; ++i) EXPECT_EQ(sup_at(a, r, "s" + std::to_string(i)), Integer(7 - i));
  EXPECT_EQ(sup_at(a, r, "t0"), Integer(3));
  EXPECT_EQ(sup_at(a, r, "t1"), Integer(2));
  EXPECT_EQ(sup_at(a, r, "q0"), Integer(1));
  EXPECT_EQ(sup_at(a, r, "q1"), Integer(0));
  EXPECT_TRUE(is_region(a, r));
}

TEST(RegionTest, ZeroRegionAlwaysValid) {
  Lts a = load_lts(data_path("a.lts"));
  Region zero = expand_region(a, 0, by_event(a, {}), by_event(a, {}));
  for (const Integer& v : zero.sup) EXPECT_TRUE(v.is_zero());
  EXPECT_TRUE(is_region(a, zero));
}

TEST(RegionTest, ExpandSystemBRegion) {
  Lts b = load_lts(data_path("b.lts"));
  Region r = expand_region(b, 2, by_event(b, {{"x", 2}, {"a", 1}, {"y", 1}}), by_event(b, {{"x", 1}}));
  EXPECT_EQ(sup_at(b, r, "s1"), Integer(1));
  EXPECT_EQ(sup_at(b, r, "t1"), Integer(1));
  EXPECT_EQ(sup_at(b, r, "q1"), Integer(1));
}

TEST(RegionTest, ExpandRejectsConflicts) {
  Lts a = load_lts(data_path("a.lts"));
  // x and a both lead t0 -> t1 but with different effects.
  try {
    expand_region(a, 8, by_event(a, {{"x", 1}}), by_event(a, {}));
    FAIL();
  } catch (const RegionError& e) {
    EXPECT_EQ(e.kind(), RegionError::Kind::kInconsistentSupport);
    EXPECT_NE(std::string(e.what()).find("t1"), std::string::npos);
  }
  try {
    expand_region(a, 1, by_event(a, {{"v", 5}}), by_event(a, {}));
    FAIL();
  } catch (const RegionError& e) {
    EXPECT_EQ(e.kind(), RegionError::Kind::kConsumeExceedsSupport);
  }
}

TEST(RegionTest, FirstViolationInCanonicalOrder) {
  Lts a = load_lts(data_path("a.lts"));
  Region r = example_2_11(a);
  r.sup[*a.find_state("t1")] = 3;
  RegionCheck check = is_region(a, r);
  ASSERT_FALSE(check.ok);
  ASSERT_TRUE(check.violation.has_value());
  // Both t0 -a-> t1 and t0 -x-> t1 now break the update rule; a sorts first.
  EXPECT_EQ(a.named(*check.violation), (NamedEdge{"t0", "a", "t1"}));
}

TEST(RegionTest, PathSupport) {
  Lts a = load_lts(data_path("a.lts"));
  Region r = example_2_11(a);
  std::vector<Edge> path = a.path_to(*a.find_state("s3"));
  EXPECT_EQ(path.size(), 4u);
  EXPECT_EQ(path_support(r, a, path), Integer(4));
  EXPECT_EQ(path_support(r, a, {}), Integer(8));

  Lts b = load_lts(data_path("b.lts"));
  Region rb = expand_region(b, 2, by_event(b, {{"x", 2}, {"a", 1}, {"y", 1}}), by_event(b, {{"x", 1}}));
  std::vector<Edge> via_a = {*b.find_edge({"bot", "v", "t0"}), *b.find_edge({"t0", "a", "t1"})};
  EXPECT_EQ(path_support(rb, b, via_a), Integer(1));

  std::vector<Edge> broken = {*b.find_edge({"bot", "v", "t0"}), *b.find_edge({"q0", "a", "q1"})};
  EXPECT_THROW(path_support(rb, b, broken), std::invalid_argument);
  std::vector<Edge> absent = {Edge{*b.find_state("bot"), *b.find_event("x"), *b.find_state("t0")}};
  EXPECT_THROW(path_support(rb, b, absent), std::invalid_argument);
}

TEST(RegionTest, Rendering) {
  Lts b = load_lts(data_path("b.lts"));
  Region r = expand_region(b, 2, by_event(b, {{"x", 2}, {"a", 1}, {"y", 1}}), by_event(b, {{"x", 1}}));
  EXPECT_EQ(render_region(b, r),
            "region sup(\xCE\xB9)=2; a:1/0 u:0/0 v:0/0 w:0/0 x:2/1 y:1/0; sup: bot=2 q0=2 q1=1 s0=2 "
            "s1=1 s2=0 t0=2 t1=1");
}

// Random bounded regions: expansion inverts restriction, and every cycle has
// zero total effect.
TEST(RegionPropertyTest, ExpansionAndCycles) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    Lts lts = testing::random_lts(rng, 5, 2);
    auto regions = testing::enumerate_small_regions(lts, 2);
    for (std::size_t k = 0; k < regions.size(); k += 1 + regions.size() / 8) {
      Region r = testing::to_region(regions[k]);
      ASSERT_TRUE(is_region(lts, r));
      EXPECT_EQ(expand_region(lts, r.sup[lts.initial()], r.con, r.pro), r);
      for (StateId s = 0; s < lts.num_states(); ++s) {
        std::vector<Edge> cycle = testing::find_cycle_through(lts, s);
        if (cycle.empty()) continue;
        Integer sum;
        for (const Edge& e : cycle) sum += r.effect(e.event);
        EXPECT_TRUE(sum.is_zero());
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace pnrepair
