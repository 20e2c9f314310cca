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


#include "pnrepair/reductions.hpp"

#include <set>

#include <gtest/gtest.h>

#include "pnrepair/text_format.hpp"
#include "support/oracles.hpp"

namespace pnrepair {
namespace {

using testing::data_path;

HittingSetInstance pair_instance() {
  return parse_hitting_set("universe X0 X1\nset X0 X1\nlambda 1\n");
}

std::size_t element(const HittingSetInstance& h, const std::string& name) {
  return static_cast<std::size_t>(std::find(h.universe.begin(), h.universe.end(), name) - h.universe.begin());
}

TEST(ReductionsTest, ParseExampleInstance) {
  HittingSetInstance h = load_hitting_set(data_path("pairs6.hs"));
  EXPECT_EQ(h.universe.size(), 6u);
  EXPECT_EQ(h.sets.size(), 9u);
  EXPECT_EQ(h.lambda, 4u);
  EXPECT_EQ(parse_hitting_set(serialize_hitting_set(h)).sets, h.sets);
  EXPECT_NO_THROW(check_normal_form(h));
}

TEST(ReductionsTest, ParseErrors) {
  EXPECT_THROW(parse_hitting_set("set X0\nlambda 1\n"), FormatError);
  EXPECT_THROW(parse_hitting_set("universe X0\nset X1\nlambda 1\n"), FormatError);
  EXPECT_THROW(parse_hitting_set("universe X0 X0\nlambda 1\n"), FormatError);
  EXPECT_THROW(parse_hitting_set("universe X0\nlambda -1\n"), FormatError);
  EXPECT_THROW(parse_hitting_set("universe X0\n"), FormatError);
}

TEST(ReductionsTest, ExampleMinimumIsFour) {
  HittingSetInstance h = load_hitting_set(data_path("pairs6.hs"));
  std::vector<std::size_t> z = brute_force_min_hitting_set(h);
  EXPECT_EQ(z.size(), 4u);
  EXPECT_TRUE(is_hitting_set(h, z));
  // No triple hits all nine pairs, checked independently of the solver.
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = a + 1; b < 6; ++b) {
      for (std::size_t c = b + 1; c < 6; ++c) {
        for (const auto& set : h.sets) {
          bool hit = false;
          for (std::size_t e : set) hit = hit || e == a || e == b || e == c;
          if (!hit) goto next;
        }
        FAIL() << "triple " << a << b << c << " hits every set";
      next:;
      }
    }
  }
  std::vector<std::size_t> known_z = {0, 2, 3, 5};
  EXPECT_TRUE(is_hitting_set(h, known_z));
}

TEST(ReductionsTest, TrivialHittingSets) {
  HittingSetInstance single = parse_hitting_set("universe X0\nset X0\nlambda 1\n");
  EXPECT_EQ(brute_force_min_hitting_set(single), std::vector<std::size_t>{0});
  EXPECT_EQ(brute_force_min_hitting_set(pair_instance()).size(), 1u);
  HittingSetInstance none = parse_hitting_set("universe X0\nlambda 0\n");
  EXPECT_TRUE(brute_force_min_hitting_set(none).empty());
  HittingSetInstance empty_set{{"X0"}, {{}}, 1};
  EXPECT_THROW(brute_force_min_hitting_set(empty_set), ReductionError);
}

TEST(ReductionsTest, ExampleEdgeInstanceCounts) {
  HittingSetInstance h = load_hitting_set(data_path("pairs6.hs"));
  GeneratedInstance g = generate_instance(h, ReductionFamily::kEdgeLangReal);
  EXPECT_EQ(g.kappa, 4u);
  // 1 + (kappa+1) * sum(m_i + 2) + 2n states; per copy m_i + 2 edges, per
  // element 1 + (kappa+1) + 1 edges.
  std::size_t states = 1, edges = 0;
  for (const auto& set : h.sets) {
    states += (g.kappa + 1) * (set.size() + 2);
    edges += (g.kappa + 1) * (set.size() + 2);
  }
  states += 2 * h.universe.size();
  edges += h.universe.size() * (g.kappa + 3);
  EXPECT_EQ(states, 193u);
  EXPECT_EQ(edges, 222u);
  EXPECT_EQ(g.lts.num_states(), states);
  EXPECT_EQ(g.lts.num_edges(), edges);
  EXPECT_EQ(g.lts.state_name(g.lts.initial()), "iota");
}

TEST(ReductionsTest, ExampleForwardMapping) {
  HittingSetInstance h = load_hitting_set(data_path("pairs6.hs"));
  std::vector<std::size_t> z = {0, 2, 3, 5};
  GeneratedInstance g = generate_instance(h, ReductionFamily::kEdgeLangReal);
  RemovalSet removal = removal_from_hitting_set(h, z, ReductionFamily::kEdgeLangReal);
  std::vector<NamedEdge> f_edges = {
      {"f_0_0", "X0", "f_0_1"}, {"f_2_0", "X2", "f_2_1"}, {"f_3_0", "X3", "f_3_1"}, {"f_5_0", "X5", "f_5_1"}};
  EXPECT_EQ(removal.edges, f_edges);
  Lts repaired = apply_removal(g.lts, removal);
  EXPECT_TRUE(check_property(repaired, Property::kBoth, {.jobs = 4}).ok);
  EXPECT_EQ(hitting_set_from_removal(h, removal, ReductionFamily::kEdgeLangReal), z);
}

TEST(ReductionsTest, SmallEventInstance) {
  HittingSetInstance h = pair_instance();
  GeneratedInstance g = generate_instance(h, ReductionFamily::kEventAll);
  const Lts& a = g.lts;
  // Path T_0 with 5 states, cycle D_0 with 2, plus iota; 4 path edges, 2
  // cycle edges and 5 + 2 connector edges.
  EXPECT_EQ(a.num_states(), 8u);
  EXPECT_EQ(a.num_edges(), 13u);
  EXPECT_EQ(a.out_edges(a.initial()).size(), 7u);
  EXPECT_EQ(a.successor(*a.find_state("d_0_1"), *a.find_event("X1")), a.find_state("d_0_0"));

  RemovalSet removal = removal_from_hitting_set(h, {element(h, "X0")}, ReductionFamily::kEventAll);
  EXPECT_EQ(removal.events, std::vector<std::string>{"X0"});
  std::optional<Lts> repaired = try_apply_removal(a, removal);
  ASSERT_TRUE(repaired.has_value());
  EXPECT_TRUE(check_property(*repaired, Property::kBoth).ok);
  EXPECT_FALSE(check_property(a, Property::kBoth).ok);
}

TEST(ReductionsTest, EveryFamilyGeneratesValidSystems) {
  HittingSetInstance h = parse_hitting_set("universe X0 X1 X2\nset X0 X1\nset X1 X2\nlambda 1\n");
  for (ReductionFamily f : {ReductionFamily::kEdgeLangReal, ReductionFamily::kEdgeEmb, ReductionFamily::kEventAll,
                            ReductionFamily::kStateLangReal, ReductionFamily::kStateEmb}) {
    GeneratedInstance g = generate_instance(h, f);
    EXPECT_EQ(g.kappa, h.lambda);
    EXPECT_EQ(parse_family(family_name(f)), f);
    Lts reparsed = parse_lts(serialize_lts(g.lts));
    EXPECT_EQ(serialize_lts(reparsed), serialize_lts(g.lts));
    // Without any removal the family's property fails.
    for (Implementation impl : family_implementations(f)) {
      EXPECT_FALSE(check_property(g.lts, required_property(impl)).ok) << family_name(f);
    }
    RemovalSet removal = removal_from_hitting_set(h, {1}, f);
    EXPECT_EQ(removal.size(), 1u);
    Lts repaired = apply_removal(g.lts, removal);
    for (Implementation impl : family_implementations(f)) {
      EXPECT_TRUE(check_property(repaired, required_property(impl)).ok) << family_name(f);
    }
    EXPECT_EQ(hitting_set_from_removal(h, removal, f), std::vector<std::size_t>{1});
  }
}

TEST(ReductionsTest, NormalFormViolations) {
  EXPECT_THROW(check_normal_form(parse_hitting_set("universe X0 X1\nset X0\nlambda 1\n")), ReductionError);
  EXPECT_THROW(check_normal_form(parse_hitting_set("universe X0 X1\nset X0 X1\nlambda 3\n")), ReductionError);
  EXPECT_THROW(generate_instance(parse_hitting_set("universe X0 X1\nset X0\nlambda 1\n"), ReductionFamily::kEventAll),
               ReductionError);
}

TEST(ReductionsTest, ElementNamesMustNotCollide) {
  HittingSetInstance h = parse_hitting_set("universe a X1\nset a X1\nlambda 1\n");
  EXPECT_THROW(generate_instance(h, ReductionFamily::kEdgeEmb), ReductionError);
}

TEST(ReductionsTest, MappingErrors) {
  HittingSetInstance h = pair_instance();
  EXPECT_THROW(removal_from_hitting_set(h, {}, ReductionFamily::kEventAll), ReductionError);
  RemovalSet wrong_mode{.mode = RemovalMode::kState, .states = {"f_0_1"}};
  EXPECT_THROW(hitting_set_from_removal(h, wrong_mode, ReductionFamily::kEventAll), ReductionError);
  RemovalSet misses{.mode = RemovalMode::kEvent, .events = {"k_0"}};
  EXPECT_THROW(hitting_set_from_removal(h, misses, ReductionFamily::kEventAll), ReductionError);
  HittingSetInstance no_sets = parse_hitting_set("universe X0\nlambda 0\n");
  EXPECT_EQ(removal_from_hitting_set(no_sets, {}, ReductionFamily::kEdgeEmb).size(), 0u);
}

}  // namespace
}  // namespace pnrepair
