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


#include "pnrepair/repair.hpp"

#include <random>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace pnrepair {
namespace {

using testing::data_path;

// Checks every invariant a RepairResult promises about itself.
void expect_consistent(const Lts& a, const RepairResult& r) {
  EXPECT_EQ(r.k, r.removed.size());
  EXPECT_EQ(r.removed.mode, r.mode);
  Lts applied = apply_removal(a, r.removed);
  EXPECT_EQ(serialize_lts(applied), serialize_lts(r.repaired));
  EXPECT_TRUE(witness_is_valid(r.repaired, r.witness, required_property(r.property)));
}

// Independent optimum: every subset of components in increasing size,
// checked without any of the search's ordering or memoization.
std::optional<std::size_t> brute_force_optimum(const Lts& a, RemovalMode mode, Implementation impl) {
  std::vector<RemovalSet> singles;
  if (mode == RemovalMode::kEdge) {
    for (const Edge& e : a.edges()) singles.push_back({.mode = mode, .edges = {a.named(e)}});
  } else if (mode == RemovalMode::kEvent) {
    for (const std::string& e : a.event_names()) singles.push_back({.mode = mode, .events = {e}});
  } else {
    for (StateId s = 0; s < a.num_states(); ++s) {
      if (s != a.initial()) singles.push_back({.mode = mode, .states = {a.state_name(s)}});
    }
  }
  const std::size_t n = singles.size();
  std::optional<std::size_t> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (best && size >= *best) continue;
    RemovalSet r{.mode = mode};
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      r.edges.insert(r.edges.end(), singles[i].edges.begin(), singles[i].edges.end());
      r.events.insert(r.events.end(), singles[i].events.begin(), singles[i].events.end());
      r.states.insert(r.states.end(), singles[i].states.begin(), singles[i].states.end());
    }
    std::optional<Lts> b = try_apply_removal(a, r);
    if (b && check_property(*b, required_property(impl)).ok) best = size;
  }
  return best;
}

TEST(RepairTest, SystemAStateLanguage) {
  Lts a = load_lts(data_path("a.lts"));
  RepairOutcome out = min_removal(a, RemovalMode::kState, Implementation::kLanguage, 2);
  ASSERT_TRUE(out.result.has_value());
  EXPECT_EQ(out.result->k, 1u);
  expect_consistent(a, *out.result);
  EXPECT_NE(render_repair(*out.result).find("k=1\n"), std::string::npos);
}

TEST(RepairTest, SystemAEventRealization) {
  Lts a = load_lts(data_path("a.lts"));
  RepairOutcome out = min_removal(a, RemovalMode::kEvent, Implementation::kRealization, 2);
  ASSERT_TRUE(out.result.has_value());
  EXPECT_EQ(out.result->k, 1u);
  expect_consistent(a, *out.result);
}

TEST(RepairTest, SystemAEdgeLanguage) {
  Lts a = load_lts(data_path("a.lts"));
  RepairOutcome out = min_removal(a, RemovalMode::kEdge, Implementation::kLanguage, 2);
  ASSERT_TRUE(out.result.has_value());
  EXPECT_EQ(out.result->k, 1u);
  expect_consistent(a, *out.result);
}

TEST(RepairTest, BudgetZeroOnSystemA) {
  Lts a = load_lts(data_path("a.lts"));
  RepairOutcome out = min_removal(a, RemovalMode::kState, Implementation::kLanguage, 0);
  EXPECT_FALSE(out.result.has_value());
  EXPECT_EQ(out.stats.candidates, 1u);
  // Embedding already holds at k = 0.
  RepairOutcome emb = min_removal(a, RemovalMode::kState, Implementation::kEmbedding, 0);
  ASSERT_TRUE(emb.result.has_value());
  EXPECT_EQ(emb.result->k, 0u);
}

TEST(RepairTest, ImplementableSystemNeedsNothing) {
  Lts b = load_lts(data_path("b.lts"));
  for (RemovalMode mode : {RemovalMode::kEdge, RemovalMode::kEvent, RemovalMode::kState}) {
    RepairOutcome out = min_removal(b, mode, Implementation::kRealization, 3);
    ASSERT_TRUE(out.result.has_value());
    EXPECT_EQ(out.result->k, 0u);
    EXPECT_EQ(out.result->removed.size(), 0u);
    GreedyOutcome greedy = greedy_upper_bound(b, mode, Implementation::kRealization);
    ASSERT_TRUE(greedy.result.has_value());
    EXPECT_EQ(greedy.result->k, 0u);
  }
}

TEST(RepairTest, GreedyOnSystemA) {
  Lts a = load_lts(data_path("a.lts"));
  GreedyOutcome greedy = greedy_upper_bound(a, RemovalMode::kState, Implementation::kLanguage);
  ASSERT_TRUE(greedy.result.has_value()) << greedy.failure;
  EXPECT_EQ(greedy.result->k, 1u);
  expect_consistent(a, *greedy.result);
}

TEST(RepairTest, ParallelSearchAgreesWithSerial) {
  Lts a = load_lts(data_path("a.lts"));
  for (RemovalMode mode : {RemovalMode::kEdge, RemovalMode::kEvent, RemovalMode::kState}) {
    RepairOutcome serial = min_removal(a, mode, Implementation::kRealization, 2, {.jobs = 1});
    RepairOutcome parallel = min_removal(a, mode, Implementation::kRealization, 2, {.jobs = 4});
    ASSERT_EQ(serial.result.has_value(), parallel.result.has_value());
    if (serial.result) EXPECT_EQ(serial.result->removed, parallel.result->removed) << mode_name(mode);
  }
}

// Exact optimum against exhaustive enumeration, greedy as an upper bound,
// and k = 0 exactly when the unmodified system already qualifies.
TEST(RepairTest, OptimalityProperty) {
  std::mt19937_64 rng(4242);
  const RemovalMode modes[] = {RemovalMode::kEdge, RemovalMode::kEvent, RemovalMode::kState};
  const Implementation impls[] = {Implementation::kEmbedding, Implementation::kLanguage,
                                  Implementation::kRealization};
  int nontrivial = 0;
  int checked = 0;
  for (int trial = 0; trial < 90; ++trial) {
    Lts a = testing::random_lts(rng, 5, 3);
    if (a.num_edges() > 10) continue;
    ++checked;
    RemovalMode mode = modes[trial % 3];
    Implementation impl = impls[(trial / 3) % 3];
    std::optional<std::size_t> expected = brute_force_optimum(a, mode, impl);
    RepairOutcome out = min_removal(a, mode, impl, 10, {.jobs = trial % 2 ? 2 : 1});
    ASSERT_EQ(out.result.has_value(), expected.has_value()) << serialize_lts(a);
    if (!expected) continue;
    EXPECT_EQ(out.result->k, *expected) << serialize_lts(a) << mode_name(mode) << implementation_name(impl);
    expect_consistent(a, *out.result);
    EXPECT_EQ(out.result->k == 0, check_property(a, required_property(impl)).ok);
    if (*expected > 0) ++nontrivial;

    GreedyOutcome greedy = greedy_upper_bound(a, mode, impl);
    if (greedy.result) {
      EXPECT_GE(greedy.result->k, out.result->k);
      expect_consistent(a, *greedy.result);
    }
  }
  EXPECT_GE(checked, 30);
  EXPECT_GE(nontrivial, 10);
}

// Edge removal is the most general modification: its optimum never exceeds
// the number of edges an optimal state or event removal deletes.
TEST(RepairTest, EdgeModeDominates) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    Lts a = testing::random_lts(rng, 5, 3);
    for (Implementation impl : {Implementation::kLanguage, Implementation::kRealization}) {
      RepairOutcome edge = min_removal(a, RemovalMode::kEdge, impl, a.num_edges());
      ASSERT_TRUE(edge.result.has_value());
      for (RemovalMode mode : {RemovalMode::kState, RemovalMode::kEvent}) {
        RepairOutcome other = min_removal(a, mode, impl, a.num_states() + a.num_events());
        if (!other.result) continue;
        EXPECT_LE(edge.result->k, induced_edge_removal(a, other.result->repaired).size()) << serialize_lts(a);
      }
    }
  }
}

TEST(RepairTest, NamesRoundTrip) {
  for (Implementation impl : {Implementation::kEmbedding, Implementation::kLanguage, Implementation::kRealization}) {
    EXPECT_EQ(parse_implementation(implementation_name(impl)), impl);
  }
  EXPECT_EQ(required_property(Implementation::kEmbedding), Property::kSsp);
  EXPECT_EQ(required_property(Implementation::kLanguage), Property::kEssp);
  EXPECT_EQ(required_property(Implementation::kRealization), Property::kBoth);
  EXPECT_FALSE(parse_implementation("isomorphism").has_value());
}

}  // namespace
}  // namespace pnrepair
