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


#ifndef PNREPAIR_REPAIR_HPP_
#define PNREPAIR_REPAIR_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "pnrepair/lts.hpp"
#include "pnrepair/removal.hpp"
#include "pnrepair/separation.hpp"

namespace pnrepair {

/// Implementation relation targeted by a repair.
enum class Implementation { kEmbedding, kLanguage, kRealization };

std::string implementation_name(Implementation impl);
std::optional<Implementation> parse_implementation(std::string_view name);
/// Embedding needs the SSP, language simulation the ESSP, realization both.
Property required_property(Implementation impl);

struct RepairResult {
  RemovalMode mode;
  Implementation property;
  RemovalSet removed;
  Lts repaired;
  Witness witness;
  std::size_t k = 0;
};

struct RepairOptions {
  int jobs = 1;
  bool shrink = false;
};

struct RepairStats {
  std::size_t candidates = 0;   // removal sets enumerated
  std::size_t invalid = 0;      // rejected by closure/reachability rules
  std::size_t memo_hits = 0;
  std::size_t checks = 0;       // property checks actually run
};

struct RepairOutcome {
  std::optional<RepairResult> result;  // empty: nothing within the budget
  RepairStats stats;
};

/// Exact minimum removal by iterative deepening on k = 0..k_max. At each
/// depth the k-subsets of components are tried in a fixed order: components
/// touching the atoms A itself fails on come first, then the rest, each group
/// in canonical order. The first success in that order is returned, whatever
/// the number of jobs.
RepairOutcome min_removal(const Lts& a, RemovalMode mode, Implementation property,
                          std::size_t k_max, const RepairOptions& options = {});

struct GreedyOutcome {
  std::optional<RepairResult> result;
  std::string failure;  // set when the greedy path dead-ends
};

/// Repeatedly applies the single valid removal leaving the fewest unsolvable
/// atoms (ties: canonical order) until the property holds.
GreedyOutcome greedy_upper_bound(const Lts& a, RemovalMode mode, Implementation property,
                                 const RepairOptions& options = {});

/// Removal lines, then `k=`, `property=`, `mode=` and the witness.
std::string render_repair(const RepairResult& result);

}  // namespace pnrepair

#endif  // PNREPAIR_REPAIR_HPP_
