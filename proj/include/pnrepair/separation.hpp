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

#ifndef PNREPAIR_SEPARATION_HPP_
#define PNREPAIR_SEPARATION_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pnrepair/cone_simplex.hpp"
#include "pnrepair/lts.hpp"
#include "pnrepair/region.hpp"

namespace pnrepair {

enum class Property { kSsp, kEssp, kBoth };

/// SSA: first/second are the states s < s'. ESSA: first is the event e and
/// second the state s at which e does not occur. The defaulted ordering is
/// the canonical one: all SSAs, then ESSAs by (event, state).
struct SeparationAtom {
  enum class Kind : std::uint8_t { kSsa, kEssa };

  Kind kind = Kind::kSsa;
  std::uint32_t first = 0;
  std::uint32_t second = 0;

  static SeparationAtom ssa(StateId s, StateId t);
  static SeparationAtom essa(EventId e, StateId s) { return {Kind::kEssa, e, s}; }

  friend auto operator<=>(const SeparationAtom&, const SeparationAtom&) = default;
};

std::vector<SeparationAtom> enumerate_atoms(const Lts& lts, Property property);

/// True iff `atom` is an atom of `lts` (distinct states; e not at s).
bool is_atom_of(const Lts& lts, const SeparationAtom& atom);

/// SSA: sup(s) != sup(s'). ESSA: sup(s) < con(e).
bool region_solves(const Region& region, const SeparationAtom& atom);

/// Per-LTS solver. The region polyhedron is built and its equalities
/// eliminated once in the constructor; solve() is const and thread-safe.
///
/// Variables are sup(initial), con(e) and pro(e). Supports of other states
/// are linear forms along the breadth-first tree, each chord contributes one
/// equality, and every edge s -e-> contributes sup(s) - con(e) >= 0. States
/// without outgoing edges additionally get sup(s) >= 0.
class SeparationSolver {
 public:
  explicit SeparationSolver(const Lts& lts);

  /// An integer region solving `atom`, or nullopt if none exists. Throws
  /// std::invalid_argument if `atom` is not an atom of the LTS.
  std::optional<Region> solve(const SeparationAtom& atom) const;

  const Lts& lts() const { return *lts_; }

 private:
  std::size_t con_var(EventId e) const { return 1 + e; }
  std::size_t pro_var(EventId e) const { return 1 + lts_->num_events() + e; }
  std::optional<Region> maximize(const std::vector<Integer>& objective) const;

  const Lts* lts_;
  std::size_t num_vars_;
  std::vector<std::vector<Integer>> support_form_;  // per state, over all variables
  ConeSimplex simplex_;
};

/// Convenience wrapper building a throwaway solver.
std::optional<Region> solve_atom(const Lts& lts, const SeparationAtom& atom);

struct Witness {
  std::vector<Region> regions;
  std::map<SeparationAtom, std::size_t> cover;  // atom -> index into regions
};

struct CheckOptions {
  bool shrink = false;
  int jobs = 1;
  bool stop_at_first_failure = false;
  /// Atoms to try before the canonical sweep, e.g. atoms that failed on a
  /// closely related LTS. They only speed up a negative answer: the result is
  /// the same as without hints.
  std::vector<SeparationAtom> hints = {};
};

struct CheckResult {
  bool ok = false;
  Witness witness;                          // meaningful when ok
  std::vector<SeparationAtom> unsolvable;   // canonical order; complete unless stopped early
};

/// Decides the property. jobs <= 1 runs the serial reference sweep, larger
/// values solve waves of uncovered atoms in parallel. Both agree on every
/// decision and on the unsolvable list; the regions found may differ.
CheckResult check_property(const Lts& lts, Property property, const CheckOptions& options = {});
CheckResult check_property(const SeparationSolver& solver, Property property,
                           const CheckOptions& options = {});

/// Greedy set cover over the regions of `witness` plus one weighted sum of
/// all of them, which separates every state pair any single region does.
Witness shrink_witness(const Lts& lts, const Witness& witness);

/// Checks that every region is valid and every atom of the property is
/// solved, by its cover entry when present and otherwise by some region.
bool witness_is_valid(const Lts& lts, const Witness& witness, Property property);

std::string render_atom(const Lts& lts, const SeparationAtom& atom);  // "ssa s t" / "essa e s"
std::string render_failure(const Lts& lts, const std::vector<SeparationAtom>& unsolvable);
std::string render_witness(const Lts& lts, const Witness& witness);
std::string property_name(Property property);
std::optional<Property> parse_property(std::string_view name);

}  // namespace pnrepair

#endif  // PNREPAIR_SEPARATION_HPP_
