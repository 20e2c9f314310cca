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


#include "pnrepair/separation.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <stdexcept>

#include <omp.h>

namespace pnrepair {
namespace {

// Uncovered atoms solved per parallel wave. Fixed so that the witness does
// not depend on the thread count.
constexpr std::size_t kWaveSize = 32;

void mark_cover(const std::vector<SeparationAtom>& atoms, std::size_t from, const Region& region,
                std::size_t index, std::vector<bool>& covered, Witness& witness) {
  for (std::size_t j = from; j < atoms.size(); ++j) {
    if (!covered[j] && region_solves(region, atoms[j])) {
      covered[j] = true;
      witness.cover.emplace(atoms[j], index);
    }
  }
}

// Fail fast on hinted atoms; returns the first unsolvable hint.
std::optional<SeparationAtom> first_failing_hint(const SeparationSolver& solver,
                                                 const std::vector<SeparationAtom>& atoms,
                                                 const std::vector<SeparationAtom>& hints) {
  for (const SeparationAtom& hint : hints) {
    if (!std::binary_search(atoms.begin(), atoms.end(), hint)) continue;
    if (!solver.solve(hint)) return hint;
  }
  return std::nullopt;
}

CheckResult check_serial(const SeparationSolver& solver, const std::vector<SeparationAtom>& atoms,
                         const CheckOptions& options) {
  CheckResult result;
  std::vector<bool> covered(atoms.size(), false);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (covered[i]) continue;
    std::optional<Region> region = solver.solve(atoms[i]);
    if (!region) {
      result.unsolvable.push_back(atoms[i]);
      if (options.stop_at_first_failure) break;
      continue;
    }
    result.witness.regions.push_back(std::move(*region));
    mark_cover(atoms, i, result.witness.regions.back(), result.witness.regions.size() - 1, covered,
               result.witness);
  }
  result.ok = result.unsolvable.empty();
  return result;
}

CheckResult check_parallel(const SeparationSolver& solver, const std::vector<SeparationAtom>& atoms,
                           const CheckOptions& options) {
  CheckResult result;
  std::vector<bool> covered(atoms.size(), false);
  std::size_t cursor = 0;
  bool stopped = false;
  while (!stopped) {
    std::vector<std::size_t> wave;
    while (cursor < atoms.size() && wave.size() < kWaveSize) {
      if (!covered[cursor]) wave.push_back(cursor);
      ++cursor;
    }
    if (wave.empty()) break;

    std::vector<std::optional<Region>> solved(wave.size());
    std::exception_ptr failure;
    const int n = static_cast<int>(wave.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(options.jobs)
    for (int w = 0; w < n; ++w) {
      try {
        solved[w] = solver.solve(atoms[wave[w]]);
      } catch (...) {
#pragma omp critical(pnrepair_separation_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    // Merge in canonical order, discarding solutions for atoms an earlier
    // region of this wave already covers.
    for (std::size_t w = 0; w < wave.size(); ++w) {
      std::size_t i = wave[w];
      if (covered[i]) continue;
      if (!solved[w]) {
        result.unsolvable.push_back(atoms[i]);
        if (options.stop_at_first_failure) {
          stopped = true;
          break;
        }
        continue;
      }
      result.witness.regions.push_back(std::move(*solved[w]));
      mark_cover(atoms, i, result.witness.regions.back(), result.witness.regions.size() - 1,
                 covered, result.witness);
    }
  }
  result.ok = result.unsolvable.empty();
  return result;
}

Integer max_support(const Region& region) {
  Integer best;
  for (const Integer& v : region.sup) best = std::max(best, v);
  return best;
}

}  // namespace

SeparationAtom SeparationAtom::ssa(StateId s, StateId t) {
  if (s > t) std::swap(s, t);
  return {Kind::kSsa, s, t};
}

std::vector<SeparationAtom> enumerate_atoms(const Lts& lts, Property property) {
  std::vector<SeparationAtom> atoms;
  const auto n = static_cast<StateId>(lts.num_states());
  if (property != Property::kEssp) {
    for (StateId s = 0; s < n; ++s) {
      for (StateId t = s + 1; t < n; ++t) atoms.push_back(SeparationAtom::ssa(s, t));
    }
  }
  if (property != Property::kSsp) {
    for (EventId e = 0; e < lts.num_events(); ++e) {
      for (StateId s = 0; s < n; ++s) {
        if (!lts.has_edge(s, e)) atoms.push_back(SeparationAtom::essa(e, s));
      }
    }
  }
  return atoms;
}

bool is_atom_of(const Lts& lts, const SeparationAtom& atom) {
  if (atom.kind == SeparationAtom::Kind::kSsa) {
    return atom.first < atom.second && atom.second < lts.num_states();
  }
  return atom.first < lts.num_events() && atom.second < lts.num_states() &&
         !lts.has_edge(atom.second, atom.first);
}

bool region_solves(const Region& region, const SeparationAtom& atom) {
  if (atom.kind == SeparationAtom::Kind::kSsa) {
    return region.sup[atom.first] != region.sup[atom.second];
  }
  return region.sup[atom.second] < region.con[atom.first];
}

SeparationSolver::SeparationSolver(const Lts& lts)
    : lts_(&lts), num_vars_(1 + 2 * lts.num_events()), simplex_(1 + 2 * lts.num_events()) {
  support_form_.assign(lts.num_states(), std::vector<Integer>(num_vars_));
  support_form_[lts.initial()][0] = 1;
  const auto edges = lts.edges();
  for (StateId s : lts.bfs_order()) {
    std::int64_t tree = lts.tree_edge(s);
    if (tree < 0) continue;
    const Edge& in = edges[static_cast<std::size_t>(tree)];
    std::vector<Integer> form = support_form_[in.source];
    form[con_var(in.event)] -= 1;
    form[pro_var(in.event)] += 1;
    support_form_[s] = std::move(form);
  }

  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    const std::vector<Integer>& from = support_form_[e.source];
    if (lts.tree_edge(e.target) != static_cast<std::int64_t>(k)) {
      std::vector<Integer> chord(num_vars_);
      for (std::size_t v = 0; v < num_vars_; ++v) chord[v] = from[v] - support_form_[e.target][v];
      chord[con_var(e.event)] -= 1;
      chord[pro_var(e.event)] += 1;
      simplex_.add_equality(std::move(chord));
    }
    std::vector<Integer> enabled = from;
    enabled[con_var(e.event)] -= 1;
    simplex_.add_inequality(std::move(enabled));
  }
  for (StateId s = 0; s < lts.num_states(); ++s) {
    if (lts.out_edges(s).empty()) simplex_.add_inequality(support_form_[s]);
  }
  simplex_.prepare();
}

std::optional<Region> SeparationSolver::maximize(const std::vector<Integer>& objective) const {
  std::optional<std::vector<Integer>> x = simplex_.find_positive_ray(objective);
  if (!x) return std::nullopt;
  const std::size_t m = lts_->num_events();
  std::vector<Integer> con(x->begin() + 1, x->begin() + 1 + static_cast<std::ptrdiff_t>(m));
  std::vector<Integer> pro(x->begin() + 1 + static_cast<std::ptrdiff_t>(m), x->end());
  return expand_region(*lts_, (*x)[0], std::move(con), std::move(pro));
}

std::optional<Region> SeparationSolver::solve(const SeparationAtom& atom) const {
  if (!is_atom_of(*lts_, atom)) throw std::invalid_argument("not a separation atom of this LTS");
  std::vector<Integer> objective(num_vars_);
  if (atom.kind == SeparationAtom::Kind::kEssa) {
    const auto& at = support_form_[atom.second];
    for (std::size_t v = 0; v < num_vars_; ++v) objective[v] = -at[v];
    objective[con_var(atom.first)] += 1;
    return maximize(objective);
  }
  const auto& s = support_form_[atom.first];
  const auto& t = support_form_[atom.second];
  for (std::size_t v = 0; v < num_vars_; ++v) objective[v] = s[v] - t[v];
  if (auto region = maximize(objective)) return region;
  for (Integer& c : objective) c = -c;
  return maximize(objective);
}

std::optional<Region> solve_atom(const Lts& lts, const SeparationAtom& atom) {
  return SeparationSolver(lts).solve(atom);
}

CheckResult check_property(const Lts& lts, Property property, const CheckOptions& options) {
  return check_property(SeparationSolver(lts), property, options);
}

CheckResult check_property(const SeparationSolver& solver, Property property,
                           const CheckOptions& options) {
  const Lts& lts = solver.lts();
  std::vector<SeparationAtom> atoms = enumerate_atoms(lts, property);
  if (options.stop_at_first_failure && !options.hints.empty()) {
    if (auto failing = first_failing_hint(solver, atoms, options.hints)) {
      CheckResult result;
      result.unsolvable.push_back(*failing);
      return result;
    }
  }
  CheckResult result = options.jobs <= 1 ? check_serial(solver, atoms, options)
                                         : check_parallel(solver, atoms, options);
  if (result.ok && options.shrink) result.witness = shrink_witness(lts, result.witness);
  return result;
}

Witness shrink_witness(const Lts& lts, const Witness& witness) {
  if (witness.regions.empty()) return witness;
  std::vector<Region> candidates = witness.regions;
  if (witness.regions.size() > 1) {
    Integer base;
    for (const Region& r : witness.regions) base = std::max(base, max_support(r));
    base += 1;
    Region combined = witness.regions.front();
    for (std::size_t i = 1; i < witness.regions.size(); ++i) {
      const Region& r = witness.regions[i];
      for (StateId s = 0; s < lts.num_states(); ++s) combined.sup[s] = combined.sup[s] * base + r.sup[s];
      for (EventId e = 0; e < lts.num_events(); ++e) {
        combined.con[e] = combined.con[e] * base + r.con[e];
        combined.pro[e] = combined.pro[e] * base + r.pro[e];
      }
    }
    candidates.push_back(std::move(combined));
  }

  std::vector<SeparationAtom> targets;
  for (const auto& [atom, index] : witness.cover) targets.push_back(atom);
  std::vector<std::vector<bool>> solves(candidates.size(), std::vector<bool>(targets.size()));
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    for (std::size_t a = 0; a < targets.size(); ++a) solves[c][a] = region_solves(candidates[c], targets[a]);
  }

  std::vector<bool> covered(targets.size(), false);
  std::size_t remaining = targets.size();
  Witness shrunk;
  while (remaining > 0) {
    std::size_t best = candidates.size();
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::size_t gain = 0;
      for (std::size_t a = 0; a < targets.size(); ++a) gain += !covered[a] && solves[c][a];
      if (gain > best_gain) {
        best = c;
        best_gain = gain;
      }
    }
    if (best == candidates.size()) throw std::logic_error("witness cover is inconsistent");
    const std::size_t index = shrunk.regions.size();
    shrunk.regions.push_back(candidates[best]);
    for (std::size_t a = 0; a < targets.size(); ++a) {
      if (!covered[a] && solves[best][a]) {
        covered[a] = true;
        --remaining;
        shrunk.cover.emplace(targets[a], index);
      }
    }
  }
  return shrunk;
}

bool witness_is_valid(const Lts& lts, const Witness& witness, Property property) {
  for (const Region& r : witness.regions) {
    if (!is_region(lts, r)) return false;
  }
  for (const SeparationAtom& atom : enumerate_atoms(lts, property)) {
    auto it = witness.cover.find(atom);
    if (it != witness.cover.end()) {
      if (it->second >= witness.regions.size() || !region_solves(witness.regions[it->second], atom)) return false;
      continue;
    }
    // Hand-built witnesses may omit the cover map.
    if (std::none_of(witness.regions.begin(), witness.regions.end(),
                     [&](const Region& r) { return region_solves(r, atom); })) {
      return false;
    }
  }
  return true;
}

std::string render_atom(const Lts& lts, const SeparationAtom& atom) {
  if (atom.kind == SeparationAtom::Kind::kSsa) {
    return "ssa " + lts.state_name(atom.first) + " " + lts.state_name(atom.second);
  }
  return "essa " + lts.event_name(atom.first) + " " + lts.state_name(atom.second);
}

std::string render_failure(const Lts& lts, const std::vector<SeparationAtom>& unsolvable) {
  std::string out;
  for (const SeparationAtom& atom : unsolvable) out += "unsolvable " + render_atom(lts, atom) + "\n";
  return out;
}

std::string render_witness(const Lts& lts, const Witness& witness) {
  std::ostringstream out;
  out << "witness regions=" << witness.regions.size() << "\n";
  for (std::size_t i = 0; i < witness.regions.size(); ++i) {
    out << "R" << i << " " << render_region(lts, witness.regions[i]) << "\n";
  }
  return out.str();
}

std::string property_name(Property property) {
  switch (property) {
    case Property::kSsp: return "ssp";
    case Property::kEssp: return "essp";
    case Property::kBoth: return "both";
  }
  return "?";
}

std::optional<Property> parse_property(std::string_view name) {
  if (name == "ssp") return Property::kSsp;
  if (name == "essp") return Property::kEssp;
  if (name == "both") return Property::kBoth;
  return std::nullopt;
}

}  // namespace pnrepair
