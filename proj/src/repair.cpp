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

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include <omp.h>

namespace pnrepair {
namespace {

// Candidates handed to the worker pool at once. The winner is the lowest
// successful index of the first chunk containing a success, so the chunk size
// only affects wasted work, never the answer.
constexpr std::size_t kChunk = 64;
constexpr std::size_t kMaxHints = 8;

// Atoms are remembered by name so they can be replayed on other LTSs.
struct NamedAtom {
  SeparationAtom::Kind kind;
  std::string first;
  std::string second;
  bool operator==(const NamedAtom&) const = default;
};

NamedAtom name_atom(const Lts& lts, const SeparationAtom& atom) {
  if (atom.kind == SeparationAtom::Kind::kSsa) {
    return {atom.kind, lts.state_name(atom.first), lts.state_name(atom.second)};
  }
  return {atom.kind, lts.event_name(atom.first), lts.state_name(atom.second)};
}

std::optional<SeparationAtom> locate_atom(const Lts& lts, const NamedAtom& atom) {
  auto s = lts.find_state(atom.second);
  if (!s) return std::nullopt;
  SeparationAtom out;
  if (atom.kind == SeparationAtom::Kind::kSsa) {
    auto t = lts.find_state(atom.first);
    if (!t || *t == *s) return std::nullopt;
    out = SeparationAtom::ssa(*t, *s);
  } else {
    auto e = lts.find_event(atom.first);
    if (!e) return std::nullopt;
    out = SeparationAtom::essa(*e, *s);
  }
  if (!is_atom_of(lts, out)) return std::nullopt;
  return out;
}

// The removable components of one LTS, by name, in canonical order.
class Components {
 public:
  Components(const Lts& lts, RemovalMode mode) : mode_(mode) {
    switch (mode) {
      case RemovalMode::kEdge:
        for (const Edge& e : lts.edges()) edges_.push_back(lts.named(e));
        break;
      case RemovalMode::kEvent: names_ = lts.event_names(); break;
      case RemovalMode::kState:
        for (StateId s = 0; s < lts.num_states(); ++s) {
          if (s != lts.initial()) names_.push_back(lts.state_name(s));
        }
        break;
    }
  }

  RemovalMode mode() const { return mode_; }
  std::size_t size() const { return mode_ == RemovalMode::kEdge ? edges_.size() : names_.size(); }

  RemovalSet make(const std::vector<std::size_t>& picks) const {
    RemovalSet removal;
    removal.mode = mode_;
    for (std::size_t i : picks) {
      switch (mode_) {
        case RemovalMode::kEdge: removal.edges.push_back(edges_[i]); break;
        case RemovalMode::kEvent: removal.events.push_back(names_[i]); break;
        case RemovalMode::kState: removal.states.push_back(names_[i]); break;
      }
    }
    removal.normalize();
    return removal;
  }

  // Whether component i involves a state of `states` or an event of `events`.
  bool touches(const Lts& lts, std::size_t i, const std::vector<bool>& states,
               const std::vector<bool>& events) const {
    switch (mode_) {
      case RemovalMode::kEdge: {
        const NamedEdge& e = edges_[i];
        return states[*lts.find_state(e.source)] || states[*lts.find_state(e.target)] ||
               events[*lts.find_event(e.event)];
      }
      case RemovalMode::kEvent: return events[*lts.find_event(names_[i])];
      case RemovalMode::kState: return states[*lts.find_state(names_[i])];
    }
    return false;
  }

 private:
  RemovalMode mode_;
  std::vector<NamedEdge> edges_;
  std::vector<std::string> names_;
};

// Components touching a failing atom first, each group in canonical order.
std::vector<std::size_t> heuristic_order(const Lts& lts, const Components& components,
                                         const std::vector<SeparationAtom>& failing) {
  std::vector<bool> states(lts.num_states(), false);
  std::vector<bool> events(lts.num_events(), false);
  for (const SeparationAtom& atom : failing) {
    if (atom.kind == SeparationAtom::Kind::kSsa) {
      states[atom.first] = states[atom.second] = true;
    } else {
      events[atom.first] = true;
      states[atom.second] = true;
    }
  }
  // For event removal, events adjacent to a failing state count as touching.
  if (components.mode() == RemovalMode::kEvent) {
    std::vector<bool> adjacent = events;
    for (const Edge& e : lts.edges()) {
      if (states[e.source] || states[e.target]) adjacent[e.event] = true;
    }
    events = std::move(adjacent);
  }
  std::vector<std::size_t> first;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < components.size(); ++i) {
    (components.touches(lts, i, states, events) ? first : rest).push_back(i);
  }
  first.insert(first.end(), rest.begin(), rest.end());
  return first;
}

bool next_combination(std::vector<std::size_t>& pick, std::size_t n) {
  const std::size_t k = pick.size();
  for (std::size_t i = k; i-- > 0;) {
    if (pick[i] < n - k + i) {
      ++pick[i];
      for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
      return true;
    }
  }
  return false;
}

class Evaluator {
 public:
  Evaluator(const Lts& a, Property property, const Components& components, int jobs)
      : a_(a), property_(property), components_(components), hints_(std::max(jobs, 1)) {}

  // True iff the removal is valid and its result has the property.
  bool accepts(const std::vector<std::size_t>& picks, std::size_t worker) {
    std::optional<Lts> b = try_apply_removal(a_, components_.make(picks));
    if (!b) {
      invalid_.fetch_add(1, std::memory_order_relaxed);
      return false;
    }
    std::string key = serialize_lts(*b);
    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) {
        memo_hits_.fetch_add(1, std::memory_order_relaxed);
        return it->second;
      }
    }
    std::vector<NamedAtom>& hints = hints_[worker];
    CheckOptions options;
    options.stop_at_first_failure = true;
    for (const NamedAtom& h : hints) {
      if (auto atom = locate_atom(*b, h)) options.hints.push_back(*atom);
    }
    CheckResult result = check_property(*b, property_, options);
    checks_.fetch_add(1, std::memory_order_relaxed);
    if (!result.ok) {
      NamedAtom failing = name_atom(*b, result.unsolvable.front());
      auto it = std::find(hints.begin(), hints.end(), failing);
      if (it != hints.end()) hints.erase(it);
      hints.insert(hints.begin(), failing);
      if (hints.size() > kMaxHints) hints.pop_back();
    }
    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_.emplace(std::move(key), result.ok);
    return result.ok;
  }

  void fill(RepairStats& stats) const {
    stats.invalid = invalid_.load();
    stats.memo_hits = memo_hits_.load();
    stats.checks = checks_.load();
  }

 private:
  const Lts& a_;
  Property property_;
  const Components& components_;
  std::vector<std::vector<NamedAtom>> hints_;  // per worker
  std::mutex memo_mutex_;
  std::unordered_map<std::string, bool> memo_;
  std::atomic<std::size_t> invalid_{0};
  std::atomic<std::size_t> memo_hits_{0};
  std::atomic<std::size_t> checks_{0};
};

// Index of the first accepted candidate, or npos.
std::size_t first_accepted(Evaluator& evaluator, const std::vector<std::vector<std::size_t>>& chunk,
                           int jobs) {
  constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  if (jobs <= 1) {
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      if (evaluator.accepts(chunk[i], 0)) return i;
    }
    return npos;
  }
  std::atomic<std::size_t> best{npos};
  std::exception_ptr failure;
  const int n = static_cast<int>(chunk.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (int i = 0; i < n; ++i) {
    const auto index = static_cast<std::size_t>(i);
    if (index > best.load(std::memory_order_relaxed)) continue;
    try {
      if (evaluator.accepts(chunk[index], static_cast<std::size_t>(omp_get_thread_num()))) {
        std::size_t seen = best.load();
        while (index < seen && !best.compare_exchange_weak(seen, index)) {
        }
      }
    } catch (...) {
#pragma omp critical(pnrepair_repair_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return best.load();
}

RepairResult finish(const Lts& a, RemovalMode mode, Implementation property, RemovalSet removed,
                    const RepairOptions& options) {
  removed.normalize();
  Lts repaired = apply_removal(a, removed);
  CheckOptions check;
  check.shrink = options.shrink;
  check.jobs = options.jobs;
  CheckResult result = check_property(repaired, required_property(property), check);
  if (!result.ok) throw std::logic_error("accepted repair does not have the property");
  const std::size_t k = removed.size();
  return RepairResult{mode, property, std::move(removed), std::move(repaired), std::move(result.witness), k};
}

}  // namespace

std::string implementation_name(Implementation impl) {
  switch (impl) {
    case Implementation::kEmbedding: return "embedding";
    case Implementation::kLanguage: return "language";
    case Implementation::kRealization: return "realization";
  }
  return "?";
}

std::optional<Implementation> parse_implementation(std::string_view name) {
  if (name == "embedding") return Implementation::kEmbedding;
  if (name == "language") return Implementation::kLanguage;
  if (name == "realization") return Implementation::kRealization;
  return std::nullopt;
}

Property required_property(Implementation impl) {
  switch (impl) {
    case Implementation::kEmbedding: return Property::kSsp;
    case Implementation::kLanguage: return Property::kEssp;
    case Implementation::kRealization: return Property::kBoth;
  }
  return Property::kBoth;
}

RepairOutcome min_removal(const Lts& a, RemovalMode mode, Implementation property,
                          std::size_t k_max, const RepairOptions& options) {
  RepairOutcome outcome;
  const Property needed = required_property(property);
  CheckResult initial = check_property(a, needed, CheckOptions{.jobs = options.jobs});
  outcome.stats.candidates = 1;
  outcome.stats.checks = 1;
  if (initial.ok) {
    outcome.result = finish(a, mode, property, RemovalSet{.mode = mode}, options);
    return outcome;
  }

  const Components components(a, mode);
  const std::vector<std::size_t> order = heuristic_order(a, components, initial.unsolvable);
  const std::size_t n = components.size();
  Evaluator evaluator(a, needed, components, options.jobs);

  for (std::size_t k = 1; k <= k_max && k <= n; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    bool more = true;
    while (more) {
      std::vector<std::vector<std::size_t>> chunk;
      while (more && chunk.size() < kChunk) {
        std::vector<std::size_t> mapped(k);
        for (std::size_t i = 0; i < k; ++i) mapped[i] = order[pick[i]];
        chunk.push_back(std::move(mapped));
        more = next_combination(pick, n);
      }
      outcome.stats.candidates += chunk.size();
      std::size_t hit = first_accepted(evaluator, chunk, options.jobs);
      if (hit < chunk.size()) {
        evaluator.fill(outcome.stats);
        ++outcome.stats.checks;
        outcome.result = finish(a, mode, property, components.make(chunk[hit]), options);
        return outcome;
      }
    }
  }
  evaluator.fill(outcome.stats);
  ++outcome.stats.checks;
  return outcome;
}

GreedyOutcome greedy_upper_bound(const Lts& a, RemovalMode mode, Implementation property,
                                 const RepairOptions& options) {
  GreedyOutcome outcome;
  const Property needed = required_property(property);
  RemovalSet total{.mode = mode};
  Lts current = a;
  for (;;) {
    CheckResult here = check_property(current, needed, CheckOptions{.jobs = options.jobs});
    if (here.ok) break;

    const Components components(current, mode);
    const int n = static_cast<int>(components.size());
    std::vector<std::size_t> score(components.size(), std::numeric_limits<std::size_t>::max());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(options.jobs, 1))
    for (int i = 0; i < n; ++i) {
      try {
        auto b = try_apply_removal(current, components.make({static_cast<std::size_t>(i)}));
        if (b) score[static_cast<std::size_t>(i)] = check_property(*b, needed).unsolvable.size();
      } catch (...) {
#pragma omp critical(pnrepair_greedy_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    auto best = std::min_element(score.begin(), score.end());
    if (best == score.end() || *best == std::numeric_limits<std::size_t>::max()) {
      outcome.failure = "no valid single " + mode_name(mode) + " removal remains after removing " +
                        std::to_string(total.size()) + " component(s)";
      return outcome;
    }
    RemovalSet step = components.make({static_cast<std::size_t>(best - score.begin())});
    current = apply_removal(current, step);
    total.edges.insert(total.edges.end(), step.edges.begin(), step.edges.end());
    total.events.insert(total.events.end(), step.events.begin(), step.events.end());
    total.states.insert(total.states.end(), step.states.begin(), step.states.end());
  }
  // Stranded edges are part of the edge measure, so report the induced set.
  if (mode == RemovalMode::kEdge) total.edges = induced_edge_removal(a, current);
  outcome.result = finish(a, mode, property, std::move(total), options);
  return outcome;
}

std::string render_repair(const RepairResult& result) {
  std::ostringstream out;
  out << serialize_removal(result.removed);
  out << "k=" << result.k << "\n";
  out << "property=" << implementation_name(result.property) << "\n";
  out << "mode=" << mode_name(result.mode) << "\n";
  out << render_witness(result.repaired, result.witness);
  return out.str();
}

}  // namespace pnrepair
