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

#include "pnrepair/lts.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace pnrepair {
namespace {

std::uint32_t index_of(const std::vector<std::string>& sorted, std::string_view name) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), name);
  return static_cast<std::uint32_t>(it - sorted.begin());
}

std::optional<std::uint32_t> find_sorted(const std::vector<std::string>& sorted,
                                         std::string_view name) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), name);
  if (it == sorted.end() || *it != name) return std::nullopt;
  return static_cast<std::uint32_t>(it - sorted.begin());
}

}  // namespace

LtsError::LtsError(Kind kind, const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + message
                                  : message),
      kind_(kind),
      line_(line),
      column_(column) {}

Lts Lts::build(std::string name, const std::string& initial, std::vector<NamedEdge> edges) {
  Lts lts;
  lts.name_ = std::move(name);

  lts.state_names_.push_back(initial);
  for (const NamedEdge& e : edges) {
    lts.state_names_.push_back(e.source);
    lts.state_names_.push_back(e.target);
    lts.event_names_.push_back(e.event);
  }
  for (auto* names : {&lts.state_names_, &lts.event_names_}) {
    std::sort(names->begin(), names->end());
    names->erase(std::unique(names->begin(), names->end()), names->end());
  }
  for (const std::string& ev : lts.event_names_) {
    if (std::binary_search(lts.state_names_.begin(), lts.state_names_.end(), ev)) {
      throw LtsError(LtsError::Kind::kNameClash,
                     "identifier '" + ev + "' is used both as a state and as an event");
    }
  }

  lts.initial_ = index_of(lts.state_names_, initial);
  lts.edges_.reserve(edges.size());
  for (const NamedEdge& e : edges) {
    lts.edges_.push_back({index_of(lts.state_names_, e.source), index_of(lts.event_names_, e.event),
                          index_of(lts.state_names_, e.target)});
  }
  std::sort(lts.edges_.begin(), lts.edges_.end());
  lts.edges_.erase(std::unique(lts.edges_.begin(), lts.edges_.end()), lts.edges_.end());
  for (std::size_t i = 1; i < lts.edges_.size(); ++i) {
    const Edge& prev = lts.edges_[i - 1];
    const Edge& cur = lts.edges_[i];
    if (prev.source == cur.source && prev.event == cur.event) {
      throw LtsError(LtsError::Kind::kNondeterministic,
                     "nondeterministic: state '" + lts.state_names_[cur.source] + "' has two '" +
                         lts.event_names_[cur.event] + "'-edges (to '" +
                         lts.state_names_[prev.target] + "' and '" +
                         lts.state_names_[cur.target] + "')");
    }
  }

  const std::size_t n = lts.state_names_.size();
  lts.out_begin_.assign(n + 1, 0);
  for (const Edge& e : lts.edges_) ++lts.out_begin_[e.source + 1];
  for (std::size_t s = 0; s < n; ++s) lts.out_begin_[s + 1] += lts.out_begin_[s];

  lts.tree_edge_.assign(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<StateId> queue{lts.initial_};
  seen[lts.initial_] = true;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    lts.bfs_order_.push_back(s);
    for (std::uint32_t i = lts.out_begin_[s]; i < lts.out_begin_[s + 1]; ++i) {
      StateId t = lts.edges_[i].target;
      if (!seen[t]) {
        seen[t] = true;
        lts.tree_edge_[t] = i;
        queue.push_back(t);
      }
    }
  }
  if (lts.bfs_order_.size() != n) {
    std::string missing;
    for (StateId s = 0; s < n; ++s) {
      if (!seen[s]) missing += (missing.empty() ? "'" : ", '") + lts.state_names_[s] + "'";
    }
    throw LtsError(LtsError::Kind::kUnreachable, "unreachable state(s): " + missing);
  }
  return lts;
}

std::optional<StateId> Lts::find_state(std::string_view name) const {
  return find_sorted(state_names_, name);
}

std::optional<EventId> Lts::find_event(std::string_view name) const {
  return find_sorted(event_names_, name);
}

std::span<const Edge> Lts::out_edges(StateId s) const {
  return std::span<const Edge>(edges_).subspan(out_begin_[s], out_begin_[s + 1] - out_begin_[s]);
}

std::optional<StateId> Lts::successor(StateId s, EventId e) const {
  auto out = out_edges(s);
  auto it = std::lower_bound(out.begin(), out.end(), e,
                             [](const Edge& edge, EventId ev) { return edge.event < ev; });
  if (it == out.end() || it->event != e) return std::nullopt;
  return it->target;
}

NamedEdge Lts::named(const Edge& edge) const {
  return {state_names_[edge.source], event_names_[edge.event], state_names_[edge.target]};
}

std::optional<Edge> Lts::find_edge(const NamedEdge& edge) const {
  auto s = find_state(edge.source);
  auto e = find_event(edge.event);
  auto t = find_state(edge.target);
  if (!s || !e || !t) return std::nullopt;
  auto succ = successor(*s, *e);
  if (!succ || *succ != *t) return std::nullopt;
  return Edge{*s, *e, *t};
}

std::vector<Edge> Lts::path_to(StateId s) const {
  std::vector<Edge> path;
  while (tree_edge_[s] >= 0) {
    const Edge& e = edges_[static_cast<std::size_t>(tree_edge_[s])];
    path.push_back(e);
    s = e.source;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_word_in_language(const Lts& lts, std::span<const std::string> word) {
  std::vector<EventId> events;
  events.reserve(word.size());
  for (const std::string& symbol : word) {
    auto e = lts.find_event(symbol);
    if (!e) throw LtsError(LtsError::Kind::kUnknownSymbol, "unknown event '" + symbol + "'");
    events.push_back(*e);
  }
  StateId s = lts.initial();
  for (EventId e : events) {
    auto next = lts.successor(s, e);
    if (!next) return false;
    s = *next;
  }
  return true;
}

std::optional<std::vector<StateId>> lts_isomorphic(const Lts& a, const Lts& b) {
  if (a.num_states() != b.num_states() || a.num_edges() != b.num_edges() ||
      a.event_names() != b.event_names()) {
    return std::nullopt;
  }
  constexpr StateId kUnmapped = static_cast<StateId>(-1);
  std::vector<StateId> phi(a.num_states(), kUnmapped);
  std::vector<bool> used(b.num_states(), false);
  phi[a.initial()] = b.initial();
  used[b.initial()] = true;
  std::deque<StateId> queue{a.initial()};
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    auto out_a = a.out_edges(s);
    auto out_b = b.out_edges(phi[s]);
    if (out_a.size() != out_b.size()) return std::nullopt;
    // Event ids coincide because both event name lists are equal and sorted.
    for (std::size_t i = 0; i < out_a.size(); ++i) {
      if (out_a[i].event != out_b[i].event) return std::nullopt;
      StateId t = out_a[i].target;
      StateId u = out_b[i].target;
      if (phi[t] == kUnmapped) {
        if (used[u]) return std::nullopt;
        phi[t] = u;
        used[u] = true;
        queue.push_back(t);
      } else if (phi[t] != u) {
        return std::nullopt;
      }
    }
  }
  return phi;
}

}  // namespace pnrepair
