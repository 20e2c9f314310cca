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


#include "pnrepair/removal.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pnrepair/text_format.hpp"

namespace pnrepair {
namespace {

struct Outcome {
  std::optional<Lts> lts;
  RemovalError::Kind kind = RemovalError::Kind::kClosure;
  std::string message;
};

std::vector<bool> reachable_without(const Lts& a, const std::vector<bool>& dropped_edges) {
  std::vector<bool> seen(a.num_states(), false);
  std::deque<StateId> queue = {a.initial()};
  seen[a.initial()] = true;
  const auto edges = a.edges();
  const Edge* base = edges.data();
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (const Edge& e : a.out_edges(s)) {
      if (dropped_edges[static_cast<std::size_t>(&e - base)] || seen[e.target]) continue;
      seen[e.target] = true;
      queue.push_back(e.target);
    }
  }
  return seen;
}

Lts build_kept(const Lts& a, const std::vector<bool>& dropped_edges) {
  std::vector<NamedEdge> kept;
  const auto edges = a.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (!dropped_edges[k]) kept.push_back(a.named(edges[k]));
  }
  return Lts::build(a.name(), a.state_name(a.initial()), std::move(kept));
}

// Edge and event removal: every kept edge must still be reachable.
Outcome remove_edges(const Lts& a, const std::vector<bool>& dropped, const char* what) {
  std::vector<bool> seen = reachable_without(a, dropped);
  std::string stranded;
  const auto edges = a.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (!dropped[k] && !seen[edges[k].source]) {
      const NamedEdge n = a.named(edges[k]);
      stranded += " " + n.source + "-" + n.event + "->" + n.target;
    }
  }
  if (!stranded.empty()) {
    return {std::nullopt, RemovalError::Kind::kClosure,
            std::string(what) + " leaves edges unreachable:" + stranded};
  }
  return {build_kept(a, dropped), {}, {}};
}

Outcome edge_outcome(const Lts& a, std::span<const NamedEdge> removed) {
  std::vector<bool> dropped(a.num_edges(), false);
  const Edge* base = a.edges().data();
  for (const NamedEdge& n : removed) {
    auto e = a.find_edge(n);
    if (!e) {
      return {std::nullopt, RemovalError::Kind::kUnknownComponent,
              "edge " + n.source + " " + n.event + " " + n.target + " is not in the LTS"};
    }
    auto out = a.out_edges(e->source);
    auto it = std::lower_bound(out.begin(), out.end(), *e);
    dropped[static_cast<std::size_t>(&*it - base)] = true;
  }
  return remove_edges(a, dropped, "edge removal");
}

Outcome event_outcome(const Lts& a, std::span<const std::string> removed) {
  std::vector<bool> gone(a.num_events(), false);
  for (const std::string& name : removed) {
    auto e = a.find_event(name);
    if (!e) return {std::nullopt, RemovalError::Kind::kUnknownComponent, "unknown event '" + name + "'"};
    gone[*e] = true;
  }
  std::vector<bool> dropped(a.num_edges(), false);
  const auto edges = a.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) dropped[k] = gone[edges[k].event];
  return remove_edges(a, dropped, "event removal");
}

Outcome state_outcome(const Lts& a, std::span<const std::string> removed) {
  std::vector<bool> gone(a.num_states(), false);
  for (const std::string& name : removed) {
    auto s = a.find_state(name);
    if (!s) return {std::nullopt, RemovalError::Kind::kUnknownComponent, "unknown state '" + name + "'"};
    if (*s == a.initial()) {
      return {std::nullopt, RemovalError::Kind::kInitialRemoved, "the initial state cannot be removed"};
    }
    gone[*s] = true;
  }
  std::vector<bool> dropped(a.num_edges(), false);
  const auto edges = a.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) dropped[k] = gone[edges[k].source] || gone[edges[k].target];
  std::vector<bool> seen = reachable_without(a, dropped);
  std::string unreachable;
  for (StateId s = 0; s < a.num_states(); ++s) {
    if (!gone[s] && !seen[s]) unreachable += " " + a.state_name(s);
  }
  if (!unreachable.empty()) {
    return {std::nullopt, RemovalError::Kind::kUnreachable,
            "state removal leaves states unreachable:" + unreachable};
  }
  return {build_kept(a, dropped), {}, {}};
}

Outcome outcome(const Lts& a, const RemovalSet& removal) {
  switch (removal.mode) {
    case RemovalMode::kEdge: return edge_outcome(a, removal.edges);
    case RemovalMode::kEvent: return event_outcome(a, removal.events);
    case RemovalMode::kState: return state_outcome(a, removal.states);
  }
  throw std::logic_error("bad removal mode");
}

Lts unwrap(Outcome o) {
  if (!o.lts) throw RemovalError(o.kind, o.message);
  return std::move(*o.lts);
}

}  // namespace

std::string mode_name(RemovalMode mode) {
  switch (mode) {
    case RemovalMode::kEdge: return "edge";
    case RemovalMode::kEvent: return "event";
    case RemovalMode::kState: return "state";
  }
  return "?";
}

std::optional<RemovalMode> parse_mode(std::string_view name) {
  if (name == "edge") return RemovalMode::kEdge;
  if (name == "event") return RemovalMode::kEvent;
  if (name == "state") return RemovalMode::kState;
  return std::nullopt;
}

std::size_t RemovalSet::size() const {
  switch (mode) {
    case RemovalMode::kEdge: return edges.size();
    case RemovalMode::kEvent: return events.size();
    case RemovalMode::kState: return states.size();
  }
  return 0;
}

void RemovalSet::normalize() {
  auto tidy = [](auto& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  tidy(edges);
  tidy(events);
  tidy(states);
}

Lts apply_edge_removal(const Lts& a, std::span<const NamedEdge> removed) {
  return unwrap(edge_outcome(a, removed));
}

Lts apply_event_removal(const Lts& a, std::span<const std::string> removed) {
  return unwrap(event_outcome(a, removed));
}

Lts apply_state_removal(const Lts& a, std::span<const std::string> removed) {
  return unwrap(state_outcome(a, removed));
}

Lts apply_removal(const Lts& a, const RemovalSet& removal) { return unwrap(outcome(a, removal)); }

std::optional<Lts> try_apply_removal(const Lts& a, const RemovalSet& removal) {
  return outcome(a, removal).lts;
}

std::vector<NamedEdge> induced_edge_removal(const Lts& a, const Lts& b) {
  std::vector<NamedEdge> missing;
  for (const Edge& e : a.edges()) {
    NamedEdge n = a.named(e);
    if (!b.find_edge(n)) missing.push_back(std::move(n));
  }
  return missing;
}

RemovalSet parse_removal(std::string_view text, RemovalMode fallback) {
  RemovalSet removal;
  removal.mode = fallback;
  std::optional<RemovalMode> seen;
  for (const TextLine& line : tokenize_lines(text)) {
    const auto& t = line.tokens;
    auto fail = [&](const std::string& message) {
      throw RemovalError(RemovalError::Kind::kFormat, "line " + std::to_string(line.number) + ": " + message);
    };
    if (t[0].text != "remove" || t.size() < 2) fail("expected 'remove edge|event|state ...'");
    auto mode = parse_mode(t[1].text);
    if (!mode) fail("unknown removal kind '" + t[1].text + "'");
    if (seen && *seen != *mode) fail("a removal file uses a single mode");
    seen = mode;
    const std::size_t want = *mode == RemovalMode::kEdge ? 5 : 3;
    if (t.size() != want) fail("wrong number of fields");
    switch (*mode) {
      case RemovalMode::kEdge: removal.edges.push_back({t[2].text, t[3].text, t[4].text}); break;
      case RemovalMode::kEvent: removal.events.push_back(t[2].text); break;
      case RemovalMode::kState: removal.states.push_back(t[2].text); break;
    }
  }
  if (seen) removal.mode = *seen;
  removal.normalize();
  return removal;
}

std::string serialize_removal(const RemovalSet& removal) {
  std::string out;
  switch (removal.mode) {
    case RemovalMode::kEdge:
      for (const NamedEdge& e : removal.edges) {
        out += "remove edge " + e.source + " " + e.event + " " + e.target + "\n";
      }
      break;
    case RemovalMode::kEvent:
      for (const std::string& e : removal.events) out += "remove event " + e + "\n";
      break;
    case RemovalMode::kState:
      for (const std::string& s : removal.states) out += "remove state " + s + "\n";
      break;
  }
  return out;
}

RemovalSet load_removal(const std::string& path, RemovalMode fallback) {
  return parse_removal(read_text_file(path), fallback);
}

}  // namespace pnrepair
