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

#ifndef PNREPAIR_LTS_HPP_
#define PNREPAIR_LTS_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pnrepair {

using StateId = std::uint32_t;
using EventId = std::uint32_t;

struct Edge {
  StateId source = 0;
  EventId event = 0;
  StateId target = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// An edge spelled with identifiers rather than indices; the stable way to
/// refer to an edge across an LTS and its removals.
struct NamedEdge {
  std::string source;
  std::string event;
  std::string target;

  friend auto operator<=>(const NamedEdge&, const NamedEdge&) = default;
};

class LtsError : public std::runtime_error {
 public:
  enum class Kind {
    kSyntax,
    kMissingInitial,
    kNondeterministic,
    kUnreachable,
    kNameClash,
    kUnknownSymbol,
  };

  LtsError(Kind kind, const std::string& message, int line = 0, int column = 0);

  Kind kind() const { return kind_; }
  /// 1-based source position for syntax errors; 0 when not applicable.
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

/// Deterministic, reachable, initialized labeled transition system.
///
/// States and events are indexed in lexicographic order of their names and
/// edges are kept sorted by (source, event), so every iteration over an Lts is
/// canonical. Instances are immutable once built.
class Lts {
 public:
  /// Validates and builds an LTS. States and events are declared by
  /// occurrence; `initial` is always a state. Repeated identical edges are
  /// collapsed. Throws LtsError on nondeterminism, unreachable states or a name
  /// used both as state and event.
  static Lts build(std::string name, const std::string& initial, std::vector<NamedEdge> edges);

  const std::string& name() const { return name_; }
  std::size_t num_states() const { return state_names_.size(); }
  std::size_t num_events() const { return event_names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  StateId initial() const { return initial_; }
  const std::vector<std::string>& state_names() const { return state_names_; }
  const std::vector<std::string>& event_names() const { return event_names_; }
  const std::string& state_name(StateId s) const { return state_names_[s]; }
  const std::string& event_name(EventId e) const { return event_names_[e]; }

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<EventId> find_event(std::string_view name) const;

  /// All edges in canonical order.
  std::span<const Edge> edges() const { return edges_; }
  /// Outgoing edges of `s`, sorted by event.
  std::span<const Edge> out_edges(StateId s) const;
  std::optional<StateId> successor(StateId s, EventId e) const;
  bool has_edge(StateId s, EventId e) const { return successor(s, e).has_value(); }
  NamedEdge named(const Edge& edge) const;
  std::optional<Edge> find_edge(const NamedEdge& edge) const;

  /// Index into edges() of the breadth-first tree edge entering `s`, or -1 for
  /// the initial state. The tree is explored from the initial state in
  /// canonical edge order and certifies reachability of every state.
  std::int64_t tree_edge(StateId s) const { return tree_edge_[s]; }
  /// States in breadth-first discovery order (initial state first).
  const std::vector<StateId>& bfs_order() const { return bfs_order_; }
  /// Edge path from the initial state to `s` along the breadth-first tree.
  std::vector<Edge> path_to(StateId s) const;

 private:
  Lts() = default;

  std::string name_;
  std::vector<std::string> state_names_;
  std::vector<std::string> event_names_;
  StateId initial_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> out_begin_;  // size num_states + 1
  std::vector<std::int64_t> tree_edge_;
  std::vector<StateId> bfs_order_;
};

/// Parses the line-oriented LTS text format:
///
///   lts <name>
///   initial <state>
///   <source> <event> <target>     (zero or more)
///
/// Blank lines are ignored and a token starting with '#' comments out the rest
/// of its line.
Lts parse_lts(std::string_view text);
std::string serialize_lts(const Lts& lts);
Lts load_lts(const std::string& path);

/// True iff the word can be run from the initial state. The empty word is
/// always accepted. Throws LtsError(kUnknownSymbol) for symbols outside E.
bool is_word_in_language(const Lts& lts, std::span<const std::string> word);

/// The unique isomorphism mapping a's initial state to b's, as a vector
/// indexed by a's states, or nullopt when the two systems are not isomorphic.
/// Events are matched by name.
std::optional<std::vector<StateId>> lts_isomorphic(const Lts& a, const Lts& b);

}  // namespace pnrepair

#endif  // PNREPAIR_LTS_HPP_
