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


#include "pnrepair/synthesis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "pnrepair/text_format.hpp"

namespace pnrepair {
namespace {

std::optional<std::size_t> index_of(const std::vector<std::string>& names, std::string_view id) {
  auto it = std::find(names.begin(), names.end(), id);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

void require_matching_events(const Lts& lts, const PetriNet& net) {
  if (net.transitions != lts.event_names()) {
    throw NetError(NetError::Kind::kMismatch,
                   "transitions of net '" + net.name + "' differ from the events of '" + lts.name() + "'");
  }
}

std::string edge_text(const Lts& lts, const Edge& e) {
  return lts.state_name(e.source) + " -" + lts.event_name(e.event) + "-> " + lts.state_name(e.target);
}

// Fires N along A's breadth-first tree and then checks every edge of A.
// Net transition indices coincide with event ids once the names match.
VerifyReport simulate(const Lts& lts, const PetriNet& net) {
  require_matching_events(lts, net);
  VerifyReport report;
  report.phi.assign(lts.num_states(), Marking());
  report.phi[lts.initial()] = net.initial_marking;
  const auto edges = lts.edges();
  for (StateId s : lts.bfs_order()) {
    std::int64_t tree = lts.tree_edge(s);
    if (tree < 0) continue;
    const Edge& in = edges[static_cast<std::size_t>(tree)];
    if (!net.enabled(report.phi[in.source], in.event)) {
      report.failure = "edge " + edge_text(lts, in) + " cannot fire at " +
                       render_marking(report.phi[in.source]);
      report.phi.clear();
      return report;
    }
    report.phi[s] = net.fire(report.phi[in.source], in.event);
  }
  for (const Edge& e : edges) {
    const Marking& from = report.phi[e.source];
    if (!net.enabled(from, e.event)) {
      report.failure = "edge " + edge_text(lts, e) + " cannot fire at " + render_marking(from);
      return report;
    }
    if (net.fire(from, e.event) != report.phi[e.target]) {
      report.failure = "edge " + edge_text(lts, e) + " leads to " +
                       render_marking(net.fire(from, e.event)) + " instead of " +
                       render_marking(report.phi[e.target]);
      return report;
    }
  }
  report.ok = true;
  return report;
}

}  // namespace

NetError::NetError(Kind kind, const std::string& message, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      kind_(kind),
      line_(line) {}

std::optional<std::size_t> PetriNet::find_place(std::string_view id) const {
  return index_of(places, id);
}

std::optional<std::size_t> PetriNet::find_transition(std::string_view id) const {
  auto it = std::lower_bound(transitions.begin(), transitions.end(), id);
  if (it == transitions.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - transitions.begin());
}

bool PetriNet::enabled(const Marking& m, std::size_t t) const {
  for (std::size_t p = 0; p < places.size(); ++p) {
    if (m[p] < consume[p][t]) return false;
  }
  return true;
}

Marking PetriNet::fire(const Marking& m, std::size_t t) const {
  if (!enabled(m, t)) throw std::logic_error("transition '" + transitions[t] + "' is not enabled");
  Marking next(m.size());
  for (std::size_t p = 0; p < places.size(); ++p) next[p] = m[p] - consume[p][t] + produce[p][t];
  return next;
}

PetriNet synthesized_net(const Lts& lts, const Witness& witness, std::string name) {
  PetriNet net;
  net.name = std::move(name);
  net.transitions = lts.event_names();
  std::set<std::string> taken(lts.event_names().begin(), lts.event_names().end());
  for (std::size_t i = 0; i < witness.regions.size(); ++i) {
    const Region& r = witness.regions[i];
    if (r.sup.size() != lts.num_states() || r.con.size() != lts.num_events() ||
        r.pro.size() != lts.num_events()) {
      throw NetError(NetError::Kind::kMismatch, "region " + std::to_string(i) + " does not fit the LTS");
    }
    std::string place = "R" + std::to_string(i);
    while (taken.contains(place)) place += "'";
    taken.insert(place);
    net.places.push_back(place);
    net.consume.push_back(r.con);
    net.produce.push_back(r.pro);
    net.initial_marking.push_back(r.sup[lts.initial()]);
  }
  return net;
}

std::string render_marking(const Marking& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out += ',';
    out += m[i].to_string();
  }
  return out + ")";
}

ReachabilityResult reachability_graph(const PetriNet& net, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("reachability cap must be positive");
  ReachabilityResult result;
  std::map<Marking, std::size_t> index;
  std::vector<Marking> order;
  std::deque<std::size_t> frontier;
  std::vector<NamedEdge> edges;

  index.emplace(net.initial_marking, 0);
  order.push_back(net.initial_marking);
  frontier.push_back(0);
  while (!frontier.empty()) {
    std::size_t at = frontier.front();
    frontier.pop_front();
    const Marking current = order[at];
    for (std::size_t t = 0; t < net.transitions.size(); ++t) {
      if (!net.enabled(current, t)) continue;
      Marking next = net.fire(current, t);
      auto [it, fresh] = index.emplace(next, order.size());
      if (fresh) {
        order.push_back(next);
        if (order.size() > cap) {
          result.markings = order.size();
          return result;
        }
        frontier.push_back(it->second);
      }
      edges.push_back({render_marking(current), net.transitions[t], render_marking(next)});
    }
  }
  result.markings = order.size();
  result.graph = Lts::build(net.name, render_marking(net.initial_marking), std::move(edges));
  return result;
}

VerifyReport verify_embedding(const Lts& lts, const PetriNet& net) {
  VerifyReport report = simulate(lts, net);
  if (!report.ok) return report;
  std::map<Marking, StateId> seen;
  for (StateId s = 0; s < lts.num_states(); ++s) {
    auto [it, fresh] = seen.emplace(report.phi[s], s);
    if (!fresh) {
      report.ok = false;
      report.failure = "injectivity violated: " + lts.state_name(it->second) + " and " +
                       lts.state_name(s) + " both map to " + render_marking(report.phi[s]);
      return report;
    }
  }
  return report;
}

VerifyReport verify_language_simulation(const Lts& lts, const PetriNet& net) {
  VerifyReport report = simulate(lts, net);
  if (!report.ok) return report;
  for (EventId e = 0; e < lts.num_events(); ++e) {
    for (StateId s = 0; s < lts.num_states(); ++s) {
      if (!lts.has_edge(s, e) && net.enabled(report.phi[s], e)) {
        report.undetected.push_back(SeparationAtom::essa(e, s));
      }
    }
  }
  if (!report.undetected.empty()) {
    report.ok = false;
    const SeparationAtom& first = report.undetected.front();
    report.failure = "event " + lts.event_name(first.first) + " is enabled at the image of " +
                     lts.state_name(first.second) + " but does not occur there";
  }
  return report;
}

VerifyReport verify_realization(const Lts& lts, const PetriNet& net) {
  require_matching_events(lts, net);
  VerifyReport report;
  ReachabilityResult rg = reachability_graph(net, lts.num_states());
  if (rg.cap_exceeded()) {
    report.failure = "reachability graph exceeds " + std::to_string(lts.num_states()) + " markings";
    return report;
  }
  auto iso = lts_isomorphic(lts, *rg.graph);
  if (!iso) {
    report.failure = "reachability graph is not isomorphic to " + lts.name();
    return report;
  }
  report.ok = true;
  report.phi = simulate(lts, net).phi;
  return report;
}

PetriNet parse_net(std::string_view text) {
  std::vector<TextLine> lines = tokenize_lines(text);
  if (lines.empty() || lines[0].tokens[0].text != "net" || lines[0].tokens.size() != 2) {
    throw NetError(NetError::Kind::kFormat, "expected 'net <name>'", lines.empty() ? 1 : lines[0].number);
  }
  PetriNet net;
  net.name = lines[0].tokens[1].text;

  struct Arc {
    std::string from, to;
    Integer weight;
    int line;
  };
  std::vector<std::pair<std::string, Integer>> places;
  std::set<std::string> transitions;
  std::vector<Arc> arcs;
  auto parse_weight = [](const Token& token, int line) {
    try {
      Integer w = Integer::parse(token.text);
      if (w.sign() < 0) throw std::invalid_argument("negative");
      return w;
    } catch (const std::invalid_argument&) {
      throw NetError(NetError::Kind::kFormat, "expected a non-negative integer, got '" + token.text + "'", line);
    }
  };
  std::set<std::string> declared;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const TextLine& line = lines[i];
    const std::string& keyword = line.tokens[0].text;
    const std::size_t n = line.tokens.size();
    if (keyword == "place" && n == 3) {
      if (!declared.insert(line.tokens[1].text).second) {
        throw NetError(NetError::Kind::kFormat, "duplicate identifier '" + line.tokens[1].text + "'", line.number);
      }
      places.emplace_back(line.tokens[1].text, parse_weight(line.tokens[2], line.number));
    } else if (keyword == "transition" && n == 2) {
      if (!declared.insert(line.tokens[1].text).second) {
        throw NetError(NetError::Kind::kFormat, "duplicate identifier '" + line.tokens[1].text + "'", line.number);
      }
      transitions.insert(line.tokens[1].text);
    } else if (keyword == "arc" && n == 4) {
      arcs.push_back({line.tokens[1].text, line.tokens[2].text, parse_weight(line.tokens[3], line.number), line.number});
    } else {
      throw NetError(NetError::Kind::kFormat, "unrecognized line starting with '" + keyword + "'", line.number);
    }
  }

  net.transitions.assign(transitions.begin(), transitions.end());
  for (auto& [id, tokens] : places) {
    net.places.push_back(id);
    net.initial_marking.push_back(tokens);
  }
  net.consume.assign(net.places.size(), std::vector<Integer>(net.transitions.size()));
  net.produce = net.consume;
  std::set<std::pair<std::string, std::string>> seen_arcs;
  for (const Arc& arc : arcs) {
    if (!seen_arcs.emplace(arc.from, arc.to).second) {
      throw NetError(NetError::Kind::kFormat, "duplicate arc " + arc.from + " " + arc.to, arc.line);
    }
    auto p = net.find_place(arc.from);
    auto t = net.find_transition(arc.to);
    if (p && t) {
      net.consume[*p][*t] = arc.weight;
      continue;
    }
    t = net.find_transition(arc.from);
    p = net.find_place(arc.to);
    if (p && t) {
      net.produce[*p][*t] = arc.weight;
      continue;
    }
    throw NetError(NetError::Kind::kFormat, "arc must join a declared place and transition", arc.line);
  }
  return net;
}

std::string serialize_net(const PetriNet& net) {
  std::ostringstream out;
  out << "net " << net.name << "\n";
  for (std::size_t p = 0; p < net.places.size(); ++p) {
    out << "place " << net.places[p] << " " << net.initial_marking[p] << "\n";
  }
  for (const std::string& t : net.transitions) out << "transition " << t << "\n";
  for (std::size_t p = 0; p < net.places.size(); ++p) {
    for (std::size_t t = 0; t < net.transitions.size(); ++t) {
      if (!net.consume[p][t].is_zero()) {
        out << "arc " << net.places[p] << " " << net.transitions[t] << " " << net.consume[p][t] << "\n";
      }
    }
    for (std::size_t t = 0; t < net.transitions.size(); ++t) {
      if (!net.produce[p][t].is_zero()) {
        out << "arc " << net.transitions[t] << " " << net.places[p] << " " << net.produce[p][t] << "\n";
      }
    }
  }
  return out.str();
}

PetriNet load_net(const std::string& path) { return parse_net(read_text_file(path)); }

}  // namespace pnrepair
