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

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "pnrepair/text_format.hpp"

namespace pnrepair {
namespace {

std::string join(std::initializer_list<std::string> parts) {
  std::string out;
  for (const std::string& p : parts) out += (out.empty() ? "" : "_") + p;
  return out;
}

std::string idx(std::size_t v) { return std::to_string(v); }

// Accumulates edges and remembers which event names were invented, so a
// universe element spelled like a gadget event is caught instead of merged.
class Builder {
 public:
  explicit Builder(const HittingSetInstance& h) : h_(h) {}

  void edge(const std::string& from, const std::string& event, const std::string& to) {
    edges_.push_back({from, event, to});
  }
  void gadget_edge(const std::string& from, const std::string& event, const std::string& to) {
    invented_.insert(event);
    edge(from, event, to);
  }
  const std::string& x(std::size_t element) const { return h_.universe[element]; }

  Lts build(const std::string& name) {
    for (const std::string& u : h_.universe) {
      if (invented_.contains(u)) {
        throw ReductionError("universe element '" + u + "' collides with a gadget event name");
      }
    }
    try {
      return Lts::build(name, "iota", std::move(edges_));
    } catch (const LtsError& e) {
      throw ReductionError(std::string("generated LTS is invalid: ") + e.what());
    }
  }

 private:
  const HittingSetInstance& h_;
  std::vector<NamedEdge> edges_;
  std::set<std::string> invented_;
};

Lts edge_lang_real(const HittingSetInstance& h, std::size_t kappa) {
  Builder b(h);
  for (std::size_t i = 0; i < h.sets.size(); ++i) {
    const auto& mi = h.sets[i];
    for (std::size_t j = 0; j <= kappa; ++j) {
      auto t = [&](std::size_t k) { return join({"t", idx(i), idx(j), idx(k)}); };
      for (std::size_t k = 0; k < mi.size(); ++k) b.edge(t(k), b.x(mi[k]), t(k + 1));
      b.edge(t(mi.size()), b.x(mi[0]), t(mi.size() + 1));
      b.gadget_edge("iota", join({"u", idx(i), idx(j)}), t(0));
    }
  }
  for (std::size_t i = 0; i < h.universe.size(); ++i) {
    const std::string f0 = join({"f", idx(i), "0"});
    const std::string f1 = join({"f", idx(i), "1"});
    b.edge(f0, b.x(i), f1);
    for (std::size_t l = 0; l <= kappa; ++l) b.gadget_edge(f0, join({"a", idx(l)}), f1);
    b.gadget_edge("iota", join({"v", idx(i)}), f0);
  }
  return b.build("edge_lang_real");
}

Lts edge_emb(const HittingSetInstance& h, std::size_t kappa) {
  Builder b(h);
  for (std::size_t i = 0; i < h.sets.size(); ++i) {
    const auto& mi = h.sets[i];
    const std::string k_i = join({"k", idx(i)});
    for (std::size_t j = 0; j <= kappa; ++j) {
      auto t = [&](std::size_t k) { return join({"t", idx(i), idx(j), idx(k)}); };
      auto d = [&](std::size_t k) { return join({"d", idx(i), idx(j), idx(k)}); };
      b.gadget_edge(t(0), k_i, t(1));
      for (std::size_t k = 0; k < mi.size(); ++k) b.edge(t(k + 1), b.x(mi[k]), t(k + 2));
      for (std::size_t k = 0; k < mi.size(); ++k) b.gadget_edge(d(k), "a", d(k + 1));
      b.gadget_edge(d(mi.size()), k_i, d(0));
      b.gadget_edge("iota", join({"u", idx(i), idx(j)}), t(0));
      b.gadget_edge("iota", join({"v", idx(i), idx(j)}), d(0));
    }
  }
  for (std::size_t i = 0; i < h.universe.size(); ++i) {
    const std::string f0 = join({"f", idx(i), "0"});
    const std::string f1 = join({"f", idx(i), "1"});
    b.gadget_edge(f0, "a", f1);
    b.edge(f0, b.x(i), f1);
    b.gadget_edge("iota", join({"w", idx(i)}), f0);
  }
  return b.build("edge_emb");
}

Lts event_all(const HittingSetInstance& h) {
  Builder b(h);
  for (std::size_t i = 0; i < h.sets.size(); ++i) {
    const auto& mi = h.sets[i];
    const std::size_t m = mi.size();
    const std::string k_i = join({"k", idx(i)});
    auto t = [&](std::size_t j) { return join({"t", idx(i), idx(j)}); };
    auto d = [&](std::size_t j) { return join({"d", idx(i), idx(j)}); };
    b.gadget_edge(t(0), k_i, t(1));
    for (std::size_t k = 0; k < m; ++k) b.edge(t(k + 1), b.x(mi[k]), t(k + 2));
    b.gadget_edge(t(m + 1), k_i, t(m + 2));
    for (std::size_t j = 0; j < m; ++j) b.edge(d(j), b.x(mi[j]), d((j + 1) % m));
    for (std::size_t j = 0; j <= m + 2; ++j) b.gadget_edge("iota", join({"u", idx(i), idx(j)}), t(j));
    for (std::size_t j = 0; j < m; ++j) b.gadget_edge("iota", join({"v", idx(i), idx(j)}), d(j));
  }
  return b.build("event_all");
}

// Maps gadget names back to universe positions.
std::map<std::string, std::size_t> names_by_element(const HittingSetInstance& h,
                                                    std::initializer_list<const char*> patterns) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < h.universe.size(); ++i) {
    for (const char* p : patterns) {
      std::string name = p;
      auto at = name.find('#');
      name.replace(at, 1, idx(i));
      out.emplace(name, i);
    }
  }
  return out;
}

}  // namespace

HittingSetInstance parse_hitting_set(std::string_view text) {
  HittingSetInstance h;
  bool have_universe = false;
  bool have_lambda = false;
  std::map<std::string, std::size_t> position;
  for (const TextLine& line : tokenize_lines(text)) {
    const auto& t = line.tokens;
    const std::string& keyword = t[0].text;
    if (keyword == "universe") {
      if (have_universe) throw FormatError("universe declared twice", line.number);
      have_universe = true;
      for (std::size_t k = 1; k < t.size(); ++k) {
        if (!position.emplace(t[k].text, h.universe.size()).second) {
          throw FormatError("duplicate element '" + t[k].text + "'", line.number);
        }
        h.universe.push_back(t[k].text);
      }
    } else if (keyword == "set") {
      if (!have_universe) throw FormatError("set before universe", line.number);
      std::vector<std::size_t> set;
      for (std::size_t k = 1; k < t.size(); ++k) {
        auto it = position.find(t[k].text);
        if (it == position.end()) throw FormatError("unknown element '" + t[k].text + "'", line.number);
        set.push_back(it->second);
      }
      std::sort(set.begin(), set.end());
      if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
        throw FormatError("repeated element in set", line.number);
      }
      h.sets.push_back(std::move(set));
    } else if (keyword == "lambda" && t.size() == 2) {
      if (have_lambda) throw FormatError("lambda declared twice", line.number);
      have_lambda = true;
      try {
        std::size_t used = 0;
        long long v = std::stoll(t[1].text, &used);
        if (used != t[1].text.size() || v < 0) throw std::invalid_argument("bad");
        h.lambda = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        throw FormatError("lambda must be a non-negative integer", line.number);
      }
    } else {
      throw FormatError("unrecognized line starting with '" + keyword + "'", line.number);
    }
  }
  if (!have_universe) throw FormatError("missing universe line");
  if (!have_lambda) throw FormatError("missing lambda line");
  return h;
}

std::string serialize_hitting_set(const HittingSetInstance& h) {
  std::string out = "universe";
  for (const std::string& u : h.universe) out += " " + u;
  out += "\n";
  for (const auto& set : h.sets) {
    out += "set";
    for (std::size_t e : set) out += " " + h.universe[e];
    out += "\n";
  }
  out += "lambda " + idx(h.lambda) + "\n";
  return out;
}

HittingSetInstance load_hitting_set(const std::string& path) {
  return parse_hitting_set(read_text_file(path));
}

bool is_hitting_set(const HittingSetInstance& h, const std::vector<std::size_t>& z) {
  std::vector<bool> in(h.universe.size(), false);
  for (std::size_t e : z) {
    if (e >= in.size()) return false;
    in[e] = true;
  }
  return std::all_of(h.sets.begin(), h.sets.end(), [&](const auto& set) {
    return std::any_of(set.begin(), set.end(), [&](std::size_t e) { return in[e]; });
  });
}

std::vector<std::size_t> brute_force_min_hitting_set(const HittingSetInstance& h) {
  const std::size_t n = h.universe.size();
  if (n > 20) throw ReductionError("brute force is limited to 20 universe elements");
  for (const auto& set : h.sets) {
    if (set.empty()) throw ReductionError("an empty set cannot be hit");
  }
  std::vector<std::uint32_t> masks;
  for (const auto& set : h.sets) {
    std::uint32_t mask = 0;
    for (std::size_t e : set) mask |= 1u << e;
    masks.push_back(mask);
  }
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      std::uint32_t chosen = 0;
      for (std::size_t e : pick) chosen |= 1u << e;
      if (std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & chosen) != 0; })) {
        return pick;
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("the full universe always hits non-empty sets");
}

std::string family_name(ReductionFamily family) {
  switch (family) {
    case ReductionFamily::kEdgeLangReal: return "edge-lang-real";
    case ReductionFamily::kEdgeEmb: return "edge-emb";
    case ReductionFamily::kEventAll: return "event";
    case ReductionFamily::kStateLangReal: return "state-lang-real";
    case ReductionFamily::kStateEmb: return "state-emb";
  }
  return "?";
}

std::optional<ReductionFamily> parse_family(std::string_view name) {
  for (auto f : {ReductionFamily::kEdgeLangReal, ReductionFamily::kEdgeEmb, ReductionFamily::kEventAll,
                 ReductionFamily::kStateLangReal, ReductionFamily::kStateEmb}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

RemovalMode family_mode(ReductionFamily family) {
  switch (family) {
    case ReductionFamily::kEdgeLangReal:
    case ReductionFamily::kEdgeEmb: return RemovalMode::kEdge;
    case ReductionFamily::kEventAll: return RemovalMode::kEvent;
    case ReductionFamily::kStateLangReal:
    case ReductionFamily::kStateEmb: return RemovalMode::kState;
  }
  return RemovalMode::kEdge;
}

std::vector<Implementation> family_implementations(ReductionFamily family) {
  switch (family) {
    case ReductionFamily::kEdgeLangReal:
    case ReductionFamily::kStateLangReal: return {Implementation::kLanguage, Implementation::kRealization};
    case ReductionFamily::kEdgeEmb:
    case ReductionFamily::kStateEmb: return {Implementation::kEmbedding};
    case ReductionFamily::kEventAll:
      return {Implementation::kEmbedding, Implementation::kLanguage, Implementation::kRealization};
  }
  return {};
}

void check_normal_form(const HittingSetInstance& h) {
  const std::size_t n = h.universe.size();
  if (h.lambda > n) throw ReductionError("lambda exceeds the universe size");
  for (std::size_t i = 0; i < h.sets.size(); ++i) {
    const std::size_t size = h.sets[i].size();
    if (size <= 1 || size > n) {
      throw ReductionError("set " + idx(i) + " has " + idx(size) + " elements; normal form needs 1 < |M_i| <= |U|");
    }
  }
}

GeneratedInstance generate_instance(const HittingSetInstance& h, ReductionFamily family) {
  check_normal_form(h);
  const std::size_t kappa = h.lambda;
  switch (family) {
    case ReductionFamily::kEdgeLangReal:
    case ReductionFamily::kStateLangReal: return {edge_lang_real(h, kappa), kappa};
    case ReductionFamily::kEdgeEmb:
    case ReductionFamily::kStateEmb: return {edge_emb(h, kappa), kappa};
    case ReductionFamily::kEventAll: return {event_all(h), kappa};
  }
  throw std::logic_error("bad family");
}

RemovalSet removal_from_hitting_set(const HittingSetInstance& h, const std::vector<std::size_t>& z,
                                    ReductionFamily family) {
  if (!is_hitting_set(h, z)) throw ReductionError("{" + render_elements(h, z) + "} is not a hitting set");
  RemovalSet removal;
  removal.mode = family_mode(family);
  for (std::size_t i : z) {
    switch (removal.mode) {
      case RemovalMode::kEdge:
        removal.edges.push_back({join({"f", idx(i), "0"}), h.universe[i], join({"f", idx(i), "1"})});
        break;
      case RemovalMode::kEvent: removal.events.push_back(h.universe[i]); break;
      case RemovalMode::kState: removal.states.push_back(join({"f", idx(i), "1"})); break;
    }
  }
  removal.normalize();
  return removal;
}

std::vector<std::size_t> hitting_set_from_removal(const HittingSetInstance& h, const RemovalSet& removal,
                                                  ReductionFamily family) {
  if (removal.mode != family_mode(family)) {
    throw ReductionError("a " + family_name(family) + " instance needs a " + mode_name(family_mode(family)) +
                         " removal");
  }
  std::set<std::size_t> z;
  switch (family) {
    case ReductionFamily::kEdgeLangReal:
    case ReductionFamily::kEdgeEmb: {
      auto sources = names_by_element(h, {"f_#_0"});
      auto connectors = names_by_element(h, {family == ReductionFamily::kEdgeEmb ? "w_#" : "v_#"});
      for (const NamedEdge& e : removal.edges) {
        if (auto it = sources.find(e.source); it != sources.end()) z.insert(it->second);
        if (e.source == "iota") {
          if (auto it = connectors.find(e.event); it != connectors.end()) z.insert(it->second);
        }
      }
      break;
    }
    case ReductionFamily::kEventAll: {
      for (const std::string& e : removal.events) {
        auto it = std::find(h.universe.begin(), h.universe.end(), e);
        if (it != h.universe.end()) z.insert(static_cast<std::size_t>(it - h.universe.begin()));
      }
      break;
    }
    case ReductionFamily::kStateLangReal:
    case ReductionFamily::kStateEmb: {
      auto f_states = names_by_element(h, {"f_#_0", "f_#_1"});
      for (const std::string& s : removal.states) {
        if (auto it = f_states.find(s); it != f_states.end()) z.insert(it->second);
      }
      break;
    }
  }
  std::vector<std::size_t> out(z.begin(), z.end());
  if (!is_hitting_set(h, out)) {
    throw ReductionError("mapped set {" + render_elements(h, out) + "} is not a hitting set");
  }
  return out;
}

std::string render_elements(const HittingSetInstance& h, const std::vector<std::size_t>& z) {
  std::string out;
  for (std::size_t e : z) out += (out.empty() ? "" : " ") + h.universe[e];
  return out;
}

}  // namespace pnrepair
