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


#include "pnrepair/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "pnrepair/lts.hpp"
#include "pnrepair/reductions.hpp"
#include "pnrepair/region.hpp"
#include "pnrepair/removal.hpp"
#include "pnrepair/repair.hpp"
#include "pnrepair/separation.hpp"
#include "pnrepair/synthesis.hpp"
#include "pnrepair/text_format.hpp"

namespace pnrepair {
namespace {

// Thrown for problems with the invocation itself (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Summary lines of artifact-producing verbs start with '#', so stdout stays
// a loadable file when no --out path is given.
void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

template <typename T, typename Parse>
T parse_choice(const std::string& text, Parse parse, const char* what) {
  auto value = parse(text);
  if (!value) throw UsageError(std::string("unknown ") + what + " '" + text + "'");
  return *value;
}

std::vector<std::size_t> parse_elements(const HittingSetInstance& h, const std::string& list) {
  std::vector<std::size_t> z;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto it = std::find(h.universe.begin(), h.universe.end(), item);
    if (it == h.universe.end()) throw UsageError("unknown element '" + item + "'");
    z.push_back(static_cast<std::size_t>(it - h.universe.begin()));
  }
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());
  return z;
}

struct Options {
  std::string property = "both";
  std::string relation;
  std::string mode;
  std::string family;
  std::string elements;
  std::string out_path;
  std::size_t cap = 100000;
  std::size_t max_k = 0;
  int jobs = 1;
  bool shrink = false;
  bool greedy = false;
  bool have_elements = false;
  std::string lts_path;
  std::string net_path;
  std::string hs_path;
  std::string removal_path;
};

int cmd_check(const Options& o, std::ostream& out) {
  Lts lts = load_lts(o.lts_path);
  Property property = parse_choice<Property>(o.property, parse_property, "property");
  CheckResult result = check_property(lts, property, CheckOptions{.shrink = o.shrink, .jobs = o.jobs});
  out << "property=" << property_name(property) << "\n";
  if (!result.ok) {
    out << "result=unsolvable atoms=" << result.unsolvable.size() << "\n";
    out << render_failure(lts, result.unsolvable);
    return kExitNegative;
  }
  out << "result=ok\n" << render_witness(lts, result.witness);
  return kExitOk;
}

int cmd_synth(const Options& o, std::ostream& out) {
  Lts lts = load_lts(o.lts_path);
  Property property = parse_choice<Property>(o.property, parse_property, "property");
  CheckResult result = check_property(lts, property, CheckOptions{.shrink = o.shrink, .jobs = o.jobs});
  if (!result.ok) {
    out << "property=" << property_name(property) << "\nresult=unsolvable atoms=" << result.unsolvable.size()
        << "\n"
        << render_failure(lts, result.unsolvable);
    return kExitNegative;
  }
  PetriNet net = synthesized_net(lts, result.witness, lts.name() + "_net");
  out << "# places=" << net.places.size() << " transitions=" << net.transitions.size() << "\n";
  emit(out, o.out_path, serialize_net(net));
  return kExitOk;
}

int cmd_rg(const Options& o, std::ostream& out) {
  if (o.cap == 0) throw UsageError("--cap must be positive");
  PetriNet net = load_net(o.net_path);
  ReachabilityResult rg = reachability_graph(net, o.cap);
  if (rg.cap_exceeded()) {
    out << "cap exceeded: more than " << o.cap << " markings\n";
    return kExitNegative;
  }
  out << "# markings=" << rg.markings << " edges=" << rg.graph->num_edges() << "\n";
  emit(out, o.out_path, serialize_lts(*rg.graph));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Lts lts = load_lts(o.lts_path);
  PetriNet net = load_net(o.net_path);
  Implementation relation = parse_choice<Implementation>(o.relation, parse_implementation, "relation");
  VerifyReport report;
  switch (relation) {
    case Implementation::kEmbedding: report = verify_embedding(lts, net); break;
    case Implementation::kLanguage: report = verify_language_simulation(lts, net); break;
    case Implementation::kRealization: report = verify_realization(lts, net); break;
  }
  out << "relation=" << implementation_name(relation) << "\n";
  if (!report.ok) {
    out << "result=failed\nreason: " << report.failure << "\n";
    for (const SeparationAtom& atom : report.undetected) out << "undetected " << render_atom(lts, atom) << "\n";
    return kExitNegative;
  }
  out << "result=ok\n";
  for (StateId s = 0; s < lts.num_states() && s < report.phi.size(); ++s) {
    out << "phi " << lts.state_name(s) << " " << render_marking(report.phi[s]) << "\n";
  }
  return kExitOk;
}

int cmd_repair(const Options& o, std::ostream& out) {
  Lts lts = load_lts(o.lts_path);
  RemovalMode mode = parse_choice<RemovalMode>(o.mode, parse_mode, "mode");
  Implementation property = parse_choice<Implementation>(o.property, parse_implementation, "property");
  RepairOptions options{.jobs = o.jobs, .shrink = o.shrink};
  std::optional<RepairResult> result;
  if (o.greedy) {
    GreedyOutcome greedy = greedy_upper_bound(lts, mode, property, options);
    if (!greedy.result) {
      out << "greedy failed: " << greedy.failure << "\n";
      return kExitNegative;
    }
    result = std::move(greedy.result);
  } else {
    RepairOutcome exact = min_removal(lts, mode, property, o.max_k, options);
    if (!exact.result) {
      out << "none within budget: no valid " << mode_name(mode) << " removal of size <= " << o.max_k
          << " yields " << implementation_name(property) << "\n";
      return kExitNegative;
    }
    result = std::move(exact.result);
  }
  out << render_repair(*result);
  if (!o.out_path.empty()) emit(out, o.out_path, serialize_removal(result->removed));
  return kExitOk;
}

int cmd_apply(const Options& o, std::ostream& out) {
  Lts lts = load_lts(o.lts_path);
  RemovalMode fallback = o.mode.empty() ? RemovalMode::kEdge : parse_choice<RemovalMode>(o.mode, parse_mode, "mode");
  RemovalSet removal = load_removal(o.removal_path, fallback);
  Lts result = apply_removal(lts, removal);
  std::vector<NamedEdge> induced = induced_edge_removal(lts, result);
  out << "# mode=" << mode_name(removal.mode) << " removed=" << removal.size()
      << " induced-edges=" << induced.size() << "\n";
  for (const NamedEdge& e : induced) out << "# induced edge " << e.source << " " << e.event << " " << e.target << "\n";
  emit(out, o.out_path, serialize_lts(result));
  return kExitOk;
}

int cmd_hs(const Options& o, std::ostream& out) {
  HittingSetInstance h = load_hitting_set(o.hs_path);
  std::vector<std::size_t> z;
  try {
    z = brute_force_min_hitting_set(h);
  } catch (const ReductionError& e) {
    out << "no hitting set: " << e.what() << "\n";
    return kExitNegative;
  }
  out << "size=" << z.size() << "\nZ=" << render_elements(h, z) << "\nlambda=" << h.lambda << "\n";
  return z.size() <= h.lambda ? kExitOk : kExitNegative;
}

int cmd_gen(const Options& o, std::ostream& out) {
  HittingSetInstance h = load_hitting_set(o.hs_path);
  ReductionFamily family = parse_choice<ReductionFamily>(o.family, parse_family, "family");
  GeneratedInstance g = generate_instance(h, family);
  out << "# kappa=" << g.kappa << " states=" << g.lts.num_states() << " edges=" << g.lts.num_edges() << "\n";
  emit(out, o.out_path, serialize_lts(g.lts));
  return kExitOk;
}

int cmd_map_fwd(const Options& o, std::ostream& out) {
  HittingSetInstance h = load_hitting_set(o.hs_path);
  ReductionFamily family = parse_choice<ReductionFamily>(o.family, parse_family, "family");
  std::vector<std::size_t> z = o.have_elements ? parse_elements(h, o.elements) : brute_force_min_hitting_set(h);
  RemovalSet removal = removal_from_hitting_set(h, z, family);
  out << "# Z=" << render_elements(h, z) << "\n# k=" << removal.size() << "\n";
  emit(out, o.out_path, serialize_removal(removal));
  return kExitOk;
}

int cmd_map_back(const Options& o, std::ostream& out) {
  HittingSetInstance h = load_hitting_set(o.hs_path);
  ReductionFamily family = parse_choice<ReductionFamily>(o.family, parse_family, "family");
  RemovalSet removal = load_removal(o.removal_path, family_mode(family));
  std::vector<std::size_t> z = hitting_set_from_removal(h, removal, family);
  out << "Z=" << render_elements(h, z) << "\nsize=" << z.size() << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Petri net synthesis and minimum-removal repair of labeled transition systems", "pnrepair"};
  app.require_subcommand(1, 1);
  Options o;

  auto jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto out_path = [&](CLI::App* sub, const char* what) { sub->add_option("--out", o.out_path, what); };

  std::vector<std::pair<CLI::App*, std::function<int(const Options&, std::ostream&)>>> verbs;

  auto* check = app.add_subcommand("check", "decide SSP, ESSP or both and print a witness or the unsolvable atoms");
  check->add_option("--property", o.property, "ssp|essp|both")->required();
  check->add_flag("--shrink", o.shrink, "shrink the witness by greedy set cover");
  check->add_option("lts", o.lts_path)->required();
  jobs(check);
  verbs.emplace_back(check, cmd_check);

  auto* synth = app.add_subcommand("synth", "synthesize a net from a witness");
  synth->add_option("--property", o.property, "ssp|essp|both (default both)");
  synth->add_flag("--shrink", o.shrink, "shrink the witness first");
  synth->add_option("lts", o.lts_path)->required();
  out_path(synth, "net file to write");
  jobs(synth);
  verbs.emplace_back(synth, cmd_synth);

  auto* rg = app.add_subcommand("rg", "reachability graph of a net");
  rg->add_option("--cap", o.cap, "maximum number of markings");
  rg->add_option("net", o.net_path)->required();
  out_path(rg, "LTS file to write");
  verbs.emplace_back(rg, cmd_rg);

  auto* verify = app.add_subcommand("verify", "check that a net implements an LTS");
  verify->add_option("--relation", o.relation, "embedding|language|realization")->required();
  verify->add_option("lts", o.lts_path)->required();
  verify->add_option("net", o.net_path)->required();
  verbs.emplace_back(verify, cmd_verify);

  auto* repair = app.add_subcommand("repair", "minimum removal making an LTS implementable");
  repair->add_option("--mode", o.mode, "edge|event|state")->required();
  repair->add_option("--property", o.property, "embedding|language|realization")->required();
  repair->add_option("--max-k", o.max_k, "removal budget");
  repair->add_flag("--greedy", o.greedy, "greedy upper bound instead of the exact search");
  repair->add_flag("--shrink", o.shrink, "shrink the reported witness");
  repair->add_option("lts", o.lts_path)->required();
  out_path(repair, "removal file to write");
  jobs(repair);
  verbs.emplace_back(repair, cmd_repair);

  auto* apply = app.add_subcommand("apply", "apply a removal file to an LTS");
  apply->add_option("--mode", o.mode, "mode assumed for an empty removal file");
  apply->add_option("removal", o.removal_path)->required();
  apply->add_option("lts", o.lts_path)->required();
  out_path(apply, "LTS file to write");
  verbs.emplace_back(apply, cmd_apply);

  auto* hs = app.add_subcommand("hs", "brute-force minimum hitting set");
  hs->add_option("instance", o.hs_path)->required();
  verbs.emplace_back(hs, cmd_hs);

  auto* gen = app.add_subcommand("gen", "generate the reduction LTS of a hitting-set instance");
  gen->add_option("--family", o.family, "edge-lang-real|edge-emb|event|state-lang-real|state-emb")->required();
  gen->add_option("instance", o.hs_path)->required();
  out_path(gen, "LTS file to write");
  verbs.emplace_back(gen, cmd_gen);

  auto* map_fwd = app.add_subcommand("map-fwd", "removal induced by a hitting set");
  map_fwd->add_option("--family", o.family)->required();
  map_fwd->add_option("--elements", o.elements, "comma-separated hitting set (default: a minimum one)");
  map_fwd->add_option("instance", o.hs_path)->required();
  out_path(map_fwd, "removal file to write");
  verbs.emplace_back(map_fwd, cmd_map_fwd);

  auto* map_back = app.add_subcommand("map-back", "hitting set read off a removal");
  map_back->add_option("--family", o.family)->required();
  map_back->add_option("instance", o.hs_path)->required();
  map_back->add_option("removal", o.removal_path)->required();
  verbs.emplace_back(map_back, cmd_map_back);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  o.have_elements = map_fwd->count("--elements") > 0;

  try {
    for (auto& [sub, action] : verbs) {
      if (sub->parsed()) return action(o, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const LtsError& e) {
    err << "lts error: " << e.what() << "\n";
  } catch (const NetError& e) {
    err << "net error: " << e.what() << "\n";
  } catch (const RemovalError& e) {
    err << "removal error: " << e.what() << "\n";
  } catch (const RegionError& e) {
    err << "region error: " << e.what() << "\n";
  } catch (const ReductionError& e) {
    err << "reduction error: " << e.what() << "\n";
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace pnrepair
