// Command-line front end: every operation on file-based instances, with a
// stable text format and an optional JSON mode (--json).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "antikit/closure_opt.hpp"
#include "antikit/errors.hpp"
#include "antikit/feasibility.hpp"
#include "antikit/hardness.hpp"
#include "antikit/io.hpp"
#include "antikit/poset.hpp"
#include "antikit/split_graph.hpp"
#include "antikit/structure.hpp"

using json = nlohmann::json;
using namespace antikit;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot read file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Trailing id tokens; a single "-" spells the empty set.
VertexSet parse_set_args(const std::vector<std::string>& tokens) {
  if (tokens.size() == 1 && tokens[0] == "-") return VertexSet{};
  std::vector<VertexId> ids;
  for (const std::string& t : tokens) {
    try {
      std::size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size() || v < 0) throw std::invalid_argument(t);
      ids.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad vertex id '" + t + "'");
    }
  }
  return VertexSet(std::move(ids));
}

json set_to_json(const VertexSet& s) {
  json a = json::array();
  for (VertexId v : s) a.push_back(v);
  return a;
}

json family_to_json(const SetFamily& family) {
  json sets = json::array();
  for (const VertexSet& s : family.sets()) sets.push_back(set_to_json(s));
  return json{{"ground", set_to_json(family.ground())}, {"sets", sets}};
}

json graph_to_json(const SplitGraph& g) {
  json edges = json::array();
  for (auto [k, i] : g.cross_edges()) edges.push_back(json::array({k, i}));
  return json{{"clique", set_to_json(g.clique())},
              {"independent", set_to_json(g.independent())},
              {"cross_edges", edges}};
}

json class_to_json(const FeasibleClass& c) {
  if (c.is_star()) return json{{"class", "Star"}};
  return json{{"class", "IFeasible"}, {"i", *c.witness()}};
}

std::string class_to_text(const FeasibleClass& c) {
  if (c.is_star()) return "Star";
  return "IFeasible " + std::to_string(*c.witness());
}

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << text;
  }
}

struct Options {
  bool as_json = false;
  std::string graph_file;
  std::string family_file;
  std::string weight_file;
  std::vector<std::string> set_tokens;
  bool normalize = false;
  bool minimize = false;
  bool force_canonical = false;
  std::string delta = "0.1";
  std::vector<std::string> extract_tokens;
};

int run_validate(const Options& opt) {
  SplitGraph g = parse_graph(read_file(opt.graph_file));
  if (opt.normalize) g = g.normalized();
  emit(opt.as_json, graph_to_json(g), serialize_graph(g));
  return 0;
}

int run_feasible(const Options& opt) {
  SplitGraph g = parse_graph(read_file(opt.graph_file));
  VertexSet f = parse_set_args(opt.set_tokens);
  if (!is_feasible(g, f)) {
    emit(opt.as_json, json{{"feasible", false}}, "infeasible\n");
    return 0;
  }
  FeasibleClass c = classify(g, f);
  json j = class_to_json(c);
  j["feasible"] = true;
  emit(opt.as_json, j, "feasible (" + class_to_text(c) + ")\n");
  return 0;
}

int run_shelling(const Options& opt) {
  SplitGraph g = parse_graph(read_file(opt.graph_file));
  Shelling s = shelling(g, parse_set_args(opt.set_tokens));
  json order = json::array();
  std::ostringstream text;
  if (s.order.empty()) {
    text << "-";
  } else {
    for (std::size_t i = 0; i < s.order.size(); ++i) {
      if (i > 0) text << ' ';
      text << s.order[i];
      order.push_back(s.order[i]);
    }
  }
  text << '\n';
  emit(opt.as_json, json{{"order", order}}, text.str());
  return 0;
}

int run_enumerate(const Options& opt) {
  SplitGraph g = parse_graph(read_file(opt.graph_file));
  SetFamily fam = enumerate_feasible(g, BruteForceLimits::from_env());
  emit(opt.as_json, family_to_json(fam), serialize_family(fam));
  return 0;
}

int run_classify(const Options& opt) {
  SplitGraph g = parse_graph(read_file(opt.graph_file));
  FeasibleClass c = classify(g, parse_set_args(opt.set_tokens));
  emit(opt.as_json, class_to_json(c), class_to_text(c) + "\n");
  return 0;
}

int run_maxweight(const Options& opt) {
  SplitGraph g = parse_graph(read_file(opt.graph_file));
  WeightsFile wf = parse_weights(read_file(opt.weight_file), g);
  for (const std::string& warning : wf.warnings) {
    std::cerr << "warning: " << warning << '\n';
  }
  OptResult r = max_weight_feasible(g, wf.weights,
                                    opt.minimize ? OptSense::Min : OptSense::Max);
  json j{{"set", set_to_json(r.best_set)},
         {"weight", format_rational(r.best_weight)},
         {"sense", opt.minimize ? "min" : "max"}};
  j.update(class_to_json(r.feasible_class));
  std::ostringstream text;
  text << "set: " << serialize_set(r.best_set) << '\n'
       << "weight: " << format_rational(r.best_weight) << '\n'
       << "class: " << class_to_text(r.feasible_class) << '\n';
  emit(opt.as_json, j, text.str());
  return 0;
}

int run_paths(const Options& opt) {
  SplitGraph g = parse_graph(read_file(opt.graph_file));
  std::vector<AntimatroidPath> paths = path_poset(g);
  json arr = json::array();
  std::ostringstream text;
  for (const AntimatroidPath& p : paths) {
    json e{{"members", set_to_json(p.members)}, {"class", to_string(p.path_class)}};
    text << to_string(p.path_class) << " | " << serialize_set(p.members);
    if (p.path_class == PathClass::P2) {
      e["k"] = *p.clique_anchor;
      text << "  [k=" << *p.clique_anchor << "]";
    } else if (p.path_class == PathClass::P3) {
      e["k"] = *p.clique_anchor;
      e["i"] = *p.independent_anchor;
      text << "  [i=" << *p.independent_anchor << ", k=" << *p.clique_anchor << "]";
    }
    text << '\n';
    arr.push_back(e);
  }
  emit(opt.as_json, json{{"paths", arr}}, text.str());
  return 0;
}

int run_circuits(const Options& opt) {
  SplitGraph g = parse_graph(read_file(opt.graph_file));
  json arr = json::array();
  std::ostringstream text;
  for (const RootedCircuit& c : rooted_circuits(g)) {
    arr.push_back(json{{"root", c.root},
                       {"support", set_to_json(c.support)},
                       {"class", to_string(c.circuit_class)},
                       {"critical", c.critical}});
    text << c.root << " | " << serialize_set(c.support) << "  [" << to_string(c.circuit_class)
         << (c.critical ? ", critical" : "") << "]\n";
  }
  emit(opt.as_json, json{{"circuits", arr}}, text.str());
  return 0;
}

int run_free(const Options& opt) {
  SplitGraph g = parse_graph(read_file(opt.graph_file));
  bool free = is_free(g, parse_set_args(opt.set_tokens));
  emit(opt.as_json, json{{"free", free}}, free ? "free\n" : "not free\n");
  return 0;
}

int run_trace(const Options& opt) {
  SetFamily fam = parse_family(read_file(opt.family_file));
  SetFamily t = trace(fam, parse_set_args(opt.set_tokens));
  emit(opt.as_json, family_to_json(t), serialize_family(t));
  return 0;
}

int run_reconstruct(const Options& opt) {
  SetFamily fam = parse_family(read_file(opt.family_file));
  SplitGraph g = reconstruct_graph(fam, opt.force_canonical);
  emit(opt.as_json, graph_to_json(g), serialize_graph(g));
  return 0;
}

int run_recognize(const Options& opt) {
  SetFamily fam = parse_family(read_file(opt.family_file));
  Recognition r = recognize(fam, opt.force_canonical, BruteForceLimits::from_env());
  if (r.ok()) {
    json j{{"recognized", true}, {"graph", graph_to_json(*r.graph)}};
    emit(opt.as_json, j, serialize_graph(*r.graph));
    return 0;
  }
  json witnesses = json::array();
  std::ostringstream text;
  text << "not recognized: " << to_string(r.verdict);
  if (!r.detail.empty()) text << ": " << r.detail;
  text << '\n';
  for (const VertexSet& w : r.witnesses) {
    witnesses.push_back(set_to_json(w));
    text << "witness: " << serialize_set(w) << '\n';
  }
  emit(opt.as_json,
       json{{"recognized", false},
            {"verdict", to_string(r.verdict)},
            {"detail", r.detail},
            {"witnesses", witnesses}},
       text.str());
  return 1;
}

int run_hardness(const Options& opt) {
  hardness::SourceGraph g = parse_source_graph(read_file(opt.graph_file));
  hardness::ReductionInstance inst =
      hardness::ReductionInstance::build(g, parse_rational(opt.delta));

  json elements = json::array();
  std::ostringstream text;
  text << "delta: " << format_rational(inst.delta()) << '\n';
  for (int e = 0; e < inst.element_count(); ++e) {
    elements.push_back(json{{"name", inst.element_name(e)},
                            {"kind", inst.is_vertex_element(e) ? "vertex" : "edge"},
                            {"weight", format_rational(inst.weight(e))}});
    text << "element " << inst.element_name(e) << ' ' << format_rational(inst.weight(e)) << '\n';
  }
  std::size_t path_count = hardness::path_poset(inst).size();
  text << "paths: " << path_count << '\n';
  json j{{"delta", format_rational(inst.delta())},
         {"elements", elements},
         {"path_count", path_count}};

  if (!opt.extract_tokens.empty()) {
    std::vector<hardness::ElementId> ids;
    if (!(opt.extract_tokens.size() == 1 && opt.extract_tokens[0] == "-")) {
      for (const std::string& name : opt.extract_tokens) {
        auto e = inst.element_by_name(name);
        if (!e) fail(ErrorKind::UnknownElement, "'" + name + "'");
        ids.push_back(*e);
      }
    }
    hardness::ElementSet f(std::move(ids));
    hardness::Extraction ex = hardness::extract_independent_set(inst, f);
    auto names_of = [&inst](const hardness::ElementSet& s) {
      std::string out;
      json arr = json::array();
      for (hardness::ElementId e : s) {
        if (!out.empty()) out += ' ';
        out += inst.element_name(e);
        arr.push_back(inst.element_name(e));
      }
      if (out.empty()) out = "-";
      return std::make_pair(out, arr);
    };
    auto [reduced_text, reduced_json] = names_of(ex.feasible_subset);
    auto [indep_text, indep_json] = names_of(ex.independent_vertices);
    Rational bound = inst.delta() * Rational(static_cast<long long>(ex.independent_vertices.size()));
    text << "input weight: " << format_rational(inst.weight_sum(f)) << '\n'
         << "reduced: " << reduced_text << '\n'
         << "independent: " << indep_text << '\n'
         << "bound: " << format_rational(bound) << '\n';
    j["extract"] = json{{"input_weight", format_rational(inst.weight_sum(f))},
                        {"reduced", reduced_json},
                        {"independent", indep_json},
                        {"bound", format_rational(bound)}};
  }
  emit(opt.as_json, j, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"split graph shelling antimatroid toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.as_json, "machine-readable output");

  auto* validate = app.add_subcommand("validate", "parse and canonicalize a split graph");
  validate->add_option("graph", opt.graph_file)->required();
  validate->add_flag("--normalize", opt.normalize, "apply the partition normalization");

  auto* feasible = app.add_subcommand("feasible", "test feasibility of a vertex set");
  feasible->add_option("graph", opt.graph_file)->required();
  feasible->add_option("ids", opt.set_tokens, "vertex ids, or - for the empty set");

  auto* shelling_cmd = app.add_subcommand("shelling", "simplicial shelling of a feasible set");
  shelling_cmd->add_option("graph", opt.graph_file)->required();
  shelling_cmd->add_option("ids", opt.set_tokens);

  auto* enumerate = app.add_subcommand("enumerate", "list all feasible sets");
  enumerate->add_option("graph", opt.graph_file)->required();

  auto* classify_cmd = app.add_subcommand("classify", "star or i-feasible classification");
  classify_cmd->add_option("graph", opt.graph_file)->required();
  classify_cmd->add_option("ids", opt.set_tokens);

  auto* maxweight = app.add_subcommand("maxweight", "optimal feasible set for a weight file");
  maxweight->add_option("graph", opt.graph_file)->required();
  maxweight->add_option("weights", opt.weight_file)->required();
  maxweight->add_flag("--min", opt.minimize, "minimize instead of maximize");

  auto* paths = app.add_subcommand("paths", "path poset of the shelling antimatroid");
  paths->add_option("graph", opt.graph_file)->required();

  auto* circuits = app.add_subcommand("circuits", "rooted circuits with criticality");
  circuits->add_option("graph", opt.graph_file)->required();

  auto* free_cmd = app.add_subcommand("free", "test whether a vertex set is free");
  free_cmd->add_option("graph", opt.graph_file)->required();
  free_cmd->add_option("ids", opt.set_tokens);

  auto* trace_cmd = app.add_subcommand("trace", "trace of a set family on a vertex set");
  trace_cmd->add_option("family", opt.family_file)->required();
  trace_cmd->add_option("ids", opt.set_tokens);

  auto* reconstruct = app.add_subcommand("reconstruct", "rebuild the split graph of a family");
  reconstruct->add_option("family", opt.family_file)->required();
  reconstruct->add_flag("--force-canonical", opt.force_canonical,
                        "return the edgeless graph for the full power set");

  auto* recognize_cmd =
      app.add_subcommand("recognize", "decide whether a family is a split shelling antimatroid");
  recognize_cmd->add_option("family", opt.family_file)->required();
  recognize_cmd->add_flag("--force-canonical", opt.force_canonical);

  auto* hardness_cmd =
      app.add_subcommand("hardness", "edge-cover reduction instance for an arbitrary graph");
  hardness_cmd->add_option("graph", opt.graph_file)->required();
  hardness_cmd->add_option("--delta", opt.delta, "vertex weight offset (default 0.1)");
  hardness_cmd->add_option("--extract", opt.extract_tokens,
                           "feasible elements to run the independent-set extraction on");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (validate->parsed()) return run_validate(opt);
    if (feasible->parsed()) return run_feasible(opt);
    if (shelling_cmd->parsed()) return run_shelling(opt);
    if (enumerate->parsed()) return run_enumerate(opt);
    if (classify_cmd->parsed()) return run_classify(opt);
    if (maxweight->parsed()) return run_maxweight(opt);
    if (paths->parsed()) return run_paths(opt);
    if (circuits->parsed()) return run_circuits(opt);
    if (free_cmd->parsed()) return run_free(opt);
    if (trace_cmd->parsed()) return run_trace(opt);
    if (reconstruct->parsed()) return run_reconstruct(opt);
    if (recognize_cmd->parsed()) return run_recognize(opt);
    if (hardness_cmd->parsed()) return run_hardness(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_domain_refusal(e.kind()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
