#include "antikit/io.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "antikit/errors.hpp"
#include "antikit/rational.hpp"

namespace antikit {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

VertexId parse_vertex_id(const std::string& tok) {
  if (tok.empty()) fail(ErrorKind::Parse, "empty vertex id");
  for (char c : tok) {
    if (c < '0' || c > '9') fail(ErrorKind::Parse, "bad vertex id '" + tok + "'");
  }
  try {
    return std::stoi(tok);
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "vertex id out of range '" + tok + "'");
  }
}

std::pair<std::string, std::string> split_edge_token(const std::string& tok) {
  auto dash = tok.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size()) {
    fail(ErrorKind::Parse, "bad edge token '" + tok + "' (expected a-b)");
  }
  return {tok.substr(0, dash), tok.substr(dash + 1)};
}

}  // namespace

SplitGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<VertexId> clique;
  std::vector<VertexId> independent;
  std::vector<std::pair<VertexId, VertexId>> edges;
  int k_lines = 0;
  int i_lines = 0;
  int e_lines = 0;

  while (std::getline(in, line)) {
    auto toks = tokens_of(strip_comment(line));
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    if (head == "K:") {
      ++k_lines;
      for (std::size_t t = 1; t < toks.size(); ++t) clique.push_back(parse_vertex_id(toks[t]));
    } else if (head == "I:") {
      ++i_lines;
      for (std::size_t t = 1; t < toks.size(); ++t) independent.push_back(parse_vertex_id(toks[t]));
    } else if (head == "E:") {
      ++e_lines;
      for (std::size_t t = 1; t < toks.size(); ++t) {
        auto [a, b] = split_edge_token(toks[t]);
        edges.emplace_back(parse_vertex_id(a), parse_vertex_id(b));
      }
    } else {
      fail(ErrorKind::Parse, "unexpected line '" + line + "'");
    }
  }
  if (k_lines != 1) fail(ErrorKind::Parse, "expected exactly one K: line");
  if (i_lines != 1) fail(ErrorKind::Parse, "expected exactly one I: line");
  if (e_lines > 1) fail(ErrorKind::Parse, "expected at most one E: line");
  return SplitGraph::validate(clique, independent, edges);
}

std::string serialize_graph(const SplitGraph& g) {
  std::ostringstream out;
  out << "K:";
  for (VertexId v : g.clique()) out << ' ' << v;
  out << "\nI:";
  for (VertexId v : g.independent()) out << ' ' << v;
  out << '\n';
  if (!g.cross_edges().empty()) {
    out << "E:";
    for (auto [k, i] : g.cross_edges()) out << ' ' << k << '-' << i;
    out << '\n';
  }
  return out.str();
}

SetFamily parse_family(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<VertexSet> sets;
  VertexSet ground;
  while (std::getline(in, line)) {
    auto toks = tokens_of(strip_comment(line));
    if (toks.empty()) continue;
    if (toks.size() == 1 && toks[0] == "-") {
      sets.push_back(VertexSet{});
      continue;
    }
    std::vector<VertexId> ids;
    ids.reserve(toks.size());
    for (const std::string& t : toks) ids.push_back(parse_vertex_id(t));
    VertexSet s(std::move(ids));
    ground = ground.unite(s);
    sets.push_back(std::move(s));
  }
  return SetFamily(ground, std::move(sets));
}

std::string serialize_set(const VertexSet& s) {
  if (s.empty()) return "-";
  std::ostringstream out;
  bool first = true;
  for (VertexId v : s) {
    if (!first) out << ' ';
    out << v;
    first = false;
  }
  return out.str();
}

std::string serialize_family(const SetFamily& family) {
  std::ostringstream out;
  for (const VertexSet& s : family.sets()) out << serialize_set(s) << '\n';
  return out.str();
}

WeightsFile parse_weights(const std::string& text, const SplitGraph& g) {
  std::istringstream in(text);
  std::string line;
  std::map<VertexId, Rational> given;
  while (std::getline(in, line)) {
    auto toks = tokens_of(strip_comment(line));
    if (toks.empty()) continue;
    if (toks.size() != 2) fail(ErrorKind::Parse, "expected 'vertex weight' on line '" + line + "'");
    VertexId v = parse_vertex_id(toks[0]);
    if (!g.has_vertex(v)) {
      fail(ErrorKind::UnknownVertex, toks[0] + " in weight file is not in the graph");
    }
    if (given.count(v)) fail(ErrorKind::Parse, "vertex " + toks[0] + " weighted twice");
    given[v] = parse_rational(toks[1]);
  }

  WeightsFile out;
  for (VertexId v : g.vertices()) {
    auto it = given.find(v);
    if (it == given.end()) {
      out.weights.set(v, Rational(0));
      out.warnings.push_back("vertex " + std::to_string(v) + " has no weight; defaulting to 0");
    } else {
      out.weights.set(v, it->second);
    }
  }
  return out;
}

hardness::SourceGraph parse_source_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  int v_lines = 0;
  int e_lines = 0;
  while (std::getline(in, line)) {
    auto toks = tokens_of(strip_comment(line));
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    if (head == "V:") {
      ++v_lines;
      vertices.insert(vertices.end(), toks.begin() + 1, toks.end());
    } else if (head == "E:") {
      ++e_lines;
      for (std::size_t t = 1; t < toks.size(); ++t) {
        edges.push_back(split_edge_token(toks[t]));
      }
    } else {
      fail(ErrorKind::Parse, "unexpected line '" + line + "'");
    }
  }
  if (v_lines != 1) fail(ErrorKind::Parse, "expected exactly one V: line");
  if (e_lines > 1) fail(ErrorKind::Parse, "expected at most one E: line");
  for (const std::string& name : vertices) {
    if (name.find('-') != std::string::npos) {
      fail(ErrorKind::Parse, "vertex name '" + name + "' may not contain '-'");
    }
  }
  return hardness::SourceGraph::validate(std::move(vertices), std::move(edges));
}

std::string serialize_source_graph(const hardness::SourceGraph& g) {
  std::ostringstream out;
  out << "V:";
  for (const std::string& v : g.vertices()) out << ' ' << v;
  out << '\n';
  if (g.edge_count() > 0) {
    out << "E:";
    for (auto [a, b] : g.edges()) {
      out << ' ' << g.vertices()[static_cast<std::size_t>(a)] << '-'
          << g.vertices()[static_cast<std::size_t>(b)];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace antikit
