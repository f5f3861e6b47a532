#pragma once

#include <string>
#include <vector>

#include "antikit/closure_opt.hpp"
#include "antikit/hardness.hpp"
#include "antikit/set_family.hpp"
#include "antikit/split_graph.hpp"

namespace antikit {

// Split graph text format ('#' starts a comment, tokens whitespace-split):
//   K: 1 2 3
//   I: 4 5 6
//   E: 1-4 1-5 2-5 2-6 3-6
// Exactly one K line and one I line, at most one E line.
SplitGraph parse_graph(const std::string& text);
std::string serialize_graph(const SplitGraph& g);

// Set family text format: one set per line, ids space-separated, the empty
// set written as "-". The ground set is the union of the member sets.
SetFamily parse_family(const std::string& text);
std::string serialize_family(const SetFamily& family);

std::string serialize_set(const VertexSet& s);

struct WeightsFile {
  WeightFn weights;
  std::vector<std::string> warnings;  // one per vertex defaulted to 0
};

// Weight file format: lines "vertex weight". Vertices of the graph missing
// from the file default to weight 0 and produce a warning.
WeightsFile parse_weights(const std::string& text, const SplitGraph& g);

// Generic graph file for the reduction (no split constraint):
//   V: a b c
//   E: a-b b-c
hardness::SourceGraph parse_source_graph(const std::string& text);
std::string serialize_source_graph(const hardness::SourceGraph& g);

}  // namespace antikit
