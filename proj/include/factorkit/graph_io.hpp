#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "factorkit/degree_func.hpp"
#include "factorkit/graph.hpp"

namespace factorkit {

/// A graph together with the labels its vertices carried in the input.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;

  /// ParseError when the label is unknown.
  Vertex id_of(std::string_view label) const;
};

/// Labels 0..n-1 for a graph built in memory.
LabeledGraph with_default_labels(Graph g);

/// Text format: first non-comment line `n m`, then m lines `u v` with
/// 0 <= u, v < n. Lines starting with '#' and blank lines are skipped.
/// Self-loops, duplicates, bad counts and trailing garbage are ParseErrors.
LabeledGraph read_graph(std::istream& in);
LabeledGraph load_graph(const std::filesystem::path& path);

/// Writes `n m` and then each edge as `u v` with u < v in sorted order.
void write_graph(std::ostream& out, const Graph& g);
void save_graph(const std::filesystem::path& path, const Graph& g);

/// Lines `label value`, one per vertex; every vertex must appear exactly once.
DegreeFunc read_prescription(std::istream& in, const LabeledGraph& g);

/// `const:K` or `file:PATH`.
DegreeFunc parse_prescription_spec(std::string_view spec, const LabeledGraph& g);

}  // namespace factorkit
