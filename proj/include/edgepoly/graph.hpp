#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgepoly/errors.hpp"

namespace edgepoly {

using VertexId = int;  // index into the label table, assigned in file order
using EdgeId = int;    // e_0, e_1, ... in file order

struct Edge {
  VertexId u, v;  // endpoints as first seen in the input line
};

// A finite connected simple graph. Vertices carry opaque string labels;
// all algorithms work on the integer ids. Construction validates the
// preconditions shared by the whole pipeline: no loops, no duplicate edges
// (in either orientation), connected, at least one edge.
class Graph {
 public:
  static Graph from_edges(const std::vector<std::pair<std::string, std::string>>& edges);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_label(VertexId v) const { return labels_.at(v); }
  Edge edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<EdgeId>& incident(VertexId v) const { return incident_.at(v); }
  // Neighbours of v in ascending vertex order, paired with the edge used.
  const std::vector<std::pair<VertexId, EdgeId>>& neighbours(VertexId v) const {
    return adj_.at(v);
  }
  std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;
  VertexId other_end(EdgeId e, VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(adj_.at(v).size()); }

  // Subgraph induced by an edge subset. Vertex labels survive, ids are
  // renumbered; the result must again be connected.
  Graph edge_subgraph(const std::vector<EdgeId>& edge_ids) const;

  // One edge per line, "<label> <label>", in id order. parse_graph round-trips.
  std::string serialize() const;

 private:
  Graph() = default;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj_;
};

// Text format: one edge per line as two whitespace-separated labels.
// '#' starts a comment, blank lines are ignored. Errors name the line.
Graph parse_graph(std::string_view text);

// Two-colouring if one exists (colour of vertex i in {0,1}), else nullopt.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// Blocks (2-edge-connected pieces and bridges) of g, with the non-bipartite
// ones merged into a single connected "oddment" hull: the union of all odd
// blocks together with every block lying on a block-tree path between two of
// them. `blocks` keeps the remaining (bipartite) blocks. Every edge of g
// appears in exactly one entry. A bipartite graph has no oddment.
struct BiconnectedDecomposition {
  std::optional<std::vector<EdgeId>> oddment;
  std::vector<std::vector<EdgeId>> blocks;
};
BiconnectedDecomposition biconnected_decomposition_with_oddments(const Graph& g);

// An edge e = (u,v) is a separating face when deleting u, v and every edge
// touching them disconnects the rest. Each surviving component yields one
// split: side_two is that component plus its edges into {u,v} plus e itself,
// side_one is the rest plus e. Both sides contain e.
struct SeparatingFaceSplit {
  EdgeId shared_edge;
  std::vector<EdgeId> side_one;
  std::vector<EdgeId> side_two;
  bool side_two_bipartite;
};
std::vector<SeparatingFaceSplit> find_separating_faces(const Graph& g);

}  // namespace edgepoly
