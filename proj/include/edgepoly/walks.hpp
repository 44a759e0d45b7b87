#pragma once

#include <cstddef>
#include <vector>

#include "edgepoly/graph.hpp"

namespace edgepoly {

inline constexpr std::size_t kDefaultWalkCap = 1'000'000;

// A simple cycle in canonical form: the vertex sequence starts at the
// smallest vertex and its second entry is the smaller of that vertex's two
// cycle neighbours. edge_ids[k] joins vertices[k] to vertices[k+1 mod len].
// `index` numbers all cycles (sorted by their sorted edge-id lists);
// `odd_index` numbers the odd cycles in the same order, -1 for even ones.
struct SimpleCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edge_ids;
  bool odd = false;
  int index = -1;
  int odd_index = -1;

  int length() const { return static_cast<int>(edge_ids.size()); }
  bool contains_vertex(VertexId v) const;
};

std::vector<SimpleCycle> enumerate_simple_cycles(const Graph& g,
                                                 std::size_t cap = kDefaultWalkCap);

// A simple path joining two vertex-disjoint cycles: `vertices` runs from a
// vertex of the first cycle to a vertex of the second, every interior vertex
// avoiding both cycles. Oriented from the lower-indexed cycle. Paths are
// sorted by (length, edge-id sequence) and numbered within their cycle pair.
struct ConnectingPath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edge_ids;
  int index = -1;

  int length() const { return static_cast<int>(edge_ids.size()); }
  VertexId from() const { return vertices.front(); }
  VertexId to() const { return vertices.back(); }
  // Alternating halves: even-position edges (0,2,...) and odd-position ones.
  std::vector<EdgeId> even_part() const;
  std::vector<EdgeId> odd_part() const;
};

std::vector<ConnectingPath> enumerate_connecting_paths(const Graph& g,
                                                       const SimpleCycle& ci,
                                                       const SimpleCycle& cj);

// Two odd cycles form an exceptional pair when they are vertex-disjoint and
// no single edge joins them (every connecting path has length >= 2). i < j
// are odd-cycle indices. connecting_paths keeps only paths whose even-part
// is not properly divided by another path's even-part.
struct ExceptionalPair {
  int i = -1, j = -1;
  std::vector<ConnectingPath> connecting_paths;
};

std::vector<ExceptionalPair> find_exceptional_pairs(const Graph& g,
                                                    const std::vector<SimpleCycle>& cycles);

// True iff every two vertex-disjoint odd cycles are joined by some edge,
// i.e. there is no exceptional pair.
bool check_odd_cycle_condition(const Graph& g);

// A closed even walk whose blocks are single cycles or doubled cut edges:
// either one even cycle, two odd cycles sharing exactly one vertex, or two
// vertex-disjoint odd cycles joined by a twice-traversed connecting path.
// `sequence` lists the walk's edges in traversal order.
struct PrimitiveEvenWalk {
  std::vector<EdgeId> sequence;
  std::vector<int> cycle_indices;       // the constituent cycles
  std::vector<EdgeId> doubled_edges;    // the connecting path, if any
};

std::vector<PrimitiveEvenWalk> enumerate_primitive_even_walks(
    const Graph& g, const std::vector<SimpleCycle>& cycles,
    std::size_t cap = kDefaultWalkCap);

}  // namespace edgepoly
