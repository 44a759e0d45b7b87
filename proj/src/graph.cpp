#include "edgepoly/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace edgepoly {

namespace {

void fail(GraphError::Kind kind, const std::string& msg) { throw GraphError(kind, msg); }

}  // namespace

Graph Graph::from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
  Graph g;
  std::map<std::string, VertexId> ids;
  auto intern = [&](const std::string& label) {
    auto it = ids.find(label);
    if (it != ids.end()) return it->second;
    VertexId v = static_cast<VertexId>(g.labels_.size());
    ids.emplace(label, v);
    g.labels_.push_back(label);
    return v;
  };
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& [a, b] = edges[i];
    if (a == b)
      fail(GraphError::Kind::LoopEdge,
           "edge " + std::to_string(i) + " is a loop at '" + a + "'");
    VertexId u = intern(a), v = intern(b);
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second)
      fail(GraphError::Kind::DuplicateEdge,
           "edge " + std::to_string(i) + " duplicates {" + a + ", " + b + "}");
    g.edges_.push_back({u, v});
  }
  if (g.edges_.empty())
    fail(GraphError::Kind::SyntaxError, "graph has no edges");

  int n = g.vertex_count();
  g.incident_.assign(n, {});
  g.adj_.assign(n, {});
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges_[e];
    g.incident_[u].push_back(e);
    g.incident_[v].push_back(e);
    g.adj_[u].push_back({v, e});
    g.adj_[v].push_back({u, e});
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());

  std::vector<char> reached(n, 0);
  std::vector<VertexId> stack{0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (auto [w, e] : g.adj_[v])
      if (!reached[w]) {
        reached[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  if (count != n) {
    for (VertexId v = 0; v < n; ++v)
      if (!reached[v])
        fail(GraphError::Kind::Disconnected,
             "graph is disconnected: no path from '" + g.labels_[0] + "' to '" +
                 g.labels_[v] + "'");
  }
  return g;
}

std::optional<EdgeId> Graph::edge_between(VertexId a, VertexId b) const {
  for (auto [w, e] : adj_.at(a))
    if (w == b) return e;
  return std::nullopt;
}

VertexId Graph::other_end(EdgeId e, VertexId v) const {
  auto [u, w] = edges_.at(e);
  if (v == u) return w;
  if (v == w) return u;
  throw InternalError("other_end: vertex not on edge");
}

Graph Graph::edge_subgraph(const std::vector<EdgeId>& edge_ids) const {
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(edge_ids.size());
  for (EdgeId e : edge_ids) {
    auto [u, v] = edges_.at(e);
    pairs.emplace_back(labels_[u], labels_[v]);
  }
  return from_edges(pairs);
}

std::string Graph::serialize() const {
  std::ostringstream out;
  for (const auto& [u, v] : edges_) out << labels_[u] << ' ' << labels_[v] << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::size_t> lines;  // 1-based source line of each edge
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::string a, b, extra;
    if (!(in >> a)) continue;  // blank or comment-only
    if (!(in >> b) || (in >> extra))
      throw GraphError(GraphError::Kind::SyntaxError,
                       "line " + std::to_string(lineno) +
                           ": expected exactly two vertex labels");
    pairs.emplace_back(a, b);
    lines.push_back(lineno);
  }
  try {
    return Graph::from_edges(pairs);
  } catch (const GraphError& e) {
    // from_edges speaks in edge indices; translate to source lines.
    std::string msg = e.what();
    if (auto at = msg.find("edge "); at == 0) {
      std::size_t idx = std::stoul(msg.substr(5));
      if (idx < lines.size())
        msg = "line " + std::to_string(lines[idx]) + msg.substr(msg.find(' ', 5));
    }
    throw GraphError(e.kind, msg);
  }
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> colour(g.vertex_count(), -1);
  std::vector<VertexId> stack{0};
  colour[0] = 0;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (auto [w, e] : g.neighbours(v)) {
      if (colour[w] == -1) {
        colour[w] = 1 - colour[v];
        stack.push_back(w);
      } else if (colour[w] == colour[v]) {
        return std::nullopt;
      }
    }
  }
  return colour;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

namespace {

// Hopcroft-Tarjan block decomposition. Returns blocks as edge-id lists in a
// deterministic order (sorted by smallest contained edge id).
std::vector<std::vector<EdgeId>> blocks_of(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> depth(n, -1), low(n, 0);
  std::vector<EdgeId> stack;
  std::vector<std::vector<EdgeId>> blocks;

  // Iterative DFS to keep arbitrarily deep graphs safe.
  struct Frame {
    VertexId v;
    EdgeId via;  // edge used to enter v, -1 at the root
    std::size_t next = 0;
  };
  std::vector<Frame> frames;
  frames.push_back({0, -1});
  depth[0] = 0;
  low[0] = 0;
  while (!frames.empty()) {
    Frame& f = frames.back();
    const auto& adj = g.neighbours(f.v);
    if (f.next < adj.size()) {
      auto [w, e] = adj[f.next++];
      if (e == f.via) continue;
      if (depth[w] == -1) {
        stack.push_back(e);
        depth[w] = depth[f.v] + 1;
        low[w] = depth[w];
        frames.push_back({w, e});
      } else if (depth[w] < depth[f.v]) {
        stack.push_back(e);
        low[f.v] = std::min(low[f.v], depth[w]);
      }
    } else {
      frames.pop_back();
      if (frames.empty()) break;
      Frame& parent = frames.back();
      low[parent.v] = std::min(low[parent.v], low[f.v]);
      if (low[f.v] >= depth[parent.v]) {
        // parent.v closes a block; pop down to the tree edge into f.v.
        std::vector<EdgeId> block;
        while (true) {
          EdgeId e = stack.back();
          stack.pop_back();
          block.push_back(e);
          if (e == f.via) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

BiconnectedDecomposition biconnected_decomposition_with_oddments(const Graph& g) {
  auto blocks = blocks_of(g);
  std::vector<char> odd(blocks.size(), 0);
  bool any_odd = false;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() >= 3 && !is_bipartite(g.edge_subgraph(blocks[i]))) {
      odd[i] = 1;
      any_odd = true;
    }
  }
  BiconnectedDecomposition out;
  if (!any_odd) {
    out.blocks = std::move(blocks);
    return out;
  }

  // Block-cut forest: block nodes 0..B-1, cut-vertex nodes B..B+n-1 (only
  // vertices in >= 2 blocks matter). Prune leaves that are not odd blocks;
  // whatever block nodes survive form the minimal hull spanning the odd ones.
  int B = static_cast<int>(blocks.size());
  int n = g.vertex_count();
  std::vector<std::vector<int>> tree(B + n);
  for (int b = 0; b < B; ++b) {
    std::set<VertexId> verts;
    for (EdgeId e : blocks[b]) {
      verts.insert(g.edge(e).u);
      verts.insert(g.edge(e).v);
    }
    for (VertexId v : verts) {
      tree[b].push_back(B + v);
      tree[B + v].push_back(b);
    }
  }
  std::vector<int> deg(tree.size());
  std::vector<char> alive(tree.size(), 1);
  for (std::size_t i = 0; i < tree.size(); ++i) deg[i] = static_cast<int>(tree[i].size());
  for (int v = 0; v < n; ++v)
    if (deg[B + v] <= 1) alive[B + v] = 0;  // vertex in a single block: not a cut node
  std::vector<int> queue;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    deg[i] = 0;
    if (!alive[i]) continue;
    for (int w : tree[i])
      if (alive[w]) ++deg[i];
    if (deg[i] <= 1 && !(i < static_cast<std::size_t>(B) && odd[i]))
      queue.push_back(static_cast<int>(i));
  }
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    if (!alive[x] || deg[x] > 1) continue;
    if (x < B && odd[x]) continue;
    alive[x] = 0;
    for (int w : tree[x])
      if (alive[w] && --deg[w] <= 1) queue.push_back(w);
  }

  std::vector<EdgeId> hull;
  for (int b = 0; b < B; ++b) {
    if (alive[b] || odd[b]) {
      hull.insert(hull.end(), blocks[b].begin(), blocks[b].end());
    } else {
      out.blocks.push_back(blocks[b]);
    }
  }
  std::sort(hull.begin(), hull.end());
  out.oddment = std::move(hull);
  return out;
}

std::vector<SeparatingFaceSplit> find_separating_faces(const Graph& g) {
  std::vector<SeparatingFaceSplit> out;
  int n = g.vertex_count();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    // Components of g minus the closed neighbourhood of e.
    std::vector<int> comp(n, -1);
    comp[u] = comp[v] = -2;
    int ncomp = 0;
    for (VertexId s = 0; s < n; ++s) {
      if (comp[s] != -1) continue;
      std::vector<VertexId> stack{s};
      comp[s] = ncomp;
      while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (auto [w, f] : g.neighbours(x))
          if (comp[w] == -1) {
            comp[w] = ncomp;
            stack.push_back(w);
          }
      }
      ++ncomp;
    }
    if (ncomp < 2) continue;
    for (int c = 0; c < ncomp; ++c) {
      SeparatingFaceSplit split;
      split.shared_edge = e;
      for (EdgeId f = 0; f < g.edge_count(); ++f) {
        if (f == e) {
          split.side_one.push_back(f);
          split.side_two.push_back(f);
          continue;
        }
        auto [a, b] = g.edge(f);
        bool in_c = (comp[a] == c) || (comp[b] == c);
        (in_c ? split.side_two : split.side_one).push_back(f);
      }
      split.side_two_bipartite = is_bipartite(g.edge_subgraph(split.side_two));
      out.push_back(std::move(split));
    }
  }
  return out;
}

}  // namespace edgepoly
