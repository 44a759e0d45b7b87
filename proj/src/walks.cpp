#include "edgepoly/walks.hpp"

#include <algorithm>
#include <set>

namespace edgepoly {

bool SimpleCycle::contains_vertex(VertexId v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::vector<EdgeId> ConnectingPath::even_part() const {
  std::vector<EdgeId> out;
  for (std::size_t k = 0; k < edge_ids.size(); k += 2) out.push_back(edge_ids[k]);
  return out;
}

std::vector<EdgeId> ConnectingPath::odd_part() const {
  std::vector<EdgeId> out;
  for (std::size_t k = 1; k < edge_ids.size(); k += 2) out.push_back(edge_ids[k]);
  return out;
}

std::vector<SimpleCycle> enumerate_simple_cycles(const Graph& g, std::size_t cap) {
  std::vector<SimpleCycle> cycles;
  int n = g.vertex_count();
  std::vector<char> on_path(n, 0);
  std::vector<VertexId> path;
  std::vector<EdgeId> path_edges;

  // Each cycle is produced exactly once: rooted at its smallest vertex s,
  // interior vertices all greater than s, and the orientation fixed by
  // requiring the second vertex to be smaller than the last.
  auto grow = [&](auto&& self, VertexId s, VertexId v) -> void {
    for (auto [w, e] : g.neighbours(v)) {
      if (w == s) {
        if (path.size() >= 3 && path[1] < path.back()) {
          if (cycles.size() >= cap)
            throw ResourceLimit("simple-cycle enumeration exceeded cap of " +
                                std::to_string(cap));
          SimpleCycle c;
          c.vertices = path;
          c.edge_ids = path_edges;
          c.edge_ids.push_back(e);
          c.odd = (c.edge_ids.size() % 2) == 1;
          cycles.push_back(std::move(c));
        }
        continue;
      }
      if (w < s || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      path_edges.push_back(e);
      self(self, s, w);
      path.pop_back();
      path_edges.pop_back();
      on_path[w] = 0;
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    on_path[s] = 1;
    path = {s};
    path_edges.clear();
    grow(grow, s, s);
    on_path[s] = 0;
  }

  std::sort(cycles.begin(), cycles.end(), [](const SimpleCycle& a, const SimpleCycle& b) {
    auto ka = a.edge_ids, kb = b.edge_ids;
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka < kb;
  });
  int odd_count = 0;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    cycles[i].index = static_cast<int>(i);
    cycles[i].odd_index = cycles[i].odd ? odd_count++ : -1;
  }
  return cycles;
}

std::vector<ConnectingPath> enumerate_connecting_paths(const Graph& g,
                                                       const SimpleCycle& ci,
                                                       const SimpleCycle& cj) {
  int n = g.vertex_count();
  std::vector<char> on_ci(n, 0), on_cj(n, 0), used(n, 0);
  for (VertexId v : ci.vertices) on_ci[v] = 1;
  for (VertexId v : cj.vertices) on_cj[v] = 1;

  std::vector<ConnectingPath> paths;
  std::vector<VertexId> verts;
  std::vector<EdgeId> edges;
  auto grow = [&](auto&& self, VertexId v) -> void {
    for (auto [w, e] : g.neighbours(v)) {
      if (on_cj[w]) {
        ConnectingPath p;
        p.vertices = verts;
        p.vertices.push_back(w);
        p.edge_ids = edges;
        p.edge_ids.push_back(e);
        paths.push_back(std::move(p));
        continue;
      }
      if (on_ci[w] || used[w]) continue;
      used[w] = 1;
      verts.push_back(w);
      edges.push_back(e);
      self(self, w);
      edges.pop_back();
      verts.pop_back();
      used[w] = 0;
    }
  };
  for (VertexId a : ci.vertices) {
    verts = {a};
    edges.clear();
    grow(grow, a);
  }
  std::sort(paths.begin(), paths.end(), [](const ConnectingPath& a, const ConnectingPath& b) {
    if (a.edge_ids.size() != b.edge_ids.size())
      return a.edge_ids.size() < b.edge_ids.size();
    return a.edge_ids < b.edge_ids;
  });
  for (std::size_t i = 0; i < paths.size(); ++i) paths[i].index = static_cast<int>(i);
  return paths;
}

namespace {

bool vertex_disjoint(const SimpleCycle& a, const SimpleCycle& b) {
  for (VertexId v : a.vertices)
    if (b.contains_vertex(v)) return false;
  return true;
}

bool joined_by_edge(const Graph& g, const SimpleCycle& a, const SimpleCycle& b) {
  for (VertexId u : a.vertices)
    for (VertexId v : b.vertices)
      if (g.edge_between(u, v)) return true;
  return false;
}

// Proper divisibility of edge multisets; connecting-path halves never repeat
// an edge, so plain sorted-set inclusion is enough.
bool properly_divides(std::vector<EdgeId> a, std::vector<EdgeId> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a != b && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<ExceptionalPair> find_exceptional_pairs(const Graph& g,
                                                    const std::vector<SimpleCycle>& cycles) {
  std::vector<const SimpleCycle*> odd;
  for (const auto& c : cycles)
    if (c.odd) odd.push_back(&c);
  std::vector<ExceptionalPair> pairs;
  for (std::size_t i = 0; i < odd.size(); ++i) {
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      if (!vertex_disjoint(*odd[i], *odd[j])) continue;
      if (joined_by_edge(g, *odd[i], *odd[j])) continue;
      ExceptionalPair p;
      p.i = odd[i]->odd_index;
      p.j = odd[j]->odd_index;
      auto all = enumerate_connecting_paths(g, *odd[i], *odd[j]);
      for (const auto& cand : all) {
        bool dominated = false;
        for (const auto& other : all)
          if (other.index != cand.index &&
              properly_divides(other.even_part(), cand.even_part())) {
            dominated = true;
            break;
          }
        if (!dominated) p.connecting_paths.push_back(cand);
      }
      pairs.push_back(std::move(p));
    }
  }
  return pairs;
}

bool check_odd_cycle_condition(const Graph& g) {
  return find_exceptional_pairs(g, enumerate_simple_cycles(g)).empty();
}

namespace {

// Edge sequence of a cycle re-rooted at `start` (same cyclic orientation).
std::vector<EdgeId> rotate_to(const SimpleCycle& c, VertexId start) {
  auto it = std::find(c.vertices.begin(), c.vertices.end(), start);
  std::size_t at = static_cast<std::size_t>(it - c.vertices.begin());
  std::vector<EdgeId> out;
  for (std::size_t k = 0; k < c.edge_ids.size(); ++k)
    out.push_back(c.edge_ids[(at + k) % c.edge_ids.size()]);
  return out;
}

}  // namespace

std::vector<PrimitiveEvenWalk> enumerate_primitive_even_walks(
    const Graph& g, const std::vector<SimpleCycle>& cycles, std::size_t cap) {
  std::vector<PrimitiveEvenWalk> walks;
  auto push = [&](PrimitiveEvenWalk w) {
    if (walks.size() >= cap)
      throw ResourceLimit("primitive-walk enumeration exceeded cap of " +
                          std::to_string(cap));
    walks.push_back(std::move(w));
  };

  for (const auto& c : cycles) {
    if (c.odd) continue;
    PrimitiveEvenWalk w;
    w.sequence = c.edge_ids;
    w.cycle_indices = {c.index};
    push(std::move(w));
  }

  std::vector<const SimpleCycle*> odd;
  for (const auto& c : cycles)
    if (c.odd) odd.push_back(&c);
  for (std::size_t i = 0; i < odd.size(); ++i) {
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      const SimpleCycle &a = *odd[i], &b = *odd[j];
      std::vector<VertexId> shared;
      for (VertexId v : a.vertices)
        if (b.contains_vertex(v)) shared.push_back(v);

      if (shared.size() == 1) {
        // Both cycles traversed once, pivoting at the shared vertex.
        PrimitiveEvenWalk w;
        w.sequence = rotate_to(a, shared[0]);
        auto tail = rotate_to(b, shared[0]);
        w.sequence.insert(w.sequence.end(), tail.begin(), tail.end());
        w.cycle_indices = {a.index, b.index};
        push(std::move(w));
      } else if (shared.empty()) {
        // One walk per connecting path: around a, out along the path,
        // around b, and back along the path.
        for (const auto& p : enumerate_connecting_paths(g, a, b)) {
          PrimitiveEvenWalk w;
          w.sequence = rotate_to(a, p.from());
          w.sequence.insert(w.sequence.end(), p.edge_ids.begin(), p.edge_ids.end());
          auto around = rotate_to(b, p.to());
          w.sequence.insert(w.sequence.end(), around.begin(), around.end());
          w.sequence.insert(w.sequence.end(), p.edge_ids.rbegin(), p.edge_ids.rend());
          w.cycle_indices = {a.index, b.index};
          w.doubled_edges = p.edge_ids;
          push(std::move(w));
        }
      }
      // Cycles sharing two or more vertices contribute no walk here; the
      // binomials they would give are generated by the even cycles inside
      // their union.
    }
  }
  return walks;
}

}  // namespace edgepoly
