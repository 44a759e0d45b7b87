#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "edgepoly/errors.hpp"

namespace testsupport {

using namespace edgepoly;

Graph make(const std::string& text) { return parse_graph(text); }

namespace {

std::string v(const std::string& prefix, int i) { return prefix + std::to_string(i); }

std::string edge_line(const std::string& a, const std::string& b) { return a + " " + b + "\n"; }

}  // namespace

std::string path_text(int vertices) {
  std::string out;
  for (int i = 0; i + 1 < vertices; ++i) out += edge_line(v("p", i), v("p", i + 1));
  return out;
}

std::string cycle_text(int length) {
  std::string out;
  for (int i = 0; i < length; ++i) out += edge_line(v("c", i), v("c", (i + 1) % length));
  return out;
}

std::string complete_text(int vertices) {
  std::string out;
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j) out += edge_line(v("k", i), v("k", j));
  return out;
}

std::string complete_bipartite_text(int a, int b) {
  std::string out;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) out += edge_line(v("a", i), v("b", j));
  return out;
}

std::string ladder_text(int rungs) {
  std::string out;
  for (int i = 0; i + 1 < rungs; ++i) {
    out += edge_line(v("r", i), v("r", i + 1));
    out += edge_line(v("s", i), v("s", i + 1));
  }
  for (int i = 0; i < rungs; ++i) out += edge_line(v("r", i), v("s", i));
  return out;
}

namespace {

const std::string kBridgedTriangles =
    "v0 v1\nv1 v2\nv2 v0\nv0 v3\nv3 v4\nv4 v5\nv5 v6\nv4 v6\n";

const std::string kBowTie = "a b\nb c\nc a\nc d\nd e\ne c\n";

std::string cube_text() {
  // vertices of {0,1}^3, edges between Hamming neighbours
  std::string out;
  for (int x = 0; x < 8; ++x)
    for (int bit = 0; bit < 3; ++bit) {
      int y = x ^ (1 << bit);
      if (x < y) out += edge_line(v("q", x), v("q", y));
    }
  return out;
}

std::string wheel_text(int rim) {
  std::string out = cycle_text(rim);
  for (int i = 0; i < rim; ++i) out += edge_line("hub", v("c", i));
  return out;
}

}  // namespace

const std::vector<NamedGraph>& corpus() {
  static const std::vector<NamedGraph> graphs = [] {
    std::vector<NamedGraph> gs;
    gs.push_back({"single-edge", "a b\n"});
    gs.push_back({"path-3", path_text(3)});
    gs.push_back({"path-5", path_text(5)});
    gs.push_back({"star-4", "h a\nh b\nh c\nh d\n"});
    gs.push_back({"spider-7", "h a\nh b\na c\na d\nb e\nb f\n"});
    for (int k = 3; k <= 8; ++k) gs.push_back({"cycle-" + std::to_string(k), cycle_text(k)});
    gs.push_back({"complete-4", complete_text(4)});
    gs.push_back({"complete-5", complete_text(5)});
    gs.push_back({"complete-6", complete_text(6)});
    gs.push_back({"bipartite-2-3", complete_bipartite_text(2, 3)});
    gs.push_back({"bipartite-2-4", complete_bipartite_text(2, 4)});
    gs.push_back({"bipartite-3-3", complete_bipartite_text(3, 3)});
    gs.push_back({"ladder-3", ladder_text(3)});
    gs.push_back({"ladder-4", ladder_text(4)});
    gs.push_back({"bow-tie", kBowTie});
    gs.push_back({"bridged-triangles", kBridgedTriangles});
    gs.push_back({"edge-joined-triangles", "a b\nb c\nc a\nd e\ne f\nf d\na d\n"});
    gs.push_back(
        {"path3-joined-triangles", "a b\nb c\nc a\nd e\ne f\nf d\na x\nx y\ny d\n"});
    gs.push_back({"triangle-pendant", "a b\nb c\nc a\na d\n"});
    gs.push_back({"triangle-tail-2", "a b\nb c\nc a\na d\nd e\n"});
    gs.push_back({"house", "a b\nb c\nc d\nd a\na e\ne b\n"});
    gs.push_back({"square-triangle-vertex", "a b\nb c\nc d\nd a\na e\ne f\nf a\n"});
    gs.push_back({"squares-shared-edge", "a b\nb c\nc d\nd a\nb e\ne f\nf c\n"});
    gs.push_back({"squares-shared-vertex", "a b\nb c\nc d\nd a\na e\ne f\nf g\ng a\n"});
    gs.push_back({"wheel-5", wheel_text(5)});
    gs.push_back({"theta-2-2-3", "u a\na w\nu b\nb w\nu c\nc d\nd w\n"});
    gs.push_back({"hexagon-chord", "a b\nb c\nc d\nd e\ne f\nf a\na d\n"});
    gs.push_back({"cube", cube_text()});
    gs.push_back({"complete-4-minus-edge", "a b\nb c\nc d\nd a\na c\n"});
    gs.push_back({"bull", "a b\nb c\nc a\na d\nb e\n"});
    gs.push_back({"bow-tie-pendant", kBowTie + "a f\n"});
    gs.push_back({"kite-tail", "a b\nb c\nc d\nd a\na c\nd e\n"});
    return gs;
  }();
  return graphs;
}

const std::vector<NamedGraph>& composites() {
  static const std::vector<NamedGraph> graphs = [] {
    std::vector<NamedGraph> gs;
    // ladders glued onto the non-normal running example, at a vertex and
    // along a triangle edge
    gs.push_back({"bridged-triangles+square-vertex",
                  kBridgedTriangles + "v2 w1\nw1 w2\nw2 w3\nw3 v2\n"});
    gs.push_back({"bridged-triangles+ladder3-vertex",
                  kBridgedTriangles +
                      "v2 r1\nr1 r2\nv2 s0\ns0 s1\ns1 s2\nr1 s1\nr2 s2\n"});
    gs.push_back({"bridged-triangles+square-edge",
                  kBridgedTriangles + "v5 w1\nw1 w2\nw2 v6\n"});
    gs.push_back({"bridged-triangles+ladder3-edge",
                  kBridgedTriangles +
                      "v5 r1\nr1 r2\nv6 s1\ns1 s2\nr1 s1\nr2 s2\n"});
    gs.push_back({"bridged-triangles+square-bridge-edge",
                  kBridgedTriangles + "v0 w1\nw1 w2\nw2 v3\n"});
    gs.push_back({"squares-shared-vertex", "a b\nb c\nc d\nd a\na e\ne f\nf g\ng a\n"});
    gs.push_back({"squares-shared-edge", "a b\nb c\nc d\nd a\nb e\ne f\nf c\n"});
    gs.push_back({"house", "a b\nb c\nc d\nd a\na e\ne b\n"});
    gs.push_back({"square-triangle-vertex", "a b\nb c\nc d\nd a\na e\ne f\nf a\n"});
    gs.push_back({"bow-tie-pendant", kBowTie + "a f\n"});
    gs.push_back({"edge-joined-triangles", "a b\nb c\nc a\nd e\ne f\nf d\na d\n"});
    gs.push_back({"square-tail-2", "a b\nb c\nc d\nd a\na e\ne f\n"});
    gs.push_back({"hexagon+square-edge", cycle_text(6) + "c0 x\nx y\ny c1\n"});
    gs.push_back({"hexagon+square-vertex", cycle_text(6) + "c0 x\nx y\ny z\nz c0\n"});
    return gs;
  }();
  return graphs;
}

std::string random_polygon_tree(std::mt19937& rng, int max_edges,
                                PolygonTreeProfile& expected) {
  expected = PolygonTreeProfile{};
  int next_label = 0;
  auto fresh = [&] { return v("g", next_label++); };

  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<int> shareable;  // edge indexes not yet shared by two polygons
  auto add_polygon = [&](int half_length, std::string from, std::string to) {
    // a path of 2*half_length - 1 fresh edges closing the (from, to) edge
    std::string at = std::move(from);
    for (int i = 0; i < 2 * half_length - 2; ++i) {
      std::string nxt = fresh();
      shareable.push_back(static_cast<int>(edges.size()));
      edges.emplace_back(at, nxt);
      at = nxt;
    }
    shareable.push_back(static_cast<int>(edges.size()));
    edges.emplace_back(at, std::move(to));
    expected.f2n[half_length] += 1;
  };

  std::uniform_int_distribution<int> half(2, 4);
  std::string a = fresh(), b = fresh();
  int first = half(rng);
  // seed polygon: the closing edge plus its path
  shareable.push_back(static_cast<int>(edges.size()));
  edges.emplace_back(a, b);
  add_polygon(first, a, b);

  for (;;) {
    int next = half(rng);
    if (static_cast<int>(edges.size()) + 2 * next - 1 > max_edges) break;
    std::uniform_int_distribution<std::size_t> pick(0, shareable.size() - 1);
    std::size_t slot = pick(rng);
    int glue = shareable[slot];
    shareable.erase(shareable.begin() + static_cast<long>(slot));
    add_polygon(next, edges[glue].first, edges[glue].second);
  }

  expected.edges = static_cast<int>(edges.size());
  std::string text;
  for (const auto& [x, y] : edges) text += edge_line(x, y);
  return text;
}

int count_simple_cycles_brute(const Graph& g) {
  int e = g.edge_count(), n = g.vertex_count(), found = 0;
  for (unsigned long mask = 1; mask < (1ul << e); ++mask) {
    std::vector<int> degree(n, 0);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool ok = true;
    int components = 0, vertices_used = 0, edges_used = 0;
    for (int f = 0; f < e && ok; ++f) {
      if (!(mask >> f & 1)) continue;
      auto [u, w] = g.edge(f);
      ++edges_used;
      if (degree[u]++ == 0) ++vertices_used;
      if (degree[w]++ == 0) ++vertices_used;
      if (degree[u] > 2 || degree[w] > 2) ok = false;
      int ru = root(u), rw = root(w);
      if (ru == rw)
        ++components;  // closing an existing walk
      else
        parent[ru] = rw;
    }
    if (ok && components == 1 && edges_used == vertices_used &&
        std::none_of(degree.begin(), degree.end(), [](int d) { return d == 1; }))
      ++found;
  }
  return found;
}

std::map<Monomial, mpz_class> moebius_subset_expansion(int nvars,
                                                       const std::vector<Monomial>& atoms) {
  std::map<Monomial, mpz_class> sum;
  std::size_t k = atoms.size();
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    Monomial m(nvars);
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) {
        m = lcm(m, atoms[i]);
        ++bits;
      }
    sum[m] += (bits % 2 == 0) ? 1 : -1;
  }
  for (auto it = sum.begin(); it != sum.end();)
    it = (it->second == 0) ? sum.erase(it) : std::next(it);
  return sum;
}

namespace {

// Basis of the rational kernel of the image matrix, cleared to integers.
std::vector<std::vector<long>> integer_kernel(const VariableSet& vs) {
  int rows = vs.vertex_count(), cols = vs.size();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
  for (int j = 0; j < cols; ++j) {
    const auto& image = vs.var(j).image;
    for (int i = 0; i < rows; ++i) a[i][j] = image[i];
  }

  std::vector<int> pivot_of_row;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    mpq_class lead = a[r][c];
    for (int j = 0; j < cols; ++j) a[r][j] /= lead;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class factor = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] -= factor * a[r][j];
    }
    pivot_of_row.push_back(c);
    ++r;
  }

  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_of_row) is_pivot[c] = 1;
  std::vector<std::vector<long>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> x(cols, 0);
    x[free] = 1;
    for (int i = 0; i < r; ++i) x[pivot_of_row[i]] = -a[i][free];
    mpz_class scale = 1;
    for (const auto& q : x) scale = lcm(scale, q.get_den());
    std::vector<long> row(cols);
    for (int j = 0; j < cols; ++j) {
      mpq_class scaled = x[j] * scale;
      row[j] = static_cast<long>(scaled.get_num().get_si());
    }
    basis.push_back(std::move(row));
  }
  return basis;
}

}  // namespace

std::vector<Binomial> toric_groebner_oracle(const VariableSet& vs) {
  int n = vs.size();
  // variable 0 is the auxiliary w, the pipeline variables shift up by one
  std::vector<Binomial> gens;
  for (const auto& row : integer_kernel(vs)) {
    Monomial plus(n + 1), minus(n + 1);
    for (int j = 0; j < n; ++j) {
      if (row[j] > 0) plus.bump(j + 1, static_cast<unsigned>(row[j]));
      if (row[j] < 0) minus.bump(j + 1, static_cast<unsigned>(-row[j]));
    }
    if (plus == minus) continue;
    gens.push_back({plus, minus});
  }
  Monomial saturator(n + 1);
  for (int j = 0; j <= n; ++j) saturator.bump(j);
  gens.push_back({saturator, Monomial(n + 1)});

  TermOrder order{TermOrder::Kind::Lex, {}};
  GroebnerOptions opts;
  opts.max_spairs = 5'000'000;
  GroebnerBasis gb = groebner_basis(VariableSet{}, gens, order, opts);

  std::vector<Binomial> out;
  for (const auto& b : gb.elements) {
    if (b.plus[0] != 0 || b.minus[0] != 0) continue;
    Monomial plus(n), minus(n);
    for (int j = 0; j < n; ++j) {
      plus.bump(j, b.plus[j + 1]);
      minus.bump(j, b.minus[j + 1]);
    }
    out.push_back({plus, minus});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testsupport
