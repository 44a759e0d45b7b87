#include "edgepoly/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "edgepoly/errors.hpp"

namespace edgepoly {

RationalSeries series_single_edge() {
  return RationalSeries{IntPoly::constant(1), 1};
}

RationalSeries series_even_cycle(int n) {
  if (n < 2) throw InvalidParameter("even cycle needs n >= 2 (got " + std::to_string(n) + ")");
  return RationalSeries{IntPoly::sigma(n), 2 * n - 1};
}

RationalSeries series_odd_cycle(int n) {
  if (n < 2) throw InvalidParameter("odd cycle needs n >= 2 (got " + std::to_string(n) + ")");
  return RationalSeries{IntPoly::constant(1), 2 * n - 1};
}

RationalSeries series_ladder(int k) {
  if (k < 2) throw InvalidParameter("ladder needs k >= 2 (got " + std::to_string(k) + ")");
  IntPoly num = IntPoly::constant(1);
  for (int i = 1; i < k; ++i) num = num * IntPoly::sigma(2);
  return RationalSeries{std::move(num), 2 * k - 1};
}

int PolygonTreeProfile::even_cycle_count() const {
  int f = 0;
  for (const auto& [n, c] : f2n) f += c;
  return f;
}

int PolygonTreeProfile::cycle_count() const {
  return even_cycle_count() + (odd_cycle_length > 0 ? 1 : 0);
}

long PolygonTreeProfile::half_length_sum() const {
  long s = 0;
  for (const auto& [n, c] : f2n) s += static_cast<long>(n) * c;
  return s;
}

RationalSeries series_polygon_tree(const PolygonTreeProfile& profile) {
  long total_length = profile.odd_cycle_length;
  for (const auto& [n, c] : profile.f2n) {
    if (n < 2 || c < 0) throw InvalidParameter("bad polygon profile entry");
    total_length += 2L * n * c;
  }
  int f = profile.cycle_count();
  if (f == 0) throw InvalidParameter("polygon profile has no cycles");
  if (profile.odd_cycle_length != 0 &&
      (profile.odd_cycle_length < 3 || profile.odd_cycle_length % 2 == 0))
    throw InvalidParameter("odd constituent length must be an odd number >= 3");
  if (profile.edges != total_length - (f - 1))
    throw InvalidParameter("edge count inconsistent with cycle lengths");

  IntPoly num = IntPoly::constant(1);
  for (const auto& [n, c] : profile.f2n)
    for (int i = 0; i < c; ++i) num = num * IntPoly::sigma(n);
  return RationalSeries{std::move(num), profile.edges - profile.even_cycle_count()};
}

std::optional<PolygonTreeProfile> polygon_tree_profile(const Graph& g) {
  PolygonTreeProfile profile;
  profile.edges = g.edge_count();

  std::vector<std::set<VertexId>> adj(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    adj[g.edge(e).u].insert(g.edge(e).v);
    adj[g.edge(e).v].insert(g.edge(e).u);
  }
  auto record = [&](long length) {
    if (length % 2 == 0) {
      profile.f2n[static_cast<int>(length / 2)] += 1;
      return true;
    }
    if (profile.odd_cycle_length != 0) return false;  // formula covers one odd cycle
    profile.odd_cycle_length = static_cast<int>(length);
    return true;
  };

  for (;;) {
    std::vector<VertexId> active;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (!adj[v].empty()) active.push_back(v);
    if (active.empty()) return std::nullopt;

    bool all_two = std::all_of(active.begin(), active.end(),
                               [&](VertexId v) { return adj[v].size() == 2; });
    if (all_two) {
      // must be one cycle: walk it and check everything active is covered
      std::vector<char> seen(g.vertex_count(), 0);
      VertexId start = active.front(), prev = -1, cur = start;
      long length = 0;
      do {
        seen[cur] = 1;
        ++length;
        VertexId next = -1;
        for (VertexId w : adj[cur])
          if (w != prev) next = w;
        if (next == -1) next = prev;  // two-vertex case cannot occur (simple graph)
        prev = cur;
        cur = next;
      } while (cur != start);
      for (VertexId v : active)
        if (!seen[v]) return std::nullopt;
      if (!record(length)) return std::nullopt;
      return profile;
    }

    // peel one ear: a maximal degree-2 chain whose branch endpoints are
    // themselves adjacent
    bool peeled = false;
    std::vector<char> in_tried_chain(g.vertex_count(), 0);
    for (VertexId x : active) {
      if (adj[x].size() != 2 || in_tried_chain[x]) continue;
      std::vector<VertexId> chain{x};
      in_tried_chain[x] = 1;
      VertexId ends[2];
      int side = 0;
      for (VertexId first : adj[x]) {
        VertexId prev = x, cur = first;
        while (adj[cur].size() == 2) {
          VertexId next = -1;
          for (VertexId w : adj[cur])
            if (w != prev) next = w;
          if (next == -1 || cur == x) break;  // closed ring of degree-2 vertices
          chain.push_back(cur);
          in_tried_chain[cur] = 1;
          prev = cur;
          cur = next;
        }
        if (adj[cur].size() == 2) return std::nullopt;  // detached ring component
        ends[side++] = cur;
      }
      if (ends[0] == ends[1]) return std::nullopt;  // cycle glued at one vertex
      if (!adj[ends[0]].count(ends[1])) continue;   // chain closes elsewhere; try another

      long cycle_length = static_cast<long>(chain.size()) + 2;
      if (!record(cycle_length)) return std::nullopt;
      for (VertexId v : chain) {
        for (VertexId w : adj[v]) adj[w].erase(v);
        adj[v].clear();
      }
      peeled = true;
      break;
    }
    if (!peeled) return std::nullopt;
  }
}

FirstFactoringReport verify_first_factoring(const Graph& g, const PipelineOptions& opts) {
  FirstFactoringReport report;
  report.decomposition = biconnected_decomposition_with_oddments(g);
  report.whole = ehrhart_series(g, opts);
  if (report.decomposition.oddment)
    report.parts.push_back(ehrhart_series(g.edge_subgraph(*report.decomposition.oddment), opts));
  for (const auto& block : report.decomposition.blocks)
    report.parts.push_back(ehrhart_series(g.edge_subgraph(block), opts));
  report.product = RationalSeries{IntPoly::constant(1), 0};
  for (const auto& part : report.parts) report.product = report.product.times(part);
  report.equal = report.product == report.whole;
  return report;
}

SecondFactoringReport verify_second_factoring(const Graph& g,
                                              const SeparatingFaceSplit& split,
                                              const PipelineOptions& opts) {
  std::vector<int> times_used(g.edge_count(), 0);
  for (EdgeId e : split.side_one) ++times_used[e];
  for (EdgeId e : split.side_two) ++times_used[e];
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    int expect = e == split.shared_edge ? 2 : 1;
    if (times_used[e] != expect)
      throw HypothesisViolated(
          "(1) the sides must cover every edge once and share only edge e_" +
          std::to_string(split.shared_edge));
  }

  Graph side_two = g.edge_subgraph(split.side_two);
  if (!is_bipartite(side_two))
    throw HypothesisViolated("(2) the second side is not bipartite");

  // shared edge on a cycle of side_two: its endpoints stay connected when
  // the edge itself is removed
  {
    std::vector<EdgeId> rest;
    for (EdgeId e : split.side_two)
      if (e != split.shared_edge) rest.push_back(e);
    Edge se = g.edge(split.shared_edge);
    std::vector<std::set<VertexId>> adj(g.vertex_count());
    for (EdgeId e : rest) {
      adj[g.edge(e).u].insert(g.edge(e).v);
      adj[g.edge(e).v].insert(g.edge(e).u);
    }
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack{se.u};
    seen[se.u] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    if (!seen[se.v])
      throw HypothesisViolated("(3) the shared edge lies on no cycle of the second side");
  }

  SecondFactoringReport report;
  report.whole = ehrhart_series(g, opts);
  report.side_one = ehrhart_series(g.edge_subgraph(split.side_one), opts);
  report.side_two = ehrhart_series(side_two, opts);
  report.factored = report.side_one.times(report.side_two.times_one_minus_t());
  report.equal = report.factored == report.whole;
  return report;
}

namespace {

// Synthetic division of p by (x + i); the caller guarantees -i is a root.
QPoly deflate(const QPoly& p, long i) {
  int d = p.degree();
  std::vector<mpq_class> q(d, 0);
  mpq_class carry = p.coeff(d);
  for (int k = d - 1; k >= 0; --k) {
    q[k] = carry;
    carry = p.coeff(k) - mpq_class(i) * carry;
  }
  if (carry != 0) throw InternalError("deflation remainder nonzero");
  return QPoly(std::move(q));
}

std::complex<double> eval_complex(const std::vector<std::complex<double>>& c,
                                  std::complex<double> x) {
  std::complex<double> acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<std::complex<double>> durand_kerner(std::vector<std::complex<double>> c) {
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  int d = static_cast<int>(c.size()) - 1;
  if (d < 1) return {};
  for (auto& v : c) v /= c.back();

  std::vector<std::complex<double>> z(d);
  std::complex<double> seed(0.4, 0.9);
  z[0] = seed;
  for (int k = 1; k < d; ++k) z[k] = z[k - 1] * seed;

  for (int iter = 0; iter < 5000; ++iter) {
    double worst = 0;
    for (int k = 0; k < d; ++k) {
      std::complex<double> den = 1;
      for (int j = 0; j < d; ++j)
        if (j != k) den *= z[k] - z[j];
      std::complex<double> delta = eval_complex(c, z[k]) / den;
      z[k] -= delta;
      worst = std::max(worst, std::abs(delta));
    }
    if (worst < 1e-13) return z;
  }
  for (const auto& r : z)
    if (std::abs(eval_complex(c, r)) > 1e-8)
      throw NumericalInstability("root iteration failed to converge");
  return z;
}

}  // namespace

RootReport root_report(const QPoly& p, const std::optional<PolygonTreeProfile>& profile) {
  if (p.is_zero()) throw InvalidParameter("zero polynomial has no root report");
  RootReport report;
  int D = p.degree();
  report.strip_low = -static_cast<double>(D);
  report.strip_high = static_cast<double>(D) - 1.0;
  if (profile)
    report.critical_line =
        -(static_cast<double>(profile->edges) - static_cast<double>(profile->half_length_sum())) / 2.0;

  QPoly q = p;
  for (long i = 1; i <= D + 2 && q.degree() > 0; ++i)
    while (q.degree() > 0 && q.evaluate(mpq_class(-i)) == 0) {
      q = deflate(q, i);
      report.integer_roots.push_back(-i);
    }

  std::vector<std::complex<double>> c;
  for (int k = 0; k <= q.degree(); ++k) c.emplace_back(q.coeff(k).get_d(), 0.0);
  report.residual_roots = durand_kerner(std::move(c));

  if (report.critical_line)
    for (const auto& r : report.residual_roots)
      report.max_deviation =
          std::max(report.max_deviation, std::abs(r.real() - *report.critical_line));

  const double slack = 1e-7;
  for (long r : report.integer_roots)
    if (r < report.strip_low - slack || r > report.strip_high + slack)
      report.in_strip = false;
  for (const auto& r : report.residual_roots)
    if (r.real() < report.strip_low - slack || r.real() > report.strip_high + slack)
      report.in_strip = false;
  return report;
}

std::vector<std::complex<double>> rv_step(const std::vector<std::complex<double>>& f,
                                          std::complex<double> alpha) {
  if (f.empty()) throw InvalidParameter("rv_step needs a nonzero polynomial");
  // f(x - 1) by Horner in (x - 1)
  std::vector<std::complex<double>> shifted{f.back()};
  for (int k = static_cast<int>(f.size()) - 2; k >= 0; --k) {
    std::vector<std::complex<double>> next(shifted.size() + 1, 0.0);
    for (std::size_t i = 0; i < shifted.size(); ++i) {
      next[i + 1] += shifted[i];  // * x
      next[i] -= shifted[i];      // * (-1)
    }
    next[0] += f[k];
    shifted = std::move(next);
  }
  for (std::size_t i = 0; i < f.size(); ++i) shifted[i] -= alpha * f[i];
  while (!shifted.empty() && std::abs(shifted.back()) < 1e-12) shifted.pop_back();
  return shifted;
}

}  // namespace edgepoly
