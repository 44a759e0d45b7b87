#include "edgepoly/ideal.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace edgepoly {

VariableSet::VariableSet(std::vector<Variable> vars, int vertex_count)
    : vars_(std::move(vars)), vertex_count_(vertex_count) {
  for (const auto& v : vars_)
    if (v.kind == Variable::Kind::Theta) ++theta_count_;
}

int VariableSet::edge_var(int edge_id) const {
  int i = theta_count_ + edge_id;
  if (i < 0 || i >= size() || vars_[i].edge_id != edge_id)
    throw InternalError("edge_var: bad edge id " + std::to_string(edge_id));
  return i;
}

int VariableSet::theta_var(int ci, int cj) const {
  if (ci > cj) std::swap(ci, cj);
  for (int i = 0; i < theta_count_; ++i)
    if (vars_[i].ci == ci && vars_[i].cj == cj) return i;
  return -1;
}

std::vector<long> VariableSet::degrees() const {
  std::vector<long> d;
  d.reserve(vars_.size());
  for (const auto& v : vars_) d.push_back(v.degree);
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](unsigned e) { return e == 0; });
}

Monomial& Monomial::bump(int var, unsigned by) {
  unsigned& e = exp_.at(var);
  if (e > std::numeric_limits<unsigned>::max() - by)
    throw InternalError("monomial exponent overflow");
  e += by;
  return *this;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.exp_.size() != b.exp_.size()) throw InternalError("monomial arity mismatch");
  Monomial out = a;
  for (std::size_t i = 0; i < b.exp_.size(); ++i)
    if (b.exp_[i]) out.bump(static_cast<int>(i), b.exp_[i]);
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.exp_.size() != b.exp_.size()) throw InternalError("monomial arity mismatch");
  for (std::size_t i = 0; i < a.exp_.size(); ++i)
    if (a.exp_[i] > b.exp_[i]) return false;
  return true;
}

Monomial exact_div(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw InternalError("exact_div: not divisible");
  Monomial out = b;
  for (std::size_t i = 0; i < a.exp_.size(); ++i) out.exp_[i] -= a.exp_[i];
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.exp_.size() != b.exp_.size()) throw InternalError("monomial arity mismatch");
  Monomial out = a;
  for (std::size_t i = 0; i < b.exp_.size(); ++i)
    out.exp_[i] = std::max(out.exp_[i], b.exp_[i]);
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  if (a.exp_.size() != b.exp_.size()) throw InternalError("monomial arity mismatch");
  for (std::size_t i = 0; i < a.exp_.size(); ++i)
    if (a.exp_[i] && b.exp_[i]) return false;
  return true;
}

long psi_degree(const VariableSet& vs, const Monomial& m) {
  long d = 0;
  for (int i = 0; i < m.nvars(); ++i) d += static_cast<long>(m[i]) * vs.var(i).degree;
  return d;
}

std::vector<mpz_class> psi_image(const VariableSet& vs, const Monomial& m) {
  std::vector<mpz_class> img(vs.vertex_count(), 0);
  for (int i = 0; i < m.nvars(); ++i) {
    if (!m[i]) continue;
    const auto& v = vs.var(i);
    for (std::size_t k = 0; k < v.image.size(); ++k)
      if (v.image[k]) img[k] += mpz_class(v.image[k]) * m[i];
  }
  return img;
}

Binomial make_binomial(const VariableSet& vs, Monomial plus, Monomial minus) {
  if (plus == minus) throw InternalError("binomial with equal sides");
  if (psi_image(vs, plus) != psi_image(vs, minus))
    throw SignResolutionFailure("binomial sides have different psi-images: " +
                                format_monomial(vs, plus) + " vs " +
                                format_monomial(vs, minus));
  return Binomial{std::move(plus), std::move(minus)};
}

TermOrder TermOrder::lex(const VariableSet& vs) {
  return TermOrder{Kind::Lex, vs.degrees()};
}

TermOrder TermOrder::grevlex(const VariableSet& vs) {
  return TermOrder{Kind::Grevlex, vs.degrees()};
}

TermOrder TermOrder::make(Kind k, const VariableSet& vs) {
  return TermOrder{k, vs.degrees()};
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) throw InternalError("term order arity mismatch");
  if (kind == Kind::Lex) {
    for (int i = 0; i < a.nvars(); ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  long da = 0, db = 0;
  for (int i = 0; i < a.nvars(); ++i) {
    da += static_cast<long>(a[i]) * grading.at(i);
    db += static_cast<long>(b[i]) * grading.at(i);
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = a.nvars() - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // larger trailing exponent loses
  return 0;
}

VariableSet build_variables(const Graph& g, const std::vector<SimpleCycle>& cycles,
                            const std::vector<ExceptionalPair>& pairs) {
  std::vector<const SimpleCycle*> by_odd_index;
  for (const auto& c : cycles)
    if (c.odd) {
      if (static_cast<int>(by_odd_index.size()) != c.odd_index)
        throw InternalError("odd cycle indices out of order");
      by_odd_index.push_back(&c);
    }

  std::vector<Variable> vars;
  std::vector<std::pair<int, int>> keys;
  for (const auto& p : pairs) keys.emplace_back(p.i, p.j);
  std::sort(keys.begin(), keys.end());
  for (auto [i, j] : keys) {
    const SimpleCycle &ci = *by_odd_index.at(i), &cj = *by_odd_index.at(j);
    Variable v;
    v.kind = Variable::Kind::Theta;
    v.ci = i;
    v.cj = j;
    v.degree = (ci.length() + cj.length()) / 2;
    v.image.assign(g.vertex_count(), 0);
    for (VertexId w : ci.vertices) v.image[w] += 1;
    for (VertexId w : cj.vertices) v.image[w] += 1;
    v.name = "θ_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    vars.push_back(std::move(v));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Variable v;
    v.kind = Variable::Kind::Edge;
    v.edge_id = e;
    v.degree = 1;
    v.image.assign(g.vertex_count(), 0);
    v.image[g.edge(e).u] = 1;
    v.image[g.edge(e).v] = 1;
    v.name = "e_" + std::to_string(e);
    vars.push_back(std::move(v));
  }
  return VariableSet(std::move(vars), g.vertex_count());
}

namespace {

Monomial edges_monomial(const VariableSet& vs, const std::vector<EdgeId>& edges) {
  Monomial m(vs.size());
  for (EdgeId e : edges) m.bump(vs.edge_var(e));
  return m;
}

Monomial theta_monomial(const VariableSet& vs, int ci, int cj) {
  Monomial m(vs.size());
  int t = vs.theta_var(ci, cj);
  if (t < 0) throw InternalError("theta variable missing");
  return m.bump(t);
}

// The two alternating edge classes of an odd cycle, re-rooted at `anchor`:
// first the class containing both anchor-incident edges, then the rest.
std::pair<std::vector<EdgeId>, std::vector<EdgeId>> cycle_classes(const SimpleCycle& c,
                                                                  VertexId anchor) {
  auto it = std::find(c.vertices.begin(), c.vertices.end(), anchor);
  if (it == c.vertices.end()) throw InternalError("class anchor not on cycle");
  std::size_t at = static_cast<std::size_t>(it - c.vertices.begin());
  std::pair<std::vector<EdgeId>, std::vector<EdgeId>> out;
  for (std::size_t k = 0; k < c.edge_ids.size(); ++k) {
    EdgeId e = c.edge_ids[(at + k) % c.edge_ids.size()];
    (k % 2 == 0 ? out.first : out.second).push_back(e);
  }
  return out;
}

struct GeneratorBuilder {
  const Graph& g;
  const VariableSet& vs;
  std::vector<const SimpleCycle*> by_odd_index;
  std::vector<Binomial> out;
  std::set<Binomial> seen;

  GeneratorBuilder(const Graph& g_, const VariableSet& vs_,
                   const std::vector<SimpleCycle>& cycles)
      : g(g_), vs(vs_) {
    for (const auto& c : cycles)
      if (c.odd) by_odd_index.push_back(&c);
  }

  const SimpleCycle& oddc(int oi) const { return *by_odd_index.at(oi); }

  void emit(Monomial plus, Monomial minus) {
    Binomial b = make_binomial(vs, std::move(plus), std::move(minus));
    if (seen.insert(b).second) out.push_back(std::move(b));
  }

  Monomial full_cycle(int oi) const { return edges_monomial(vs, oddc(oi).edge_ids); }

  // Both alternating-class monomials of odd cycle `oi` anchored at `w`.
  std::array<Monomial, 2> classes(int oi, VertexId w) const {
    auto [with, without] = cycle_classes(oddc(oi), w);
    return {edges_monomial(vs, with), edges_monomial(vs, without)};
  }

  // Monomials with psi-image equal to theta_{x,y}'s: the theta itself for an
  // exceptional pair, otherwise products of alternating classes glued at a
  // shared vertex or through a single-edge bridge.
  std::vector<Monomial> theta_tilde(int x, int y) const {
    if (vs.theta_var(x, y) >= 0) return {theta_monomial(vs, x, y)};
    const SimpleCycle &cx = oddc(std::min(x, y)), &cy = oddc(std::max(x, y));
    std::vector<Monomial> subs;
    std::vector<VertexId> shared;
    for (VertexId v : cx.vertices)
      if (cy.contains_vertex(v)) shared.push_back(v);
    std::sort(shared.begin(), shared.end());
    for (VertexId w : shared) {
      auto a = classes(std::min(x, y), w);
      auto b = classes(std::max(x, y), w);
      subs.push_back(a[0] * b[1]);
      subs.push_back(a[1] * b[0]);
    }
    if (shared.empty()) {
      for (VertexId u : cx.vertices)
        for (VertexId v : cy.vertices)
          if (auto e = g.edge_between(u, v)) {
            Monomial m = classes(std::min(x, y), u)[1] * classes(std::max(x, y), v)[1];
            subs.push_back(m.bump(vs.edge_var(*e)));
          }
    }
    std::sort(subs.begin(), subs.end());
    subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
    if (subs.empty())
      throw SignResolutionFailure("no homogeneous substitute for theta-tilde of cycles " +
                                  std::to_string(x) + ", " + std::to_string(y));
    return subs;
  }
};

// Paths whose sign-part is properly divided by another path's same-sign part
// drop out; those exchange relations reduce over the survivors.
std::vector<const ConnectingPath*> filtered_paths(const std::vector<ConnectingPath>& all,
                                                  bool even_side) {
  auto part = [&](const ConnectingPath& p) {
    auto ids = even_side ? p.even_part() : p.odd_part();
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  std::vector<const ConnectingPath*> keep;
  for (const auto& p : all) {
    auto pp = part(p);
    bool dominated = false;
    for (const auto& q : all) {
      if (q.index == p.index) continue;
      auto qq = part(q);
      if (qq != pp && std::includes(pp.begin(), pp.end(), qq.begin(), qq.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(&p);
  }
  return keep;
}

}  // namespace

Binomial binomial_of_walk(const VariableSet& vs, const PrimitiveEvenWalk& walk) {
  if (walk.sequence.size() % 2 != 0) throw InternalError("walk of odd length");
  Monomial plus(vs.size()), minus(vs.size());
  for (std::size_t k = 0; k < walk.sequence.size(); ++k)
    (k % 2 == 0 ? plus : minus).bump(vs.edge_var(walk.sequence[k]));
  return make_binomial(vs, std::move(plus), std::move(minus));
}

std::vector<Binomial> build_hyperedge_generators(const Graph& g, const VariableSet& vs,
                                                 const std::vector<SimpleCycle>& cycles,
                                                 const std::vector<PrimitiveEvenWalk>& walks,
                                                 const std::vector<ExceptionalPair>& pairs) {
  GeneratorBuilder b(g, vs, cycles);

  // (1) walk binomials generate the plain edge ideal
  for (const auto& w : walks) {
    Binomial bw = binomial_of_walk(vs, w);
    if (b.seen.insert(bw).second) b.out.push_back(bw);
  }

  // (2) theta squares
  for (int t = 0; t < vs.theta_count(); ++t) {
    const Variable& th = vs.var(t);
    Monomial plus(vs.size());
    plus.bump(t, 2);
    b.emit(plus, b.full_cycle(th.ci) * b.full_cycle(th.cj));
  }

  // (3) theta against each retained connecting path of its own pair
  for (const auto& pr : pairs) {
    auto all = enumerate_connecting_paths(g, b.oddc(pr.i), b.oddc(pr.j));
    for (bool even_side : {true, false}) {
      for (const ConnectingPath* p : filtered_paths(all, even_side)) {
        Monomial lead = theta_monomial(vs, pr.i, pr.j) *
                        edges_monomial(vs, even_side ? p->even_part() : p->odd_part());
        Monomial tail_path =
            edges_monomial(vs, even_side ? p->odd_part() : p->even_part());
        auto ci_cls = b.classes(pr.i, p->from());
        auto cj_cls = b.classes(pr.j, p->to());
        bool emitted = false;
        for (const auto& ci : ci_cls)
          for (const auto& cj : cj_cls) {
            Monomial tail = tail_path * ci * cj;
            if (psi_image(vs, lead) == psi_image(vs, tail)) {
              b.emit(lead, tail);
              emitted = true;
            }
          }
        if (!emitted)
          throw SignResolutionFailure("no homogeneous class choice for pair (" +
                                      std::to_string(pr.i) + "," + std::to_string(pr.j) +
                                      ") path " + std::to_string(p->index));
      }
    }
  }

  // Unordered theta pairs, split by how many cycle indices they share.
  struct ThetaPair {
    int s, t;  // variable positions, s < t
  };
  std::vector<ThetaPair> share_one, share_none;
  for (int s = 0; s < vs.theta_count(); ++s)
    for (int t = s + 1; t < vs.theta_count(); ++t) {
      std::set<int> ix{vs.var(s).ci, vs.var(s).cj, vs.var(t).ci, vs.var(t).cj};
      if (ix.size() == 3) share_one.push_back({s, t});
      if (ix.size() == 4) share_none.push_back({s, t});
    }

  // (4) two thetas with a common cycle, exchanged along paths joining the
  // other two cycles; when those cycles share vertices the connecting path
  // is trivial and the exchange swaps bare alternating classes
  for (auto [s, t] : share_one) {
    const Variable &a = vs.var(s), &c = vs.var(t);
    int shared = (a.ci == c.ci || a.ci == c.cj) ? a.ci : a.cj;
    int j = (a.ci == shared) ? a.cj : a.ci;
    int k = (c.ci == shared) ? c.cj : c.ci;
    if (j > k) std::swap(j, k);
    const SimpleCycle &cj = b.oddc(j), &ck = b.oddc(k);
    std::vector<VertexId> meet;
    for (VertexId v : cj.vertices)
      if (ck.contains_vertex(v)) meet.push_back(v);
    if (!meet.empty()) {
      // a trivial path dominates every longer one, so only the anchored
      // class exchanges survive here
      Monomial lead_base = theta_monomial(vs, shared, j);
      Monomial tail_base = theta_monomial(vs, shared, k);
      bool emitted = false;
      for (VertexId v : meet)
        for (const auto& x : b.classes(k, v))
          for (const auto& y : b.classes(j, v)) {
            Monomial lead = lead_base * x;
            Monomial tail = tail_base * y;
            if (lead != tail && psi_image(vs, lead) == psi_image(vs, tail)) {
              b.emit(lead, tail);
              emitted = true;
            }
          }
      if (!emitted)
        throw SignResolutionFailure("no homogeneous class choice for theta pair (" +
                                    a.name + ", " + c.name + ")");
      continue;
    }
    auto all = enumerate_connecting_paths(g, cj, ck);
    for (bool even_side : {true, false}) {
      for (const ConnectingPath* p : filtered_paths(all, even_side)) {
        Monomial lead_base =
            theta_monomial(vs, shared, j) *
            edges_monomial(vs, even_side ? p->even_part() : p->odd_part());
        Monomial tail_base =
            theta_monomial(vs, shared, k) *
            edges_monomial(vs, even_side ? p->odd_part() : p->even_part());
        auto ck_cls = b.classes(k, p->to());
        auto cj_cls = b.classes(j, p->from());
        bool emitted = false;
        for (const auto& x : ck_cls)
          for (const auto& y : cj_cls) {
            Monomial lead = lead_base * x;
            Monomial tail = tail_base * y;
            if (lead != tail && psi_image(vs, lead) == psi_image(vs, tail)) {
              b.emit(lead, tail);
              emitted = true;
            }
          }
        if (!emitted)
          throw SignResolutionFailure("no homogeneous class choice for theta pair (" +
                                      a.name + ", " + c.name + ")");
      }
    }
  }

  // (5) four distinct cycles: re-pair the thetas, substituting for
  // non-exceptional pairs
  for (auto [s, t] : share_none) {
    const Variable &a = vs.var(s), &c = vs.var(t);
    Monomial plus = theta_monomial(vs, a.ci, a.cj) * theta_monomial(vs, c.ci, c.cj);
    for (auto [x1, y1, x2, y2] : {std::array<int, 4>{a.ci, c.ci, a.cj, c.cj},
                                  std::array<int, 4>{a.ci, c.cj, a.cj, c.ci}}) {
      for (const auto& m1 : b.theta_tilde(x1, y1))
        for (const auto& m2 : b.theta_tilde(x2, y2)) {
          Monomial tail = m1 * m2;
          if (tail != plus) b.emit(plus, tail);
        }
    }
  }

  // (6) two thetas with a common cycle, re-paired against that cycle's full
  // edge product
  for (auto [s, t] : share_one) {
    const Variable &a = vs.var(s), &c = vs.var(t);
    int shared = (a.ci == c.ci || a.ci == c.cj) ? a.ci : a.cj;
    int j = (a.ci == shared) ? a.cj : a.ci;
    int k = (c.ci == shared) ? c.cj : c.ci;
    if (j > k) std::swap(j, k);
    Monomial plus = theta_monomial(vs, shared, j) * theta_monomial(vs, shared, k);
    for (const auto& m : b.theta_tilde(j, k)) b.emit(plus, m * b.full_cycle(shared));
  }

  return std::move(b.out);
}

std::string format_monomial(const VariableSet& vs, const Monomial& m) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < m.nvars(); ++i) {
    if (!m[i]) continue;
    if (!first) out << '*';
    first = false;
    out << vs.var(i).name;
    if (m[i] > 1) out << '^' << m[i];
  }
  if (first) out << '1';
  return out.str();
}

std::string format_binomial(const VariableSet& vs, const Binomial& b) {
  return format_monomial(vs, b.plus) + " - " + format_monomial(vs, b.minus);
}

}  // namespace edgepoly
