#include "edgepoly/groebner.hpp"

#include "edgepoly/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace edgepoly {

namespace {

// Working basis entry, oriented with lead > tail.
struct Entry {
  Monomial lead;
  Monomial tail;
};

Monomial reduce_full(const std::vector<Entry>& basis, Monomial m) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : basis) {
      if (divides(e.lead, m)) {
        m = exact_div(m, e.lead) * e.tail;
        changed = true;
        break;
      }
    }
  }
  return m;
}

struct PairKey {
  Monomial lcm_mon;
  std::size_t i, j;
};

struct PairCmp {
  const TermOrder* order;
  bool operator()(const PairKey& a, const PairKey& b) const {
    int c = order->compare(a.lcm_mon, b.lcm_mon);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

GroebnerBasis groebner_basis(const VariableSet& vs, std::vector<Binomial> generators,
                             const TermOrder& order, const GroebnerOptions& opts) {
  (void)vs;
  std::vector<Entry> basis;
  auto insert = [&](Monomial a, Monomial b) {
    int c = order.compare(a, b);
    if (c == 0) return false;
    if (c < 0) std::swap(a, b);
    basis.push_back(Entry{std::move(a), std::move(b)});
    return true;
  };

  std::set<PairKey, PairCmp> pending(PairCmp{&order});
  std::set<std::pair<std::size_t, std::size_t>> in_pending;
  auto queue_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (coprime(basis[i].lead, basis[j].lead)) continue;  // S-poly reduces to zero
      pending.insert(PairKey{lcm(basis[i].lead, basis[j].lead), i, j});
      in_pending.insert({i, j});
    }
  };

  for (auto& g : generators) {
    Monomial p = reduce_full(basis, g.plus);
    Monomial q = reduce_full(basis, g.minus);
    if (p == q) continue;
    if (insert(std::move(p), std::move(q))) queue_pairs_with(basis.size() - 1);
  }

  std::size_t processed = 0;
  while (!pending.empty()) {
    if (++processed > opts.max_spairs)
      throw ResourceLimit("S-pair budget of " + std::to_string(opts.max_spairs) +
                          " exhausted during Groebner basis computation");
    PairKey key = *pending.begin();
    pending.erase(pending.begin());
    in_pending.erase({key.i, key.j});

    if (opts.chain_criterion) {
      bool skip = false;
      for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
        if (k == key.i || k == key.j) continue;
        if (!divides(basis[k].lead, key.lcm_mon)) continue;
        auto ik = std::minmax(key.i, k);
        auto jk = std::minmax(key.j, k);
        if (!in_pending.count({ik.first, ik.second}) &&
            !in_pending.count({jk.first, jk.second}))
          skip = true;
      }
      if (skip) continue;
    }

    const Entry &f = basis[key.i], &g = basis[key.j];
    Monomial p = exact_div(key.lcm_mon, f.lead) * f.tail;
    Monomial q = exact_div(key.lcm_mon, g.lead) * g.tail;
    p = reduce_full(basis, std::move(p));
    q = reduce_full(basis, std::move(q));
    if (p == q) continue;
    if (insert(std::move(p), std::move(q))) queue_pairs_with(basis.size() - 1);
  }

  // Minimalize: in any monomial order divisibility implies order, so an
  // ascending sweep sees every potential divisor before the terms it divides.
  std::sort(basis.begin(), basis.end(), [&](const Entry& a, const Entry& b) {
    int c = order.compare(a.lead, b.lead);
    if (c != 0) return c < 0;
    return order.compare(a.tail, b.tail) < 0;
  });
  std::vector<Entry> minimal;
  for (auto& e : basis) {
    bool redundant = false;
    for (const auto& kept : minimal)
      if (divides(kept.lead, e.lead)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(e));
  }

  // Inter-reduce tails against the minimal set until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& e : minimal) {
      Monomial t = reduce_full(minimal, e.tail);
      if (!(t == e.tail)) {
        e.tail = std::move(t);
        changed = true;
      }
    }
  }

  GroebnerBasis out{order, {}};
  out.elements.reserve(minimal.size());
  for (auto& e : minimal) out.elements.push_back(Binomial{std::move(e.lead), std::move(e.tail)});
  return out;
}

Monomial normal_form(const GroebnerBasis& gb, Monomial m) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : gb.elements) {
      if (divides(e.plus, m)) {
        m = exact_div(m, e.plus) * e.minus;
        changed = true;
        break;
      }
    }
  }
  return m;
}

std::optional<Binomial> normal_form(const GroebnerBasis& gb, const Binomial& b) {
  Monomial p = normal_form(gb, b.plus);
  Monomial q = normal_form(gb, b.minus);
  if (p == q) return std::nullopt;
  if (gb.order.compare(p, q) < 0) std::swap(p, q);
  return Binomial{std::move(p), std::move(q)};
}

bool reduces_to_zero(const GroebnerBasis& gb, const Binomial& b) {
  return !normal_form(gb, b).has_value();
}

std::vector<Monomial> initial_monomials(const GroebnerBasis& gb) {
  std::vector<Monomial> out;
  out.reserve(gb.elements.size());
  for (const auto& e : gb.elements) out.push_back(e.plus);
  return out;
}

std::vector<Binomial> saturate_by_variables(int nvars, const std::vector<Binomial>& gens,
                                            const GroebnerOptions& opts) {
  // w takes position 0 where plain lex eliminates it first
  std::vector<Binomial> shifted;
  shifted.reserve(gens.size() + 1);
  for (const auto& b : gens) {
    Monomial plus(nvars + 1), minus(nvars + 1);
    for (int j = 0; j < nvars; ++j) {
      plus.bump(j + 1, b.plus[j]);
      minus.bump(j + 1, b.minus[j]);
    }
    if (plus == minus) continue;
    shifted.push_back({std::move(plus), std::move(minus)});
  }
  Monomial saturator(nvars + 1);
  for (int j = 0; j <= nvars; ++j) saturator.bump(j);
  shifted.push_back({std::move(saturator), Monomial(nvars + 1)});

  GroebnerBasis gb = groebner_basis(VariableSet{}, std::move(shifted),
                                    TermOrder{TermOrder::Kind::Lex, {}}, opts);

  std::vector<Binomial> out;
  for (const auto& b : gb.elements) {
    if (b.plus[0] != 0 || b.minus[0] != 0) continue;
    Monomial plus(nvars), minus(nvars);
    for (int j = 0; j < nvars; ++j) {
      plus.bump(j, b.plus[j + 1]);
      minus.bump(j, b.minus[j + 1]);
    }
    out.push_back({std::move(plus), std::move(minus)});
  }
  return out;
}

}  // namespace edgepoly
