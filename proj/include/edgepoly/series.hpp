#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "edgepoly/graph.hpp"
#include "edgepoly/groebner.hpp"
#include "edgepoly/ideal.hpp"
#include "edgepoly/intpoly.hpp"
#include "edgepoly/walks.hpp"

namespace edgepoly {

inline constexpr std::size_t kDefaultMoebiusCap = 2'000'000;

using MonomialSum = std::map<Monomial, mpz_class>;

// Signed sum over the lcm-lattice of the atoms: sum_{S subset of atoms}
// (-1)^{|S|} lcm(S), with like monomials collected.  Folds one atom at a time
// (M <- M - lcm(M, a)) so cancellation keeps intermediate supports small; the
// cap bounds the support size and trips ResourceLimit when exceeded.  With no
// atoms the sum is the unit monomial alone.
MonomialSum moebius_sum(int nvars, const std::vector<Monomial>& atoms,
                        std::size_t max_terms = kDefaultMoebiusCap);

// U(t) = sum of c * t^(psi-degree of m) over the collected sum.
IntPoly specialize(const VariableSet& vs, const MonomialSum& sum);

// numerator / (1 - t)^denominator_power, canonical once the numerator has no
// root at t = 1 (or is zero).
struct RationalSeries {
  IntPoly numerator;
  int denominator_power = 0;

  void canonicalize();
  RationalSeries times(const RationalSeries& o) const;
  RationalSeries times_one_minus_t() const;
  std::string str() const;

  friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
    return a.numerator == b.numerator && a.denominator_power == b.denominator_power;
  }
};

// Inverse of RationalSeries::str, accepting optional whitespace.
RationalSeries parse_series(const std::string& text);

struct PipelineOptions {
  TermOrder::Kind order = TermOrder::Kind::Lex;
  GroebnerOptions groebner{};
  std::size_t walk_cap = kDefaultWalkCap;
  std::size_t moebius_cap = kDefaultMoebiusCap;
};

// Every stage of the series computation, kept for inspection and testing.
struct PipelineResult {
  std::vector<SimpleCycle> cycles;
  std::vector<ExceptionalPair> pairs;
  std::vector<PrimitiveEvenWalk> walks;
  VariableSet vars;
  std::vector<Binomial> generators;
  GroebnerBasis basis;
  MonomialSum moebius;
  IntPoly numerator_raw;  // U(t) before cancelling against the denominator
  RationalSeries series;
  int polytope_dim = 0;  // degree of the counting polynomial
};

PipelineResult run_pipeline(const Graph& g, const PipelineOptions& opts = {});

RationalSeries ehrhart_series(const Graph& g, const PipelineOptions& opts = {});

// Hilbert series of the subalgebra generated by the edge monomials alone
// (walk binomials, no extra variables); agrees with the Ehrhart series
// exactly when the graph satisfies the odd cycle condition.
RationalSeries edge_ring_series(const Graph& g, const PipelineOptions& opts = {});

// Counting polynomial in the dilation factor, recovered from the series as
// sum_k h_k * C(m + D - k, D) with D = denominator_power - 1.
QPoly ehrhart_polynomial(const RationalSeries& s);

// Evaluation that insists on an integer value.
mpz_class ehrhart_evaluate(const QPoly& p, const mpz_class& m);

}  // namespace edgepoly
