#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "edgepoly/analysis.hpp"
#include "edgepoly/graph.hpp"
#include "edgepoly/groebner.hpp"
#include "edgepoly/ideal.hpp"
#include "edgepoly/series.hpp"

namespace testsupport {

struct NamedGraph {
  std::string name;
  std::string text;
};

edgepoly::Graph make(const std::string& text);

// Edge-list builders, all returning parseable graph text.
std::string path_text(int vertices);
std::string cycle_text(int length);
std::string complete_text(int vertices);
std::string complete_bipartite_text(int a, int b);
std::string ladder_text(int rungs);

// Connected simple graphs on at most 8 vertices, a mix of trees, cycles,
// complete and bipartite families, gluings and the non-normal examples.
const std::vector<NamedGraph>& corpus();

// Graphs built by gluing two pieces at a vertex or along an edge, for the
// factoring batteries.
const std::vector<NamedGraph>& composites();

// A random polygon tree built by repeatedly gluing an even polygon onto an
// edge not yet shared by two polygons. Fills `expected` with the profile
// known from construction.
std::string random_polygon_tree(std::mt19937& rng, int max_edges,
                                edgepoly::PolygonTreeProfile& expected);

// Simple cycles counted the blunt way: edge subsets that are connected and
// 2-regular on their support.
int count_simple_cycles_brute(const edgepoly::Graph& g);

// The literal signed subset expansion of the lcm lattice, for checking the
// incremental fold.
std::map<edgepoly::Monomial, mpz_class> moebius_subset_expansion(
    int nvars, const std::vector<edgepoly::Monomial>& atoms);

// Independent reduced lex Groebner basis of the toric ideal of the variable
// images: a kernel-lattice basis saturated by the product of all variables
// (auxiliary top variable w, generator w*prod(vars) - 1, then eliminate w).
std::vector<edgepoly::Binomial> toric_groebner_oracle(const edgepoly::VariableSet& vs);

}  // namespace testsupport
