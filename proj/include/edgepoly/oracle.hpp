#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "edgepoly/graph.hpp"

namespace edgepoly {

inline constexpr std::size_t kDefaultOracleCap = 10'000'000;

// Whether `point` lies in the m-th dilate of the edge polytope, decided by
// exact rational phase-one simplex on {lambda >= 0, sum lambda = m,
// sum lambda_e * rho(e) = point}.
bool lattice_point_in_dilate(const Graph& g, const std::vector<long>& point, long m);

// Lattice points of the m-th dilate, counted by running the membership LP
// over every candidate (nonnegative coordinates, each at most m, total 2m).
// The cap bounds the number of candidates tried.
mpz_class count_lattice_points_lp(const Graph& g, long m,
                                  std::size_t cap = kDefaultOracleCap);

// The same count from the algebra side: distinct vertex vectors realized by
// weighted-degree-m monomials in the edge and theta variables.  The cap
// bounds the number of monomials enumerated.
mpz_class count_lattice_points_monoid(const Graph& g, long m,
                                      std::size_t cap = kDefaultOracleCap);

// Degree-m graded dimension of the subalgebra generated by the edge
// monomials alone (no theta variables).
mpz_class count_edge_monomials(const Graph& g, long m,
                               std::size_t cap = kDefaultOracleCap);

}  // namespace edgepoly
