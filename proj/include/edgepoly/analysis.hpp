#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "edgepoly/graph.hpp"
#include "edgepoly/series.hpp"

namespace edgepoly {

// Closed-form Ehrhart series of the basic biconnected families.
RationalSeries series_single_edge();        // 1/(1-t)
RationalSeries series_even_cycle(int n);    // cycle with 2n edges, n >= 2
RationalSeries series_odd_cycle(int n);     // cycle with 2n-1 edges, n >= 2
RationalSeries series_ladder(int k);        // K_2 x P_k, k >= 2

// Cycle census of a polygon tree: a graph assembled by repeatedly gluing a
// new cycle onto a single existing edge.  At most one constituent cycle may
// be odd; its length is recorded separately.
struct PolygonTreeProfile {
  int edges = 0;
  std::map<int, int> f2n;      // n -> number of cycles with 2n edges
  int odd_cycle_length = 0;    // 0 when absent

  int even_cycle_count() const;
  int cycle_count() const;
  long half_length_sum() const;  // sum of n * f_2n, for the critical line
};

// prod (1+t+...+t^(n-1))^f_2n / (1-t)^(edges - even cycle count); an odd
// constituent contributes only to the denominator power.
RationalSeries series_polygon_tree(const PolygonTreeProfile& profile);

// Ear-peeling recognizer: repeatedly strips a degree-2 chain whose endpoints
// are joined by an existing edge, then checks that a single cycle remains.
// Returns nullopt when the graph is not a polygon tree.
std::optional<PolygonTreeProfile> polygon_tree_profile(const Graph& g);

struct FirstFactoringReport {
  BiconnectedDecomposition decomposition;
  RationalSeries whole;
  std::vector<RationalSeries> parts;  // oddment series first when present
  RationalSeries product;
  bool equal = false;
};

FirstFactoringReport verify_first_factoring(const Graph& g,
                                            const PipelineOptions& opts = {});

struct SecondFactoringReport {
  RationalSeries whole;
  RationalSeries side_one;
  RationalSeries side_two;
  RationalSeries factored;  // side_one * (side_two * (1-t))
  bool equal = false;
};

// Checks the split hypotheses (edge partition, bipartite second side, shared
// edge on a cycle of the second side) and throws HypothesisViolated naming
// the failed one before any series work.
SecondFactoringReport verify_second_factoring(const Graph& g,
                                              const SeparatingFaceSplit& split,
                                              const PipelineOptions& opts = {});

struct RootReport {
  std::vector<long> integer_roots;  // exact roots, each a negative integer
  std::vector<std::complex<double>> residual_roots;
  std::optional<double> critical_line;  // -(e - sum n*f_2n)/2 when a profile is given
  double max_deviation = 0.0;  // max |Re(root) - critical_line| over residual roots
  double strip_low = 0.0;      // -D
  double strip_high = 0.0;     // D - 1
  bool in_strip = true;
};

// Exact negative-integer deflation first, then numerical root finding on the
// residual factor.  The strip bounds come from the polynomial degree.
RootReport root_report(const QPoly& p,
                       const std::optional<PolygonTreeProfile>& profile = std::nullopt);

// f(x - 1) - alpha * f(x) on complex-coefficient polynomials (ascending).
std::vector<std::complex<double>> rv_step(const std::vector<std::complex<double>>& f,
                                          std::complex<double> alpha);

}  // namespace edgepoly
