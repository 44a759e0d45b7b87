#include "edgepoly/oracle.hpp"

#include <set>
#include <string>

#include "edgepoly/errors.hpp"
#include "edgepoly/ideal.hpp"
#include "edgepoly/walks.hpp"

namespace edgepoly {

namespace {

// Phase-one simplex with Bland's rule over exact rationals.  Constraints are
// A x = b with x >= 0 and b >= 0; returns whether the system is feasible.
bool phase_one_feasible(const std::vector<std::vector<mpq_class>>& A,
                        const std::vector<mpq_class>& b) {
  const std::size_t rows = A.size();
  if (rows == 0) return true;
  const std::size_t real_cols = A[0].size();
  const std::size_t cols = real_cols + rows;  // artificials on the right

  // tableau[r] = constraint row, tableau[rows] = reduced-cost row for
  // minimizing the artificial sum, priced out against the artificial basis
  std::vector<std::vector<mpq_class>> t(rows + 1, std::vector<mpq_class>(cols + 1, 0));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < real_cols; ++c) t[r][c] = A[r][c];
    t[r][real_cols + r] = 1;
    t[r][cols] = b[r];
    basis[r] = real_cols + r;
    for (std::size_t c = 0; c < real_cols; ++c) t[rows][c] -= A[r][c];
    t[rows][cols] -= b[r];
  }

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t c = 0; c < cols; ++c)
      if (t[rows][c] < 0) {
        enter = c;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = rows;
    mpq_class best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      mpq_class ratio = t[r][cols] / t[r][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[r] < basis[leave]))
        leave = r, best = ratio;
    }
    if (leave == rows) throw InternalError("phase-one objective unbounded");

    mpq_class pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      mpq_class f = t[r][enter];
      for (std::size_t c = 0; c <= cols; ++c) t[r][c] -= f * t[leave][c];
    }
    basis[leave] = enter;
  }
  return t[rows][cols] == 0;
}

struct Counter {
  std::size_t used = 0;
  std::size_t cap;
  const char* what;
  void tick() {
    if (++used > cap)
      throw ResourceLimit(std::string(what) + " exceeded cap of " + std::to_string(cap));
  }
};

}  // namespace

bool lattice_point_in_dilate(const Graph& g, const std::vector<long>& point, long m) {
  if (static_cast<int>(point.size()) != g.vertex_count())
    throw InvalidParameter("point has wrong dimension");
  if (m < 0) throw InvalidParameter("negative dilation");
  const int n = g.vertex_count();
  std::vector<std::vector<mpq_class>> A(n + 1, std::vector<mpq_class>(g.edge_count(), 0));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    A[g.edge(e).u][e] = 1;
    A[g.edge(e).v][e] = 1;
    A[n][e] = 1;
  }
  std::vector<mpq_class> b;
  for (long z : point) {
    if (z < 0) return false;
    b.emplace_back(z);
  }
  b.emplace_back(m);
  return phase_one_feasible(A, b);
}

mpz_class count_lattice_points_lp(const Graph& g, long m, std::size_t cap) {
  if (m < 0) throw InvalidParameter("negative dilation");
  if (m == 0) return 1;
  const int n = g.vertex_count();
  Counter budget{0, cap, "membership tests"};
  mpz_class count = 0;
  std::vector<long> z(n, 0);

  // All z with 0 <= z_v <= m summing to 2m, in lexicographic order.
  auto rec = [&](auto&& self, int idx, long remaining) -> void {
    if (idx == n - 1) {
      if (remaining > m) return;
      z[idx] = remaining;
      budget.tick();
      if (lattice_point_in_dilate(g, z, m)) ++count;
      return;
    }
    long hi = std::min(m, remaining);
    long lo = std::max(0L, remaining - static_cast<long>(n - 1 - idx) * m);
    for (long v = lo; v <= hi; ++v) {
      z[idx] = v;
      self(self, idx + 1, remaining - v);
    }
  };
  rec(rec, 0, 2 * m);
  return count;
}

namespace {

mpz_class count_monoid_images(const VariableSet& vs, long m, std::size_t cap) {
  Counter budget{0, cap, "monomial enumeration"};
  std::set<std::vector<mpz_class>> images;
  std::vector<mpz_class> image(vs.vertex_count(), 0);

  auto rec = [&](auto&& self, int idx, long remaining) -> void {
    budget.tick();
    if (remaining == 0) {
      images.insert(image);
      return;
    }
    if (idx >= vs.size()) return;
    const Variable& v = vs.var(idx);
    long max_e = remaining / v.degree;
    for (long e = 0; e <= max_e; ++e) {
      if (e > 0)
        for (std::size_t k = 0; k < v.image.size(); ++k) image[k] += v.image[k];
      self(self, idx + 1, remaining - e * v.degree);
    }
    for (std::size_t k = 0; k < v.image.size(); ++k)
      image[k] -= mpz_class(v.image[k]) * max_e;
  };
  rec(rec, 0, m);
  return mpz_class(static_cast<unsigned long>(images.size()));
}

}  // namespace

mpz_class count_lattice_points_monoid(const Graph& g, long m, std::size_t cap) {
  if (m < 0) throw InvalidParameter("negative dilation");
  auto cycles = enumerate_simple_cycles(g);
  auto pairs = find_exceptional_pairs(g, cycles);
  return count_monoid_images(build_variables(g, cycles, pairs), m, cap);
}

mpz_class count_edge_monomials(const Graph& g, long m, std::size_t cap) {
  if (m < 0) throw InvalidParameter("negative dilation");
  auto cycles = enumerate_simple_cycles(g);
  return count_monoid_images(build_variables(g, cycles, {}), m, cap);
}

}  // namespace edgepoly
