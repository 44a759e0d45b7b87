#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "edgepoly/walks.hpp"

namespace edgepoly {

// A generator of the ambient polynomial ring: one variable per edge of the
// graph plus one theta variable per exceptional pair of odd cycles. Every
// variable maps to a vertex-exponent vector (its psi-image); edges have
// degree 1, theta_{i,j} has degree (|C_i| + |C_j|) / 2.
struct Variable {
  enum class Kind { Theta, Edge };
  Kind kind;
  int edge_id = -1;       // for Kind::Edge
  int ci = -1, cj = -1;   // odd-cycle indices, for Kind::Theta
  long degree = 0;
  std::vector<int> image;  // per-vertex exponents, size |V|
  std::string name;
};

// Variables in term-order priority: all thetas (sorted by (i,j)) above all
// edges (sorted by id). Monomial exponent vectors index into this sequence.
class VariableSet {
 public:
  VariableSet() = default;
  VariableSet(std::vector<Variable> vars, int vertex_count);

  int size() const { return static_cast<int>(vars_.size()); }
  int vertex_count() const { return vertex_count_; }
  const Variable& var(int i) const { return vars_.at(i); }
  const std::vector<Variable>& vars() const { return vars_; }
  int theta_count() const { return theta_count_; }
  int edge_var(int edge_id) const;          // position of e_{edge_id}
  int theta_var(int ci, int cj) const;      // position of theta_{ci,cj}, -1 if absent
  std::vector<long> degrees() const;

 private:
  std::vector<Variable> vars_;
  int vertex_count_ = 0;
  int theta_count_ = 0;
};

// Exponent vector over a VariableSet. Plain value type; all semantics
// (degrees, images, orders, printing) live in VariableSet / TermOrder.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : exp_(nvars, 0) {}

  int nvars() const { return static_cast<int>(exp_.size()); }
  unsigned operator[](int i) const { return exp_.at(i); }
  bool is_one() const;
  Monomial& bump(int var, unsigned by = 1);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool divides(const Monomial& a, const Monomial& b);  // a | b
  friend Monomial exact_div(const Monomial& b, const Monomial& a);  // b / a
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  // Structural order for use as a container key; not a term order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exp_ < b.exp_; }

 private:
  std::vector<unsigned> exp_;
};

long psi_degree(const VariableSet& vs, const Monomial& m);
std::vector<mpz_class> psi_image(const VariableSet& vs, const Monomial& m);

// plus != minus always; both map to the same vertex vector whenever the
// binomial was produced by the pipeline (checked at construction).
struct Binomial {
  Monomial plus, minus;
  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend bool operator<(const Binomial& a, const Binomial& b) {
    return std::pair(a.plus, a.minus) < std::pair(b.plus, b.minus);
  }
};

// Validates psi-homogeneity and returns {T, U}; orientation is the caller's.
Binomial make_binomial(const VariableSet& vs, Monomial plus, Monomial minus);

// Multiplicative total orders on monomials. Lex compares exponents from the
// highest-priority variable down; grevlex compares psi-degrees first and
// breaks ties by the smaller exponent on the lowest-priority variable.
struct TermOrder {
  enum class Kind { Lex, Grevlex };
  Kind kind = Kind::Lex;
  std::vector<long> grading;  // per-variable psi-degrees, used by grevlex

  static TermOrder lex(const VariableSet& vs);
  static TermOrder grevlex(const VariableSet& vs);
  static TermOrder make(Kind k, const VariableSet& vs);

  // <0, 0, >0 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

VariableSet build_variables(const Graph& g, const std::vector<SimpleCycle>& cycles,
                            const std::vector<ExceptionalPair>& pairs);

// The generating set of the hyperedge ideal: walk binomials, theta squares,
// theta/path exchanges, two-theta path exchanges, and the four-index and
// three-index theta products with their homogeneous substitutes.
std::vector<Binomial> build_hyperedge_generators(const Graph& g, const VariableSet& vs,
                                                 const std::vector<SimpleCycle>& cycles,
                                                 const std::vector<PrimitiveEvenWalk>& walks,
                                                 const std::vector<ExceptionalPair>& pairs);

// Walk binomial: product of odd-position edges minus product of even-position
// ones along the walk sequence.
Binomial binomial_of_walk(const VariableSet& vs, const PrimitiveEvenWalk& walk);

// Printing: "theta_{i,j}" renders as UTF-8 θ_{i,j}; factors joined by '*',
// repeated variables as '^k', sides joined by " - ".
std::string format_monomial(const VariableSet& vs, const Monomial& m);
std::string format_binomial(const VariableSet& vs, const Binomial& b);

}  // namespace edgepoly
