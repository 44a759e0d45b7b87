#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "edgepoly/ideal.hpp"

namespace edgepoly {

inline constexpr std::size_t kDefaultSPairCap = 500'000;

struct GroebnerOptions {
  bool chain_criterion = true;
  std::size_t max_spairs = kDefaultSPairCap;
};

// Reduced Groebner basis. Elements are oriented so that `plus` is the leading
// term under `order`, tails are fully reduced, and the list is sorted
// ascending by leading term; this form is unique for the ideal and order.
struct GroebnerBasis {
  TermOrder order;
  std::vector<Binomial> elements;
};

GroebnerBasis groebner_basis(const VariableSet& vs, std::vector<Binomial> generators,
                             const TermOrder& order, const GroebnerOptions& opts = {});

// Iterated rewriting m -> (m / lt(g)) * tail(g) by the first applicable
// element; the result is the unique normal form.
Monomial normal_form(const GroebnerBasis& gb, Monomial m);

// Both sides reduced; nullopt when they meet (the binomial lies in the ideal).
std::optional<Binomial> normal_form(const GroebnerBasis& gb, const Binomial& b);

bool reduces_to_zero(const GroebnerBasis& gb, const Binomial& b);

// Leading terms of the reduced basis, ascending; they generate the initial
// ideal.
std::vector<Monomial> initial_monomials(const GroebnerBasis& gb);

// Generators of (gens) : (x_0 ... x_{nvars-1})^inf, by the classical trick:
// lex basis with an auxiliary top variable w and the relation w*prod(x_i) = 1,
// keeping the w-free elements. For a binomial ideal whose exponent
// differences span a lattice L, the result generates the full lattice ideal
// I_L regardless of which sublattice-spanning set was passed in.
std::vector<Binomial> saturate_by_variables(int nvars, const std::vector<Binomial>& gens,
                                            const GroebnerOptions& opts = {});

}  // namespace edgepoly
