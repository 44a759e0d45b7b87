#include "edgepoly/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "edgepoly/errors.hpp"

namespace edgepoly {

MonomialSum moebius_sum(int nvars, const std::vector<Monomial>& atoms,
                        std::size_t max_terms) {
  MonomialSum acc;
  acc.emplace(Monomial(nvars), 1);
  for (const auto& a : atoms) {
    MonomialSum delta;
    for (const auto& [m, c] : acc) delta[lcm(m, a)] -= c;
    for (auto& [m, c] : delta) {
      auto it = acc.try_emplace(m, 0).first;
      it->second += c;
      if (it->second == 0) acc.erase(it);
    }
    if (acc.size() > max_terms)
      throw ResourceLimit("lattice fold exceeded " + std::to_string(max_terms) +
                          " monomials");
  }
  return acc;
}

IntPoly specialize(const VariableSet& vs, const MonomialSum& sum) {
  std::vector<mpz_class> coeffs;
  for (const auto& [m, c] : sum) {
    long d = psi_degree(vs, m);
    if (d >= static_cast<long>(coeffs.size())) coeffs.resize(d + 1, 0);
    coeffs[d] += c;
  }
  return IntPoly(std::move(coeffs));
}

void RationalSeries::canonicalize() {
  IntPoly omt = IntPoly::one_minus_t();
  while (denominator_power > 0 && !numerator.is_zero() &&
         numerator.evaluate(mpz_class(1)) == 0) {
    numerator = numerator.divide_exact(omt);
    --denominator_power;
  }
}

RationalSeries RationalSeries::times(const RationalSeries& o) const {
  RationalSeries out{numerator * o.numerator, denominator_power + o.denominator_power};
  out.canonicalize();
  return out;
}

RationalSeries RationalSeries::times_one_minus_t() const {
  RationalSeries out = *this;
  if (out.denominator_power > 0)
    --out.denominator_power;
  else
    out.numerator = out.numerator * IntPoly::one_minus_t();
  out.canonicalize();
  return out;
}

std::string RationalSeries::str() const {
  std::string s = "(" + numerator.str() + ")";
  if (denominator_power > 0) {
    s += "/(1-t)";
    if (denominator_power > 1) s += "^" + std::to_string(denominator_power);
  }
  return s;
}

namespace {

[[noreturn]] void bad_series(const std::string& text) {
  throw InvalidParameter("cannot parse series: " + text);
}

}  // namespace

RationalSeries parse_series(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty() || s.front() != '(') bad_series(text);
  std::size_t close = s.find(')');
  if (close == std::string::npos) bad_series(text);
  std::string num = s.substr(1, close - 1);
  std::string rest = s.substr(close + 1);

  std::vector<mpz_class> coeffs;
  std::size_t i = 0;
  bool any = false;
  while (i < num.size()) {
    int sign = 1;
    if (num[i] == '+' || num[i] == '-') {
      sign = num[i] == '-' ? -1 : 1;
      ++i;
    } else if (any) {
      bad_series(text);
    }
    std::string digits;
    while (i < num.size() && std::isdigit(static_cast<unsigned char>(num[i])))
      digits.push_back(num[i++]);
    if (i < num.size() && num[i] == '*') {
      if (digits.empty()) bad_series(text);
      ++i;
    }
    long deg = 0;
    if (i < num.size() && num[i] == 't') {
      ++i;
      deg = 1;
      if (i < num.size() && num[i] == '^') {
        ++i;
        std::string d;
        while (i < num.size() && std::isdigit(static_cast<unsigned char>(num[i])))
          d.push_back(num[i++]);
        if (d.empty()) bad_series(text);
        deg = std::stol(d);
      }
    } else if (digits.empty()) {
      bad_series(text);
    }
    mpz_class c = digits.empty() ? mpz_class(1) : mpz_class(digits);
    c *= sign;
    if (deg >= static_cast<long>(coeffs.size())) coeffs.resize(deg + 1, 0);
    coeffs[deg] += c;
    any = true;
  }
  if (!any) bad_series(text);

  RationalSeries out{IntPoly(std::move(coeffs)), 0};
  if (!rest.empty()) {
    if (rest.rfind("/(1-t)", 0) != 0) bad_series(text);
    rest = rest.substr(6);
    if (rest.empty()) {
      out.denominator_power = 1;
    } else {
      if (rest[0] != '^') bad_series(text);
      rest = rest.substr(1);
      if (rest.empty() ||
          !std::all_of(rest.begin(), rest.end(),
                       [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        bad_series(text);
      out.denominator_power = std::stoi(rest);
    }
  }
  return out;
}

namespace {

PipelineResult run_with_variables(const Graph& g, const PipelineOptions& opts,
                                  bool with_thetas) {
  PipelineResult r;
  r.cycles = enumerate_simple_cycles(g, opts.walk_cap);
  if (with_thetas) r.pairs = find_exceptional_pairs(g, r.cycles);
  r.walks = enumerate_primitive_even_walks(g, r.cycles, opts.walk_cap);
  r.vars = build_variables(g, r.cycles, r.pairs);
  r.generators = build_hyperedge_generators(g, r.vars, r.cycles, r.walks, r.pairs);
  // The walk binomials alone span the full kernel of the edge map, but the
  // theta exchange families can land strictly inside the kernel ideal when
  // overlapping odd cycles both pair with a third one. Saturating by the
  // variable product completes the ideal in exactly those cases, so the
  // basis below is always the basis of the whole homogeneous kernel.
  std::vector<Binomial> basis_input = r.generators;
  if (r.vars.theta_count() > 0)
    basis_input = saturate_by_variables(r.vars.size(), basis_input, opts.groebner);
  r.basis = groebner_basis(r.vars, std::move(basis_input),
                           TermOrder::make(opts.order, r.vars), opts.groebner);
  r.moebius = moebius_sum(r.vars.size(), initial_monomials(r.basis), opts.moebius_cap);
  r.numerator_raw = specialize(r.vars, r.moebius);

  IntPoly num = r.numerator_raw;
  for (const auto& v : r.vars.vars())
    if (v.degree > 1) num = num.divide_exact(IntPoly::sigma(static_cast<int>(v.degree)));
  r.series = RationalSeries{std::move(num), r.vars.size()};
  r.series.canonicalize();

  r.polytope_dim = g.vertex_count() - (bipartition(g) ? 2 : 1);
  if (r.series.denominator_power != r.polytope_dim + 1)
    throw InternalError("series has denominator power " +
                        std::to_string(r.series.denominator_power) + ", expected " +
                        std::to_string(r.polytope_dim + 1));
  if (with_thetas) {
    // lattice-point series always have a nonnegative numerator of degree at
    // most the polytope dimension; a violation means the basis missed part
    // of the kernel
    if (r.series.numerator.degree() > r.polytope_dim)
      throw InternalError("series numerator degree exceeds the polytope dimension");
    for (int k = 0; k <= r.series.numerator.degree(); ++k)
      if (r.series.numerator.coeff(k) < 0)
        throw InternalError("series numerator has a negative coefficient");
  }
  return r;
}

}  // namespace

PipelineResult run_pipeline(const Graph& g, const PipelineOptions& opts) {
  return run_with_variables(g, opts, true);
}

RationalSeries ehrhart_series(const Graph& g, const PipelineOptions& opts) {
  return run_pipeline(g, opts).series;
}

RationalSeries edge_ring_series(const Graph& g, const PipelineOptions& opts) {
  return run_with_variables(g, opts, false).series;
}

QPoly ehrhart_polynomial(const RationalSeries& s) {
  int D = s.denominator_power - 1;
  if (D < 0) throw InvalidParameter("series is not a positive-dimensional count");
  mpz_class fact = 1;
  for (int r = 1; r <= D; ++r) fact *= r;

  QPoly total;
  for (int k = 0; k <= s.numerator.degree(); ++k) {
    const mpz_class& h = s.numerator.coeff(k);
    if (h == 0) continue;
    // C(m + D - k, D) = prod_{r=0}^{D-1} (m + D - k - r) / D!
    QPoly term(std::vector<mpq_class>{mpq_class(h) / mpq_class(fact)});
    for (int r = 0; r < D; ++r)
      term = term * QPoly(std::vector<mpq_class>{mpq_class(D - k - r), 1});
    total += term;
  }
  return total;
}

mpz_class ehrhart_evaluate(const QPoly& p, const mpz_class& m) {
  mpq_class v = p.evaluate(mpq_class(m));
  v.canonicalize();
  if (v.get_den() != 1)
    throw InternalError("counting polynomial evaluated to non-integer " + v.get_str());
  return v.get_num();
}

}  // namespace edgepoly
