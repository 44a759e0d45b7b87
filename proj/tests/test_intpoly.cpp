#include <random>
#include <vector>

#include "doctest.h"
#include "edgepoly/errors.hpp"
#include "edgepoly/intpoly.hpp"

using namespace edgepoly;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-5, 5);
  std::vector<mpz_class> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPoly(std::move(c));
}

}  // namespace

TEST_SUITE_BEGIN("intpoly");

TEST_CASE("construction trims and classifies") {
  CHECK(IntPoly().is_zero());
  CHECK(IntPoly({0, 0, 0}).is_zero());
  CHECK(IntPoly().degree() == -1);
  CHECK(IntPoly({3, 0, 0}).degree() == 0);
  CHECK(IntPoly::constant(0).is_zero());
  CHECK(IntPoly::constant(7).coeff(0) == 7);
  CHECK(IntPoly::monomial(3).degree() == 3);
  CHECK(IntPoly::monomial(3, -2).coeff(3) == -2);
  CHECK(IntPoly::monomial(3).coeff(1) == 0);
  CHECK(IntPoly::monomial(0) == IntPoly::constant(1));
  CHECK(IntPoly({1, 2}).coeff(9) == 0);  // reads past the end are zero
}

TEST_CASE("sigma and one_minus_t") {
  CHECK(IntPoly::sigma(1) == IntPoly::constant(1));
  CHECK(IntPoly::sigma(3) == IntPoly({1, 1, 1}));
  CHECK(IntPoly::one_minus_t() == IntPoly({1, -1}));
  // sigma(d) * (1 - t) telescopes to 1 - t^d
  for (int d = 1; d <= 6; ++d) {
    IntPoly expect = IntPoly::constant(1) - IntPoly::monomial(d);
    CHECK(IntPoly::sigma(d) * IntPoly::one_minus_t() == expect);
  }
  CHECK_THROWS_AS(IntPoly::sigma(0), InternalError);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == IntPoly());
    CHECK(a + IntPoly() == a);
    CHECK(a * IntPoly::constant(1) == a);
    CHECK((a * IntPoly()).is_zero());
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    mpz_class two(2);
    CHECK((a * b).evaluate(two) == a.evaluate(two) * b.evaluate(two));
    CHECK((a + b).evaluate(two) == a.evaluate(two) + b.evaluate(two));
  }
}

TEST_CASE("exact division") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly a = random_poly(rng, 5), b = random_poly(rng, 5);
    if (b.is_zero()) continue;
    IntPoly prod = a * b;
    CHECK(prod.divisible_by(b));
    CHECK(prod.divide_exact(b) == a);
  }
  IntPoly p({1, 1});   // 1 + t
  IntPoly q({1, -1});  // 1 - t
  CHECK_FALSE(p.divisible_by(q));
  CHECK_THROWS_AS(p.divide_exact(q), InternalError);
  // non-monic divisor with integer quotient
  CHECK(IntPoly({0, 2, 2}).divide_exact(IntPoly({2})) == IntPoly({0, 1, 1}));
  // ... and one where the quotient would be fractional
  CHECK_FALSE(IntPoly({1, 1}).divisible_by(IntPoly({2})));
}

TEST_CASE("evaluation over Z and Q") {
  IntPoly p({1, -3, 0, 2});  // 1 - 3t + 2t^3
  CHECK(p.evaluate(mpz_class(0)) == 1);
  CHECK(p.evaluate(mpz_class(2)) == 1 - 6 + 16);
  CHECK(p.evaluate(mpz_class(-1)) == 1 + 3 - 2);
  CHECK(p.evaluate(mpq_class(1, 2)) == mpq_class(-1, 4));
  CHECK(IntPoly().evaluate(mpz_class(5)) == 0);
}

TEST_CASE("printing") {
  CHECK(IntPoly().str() == "0");
  CHECK(IntPoly::constant(-3).str() == "-3");
  CHECK(IntPoly({1, 1, 1, 2}).str() == "1 + t + t^2 + 2*t^3");
  CHECK(IntPoly({1, -1}).str() == "1 - t");
  CHECK(IntPoly({0, 0, -1}).str() == "-t^2");
  CHECK(IntPoly({1, 0, 3}).str() == "1 + 3*t^2");
  CHECK(IntPoly({2, -5, 1}).str("x") == "2 - 5*x + x^2");
}

TEST_CASE("rational polynomials") {
  QPoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  QPoly p({mpq_class(1), mpq_class(157, 60), mpq_class(1, 2)});
  CHECK(p.coeff(1) == mpq_class(157, 60));
  CHECK(p.coeff(10) == 0);
  CHECK(p.evaluate(2) == mpq_class(1) + mpq_class(157, 30) + mpq_class(2));
  QPoly q({mpq_class(0), mpq_class(-1, 3)});
  CHECK((p + q).coeff(1) == mpq_class(157, 60) - mpq_class(1, 3));
  CHECK((p * q).degree() == 3);
  CHECK((p * q).coeff(3) == mpq_class(-1, 6));
  CHECK(QPoly({mpq_class(1), mpq_class(0, 5)}).degree() == 0);  // trims 0/5
  CHECK(QPoly({mpq_class(1, 2), mpq_class(-2, 3)}).str() == "(1/2) - (2/3)*m");
  CHECK(QPoly({mpq_class(0), mpq_class(1)}).str("x") == "x");
  CHECK(zero.str() == "0");
}

TEST_SUITE_END();
