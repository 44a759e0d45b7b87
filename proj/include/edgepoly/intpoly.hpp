#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace edgepoly {

// Dense polynomial in one variable over Z, no trailing zero coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly constant(mpz_class v);
  static IntPoly monomial(int degree, mpz_class coeff = 1);
  // 1 + t + ... + t^(d-1), the cyclotomic-free factor of 1 - t^d
  static IntPoly sigma(int d);
  static IntPoly one_minus_t();

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& coeff(int k) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  mpz_class evaluate(const mpz_class& x) const;
  mpq_class evaluate(const mpq_class& x) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  // Quotient when the division is exact; throws InternalError otherwise.
  IntPoly divide_exact(const IntPoly& divisor) const;
  bool divisible_by(const IntPoly& divisor) const;

  // Ascending-degree rendering with `var` as the variable name.
  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Dense polynomial over Q, used for the counting polynomial in the dilation
// variable.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpq_class& coeff(int k) const;
  const std::vector<mpq_class>& coeffs() const { return c_; }

  mpq_class evaluate(const mpq_class& x) const;

  QPoly& operator+=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "m") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

}  // namespace edgepoly
