#include "edgepoly/intpoly.hpp"

#include <sstream>

#include "edgepoly/errors.hpp"

namespace edgepoly {

namespace {
const mpz_class kZeroZ = 0;
const mpq_class kZeroQ = 0;

// Shared ascending-degree formatter; coefficients render via `show`.
template <typename Coeff, typename Show>
std::string render(const std::vector<Coeff>& c, const std::string& var, Show show) {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    bool neg = c[k] < 0;
    Coeff mag = neg ? Coeff(-c[k]) : c[k];
    if (first) {
      if (neg) out << '-';
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (k == 0) {
      out << show(mag);
    } else {
      if (mag != 1) out << show(mag) << '*';
      out << var;
      if (k > 1) out << '^' << k;
    }
  }
  return first ? "0" : out.str();
}
}  // namespace

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(mpz_class v) {
  IntPoly p;
  if (v != 0) p.c_.push_back(std::move(v));
  return p;
}

IntPoly IntPoly::monomial(int degree, mpz_class coeff) {
  IntPoly p;
  if (coeff != 0) {
    p.c_.assign(degree + 1, 0);
    p.c_[degree] = std::move(coeff);
  }
  return p;
}

IntPoly IntPoly::sigma(int d) {
  if (d < 1) throw InternalError("sigma of nonpositive degree");
  IntPoly p;
  p.c_.assign(d, 1);
  return p;
}

IntPoly IntPoly::one_minus_t() {
  IntPoly p;
  p.c_ = {1, -1};
  return p;
}

const mpz_class& IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZeroZ;
  return c_[k];
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPoly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPoly out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  out.trim();
  return out;
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw InternalError("division by zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw InternalError("inexact polynomial division");
  std::vector<mpz_class> rem = c_;
  std::vector<mpz_class> quot(c_.size() - divisor.c_.size() + 1, 0);
  const mpz_class& lead = divisor.c_.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(),
                rem[k + divisor.degree()].get_mpz_t(), lead.get_mpz_t());
    if (r != 0) throw InternalError("inexact polynomial division");
    quot[k] = q;
    if (q != 0)
      for (std::size_t i = 0; i < divisor.c_.size(); ++i)
        rem[k + i] -= q * divisor.c_[i];
  }
  for (const auto& r : rem)
    if (r != 0) throw InternalError("inexact polynomial division");
  return IntPoly(std::move(quot));
}

bool IntPoly::divisible_by(const IntPoly& divisor) const {
  try {
    divide_exact(divisor);
    return true;
  } catch (const InternalError&) {
    return false;
  }
}

std::string IntPoly::str(const std::string& var) const {
  return render(c_, var, [](const mpz_class& v) { return v.get_str(); });
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZeroQ;
  return c_[k];
}

mpq_class QPoly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  QPoly out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  out.trim();
  return out;
}

std::string QPoly::str(const std::string& var) const {
  return render(c_, var, [](const mpq_class& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return "(" + v.get_num().get_str() + "/" + v.get_den().get_str() + ")";
  });
}

}  // namespace edgepoly
