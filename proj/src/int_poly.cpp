#include "qcgl/int_poly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace qcgl {

IntPoly::IntPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

IntPoly::IntPoly(const mpz_class& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly IntPoly::monomial(const mpz_class& coeff, unsigned degree) {
  IntPoly p;
  if (coeff == 0) return p;
  p.coeffs_.assign(degree + 1, mpz_class(0));
  p.coeffs_[degree] = coeff;
  return p;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool IntPoly::is_monomial() const {
  if (coeffs_.empty()) return false;
  return valuation() == coeffs_.size() - 1;
}

bool IntPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

unsigned IntPoly::valuation() const {
  for (unsigned i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return 0;
}

mpz_class IntPoly::coeff(unsigned degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : mpz_class(0);
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class c = content();
  if (leading() < 0) c = -c;
  return divided_exact(c);
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  *this = *this * other;
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  if (k > 0) {
    r.coeffs_.assign(static_cast<std::size_t>(k), mpz_class(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
  }
  const auto drop = static_cast<std::size_t>(-k);
  if (drop > valuation()) throw std::invalid_argument("IntPoly::shifted: not divisible by q^k");
  r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(drop), coeffs_.end());
  return r;
}

IntPoly IntPoly::divided_exact(const mpz_class& divisor) const {
  if (divisor == 1) return *this;
  IntPoly r = *this;
  for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
  return r;
}

IntPoly IntPoly::divided_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("IntPoly::divided_exact: zero divisor");
  if (divisor.is_constant()) return divided_exact(divisor.coeffs_[0]);
  if (is_zero()) return {};
  const int db = divisor.degree();
  std::vector<mpz_class> rem = coeffs_;
  std::vector<mpz_class> quot(coeffs_.size() - static_cast<std::size_t>(db), mpz_class(0));
  const mpz_class& lc = divisor.leading();
  for (int d = degree(); d >= db; --d) {
    mpz_class& top = rem[static_cast<std::size_t>(d)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) {
      throw std::invalid_argument("IntPoly::divided_exact: inexact division");
    }
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    const auto shift = static_cast<std::size_t>(d - db);
    quot[shift] = c;
    for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i) {
      rem[shift + i] -= c * divisor.coeffs_[i];
    }
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::invalid_argument("IntPoly::divided_exact: nonzero remainder");
  }
  return IntPoly(std::move(quot));
}

IntPoly IntPoly::pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  assert(!b.is_zero());
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> rem = a.coeffs_;
  const int db = b.degree();
  const mpz_class& lc = b.leading();
  for (int d = a.degree(); d >= db; --d) {
    mpz_class top = rem[static_cast<std::size_t>(d)];
    for (auto& c : rem) c *= lc;
    if (top == 0) continue;
    const auto shift = static_cast<std::size_t>(d - db);
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
      rem[shift + i] -= top * b.coeffs_[i];
    }
  }
  return IntPoly(std::move(rem));
}

IntPoly IntPoly::primitive_gcd(IntPoly a, IntPoly b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.is_constant()) return IntPoly(1);
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.primitive_part();
  }
  return a.primitive_part();
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (d == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

}  // namespace qcgl
