#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qcgl {

// Dense univariate polynomial in q with arbitrary-precision integer
// coefficients, stored low degree first. The zero polynomial has no
// coefficients; otherwise the leading coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit IntPoly(const mpz_class& constant);
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly monomial(const mpz_class& coeff, unsigned degree);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // A single nonzero term c*q^k.
  bool is_monomial() const;
  bool is_one() const;

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Lowest degree with a nonzero coefficient; 0 for the zero polynomial.
  unsigned valuation() const;
  const mpz_class& leading() const { return coeffs_.back(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(unsigned degree) const;

  // Nonnegative gcd of the coefficients; 0 for the zero polynomial.
  mpz_class content() const;
  IntPoly primitive_part() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const mpz_class& scalar);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Multiply by q^k (k >= 0) or divide by q^(-k) when every removed
  // coefficient is zero.
  IntPoly shifted(int k) const;
  // Exact division of every coefficient by an integer that divides them.
  IntPoly divided_exact(const mpz_class& divisor) const;
  // Exact division by a polynomial that divides this one over Z.
  IntPoly divided_exact(const IntPoly& divisor) const;

  // Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
  static IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
  // Primitive gcd with positive leading coefficient (content not included).
  static IntPoly primitive_gcd(IntPoly a, IntPoly b);

  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

}  // namespace qcgl
