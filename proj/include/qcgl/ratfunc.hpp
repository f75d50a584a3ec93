#pragma once

#include "qcgl/int_poly.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace qcgl {

// An exact element of the field Q(q).
//
// Canonical form: numerator and denominator are coprime in Q[q], their
// integer contents share no common factor, and the denominator has a
// positive leading coefficient. Zero is 0/1. Two values are equal iff their
// canonical forms are identical.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc(IntPoly numerator);
  RatFunc(IntPoly numerator, IntPoly denominator);

  static RatFunc q() { return q_pow(1); }
  // q^s for any integer s.
  static RatFunc q_pow(int s);
  static RatFunc parse(std::string_view text);

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  // Leading coefficient of the numerator is negative.
  bool is_negative() const { return !num_.is_zero() && num_.leading() < 0; }

  // Some s with *this == q^s.
  std::optional<int> as_q_power() const;
  // (sign, s) with *this == sign * q^s, sign in {+1, -1}.
  std::optional<std::pair<int, int>> as_signed_q_power() const;

  RatFunc inverse() const;
  RatFunc pow(int exponent) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& other);
  RatFunc& operator-=(const RatFunc& other);
  RatFunc& operator*=(const RatFunc& other);
  RatFunc& operator/=(const RatFunc& other);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // `q`, `q^-1`, `(q^2-1)/q`, `-2*q^3`.
  std::string to_string() const;

 private:
  struct Raw {};
  RatFunc(IntPoly numerator, IntPoly denominator, Raw)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}
  void normalize();

  IntPoly num_;
  IntPoly den_;
};

// Gaussian factorial [n]!_base = prod_{i=1..n} (1 + base + ... + base^(i-1)).
RatFunc q_factorial(unsigned n, const RatFunc& base);
// q-integer [i]_base = 1 + base + ... + base^(i-1).
RatFunc q_integer(unsigned i, const RatFunc& base);

// The only roots of unity in Q(q) are 1 and -1.
bool is_root_of_unity(const RatFunc& a);

}  // namespace qcgl
