#pragma once

#include "qcgl/algebra_ops.hpp"

#include <map>
#include <string>

namespace qcgl {

// sum_k a_k X^k in the localisation of A[X; s, d] at the powers of X, where
// X is the top generator of a spec and every a_k lies in the base algebra A
// (the generators below X). Coefficients are written to the left of X.
class LaurentElem {
 public:
  using CoeffMap = std::map<int, NcPoly>;

  LaurentElem() = default;
  explicit LaurentElem(const NcPoly& a) { add_term(0, a); }
  static LaurentElem x_power(int k) { return term(k, NcPoly::constant(1)); }
  static LaurentElem term(int k, const NcPoly& a);

  void add_term(int exponent, const NcPoly& a);

  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  NcPoly coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentElem operator-() const;
  LaurentElem& operator+=(const LaurentElem& other);
  LaurentElem& operator-=(const LaurentElem& other);
  LaurentElem& operator*=(const RatFunc& s);
  friend LaurentElem operator+(LaurentElem a, const LaurentElem& b) { return a += b; }
  friend LaurentElem operator-(LaurentElem a, const LaurentElem& b) { return a -= b; }
  friend LaurentElem operator*(LaurentElem a, const RatFunc& s) { return a *= s; }
  friend bool operator==(const LaurentElem& a, const LaurentElem& b) { return a.coeffs_ == b.coeffs_; }

 private:
  CoeffMap coeffs_;
};

// Multiplication in the Laurent localisation over a fixed spec.
//
// X a = s(a) X + d(a), and X^-1 a = sum_n (-1)^n s^-1 (d s^-1)^n (a) X^(-n-1),
// which is finite because d is locally nilpotent. Products X^-1 * word are
// cached, so one LaurentRing must not be shared between threads.
class LaurentRing {
 public:
  explicit LaurentRing(const OreAlgebraSpec& spec, int nilpotence_bound = kDefaultNilpotenceBound,
                       RewriteOptions opts = {});

  const OreAlgebraSpec& spec() const { return *spec_; }
  GenIndex top() const { return top_; }
  int nilpotence_bound() const { return bound_; }
  const RewriteOptions& rewrite_options() const { return opts_; }

  LaurentElem multiply(const LaurentElem& u, const LaurentElem& v) const;
  // X^k * a for a in the base algebra.
  LaurentElem x_power_times(int k, const NcPoly& a) const;

  // An element of the full spec, read as sum_k a_k X^k.
  LaurentElem from_poly(const NcPoly& p) const;
  // Inverse of from_poly; throws std::invalid_argument on negative powers.
  NcPoly to_poly(const LaurentElem& u) const;

 private:
  LaurentElem x_inverse_times_word(const Word& w) const;

  const OreAlgebraSpec* spec_;
  GenIndex top_;
  int bound_;
  RewriteOptions opts_;
  mutable std::map<Word, LaurentElem> inverse_cache_;
};

LaurentElem laurent_mul(const OreAlgebraSpec& spec, const LaurentElem& u, const LaurentElem& v,
                        int nilpotence_bound = kDefaultNilpotenceBound);

// `x[1,1] - q*x[1,2]*x[2,1]*X^-1`, exponents descending.
std::string to_string(const OreAlgebraSpec& spec, const LaurentElem& u);

}  // namespace qcgl
