#include "qcgl/error.hpp"
#include "qcgl/ratfunc.hpp"
#include "qcgl/random_elements.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace qcgl;
using qcgl::testing::R;

namespace {

RatFunc q() { return RatFunc::q(); }
RatFunc qi() { return RatFunc::q_pow(-1); }

TEST(IntPoly, NormalizesTrailingZeros) {
  IntPoly p(std::vector<mpz_class>{1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(IntPoly(std::vector<mpz_class>{0, 0}).is_zero());
  EXPECT_EQ(IntPoly().degree(), -1);
}

TEST(IntPoly, GcdOfCyclotomicProducts) {
  const IntPoly a(std::vector<mpz_class>{-1, 0, 1});  // q^2-1
  const IntPoly b(std::vector<mpz_class>{1, 1});       // q+1
  const IntPoly c(std::vector<mpz_class>{1, 0, 1});    // q^2+1
  EXPECT_EQ(IntPoly::primitive_gcd(a * c, b * c), b * c);
  EXPECT_EQ(IntPoly::primitive_gcd(a, c), IntPoly(1));
}

TEST(IntPoly, ExactDivision) {
  const IntPoly a(std::vector<mpz_class>{-1, 0, 1});
  const IntPoly b(std::vector<mpz_class>{1, 1});
  EXPECT_EQ(a.divided_exact(b), IntPoly(std::vector<mpz_class>{-1, 1}));
  EXPECT_EQ((a * mpz_class(6)).divided_exact(mpz_class(3)), a * mpz_class(2));
  EXPECT_EQ(a.shifted(3).shifted(-3), a);
}

TEST(IntPoly, Printing) {
  EXPECT_EQ(IntPoly(std::vector<mpz_class>{-1, 0, 1}).to_string(), "q^2-1");
  EXPECT_EQ(IntPoly::monomial(2, 3).to_string(), "2*q^3");
  EXPECT_EQ(IntPoly(0).to_string(), "0");
}

TEST(IntPoly, LargeCoefficientsStayExact) {
  IntPoly p(1);
  const IntPoly f(std::vector<mpz_class>{1, 1});
  for (int k = 0; k < 80; ++k) p *= f;
  EXPECT_EQ(p.coeff(40), mpz_class("107507208733336176461620"));
}

TEST(RatFunc, AdditionExamples) {
  EXPECT_TRUE((q() + (-q())).is_zero());
  EXPECT_EQ(q() + qi(), R("(q^2+1)/q"));
  EXPECT_EQ((q() - qi()) + RatFunc(), R("(q^2-1)/q"));
  EXPECT_EQ((q() + qi()).to_string(), "(q^2+1)/q");
}

TEST(RatFunc, MultiplicationExamples) {
  EXPECT_TRUE((q() * qi()).is_one());
  EXPECT_EQ(RatFunc::q_pow(-2), RatFunc(1) / (q() * q()));
  EXPECT_EQ((RatFunc(1) - RatFunc::q_pow(-2)).inverse(), R("q^2/(q^2-1)"));
}

TEST(RatFunc, CanonicalDenominatorIsPositiveAndPrimitive) {
  const RatFunc a(IntPoly(std::vector<mpz_class>{2, 2}), IntPoly(std::vector<mpz_class>{-4, 0, 4}));
  EXPECT_EQ(a, RatFunc(1) / (RatFunc(2) * q() - RatFunc(2)));
  EXPECT_GT(a.denominator().leading(), 0);
  EXPECT_EQ(IntPoly::primitive_gcd(a.numerator(), a.denominator()), IntPoly(1));
}

TEST(RatFunc, DivisionByZeroThrows) {
  EXPECT_THROW(RatFunc().inverse(), DivisionByZero);
  EXPECT_THROW(RatFunc(1) / RatFunc(), DivisionByZero);
  EXPECT_THROW(RatFunc().pow(-1), DivisionByZero);
}

TEST(RatFunc, QFactorialMatchesGeometricSums) {
  EXPECT_TRUE(q_factorial(0, q()).is_one());
  EXPECT_EQ(q_factorial(2, q()), RatFunc(1) + q());
  EXPECT_EQ(q_factorial(3, q()), (RatFunc(1) + q()) * (RatFunc(1) + q() + q() * q()));
  // [n]_p (1 - p) = 1 - p^n for any base.
  const RatFunc p = RatFunc::q_pow(-2);
  for (unsigned n = 1; n <= 6; ++n) {
    EXPECT_EQ(q_integer(n, p) * (RatFunc(1) - p), RatFunc(1) - p.pow(static_cast<int>(n)));
  }
}

TEST(RatFunc, RootsOfUnity) {
  EXPECT_TRUE(is_root_of_unity(RatFunc(-1)));
  EXPECT_TRUE(is_root_of_unity(RatFunc(1)));
  EXPECT_FALSE(is_root_of_unity(q()));
  EXPECT_FALSE(is_root_of_unity(RatFunc::q_pow(-2)));
  EXPECT_FALSE(is_root_of_unity(RatFunc(2)));
  EXPECT_FALSE(is_root_of_unity(RatFunc(1) + q()));
}

TEST(RatFunc, SignedPowers) {
  EXPECT_EQ(RatFunc::q_pow(-3).as_q_power(), -3);
  EXPECT_EQ((-q()).as_signed_q_power(), std::make_pair(-1, 1));
  EXPECT_FALSE((RatFunc(1) + q()).as_q_power());
  EXPECT_FALSE(RatFunc(2).as_signed_q_power());
}

TEST(RatFunc, ParsePrintRoundTrip) {
  for (const char* text : {"q", "q^-1", "(q^2-1)/q", "-2*q^3", "1/(q^2-1)", "0", "-1", "(q^4-1)/q^3"}) {
    EXPECT_EQ(R(text).to_string(), text);
  }
}

TEST(RatFuncProperty, FieldAxioms) {
  Rng rng(qcgl::testing::kSeed);
  for (int k = 0; k < 300; ++k) {
    const RatFunc a = random_scalar(rng);
    const RatFunc b = random_scalar(rng);
    const RatFunc c = random_scalar(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) {
      EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(RatFuncProperty, NormalizationIsIdempotent) {
  Rng rng(qcgl::testing::kSeed + 1);
  for (int k = 0; k < 200; ++k) {
    const RatFunc a = random_scalar(rng) / (random_scalar(rng) + RatFunc(3));
    const RatFunc again(a.numerator(), a.denominator());
    EXPECT_EQ(again.numerator(), a.numerator());
    EXPECT_EQ(again.denominator(), a.denominator());
    EXPECT_EQ(RatFunc::parse(a.to_string()), a);
  }
}

TEST(RatFuncProperty, PowersOfQAdd) {
  Rng rng(qcgl::testing::kSeed + 2);
  std::uniform_int_distribution<int> exponent(-20, 20);
  for (int k = 0; k < 200; ++k) {
    const int s = exponent(rng);
    const int t = exponent(rng);
    EXPECT_EQ(RatFunc::q_pow(s) * RatFunc::q_pow(t), RatFunc::q_pow(s + t));
    EXPECT_EQ(RatFunc::q().pow(s), RatFunc::q_pow(s));
  }
}

}  // namespace
