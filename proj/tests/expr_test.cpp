#include "qcgl/error.hpp"
#include "qcgl/expr.hpp"
#include "qcgl/laurent.hpp"
#include "qcgl/presets.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace qcgl;
using qcgl::testing::kSeed;
using qcgl::testing::P;

namespace {

const QuantumMatrix& m22() {
  static const QuantumMatrix qm(2, 2);
  return qm;
}

std::size_t error_position(const std::string& text) {
  try {
    P(m22(), text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no error for " << text;
  return 0;
}

TEST(Expr, Examples) {
  const auto& qm = m22();
  EXPECT_EQ(P(qm, "x[1,1]*x[2,2] - q*x[1,2]*x[2,1]"), quantum_determinant(qm));
  EXPECT_EQ(to_string(qm.spec(), P(qm, "x[2,2]*x[1,1]")), "x[1,1]*x[2,2] - (q^2-1)/q*x[1,2]*x[2,1]");
  EXPECT_EQ(P(qm, "(x[1,2])^0"), NcPoly::constant(1));
}

TEST(Expr, Precedence) {
  const auto& qm = m22();
  EXPECT_EQ(P(qm, "x[1,1] + x[1,2]*x[2,1]^2"),
            qm.x(1, 1) + multiply(qm.spec(), qm.x(1, 2), power(qm.spec(), qm.x(2, 1), 2)));
  EXPECT_EQ(P(qm, "-x[1,1]^2"), -power(qm.spec(), qm.x(1, 1), 2));
  EXPECT_EQ(P(qm, "2*q^-1*x[1,1]"), qm.x(1, 1) * (RatFunc(2) * RatFunc::q_pow(-1)));
  EXPECT_EQ(P(qm, "x[1,1]/(q-1)"), qm.x(1, 1) * (RatFunc::q() - RatFunc(1)).inverse());
  EXPECT_EQ(P(qm, "x[1,2]*x[1,1]"), multiply(qm.spec(), qm.x(1, 2), qm.x(1, 1)));
  EXPECT_EQ(P(qm, "g_1*g_4"), multiply(qm.spec(), qm.x(1, 1), qm.x(2, 2)));
  EXPECT_EQ(P(qm, "[1,2|1,2] - [1|1]*[2|2]"), P(qm, "-q*x[1,2]*x[2,1]"));
}

TEST(Expr, Errors) {
  EXPECT_EQ(error_position("x[1,1] +"), 8u);
  EXPECT_EQ(error_position("x[1,1] + y"), 9u);
  EXPECT_EQ(error_position("x[3,1]"), 0u);
  EXPECT_THROW(P(m22(), "x[1,1]/x[1,2]"), ParseError);
  EXPECT_THROW(P(m22(), "x[1,1]/0"), ParseError);
  EXPECT_THROW(P(m22(), "x[1,1]^-1"), ParseError);
  EXPECT_THROW(P(m22(), "X"), ParseError);
  EXPECT_THROW(P(m22(), "(x[1,1]"), ParseError);
  EXPECT_THROW(P(load_preset("uq-sl3-plus"), "[1|1]"), ParseError);
}

TEST(Expr, TopVariable) {
  const auto& qm = m22();
  const LaurentRing ring(qm.spec());
  EXPECT_TRUE(uses_top_variable(parse_expr("x[1,1]*X^-1")));
  EXPECT_FALSE(uses_top_variable(parse_expr("x[1,1]*x[2,2]")));
  EXPECT_EQ(eval_laurent(parse_expr("X*X^-1"), ring), LaurentElem::x_power(0));
  EXPECT_EQ(eval_laurent(parse_expr("X^-1*x[1,2]"), ring), LaurentElem::term(-1, qm.x(1, 2) * RatFunc::q()));
  EXPECT_EQ(eval_laurent(parse_expr("x[2,2]"), ring), LaurentElem::x_power(1));
  EXPECT_EQ(eval_laurent(parse_expr("[1,2|1,2]"), ring, &qm), ring.from_poly(quantum_determinant(qm)));
  EXPECT_THROW(eval_laurent(parse_expr("(X+x[1,1])^-1"), ring), ParseError);
}

TEST(ExprProperty, ParsePrintIdentity) {
  Rng rng(kSeed + 50);
  for (const auto& spec : {oqm(2, 2), oqm(2, 3), quantum_affine_plane(), load_preset("uq-sl3-plus")}) {
    for (int k = 0; k < 100; ++k) {
      const NcPoly a = random_element(rng, static_cast<GenIndex>(spec.size()), 3, 4);
      const std::string text = to_string(spec, a);
      ASSERT_EQ(P(spec, text), a) << text;
      ASSERT_EQ(to_string(spec, P(spec, text)), text);
    }
  }
}

TEST(ExprProperty, LaurentParsePrintIdentity) {
  Rng rng(kSeed + 51);
  const auto& qm = m22();
  const LaurentRing ring(qm.spec());
  std::uniform_int_distribution<int> exponent(-3, 3);
  for (int k = 0; k < 50; ++k) {
    LaurentElem a;
    for (int t = 0; t < 3; ++t) a += LaurentElem::term(exponent(rng), random_element(rng, 3, 2, 2));
    const std::string text = to_string(qm.spec(), a);
    ASSERT_EQ(eval_laurent(parse_expr(text), ring), a) << text;
  }
}

}  // namespace
