#pragma once

#include "qcgl/laurent.hpp"
#include "qcgl/qmat.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace qcgl {

// Abstract syntax of algebra expressions:
//
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' ['-'] INT | '^' '(' ['-'] INT ')')?
//   atom    := INT | 'q' | 'X' | NAME | NAME '[' ... ']' | '[' I '|' J ']'
//            | '[' J ']' | '(' sum ')'
//
// `*` is the noncommutative product and keeps operand order.
struct ExprNode {
  enum class Kind { kInteger, kParameter, kTop, kGenerator, kMinor, kAdd, kSub, kMul, kDiv, kNeg, kPow };

  Kind kind;
  std::size_t position = 0;
  std::string text;                    // integer digits or generator name
  std::vector<int> rows;               // minor rows (empty: maximal minor [J])
  std::vector<int> cols;
  int exponent = 0;                    // kPow
  std::vector<std::shared_ptr<const ExprNode>> children;
};

using Expr = std::shared_ptr<const ExprNode>;

// Throws ParseError with the offending position.
Expr parse_expr(std::string_view text);

// True if the expression mentions the top variable X.
bool uses_top_variable(const Expr& e);

struct EvalContext {
  const OreAlgebraSpec* spec = nullptr;
  // Enables minor atoms `[I|J]` and `[J]`.
  const QuantumMatrix* quantum_matrix = nullptr;
  RewriteOptions rewrite;
};

// Normal form of the expression in the algebra; X is rejected.
NcPoly eval_poly(const Expr& e, const EvalContext& ctx);
// Value in the Laurent localisation at the top generator; the top generator
// may be written as X or by its name.
LaurentElem eval_laurent(const Expr& e, const LaurentRing& ring, const QuantumMatrix* quantum_matrix = nullptr);

NcPoly parse_poly(std::string_view text, const EvalContext& ctx);

}  // namespace qcgl
