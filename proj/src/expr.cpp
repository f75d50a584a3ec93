#include "qcgl/expr.hpp"

#include "qcgl/error.hpp"

#include <cctype>

namespace qcgl {

namespace {

using Kind = ExprNode::Kind;

Expr make(Kind kind, std::size_t pos, std::vector<Expr> children = {}) {
  auto node = std::make_shared<ExprNode>();
  node->kind = kind;
  node->position = pos;
  node->children = std::move(children);
  return node;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = sum();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 9) throw ParseError("integer too large", start);
    return std::stoi(digits);
  }

  Expr sum() {
    Expr left = product();
    for (;;) {
      const std::size_t at = pos_;
      if (accept('+')) {
        left = make(Kind::kAdd, at, {left, product()});
      } else if (accept('-')) {
        left = make(Kind::kSub, at, {left, product()});
      } else {
        return left;
      }
    }
  }

  Expr product() {
    Expr left = unary();
    for (;;) {
      const std::size_t at = pos_;
      if (accept('*')) {
        left = make(Kind::kMul, at, {left, unary()});
      } else if (accept('/')) {
        left = make(Kind::kDiv, at, {left, unary()});
      } else {
        return left;
      }
    }
  }

  Expr unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) return make(Kind::kNeg, at, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = atom();
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    int sign = 1;
    int e = 0;
    if (accept('(')) {
      if (accept('-')) sign = -1;
      e = integer();
      expect(')');
    } else {
      if (accept('-')) sign = -1;
      e = integer();
    }
    auto node = std::make_shared<ExprNode>();
    node->kind = Kind::kPow;
    node->position = at;
    node->exponent = sign * e;
    node->children = {base};
    return node;
  }

  std::vector<int> index_list() {
    std::vector<int> out{integer()};
    while (accept(',')) out.push_back(integer());
    return out;
  }

  Expr atom() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = sum();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      auto node = std::make_shared<ExprNode>();
      node->kind = Kind::kMinor;
      node->position = at;
      std::vector<int> first = index_list();
      if (accept('|')) {
        node->rows = std::move(first);
        node->cols = index_list();
      } else {
        node->cols = std::move(first);
      }
      expect(']');
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto node = std::make_shared<ExprNode>();
      node->kind = Kind::kInteger;
      node->position = at;
      node->text = std::string(text_.substr(at, pos_ - at));
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(at, pos_ - at));
      if (pos_ < text_.size() && text_[pos_] == '[') {
        const auto close = text_.find(']', pos_);
        if (close == std::string_view::npos) throw ParseError("unterminated '['", pos_);
        for (std::size_t k = pos_; k <= close; ++k) {
          if (!std::isspace(static_cast<unsigned char>(text_[k]))) name += text_[k];
        }
        pos_ = close + 1;
      }
      if (name == "q") return make(Kind::kParameter, at);
      if (name == "X") return make(Kind::kTop, at);
      auto node = std::make_shared<ExprNode>();
      node->kind = Kind::kGenerator;
      node->position = at;
      node->text = std::move(name);
      return node;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

NcPoly minor_value(const ExprNode& node, const QuantumMatrix* qm) {
  if (qm == nullptr) throw ParseError("minor atoms need a quantum matrix algebra", node.position);
  MinorIndex idx;
  idx.cols = node.cols;
  if (node.rows.empty()) {
    if (static_cast<int>(node.cols.size()) != qm->rows()) {
      throw ParseError("maximal minor [J] needs |J| = m", node.position);
    }
    for (int i = 1; i <= qm->rows(); ++i) idx.rows.push_back(i);
  } else {
    idx.rows = node.rows;
  }
  try {
    return quantum_minor(*qm, idx);
  } catch (const std::exception& e) {
    throw ParseError(e.what(), node.position);
  }
}

bool same_algebra(const OreAlgebraSpec& a, const OreAlgebraSpec& b) { return &a == &b || a == b; }

GenIndex lookup(const OreAlgebraSpec& spec, const ExprNode& node) {
  auto g = spec.find(node.text);
  if (!g) throw ParseError("unknown generator '" + node.text + "'", node.position);
  return *g;
}

struct PolyOps {
  using Value = NcPoly;
  const EvalContext& ctx;

  Value scalar(const RatFunc& c) const { return NcPoly::constant(c); }
  Value generator(const ExprNode& node) const { return NcPoly::generator(lookup(*ctx.spec, node)); }
  Value top(const ExprNode& node) const {
    throw ParseError("X is only available in Laurent expressions", node.position);
  }
  Value minor(const ExprNode& node) const {
    if (ctx.quantum_matrix == nullptr || !same_algebra(ctx.quantum_matrix->spec(), *ctx.spec)) {
      throw ParseError("minor atoms need a quantum matrix algebra", node.position);
    }
    return minor_value(node, ctx.quantum_matrix);
  }
  Value mul(const Value& a, const Value& b) const { return multiply(*ctx.spec, a, b, ctx.rewrite); }
  static std::optional<RatFunc> as_scalar(const Value& v) {
    if (!v.is_constant()) return std::nullopt;
    return v.constant_term();
  }
  Value negative_power(const Value&, int, const ExprNode& node) const {
    throw ParseError("negative powers are only defined for scalars and X", node.position);
  }
};

struct LaurentOps {
  using Value = LaurentElem;
  const LaurentRing& ring;
  const QuantumMatrix* qm;

  Value scalar(const RatFunc& c) const { return LaurentElem(NcPoly::constant(c)); }
  Value generator(const ExprNode& node) const {
    const GenIndex g = lookup(ring.spec(), node);
    if (g == ring.top()) return LaurentElem::x_power(1);
    return LaurentElem(NcPoly::generator(g));
  }
  Value top(const ExprNode&) const { return LaurentElem::x_power(1); }
  Value minor(const ExprNode& node) const {
    if (qm == nullptr || !same_algebra(qm->spec(), ring.spec())) {
      throw ParseError("minor atoms need a quantum matrix algebra", node.position);
    }
    return ring.from_poly(minor_value(node, qm));
  }
  Value mul(const Value& a, const Value& b) const { return ring.multiply(a, b); }
  static std::optional<RatFunc> as_scalar(const Value& v) {
    if (v.is_zero()) return RatFunc();
    if (v.coeffs().size() != 1 || v.min_exponent() != 0) return std::nullopt;
    const NcPoly& c = v.coeffs().begin()->second;
    if (!c.is_constant()) return std::nullopt;
    return c.constant_term();
  }
  Value negative_power(const Value& base, int e, const ExprNode& node) const {
    if (base.coeffs().size() == 1) {
      const auto& [k, c] = *base.coeffs().begin();
      if (c == NcPoly::constant(1)) return LaurentElem::x_power(k * e);
    }
    throw ParseError("negative powers are only defined for scalars and powers of X", node.position);
  }
};

template <class Ops>
typename Ops::Value evaluate(const ExprNode& node, const Ops& ops) {
  using Value = typename Ops::Value;
  switch (node.kind) {
    case Kind::kInteger:
      return ops.scalar(RatFunc(IntPoly(mpz_class(node.text))));
    case Kind::kParameter:
      return ops.scalar(RatFunc::q());
    case Kind::kTop:
      return ops.top(node);
    case Kind::kGenerator:
      return ops.generator(node);
    case Kind::kMinor:
      return ops.minor(node);
    case Kind::kNeg:
      return evaluate(*node.children[0], ops) * RatFunc(-1);
    case Kind::kAdd:
      return evaluate(*node.children[0], ops) + evaluate(*node.children[1], ops);
    case Kind::kSub:
      return evaluate(*node.children[0], ops) - evaluate(*node.children[1], ops);
    case Kind::kMul: {
      Value a = evaluate(*node.children[0], ops);
      Value b = evaluate(*node.children[1], ops);
      if (auto s = Ops::as_scalar(a)) return b * *s;
      if (auto s = Ops::as_scalar(b)) return a * *s;
      return ops.mul(a, b);
    }
    case Kind::kDiv: {
      Value a = evaluate(*node.children[0], ops);
      Value b = evaluate(*node.children[1], ops);
      auto s = Ops::as_scalar(b);
      if (!s) throw ParseError("can only divide by a scalar", node.position);
      if (s->is_zero()) throw ParseError("division by zero", node.position);
      return a * s->inverse();
    }
    case Kind::kPow: {
      Value base = evaluate(*node.children[0], ops);
      if (auto s = Ops::as_scalar(base)) {
        if (s->is_zero() && node.exponent < 0) throw ParseError("division by zero", node.position);
        return ops.scalar(s->pow(node.exponent));
      }
      if (node.exponent < 0) return ops.negative_power(base, node.exponent, node);
      Value acc = ops.scalar(RatFunc(1));
      for (int k = 0; k < node.exponent; ++k) acc = ops.mul(acc, base);
      return acc;
    }
  }
  throw ParseError("unsupported expression", node.position);
}

bool mentions_top(const ExprNode& node) {
  if (node.kind == Kind::kTop) return true;
  for (const auto& c : node.children) {
    if (mentions_top(*c)) return true;
  }
  return false;
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

bool uses_top_variable(const Expr& e) { return mentions_top(*e); }

NcPoly eval_poly(const Expr& e, const EvalContext& ctx) {
  if (ctx.spec == nullptr) throw std::invalid_argument("eval_poly: no algebra selected");
  return evaluate(*e, PolyOps{ctx});
}

LaurentElem eval_laurent(const Expr& e, const LaurentRing& ring, const QuantumMatrix* quantum_matrix) {
  return evaluate(*e, LaurentOps{ring, quantum_matrix});
}

NcPoly parse_poly(std::string_view text, const EvalContext& ctx) { return eval_poly(parse_expr(text), ctx); }

}  // namespace qcgl
