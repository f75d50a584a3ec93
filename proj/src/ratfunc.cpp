#include "qcgl/ratfunc.hpp"

#include "qcgl/error.hpp"

#include <cctype>

namespace qcgl {

RatFunc::RatFunc(IntPoly numerator) : num_(std::move(numerator)), den_(1) {
  normalize();
}

RatFunc::RatFunc(IntPoly numerator, IntPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

RatFunc RatFunc::q_pow(int s) {
  if (s >= 0) return RatFunc(IntPoly::monomial(1, static_cast<unsigned>(s)), IntPoly(1), Raw{});
  return RatFunc(IntPoly(1), IntPoly::monomial(1, static_cast<unsigned>(-s)), Raw{});
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  if (den_.is_constant()) {
    // nothing to cancel but integer content
  } else if (den_.is_monomial()) {
    const unsigned common = std::min(num_.valuation(), den_.valuation());
    if (common > 0) {
      num_ = num_.shifted(-static_cast<int>(common));
      den_ = den_.shifted(-static_cast<int>(common));
    }
  } else if (num_.is_monomial() && num_.valuation() == 0) {
    // constant numerator: only content cancels
  } else {
    IntPoly g = IntPoly::primitive_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divided_exact(g);
      den_ = den_.divided_exact(g);
    }
  }
  mpz_class c = gcd(num_.content(), den_.content());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    num_ = num_.divided_exact(c);
    den_ = den_.divided_exact(c);
  }
}

std::optional<int> RatFunc::as_q_power() const {
  auto sp = as_signed_q_power();
  if (!sp || sp->first != 1) return std::nullopt;
  return sp->second;
}

std::optional<std::pair<int, int>> RatFunc::as_signed_q_power() const {
  if (!num_.is_monomial() || !den_.is_monomial()) return std::nullopt;
  if (den_.leading() != 1 || abs(num_.leading()) != 1) return std::nullopt;
  const int sign = num_.leading() > 0 ? 1 : -1;
  return std::pair{sign, num_.degree() - den_.degree()};
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  RatFunc r(den_, num_, Raw{});
  if (r.den_.leading() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatFunc RatFunc::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  RatFunc result(1);
  RatFunc base = *this;
  auto e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Raw{}); }

RatFunc& RatFunc::operator+=(const RatFunc& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& other) { return *this += -other; }

RatFunc& RatFunc::operator*=(const RatFunc& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = RatFunc();
  if (other.den_.is_one() && other.num_.is_one()) return *this;
  num_ *= other.num_;
  den_ *= other.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& other) { return *this *= other.inverse(); }

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  if (num_.is_monomial() && den_.is_monomial() && den_.leading() == 1) {
    const int exponent = num_.degree() - den_.degree();
    const mpz_class& c = num_.leading();
    std::string out;
    if (c == -1) {
      out = "-";
    } else if (c != 1) {
      out = c.get_str() + "*";
    }
    out += "q";
    if (exponent != 1) out += "^" + std::to_string(exponent);
    return out;
  }
  const bool num_single = num_.coeffs().size() - num_.valuation() == 1;
  std::string out = num_single ? num_.to_string() : "(" + num_.to_string() + ")";
  const bool den_bare = (den_.is_monomial() && den_.leading() == 1) || den_.is_constant();
  out += "/";
  out += den_bare ? den_.to_string() : "(" + den_.to_string() + ")";
  return out;
}

namespace {

// Recursive-descent reader for integer polynomial fractions in `q`.
class ScalarReader {
 public:
  explicit ScalarReader(std::string_view text) : text_(text) {}

  RatFunc read() {
    RatFunc value = sum();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected character in scalar", pos_);
    return value;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc sum() {
    RatFunc value = product();
    for (;;) {
      if (accept('+')) {
        value += product();
      } else if (accept('-')) {
        value -= product();
      } else {
        return value;
      }
    }
  }

  RatFunc product() {
    RatFunc value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        value /= unary();
      } else {
        return value;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!accept('^')) return base;
    bool negative = false;
    if (accept('-')) negative = true;
    else if (accept('(')) {
      negative = accept('-');
      const long e = integer();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return base.pow(static_cast<int>(negative ? -e : e));
    }
    const long e = integer();
    return base.pow(static_cast<int>(negative ? -e : e));
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  RatFunc atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of scalar", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc inner = sum();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (c == 'q') {
      ++pos_;
      return RatFunc::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RatFunc(IntPoly(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    throw ParseError(std::string("unexpected '") + c + "' in scalar", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc RatFunc::parse(std::string_view text) { return ScalarReader(text).read(); }

RatFunc q_integer(unsigned i, const RatFunc& base) {
  RatFunc sum;
  RatFunc term(1);
  for (unsigned k = 0; k < i; ++k) {
    sum += term;
    term *= base;
  }
  return sum;
}

RatFunc q_factorial(unsigned n, const RatFunc& base) {
  RatFunc result(1);
  for (unsigned i = 2; i <= n; ++i) result *= q_integer(i, base);
  return result;
}

bool is_root_of_unity(const RatFunc& a) {
  return a == RatFunc(1) || a == RatFunc(-1);
}

}  // namespace qcgl
