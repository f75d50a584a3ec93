#include "qcgl/printing.hpp"

namespace qcgl {

std::string word_to_string(const OreAlgebraSpec& spec, const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += "*";
    out += spec.names.at(w[k]);
  }
  return out;
}

namespace {

std::string coefficient_factor(const RatFunc& magnitude) {
  std::string s = magnitude.to_string();
  // A bare multi-term polynomial needs grouping before `*`.
  if (magnitude.denominator().is_one()) {
    const auto& num = magnitude.numerator();
    if (num.coeffs().size() - num.valuation() > 1) {
      std::size_t nonzero = 0;
      for (const auto& c : num.coeffs()) nonzero += c != 0 ? 1 : 0;
      if (nonzero > 1) s = "(" + s + ")";
    }
  }
  return s;
}

}  // namespace

std::string join_terms(const std::vector<std::pair<RatFunc, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [coeff, body] : terms) {
    const bool negative = coeff.is_negative();
    const RatFunc magnitude = negative ? -coeff : coeff;
    std::string piece;
    if (body.empty()) {
      piece = coefficient_factor(magnitude);
    } else if (magnitude.is_one()) {
      piece = body;
    } else {
      piece = coefficient_factor(magnitude) + "*" + body;
    }
    if (first) {
      out = negative ? "-" + piece : piece;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += piece;
    }
  }
  return out;
}

std::string to_string(const OreAlgebraSpec& spec, const NcPoly& a) {
  std::vector<std::pair<RatFunc, std::string>> terms;
  for (const auto& [w, c] : a.terms()) terms.emplace_back(c, word_to_string(spec, w));
  return join_terms(terms);
}

std::string weight_to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(w[k]);
  }
  return out + ")";
}

}  // namespace qcgl
