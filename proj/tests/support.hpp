#pragma once

#include "qcgl/expr.hpp"
#include "qcgl/printing.hpp"
#include "qcgl/qmat.hpp"
#include "qcgl/random_elements.hpp"
#include "qcgl/rewrite.hpp"

#include <string>

namespace qcgl::testing {

inline constexpr std::uint64_t kSeed = 20070101;

inline NcPoly P(const QuantumMatrix& qm, const std::string& text) {
  return parse_poly(text, EvalContext{&qm.spec(), &qm, {}});
}

inline NcPoly P(const OreAlgebraSpec& spec, const std::string& text) {
  return parse_poly(text, EvalContext{&spec, nullptr, {}});
}

inline RatFunc R(const std::string& text) { return RatFunc::parse(text); }

}  // namespace qcgl::testing
