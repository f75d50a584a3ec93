#pragma once

#include "qcgl/spec.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qcgl {

// `x[1,2]*x[2,1]`; the empty word prints as the empty string.
std::string word_to_string(const OreAlgebraSpec& spec, const Word& w);

// Joins (coefficient, body) pairs as `a*b - q*c + (q^2-1)/q*d`.
std::string join_terms(const std::vector<std::pair<RatFunc, std::string>>& terms);

// Terms in (degree, lexicographic) order with canonical coefficients.
std::string to_string(const OreAlgebraSpec& spec, const NcPoly& a);

std::string weight_to_string(const Weight& w);

}  // namespace qcgl
