#pragma once

#include "qcgl/spec.hpp"

#include <map>

namespace qcgl {

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

// Which adjacent inversion x_j x_i (j > i) a single rewrite step resolves.
enum class Strategy { kLeftmost, kRightmost };

struct RewriteOptions {
  std::size_t step_budget = kDefaultStepBudget;
  Strategy strategy = Strategy::kLeftmost;
};

// Unsorted linear combination of words, the input side of the rewriter.
using WordSum = std::map<Word, RatFunc>;

// Rewrites inversions x_j x_i -> lambda(j,i) x_i x_j + delta(j,i) until every
// word is sorted. Throws ReductionBudgetExceeded after opts.step_budget
// rewrite steps.
NcPoly reduce(const OreAlgebraSpec& spec, WordSum terms, const RewriteOptions& opts = {});
NcPoly reduce_word(const OreAlgebraSpec& spec, const Word& word, const RewriteOptions& opts = {});

// Normal form of a*b.
NcPoly multiply(const OreAlgebraSpec& spec, const NcPoly& a, const NcPoly& b,
                const RewriteOptions& opts = {});
// Normal form of a_1 * a_2 * ... left to right.
NcPoly multiply_all(const OreAlgebraSpec& spec, const std::vector<NcPoly>& factors,
                    const RewriteOptions& opts = {});
NcPoly power(const OreAlgebraSpec& spec, const NcPoly& a, unsigned exponent,
             const RewriteOptions& opts = {});

}  // namespace qcgl
