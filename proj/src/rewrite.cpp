#include "qcgl/rewrite.hpp"

#include "qcgl/error.hpp"

namespace qcgl {

namespace {

void accumulate(WordSum& sum, Word word, const RatFunc& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = sum.try_emplace(std::move(word), coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) sum.erase(it);
}

// Position p with w[p] > w[p+1], chosen by strategy; w.size() if sorted.
std::size_t find_inversion(const Word& w, Strategy strategy) {
  if (w.size() < 2) return w.size();
  if (strategy == Strategy::kLeftmost) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] > w[p + 1]) return p;
    }
  } else {
    for (std::size_t p = w.size() - 1; p-- > 0;) {
      if (w[p] > w[p + 1]) return p;
    }
  }
  return w.size();
}

}  // namespace

NcPoly reduce(const OreAlgebraSpec& spec, WordSum pending, const RewriteOptions& opts) {
  // Every rewrite of a well-formed spec produces lexicographically smaller
  // words, so popping the largest word first means each word is expanded
  // once, after all of its contributions have been collected.
  NcPoly result;
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const Word& w = node.key();
    const RatFunc& c = node.mapped();
    const std::size_t p = find_inversion(w, opts.strategy);
    if (p == w.size()) {
      result.add_term(w, c);
      continue;
    }
    if (++steps > opts.step_budget) {
      throw ReductionBudgetExceeded("rewriting exceeded the step budget of " +
                                    std::to_string(opts.step_budget));
    }
    const GenIndex j = w[p];
    const GenIndex i = w[p + 1];
    Word swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    accumulate(pending, std::move(swapped), c * spec.lambda(j, i));
    for (const auto& [dw, dc] : spec.delta(j, i).terms()) {
      Word replaced;
      replaced.reserve(w.size() - 2 + dw.size());
      replaced.insert(replaced.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
      replaced.insert(replaced.end(), dw.begin(), dw.end());
      replaced.insert(replaced.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
      accumulate(pending, std::move(replaced), c * dc);
    }
  }
  return result;
}

NcPoly reduce_word(const OreAlgebraSpec& spec, const Word& word, const RewriteOptions& opts) {
  WordSum sum;
  sum.emplace(word, RatFunc(1));
  return reduce(spec, std::move(sum), opts);
}

NcPoly multiply(const OreAlgebraSpec& spec, const NcPoly& a, const NcPoly& b,
                const RewriteOptions& opts) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b * a.constant_term();
  if (b.is_constant()) return a * b.constant_term();
  WordSum sum;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      accumulate(sum, std::move(w), ca * cb);
    }
  }
  return reduce(spec, std::move(sum), opts);
}

NcPoly multiply_all(const OreAlgebraSpec& spec, const std::vector<NcPoly>& factors,
                    const RewriteOptions& opts) {
  NcPoly acc = NcPoly::constant(1);
  for (const auto& f : factors) acc = multiply(spec, acc, f, opts);
  return acc;
}

NcPoly power(const OreAlgebraSpec& spec, const NcPoly& a, unsigned exponent,
             const RewriteOptions& opts) {
  NcPoly acc = NcPoly::constant(1);
  for (unsigned k = 0; k < exponent; ++k) acc = multiply(spec, acc, a, opts);
  return acc;
}

}  // namespace qcgl
