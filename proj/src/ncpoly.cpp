#include "qcgl/ncpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcgl {

bool is_sorted_word(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

NcPoly NcPoly::constant(const RatFunc& c) {
  NcPoly p;
  p.add_term(Word{}, c);
  return p;
}

NcPoly NcPoly::monomial(Word word, const RatFunc& coeff) {
  NcPoly p;
  p.add_term(word, coeff);
  return p;
}

void NcPoly::add_term(const Word& word, const RatFunc& coeff) {
  if (coeff.is_zero()) return;
  if (!is_sorted_word(word)) throw std::invalid_argument("NcPoly: word is not in PBW order");
  auto [it, inserted] = terms_.try_emplace(word, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

bool NcPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

RatFunc NcPoly::constant_term() const { return coeff(Word{}); }

RatFunc NcPoly::coeff(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? RatFunc() : it->second;
}

std::optional<GenIndex> NcPoly::max_generator() const {
  std::optional<GenIndex> best;
  for (const auto& [w, c] : terms_) {
    if (!w.empty() && (!best || w.back() > *best)) best = w.back();
  }
  return best;
}

unsigned NcPoly::degree() const {
  return terms_.empty() ? 0U : static_cast<unsigned>(terms_.rbegin()->first.size());
}

NcPoly NcPoly::operator-() const {
  NcPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const RatFunc& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

NcPoly NcPoly::map_words(
    const std::function<std::optional<std::pair<Word, RatFunc>>(const Word&)>& f) const {
  NcPoly out;
  for (const auto& [w, c] : terms_) {
    auto mapped = f(w);
    if (mapped) out.add_term(mapped->first, c * mapped->second);
  }
  return out;
}

}  // namespace qcgl
