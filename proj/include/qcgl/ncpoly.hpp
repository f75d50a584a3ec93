#pragma once

#include "qcgl/ratfunc.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace qcgl {

// 0-based position of a generator in the spec's fixed order.
using GenIndex = std::uint16_t;
// A product of generators read left to right.
using Word = std::vector<GenIndex>;

bool is_sorted_word(const Word& w);

// Print order: total degree first, then lexicographic.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// A linear combination of PBW-sorted words with nonzero Q(q) coefficients.
//
// Every stored word is nondecreasing; products of NcPoly values must go
// through the rewriting engine (see rewrite.hpp) to stay in this form.
class NcPoly {
 public:
  using TermMap = std::map<Word, RatFunc, DegLexLess>;

  NcPoly() = default;
  static NcPoly constant(const RatFunc& c);
  // Throws std::invalid_argument if the word is not sorted.
  static NcPoly monomial(Word word, const RatFunc& coeff = RatFunc(1));
  static NcPoly generator(GenIndex i) { return monomial(Word{i}); }

  void add_term(const Word& word, const RatFunc& coeff);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the empty word.
  RatFunc constant_term() const;
  RatFunc coeff(const Word& word) const;
  // Largest generator index appearing in any word.
  std::optional<GenIndex> max_generator() const;
  unsigned degree() const;

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& other);
  NcPoly& operator-=(const NcPoly& other);
  NcPoly& operator*=(const RatFunc& scalar);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const RatFunc& s) { return a *= s; }
  friend NcPoly operator*(const RatFunc& s, NcPoly a) { return a *= s; }
  friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }

  // Apply `f` to every word, scaling by the returned factor; words mapped to
  // zero are dropped. The map must keep words sorted.
  NcPoly map_words(const std::function<std::optional<std::pair<Word, RatFunc>>(const Word&)>& f) const;

 private:
  TermMap terms_;
};

}  // namespace qcgl
