#include "qcgl/random_elements.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qcgl {

std::uint64_t default_seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("QCGL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return fallback;
}

RatFunc random_scalar(Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 9);
  switch (pick(rng)) {
    case 0: return RatFunc(1);
    case 1: return RatFunc(-1);
    case 2: return RatFunc(2);
    case 3: return RatFunc(-2);
    case 4: return RatFunc(3);
    case 5: return RatFunc::q();
    case 6: return -RatFunc::q_pow(-1);
    case 7: return RatFunc::q_pow(2);
    case 8: return RatFunc::q_pow(-2);
    default: return RatFunc(1) + RatFunc::q();
  }
}

Word random_word(Rng& rng, GenIndex num_generators, unsigned length) {
  if (num_generators == 0 && length > 0) throw std::invalid_argument("random_word: no generators");
  std::uniform_int_distribution<int> letter(0, num_generators - 1);
  Word w(length);
  for (auto& g : w) g = static_cast<GenIndex>(letter(rng));
  return w;
}

NcPoly random_element(Rng& rng, GenIndex num_generators, unsigned max_degree, unsigned max_terms) {
  std::uniform_int_distribution<unsigned> terms(1, std::max(1U, max_terms));
  std::uniform_int_distribution<unsigned> degree(0, num_generators == 0 ? 0U : max_degree);
  for (;;) {
    NcPoly out;
    const unsigned count = terms(rng);
    for (unsigned t = 0; t < count; ++t) {
      Word w = random_word(rng, num_generators, degree(rng));
      std::sort(w.begin(), w.end());
      out.add_term(w, random_scalar(rng));
    }
    if (!out.is_zero()) return out;
  }
}

}  // namespace qcgl
