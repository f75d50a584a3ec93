#include "qcgl/laurent.hpp"

#include "qcgl/error.hpp"
#include "qcgl/printing.hpp"

#include <limits>
#include <stdexcept>

namespace qcgl {

LaurentElem LaurentElem::term(int k, const NcPoly& a) {
  LaurentElem u;
  u.add_term(k, a);
  return u;
}

void LaurentElem::add_term(int exponent, const NcPoly& a) {
  if (a.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, a);
  if (inserted) return;
  it->second += a;
  if (it->second.is_zero()) coeffs_.erase(it);
}

NcPoly LaurentElem::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? NcPoly() : it->second;
}

int LaurentElem::min_exponent() const {
  return coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

int LaurentElem::max_exponent() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

LaurentElem LaurentElem::operator-() const {
  LaurentElem r = *this;
  for (auto& [k, a] : r.coeffs_) a = -a;
  return r;
}

LaurentElem& LaurentElem::operator+=(const LaurentElem& other) {
  for (const auto& [k, a] : other.coeffs_) add_term(k, a);
  return *this;
}

LaurentElem& LaurentElem::operator-=(const LaurentElem& other) {
  for (const auto& [k, a] : other.coeffs_) add_term(k, -a);
  return *this;
}

LaurentElem& LaurentElem::operator*=(const RatFunc& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, a] : coeffs_) a *= s;
  return *this;
}

LaurentRing::LaurentRing(const OreAlgebraSpec& spec, int nilpotence_bound, RewriteOptions opts)
    : spec_(&spec), top_(0), bound_(nilpotence_bound), opts_(opts) {
  if (spec.size() == 0) throw SpecError("Laurent ring needs at least one generator");
  top_ = static_cast<GenIndex>(spec.size() - 1);
}

LaurentElem LaurentRing::x_inverse_times_word(const Word& w) const {
  auto it = inverse_cache_.find(w);
  if (it != inverse_cache_.end()) return it->second;
  LaurentElem out;
  NcPoly orbit = NcPoly::monomial(w);
  RatFunc sign(1);
  for (int n = 0;; ++n) {
    if (orbit.is_zero()) break;
    if (n > bound_) {
      throw NilpotenceBoundExceeded("X^-1 commutation did not terminate within " + std::to_string(bound_) +
                                    " steps");
    }
    const NcPoly shifted = apply_sigma_inv(*spec_, top_, orbit);
    out.add_term(-n - 1, shifted * sign);
    orbit = apply_delta(*spec_, top_, shifted, opts_);
    sign = -sign;
  }
  inverse_cache_.emplace(w, out);
  return out;
}

LaurentElem LaurentRing::x_power_times(int k, const NcPoly& a) const {
  LaurentElem current(a);
  if (k > 0) {
    for (int step = 0; step < k; ++step) {
      LaurentElem next;
      for (const auto& [e, c] : current.coeffs()) {
        next.add_term(e + 1, apply_sigma(*spec_, top_, c));
        next.add_term(e, apply_delta(*spec_, top_, c, opts_));
      }
      current = std::move(next);
    }
  } else {
    for (int step = 0; step < -k; ++step) {
      LaurentElem next;
      for (const auto& [e, c] : current.coeffs()) {
        for (const auto& [w, coeff] : c.terms()) {
          LaurentElem moved = x_inverse_times_word(w);
          for (const auto& [f, d] : moved.coeffs()) next.add_term(f + e, d * coeff);
        }
      }
      current = std::move(next);
    }
  }
  return current;
}

LaurentElem LaurentRing::multiply(const LaurentElem& u, const LaurentElem& v) const {
  LaurentElem out;
  for (const auto& [i, a] : u.coeffs()) {
    for (const auto& [j, b] : v.coeffs()) {
      // a X^i b X^j = a (X^i b) X^j
      const LaurentElem moved = x_power_times(i, b);
      for (const auto& [t, c] : moved.coeffs()) {
        out.add_term(t + j, qcgl::multiply(*spec_, a, c, opts_));
      }
    }
  }
  return out;
}

LaurentElem LaurentRing::from_poly(const NcPoly& p) const {
  LaurentElem out;
  for (const auto& [w, c] : p.terms()) {
    std::size_t split = w.size();
    while (split > 0 && w[split - 1] == top_) --split;
    Word base(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
    out.add_term(static_cast<int>(w.size() - split), NcPoly::monomial(base, c));
  }
  return out;
}

NcPoly LaurentRing::to_poly(const LaurentElem& u) const {
  NcPoly out;
  for (const auto& [k, a] : u.coeffs()) {
    if (k < 0) throw std::invalid_argument("element has negative powers of X");
    for (const auto& [w, c] : a.terms()) {
      Word full = w;
      full.insert(full.end(), static_cast<std::size_t>(k), top_);
      out.add_term(full, c);
    }
  }
  return out;
}

LaurentElem laurent_mul(const OreAlgebraSpec& spec, const LaurentElem& u, const LaurentElem& v,
                        int nilpotence_bound) {
  return LaurentRing(spec, nilpotence_bound).multiply(u, v);
}

std::string to_string(const OreAlgebraSpec& spec, const LaurentElem& u) {
  if (u.is_zero()) return "0";
  std::vector<std::pair<RatFunc, std::string>> terms;
  for (auto it = u.coeffs().rbegin(); it != u.coeffs().rend(); ++it) {
    const int k = it->first;
    std::string x_part;
    if (k == 1) x_part = "X";
    else if (k != 0) x_part = "X^" + std::to_string(k);
    for (const auto& [w, c] : it->second.terms()) {
      std::string body = word_to_string(spec, w);
      if (!x_part.empty()) body = body.empty() ? x_part : body + "*" + x_part;
      terms.emplace_back(c, body);
    }
  }
  return join_terms(terms);
}

}  // namespace qcgl
