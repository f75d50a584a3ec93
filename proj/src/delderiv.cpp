#include "qcgl/delderiv.hpp"

#include "qcgl/error.hpp"

namespace qcgl {

namespace {

RatFunc top_constant(const LaurentRing& ring) {
  const RatFunc& p = ring.spec().level_q[ring.top()];
  if (p == RatFunc(1)) throw SpecError("theta needs a top-level constant different from 1");
  return p;
}

// (1-p)^{-n} / [n]!_p
RatFunc theta_scalar(const RatFunc& p, int n) {
  return (RatFunc(1) - p).pow(-n) / q_factorial(static_cast<unsigned>(n), p);
}

void require_base(const LaurentRing& ring, const NcPoly& a) {
  auto top = a.max_generator();
  if (top && *top >= ring.top()) {
    throw LevelError("theta is defined on the algebra below " + ring.spec().names[ring.top()]);
  }
}

}  // namespace

LaurentElem theta(const LaurentRing& ring, const NcPoly& a) {
  require_base(ring, a);
  const RatFunc p = top_constant(ring);
  const auto& spec = ring.spec();
  const GenIndex top = ring.top();
  LaurentElem out;
  for (int n = 0;; ++n) {
    if (n > ring.nilpotence_bound()) {
      throw NilpotenceBoundExceeded("theta: derivation not nilpotent within " +
                                    std::to_string(ring.nilpotence_bound()) + " steps");
    }
    NcPoly term = apply_sigma_pow(spec, top, -n, a);
    for (int k = 0; k < n && !term.is_zero(); ++k) {
      term = apply_delta(spec, top, term, ring.rewrite_options());
    }
    if (term.is_zero()) break;
    out.add_term(-n, term * theta_scalar(p, n));
  }
  return out;
}

LaurentElem theta(const OreAlgebraSpec& spec, const NcPoly& a, int nilpotence_bound) {
  return theta(LaurentRing(spec, nilpotence_bound), a);
}

LaurentElem theta_alt(const LaurentRing& ring, const NcPoly& a) {
  require_base(ring, a);
  const RatFunc p = top_constant(ring);
  const auto& spec = ring.spec();
  const GenIndex top = ring.top();
  LaurentElem out;
  NcPoly derived = a;  // d^n(a)
  for (int n = 0; !derived.is_zero(); ++n) {
    if (n > ring.nilpotence_bound()) {
      throw NilpotenceBoundExceeded("theta: derivation not nilpotent within " +
                                    std::to_string(ring.nilpotence_bound()) + " steps");
    }
    const NcPoly term = apply_sigma_pow(spec, top, -n, derived);
    out.add_term(-n, term * (theta_scalar(p, n) * p.pow(n * n)));
    derived = apply_delta(spec, top, derived, ring.rewrite_options());
  }
  return out;
}

LaurentElem theta_alt(const OreAlgebraSpec& spec, const NcPoly& a, int nilpotence_bound) {
  return theta_alt(LaurentRing(spec, nilpotence_bound), a);
}

int min_shift(const LaurentRing& ring, const NcPoly& a) {
  if (a.is_zero()) throw std::invalid_argument("min_shift: zero element");
  const LaurentElem t = theta(ring, a);
  return t.min_exponent() < 0 ? -t.min_exponent() : 0;
}

int min_shift(const OreAlgebraSpec& spec, const NcPoly& a, int nilpotence_bound) {
  return min_shift(LaurentRing(spec, nilpotence_bound), a);
}

OreAlgebraSpec delete_top_variable(const OreAlgebraSpec& spec) {
  if (spec.size() == 0) throw SpecError("cannot delete a variable from an empty spec");
  OreAlgebraSpec out = spec;
  for (auto& d : out.delta_table.back()) d = NcPoly();
  return out;
}

LaurentElem theta_extended(const LaurentRing& ring, const NcPoly& p) {
  LaurentElem out;
  const LaurentElem split = ring.from_poly(p);
  for (const auto& [k, a] : split.coeffs()) {
    out += ring.multiply(theta(ring, a), LaurentElem::x_power(k));
  }
  return out;
}

}  // namespace qcgl
