#pragma once

#include "qcgl/laurent.hpp"

namespace qcgl {

// Deleting-derivations map for the top variable X of `ring.spec()`:
//
//   theta(a) = sum_{n>=0} (1-p)^{-n} / [n]!_p  d^n s^{-n}(a) X^{-n},
//
// with p the top-level constant (s d = p d s) and [i]_p = 1 + p + ... + p^{i-1}.
// Throws SpecError if p = 1 and NilpotenceBoundExceeded if d does not vanish
// on `a` within the ring's bound.
LaurentElem theta(const LaurentRing& ring, const NcPoly& a);
LaurentElem theta(const OreAlgebraSpec& spec, const NcPoly& a,
                  int nilpotence_bound = kDefaultNilpotenceBound);

// The same map summed as (1-p)^{-n} / [n]!_p p^{n^2} s^{-n} d^n(a) X^{-n}.
LaurentElem theta_alt(const LaurentRing& ring, const NcPoly& a);
LaurentElem theta_alt(const OreAlgebraSpec& spec, const NcPoly& a,
                      int nilpotence_bound = kDefaultNilpotenceBound);

// Smallest s >= 0 with theta(a) X^s free of negative powers of X.
int min_shift(const LaurentRing& ring, const NcPoly& a);
int min_shift(const OreAlgebraSpec& spec, const NcPoly& a,
              int nilpotence_bound = kDefaultNilpotenceBound);

// The spec with the top-level derivation set to zero: A[Y; s].
OreAlgebraSpec delete_top_variable(const OreAlgebraSpec& spec);

// theta on A[Y; s] (an element of delete_top_variable(spec)), with
// theta(Y) = X.
LaurentElem theta_extended(const LaurentRing& ring, const NcPoly& p);

}  // namespace qcgl
