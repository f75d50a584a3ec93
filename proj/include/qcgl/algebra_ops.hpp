#pragma once

#include "qcgl/rewrite.hpp"

#include <optional>

namespace qcgl {

inline constexpr int kDefaultNilpotenceBound = 64;

// sigma_j on A_{j-1}, extended multiplicatively from x_i -> lambda(j,i) x_i.
// Throws LevelError if `a` uses a generator >= j.
NcPoly apply_sigma(const OreAlgebraSpec& spec, GenIndex j, const NcPoly& a);
NcPoly apply_sigma_inv(const OreAlgebraSpec& spec, GenIndex j, const NcPoly& a);
// sigma_j^k for any integer k.
NcPoly apply_sigma_pow(const OreAlgebraSpec& spec, GenIndex j, int k, const NcPoly& a);

// delta_j on A_{j-1}: the twisted Leibniz extension
// d(ab) = s(a) d(b) + d(a) b of the stored values d_j(x_i).
NcPoly apply_delta(const OreAlgebraSpec& spec, GenIndex j, const NcPoly& a,
                   const RewriteOptions& opts = {});

// Smallest d with delta_j^(d+1)(a) = 0. Throws NilpotenceBoundExceeded if
// delta_j^(bound+1)(a) is still nonzero.
int nilpotency_index(const OreAlgebraSpec& spec, GenIndex j, const NcPoly& a,
                     int bound = kDefaultNilpotenceBound, const RewriteOptions& opts = {});

Weight word_weight(const OreAlgebraSpec& spec, const Word& w);
// Common torus weight of every term of `a`; nullopt if `a` is inhomogeneous.
std::optional<Weight> torus_weight(const OreAlgebraSpec& spec, const NcPoly& a);
// h . a for a torus element h (acting diagonally through the weights).
NcPoly torus_act(const OreAlgebraSpec& spec, const std::vector<RatFunc>& h, const NcPoly& a);

// The integer s with a*b = q^s b*a, if any.
std::optional<int> qcommute_exponent(const OreAlgebraSpec& spec, const NcPoly& a,
                                     const NcPoly& b, const RewriteOptions& opts = {});

struct NormalityReport {
  bool normal = false;
  // exponents[i] is the q-commutation exponent of `a` against generator i.
  std::vector<std::optional<int>> exponents;
};

NormalityReport is_normal(const OreAlgebraSpec& spec, const NcPoly& a,
                          const RewriteOptions& opts = {});

}  // namespace qcgl
