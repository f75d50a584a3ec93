#pragma once

#include "qcgl/ncpoly.hpp"

#include <cstdint>
#include <random>

namespace qcgl {

using Rng = std::mt19937_64;

// Seed from the QCGL_SEED environment variable, or `fallback`.
std::uint64_t default_seed(std::uint64_t fallback = 20070101);

// Small nonzero scalar: +-1, +-2, 3, +-q^k for |k| <= 2, 1 + q.
RatFunc random_scalar(Rng& rng);

// Word of the given length over generators [0, num_generators).
Word random_word(Rng& rng, GenIndex num_generators, unsigned length);

// Nonzero element whose words use generators [0, num_generators), with
// between 1 and max_terms terms of degree <= max_degree.
NcPoly random_element(Rng& rng, GenIndex num_generators, unsigned max_degree = 3, unsigned max_terms = 3);

}  // namespace qcgl
