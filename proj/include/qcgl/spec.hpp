#pragma once

#include "qcgl/ncpoly.hpp"

#include <string>
#include <vector>

namespace qcgl {

using Weight = std::vector<long>;

// Data of an iterated Ore extension k[x_1][x_2; s_2, d_2]...[x_N; s_N, d_N]
// together with its torus action.
//
// Generators are 0-based here. For every pair i < j the straightening rule is
//   x_j x_i = lambda(j, i) x_i x_j + delta(j, i),
// i.e. s_j(x_i) = lambda(j, i) x_i and d_j(x_i) = delta(j, i). The level
// constant level_q[j] is the scalar with s_j d_j = level_q[j] d_j s_j. The
// torus H = (k*)^torus_rank acts on x_i by the character weights[i], and
// h[j] is the distinguished element realising s_j.
struct OreAlgebraSpec {
  std::string name;
  std::vector<std::string> names;
  // lambda_table[j][i] and delta_table[j][i] are defined for i < j.
  std::vector<std::vector<RatFunc>> lambda_table;
  std::vector<std::vector<NcPoly>> delta_table;
  std::vector<RatFunc> level_q;
  std::size_t torus_rank = 0;
  std::vector<Weight> weights;
  std::vector<std::vector<RatFunc>> h;

  // An empty spec with N generators: lambda = 1, delta = 0, level_q = 1,
  // zero weights of the given rank and trivial h.
  static OreAlgebraSpec with_generators(std::vector<std::string> names, std::size_t torus_rank);

  std::size_t size() const { return names.size(); }
  const RatFunc& lambda(GenIndex j, GenIndex i) const { return lambda_table.at(j).at(i); }
  const NcPoly& delta(GenIndex j, GenIndex i) const { return delta_table.at(j).at(i); }

  // Position of a generator by display name; also accepts `g_k` (1-based).
  std::optional<GenIndex> find(const std::string& generator_name) const;

  // The subalgebra A_j on the first j generators, as a spec of its own.
  OreAlgebraSpec truncated(std::size_t j) const;

  friend bool operator==(const OreAlgebraSpec&, const OreAlgebraSpec&) = default;
};

// Shape errors: table sizes, delta entries using generators >= their level.
// Empty when the spec is structurally usable.
std::vector<std::string> structural_errors(const OreAlgebraSpec& spec);
// Throws SpecError listing every structural error.
void require_well_formed(const OreAlgebraSpec& spec);

// Eigenvalue of an element of H on a generator: prod_t h[t]^weight[t].
RatFunc torus_eigenvalue(const std::vector<RatFunc>& h, const Weight& weight);

}  // namespace qcgl
