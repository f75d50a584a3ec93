#pragma once

#include "qcgl/algebra_ops.hpp"

#include <string>
#include <vector>

namespace qcgl {

struct CheckResult {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string message) {
    ok = false;
    failures.push_back(std::move(message));
  }
};

// Verdicts for one level j of an iterated Ore extension.
struct LevelReport {
  GenIndex level = 0;
  std::string generator;
  RatFunc level_q;
  CheckResult sigma_delta_commutation;  // s_j d_j(x_i) = q_j d_j s_j(x_i), i < j
  CheckResult delta_nilpotent;          // d_j nilpotent on each x_i within the bound
  CheckResult level_q_not_root;         // q_j is not a root of unity
  CheckResult h_matches_lambda;         // h_j(x_i) = lambda(j,i) x_i for i < j
  CheckResult h_eigenvalue_not_root;    // h_j-eigenvalue of x_j not a root of unity
  CheckResult lambda_nonzero;
  // s_j and d_j respect the straightening relations of A_{j-1}, so they are
  // a well-defined automorphism and s_j-derivation.
  CheckResult relations_respected;
  // d_j(x_i) has torus weight w(x_i) + w(x_j), so H acts by automorphisms.
  CheckResult torus_compatible;

  bool passed() const;
};

struct CglReport {
  std::vector<std::string> structural;
  std::vector<LevelReport> levels;

  bool passed() const;
};

CglReport check_cgl_axioms(const OreAlgebraSpec& spec, int nilpotence_bound = kDefaultNilpotenceBound,
                           const RewriteOptions& opts = {});

enum class Torsionfree { kYes, kNo, kUndecided };

// Decides whether the subgroup of k* generated by the lambda(j,i) is
// torsionfree when every lambda is +-q^k; undecided otherwise (unless
// torsion is already found among the +-q^k values).
Torsionfree is_torsionfree(const OreAlgebraSpec& spec);

std::string to_string(Torsionfree verdict);

}  // namespace qcgl
