#pragma once

#include "qcgl/qmat.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcgl {

// The maximal minors [J] = [1..m | J] of O_q(M_{m,n}), keyed by J.
struct MaximalMinorSet {
  int m = 0;
  int n = 0;
  std::map<std::vector<int>, NcPoly> minors;
};

MaximalMinorSet maximal_minors(const QuantumMatrix& qm);

struct ExtremalExponent {
  std::vector<int> extremal;  // [1..m] or [n-m+1..n]
  std::vector<int> against;
  std::optional<int> exponent;
};

struct ExtremalNormalityReport {
  int m = 0;
  int n = 0;
  std::vector<ExtremalExponent> entries;
  bool success() const;
};

// q-commutation exponents of [1..m] and [n-m+1..n] against every maximal
// minor. Requires m <= n and C(n, m) <= 20.
ExtremalNormalityReport extremal_normality_report(const QuantumMatrix& qm);

// phi(x_ij) = q^-1 x_ij extended multiplicatively: a degree-d word scales by
// q^-d. phi_inverse scales by q^d.
NcPoly phi(const NcPoly& a);
NcPoly phi_inverse(const NcPoly& a);

struct PhiScalingEntry {
  MinorIndex minor;
  bool scales = false;  // phi([I|J]) = q^{-t} [I|J]
};

struct PhiScalingReport {
  std::vector<PhiScalingEntry> entries;
  bool success() const;
};

// Checks phi([I|J]) = q^{-t}[I|J] for every t x t minor, t <= min(m, n).
PhiScalingReport phi_scaling_check(const QuantumMatrix& qm);

// All strictly increasing k-subsets of {1..n}.
std::vector<std::vector<int>> subsets(int n, int k);

}  // namespace qcgl
