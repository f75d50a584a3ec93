#pragma once

#include "qcgl/algebra_ops.hpp"

#include <vector>

namespace qcgl {

// Rows I and columns J of a quantum minor [I|J], 1-based, strictly
// increasing, |I| = |J| >= 1.
struct MinorIndex {
  std::vector<int> rows;
  std::vector<int> cols;

  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

// Parses `[1,2|1,3]`.
MinorIndex parse_minor_index(const std::string& text);
std::string to_string(const MinorIndex& idx);

// O_q(M_{m,n}) with generators x[i,j] added in row-major order.
class QuantumMatrix {
 public:
  QuantumMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const OreAlgebraSpec& spec() const { return spec_; }

  // 1-based (i, j) to generator position.
  GenIndex index(int i, int j) const;
  std::pair<int, int> position(GenIndex g) const;
  NcPoly x(int i, int j) const { return NcPoly::generator(index(i, j)); }

  // Throws std::invalid_argument unless idx is a valid minor index here.
  void validate(const MinorIndex& idx) const;

 private:
  int rows_;
  int cols_;
  OreAlgebraSpec spec_;
};

// The spec of O_q(M_{m,n}).
OreAlgebraSpec oqm(int m, int n);

// [I|J] = sum over permutations s of (-q)^{l(s)} x_{I1,J_s(1)} ... x_{It,J_s(t)}.
NcPoly quantum_minor(const QuantumMatrix& qm, const MinorIndex& idx);
NcPoly quantum_determinant(const QuantumMatrix& qm);

// b_i = [1..i | n-i+1..n] for i <= m, [1..m | n-i+1..n+m-i] for m < i <= n.
NcPoly b_minor(const QuantumMatrix& qm, int i);
MinorIndex b_index(int m, int n, int i);
// c_i = [m-i+1..m | 1..i] for 1 <= i <= m.
NcPoly c_minor(const QuantumMatrix& qm, int i);
MinorIndex c_index(int m, int n, int i);

// Image of `a` in O_q(M_{n,m}) under x_{ij} -> x_{ji}.
NcPoly transpose(const QuantumMatrix& source, const NcPoly& a);

// b_1..b_n, c_1..c_{m-1}; requires m <= n.
std::vector<NcPoly> height_one_hprime_generators(const QuantumMatrix& qm);

// x_{ij} -> x_{ij} for i <= target.rows(), 0 otherwise, from O_q(M_n) onto
// O_q(M_{m,n}).
NcPoly project_rows(const QuantumMatrix& source, const QuantumMatrix& target, const NcPoly& a);

// Image of an element of O_q(M_{|I|,|J|}) under x_{ab} -> x_{I_a, J_b}.
NcPoly embed_submatrix(const QuantumMatrix& sub, const QuantumMatrix& target,
                       const MinorIndex& rows_cols, const NcPoly& a);

}  // namespace qcgl
