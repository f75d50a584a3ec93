#include "qcgl/grassmann.hpp"

#include <numeric>
#include <stdexcept>

namespace qcgl {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> current(static_cast<std::size_t>(k));
  std::iota(current.begin(), current.end(), 1);
  for (;;) {
    out.push_back(current);
    int pos = k - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++current[static_cast<std::size_t>(pos)];
    for (int r = pos + 1; r < k; ++r) {
      current[static_cast<std::size_t>(r)] = current[static_cast<std::size_t>(r - 1)] + 1;
    }
  }
  return out;
}

namespace {

std::vector<int> first_rows(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

}  // namespace

MaximalMinorSet maximal_minors(const QuantumMatrix& qm) {
  if (qm.rows() > qm.cols()) throw std::invalid_argument("maximal minors need m <= n");
  MaximalMinorSet set{qm.rows(), qm.cols(), {}};
  for (auto& cols : subsets(qm.cols(), qm.rows())) {
    set.minors.emplace(cols, quantum_minor(qm, {first_rows(qm.rows()), cols}));
  }
  return set;
}

bool ExtremalNormalityReport::success() const {
  for (const auto& e : entries) {
    if (!e.exponent) return false;
  }
  return !entries.empty();
}

ExtremalNormalityReport extremal_normality_report(const QuantumMatrix& qm) {
  const int m = qm.rows();
  const int n = qm.cols();
  const MaximalMinorSet set = maximal_minors(qm);
  if (set.minors.size() > 20) throw std::invalid_argument("extremal report limited to C(n,m) <= 20");
  std::vector<int> low = first_rows(m);
  std::vector<int> high;
  for (int j = n - m + 1; j <= n; ++j) high.push_back(j);

  ExtremalNormalityReport report{m, n, {}};
  for (const auto& extremal : {high, low}) {
    const NcPoly& e = set.minors.at(extremal);
    for (const auto& [cols, minor] : set.minors) {
      report.entries.push_back({extremal, cols, qcommute_exponent(qm.spec(), e, minor)});
    }
  }
  return report;
}

namespace {

NcPoly scale_by_degree(const NcPoly& a, int per_letter) {
  return a.map_words([per_letter](const Word& w) -> std::optional<std::pair<Word, RatFunc>> {
    return std::pair{w, RatFunc::q_pow(per_letter * static_cast<int>(w.size()))};
  });
}

}  // namespace

NcPoly phi(const NcPoly& a) { return scale_by_degree(a, -1); }
NcPoly phi_inverse(const NcPoly& a) { return scale_by_degree(a, 1); }

bool PhiScalingReport::success() const {
  for (const auto& e : entries) {
    if (!e.scales) return false;
  }
  return !entries.empty();
}

PhiScalingReport phi_scaling_check(const QuantumMatrix& qm) {
  PhiScalingReport report;
  const int tmax = std::min(qm.rows(), qm.cols());
  for (int t = 1; t <= tmax; ++t) {
    for (const auto& rows : subsets(qm.rows(), t)) {
      for (const auto& cols : subsets(qm.cols(), t)) {
        MinorIndex idx{rows, cols};
        const NcPoly minor = quantum_minor(qm, idx);
        report.entries.push_back({idx, phi(minor) == minor * RatFunc::q_pow(-t)});
      }
    }
  }
  return report;
}

}  // namespace qcgl
