#include "qcgl/qmat.hpp"

#include "qcgl/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcgl {

namespace {

std::vector<int> parse_int_list(const std::string& text, std::size_t offset) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) throw ParseError("expected index in minor", offset + pos);
    out.push_back(std::stoi(text.substr(pos, end - pos)));
    pos = end;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos < text.size()) {
      if (text[pos] != ',') throw ParseError("expected ',' in minor", offset + pos);
      ++pos;
    }
  }
  return out;
}

std::vector<int> range(int first, int last) {
  std::vector<int> v;
  for (int k = first; k <= last; ++k) v.push_back(k);
  return v;
}

}  // namespace

MinorIndex parse_minor_index(const std::string& text) {
  const auto open = text.find('[');
  const auto bar = text.find('|');
  const auto close = text.find(']');
  if (open == std::string::npos || bar == std::string::npos || close == std::string::npos ||
      !(open < bar && bar < close)) {
    throw ParseError("minor must look like [1,2|1,3]", 0);
  }
  MinorIndex idx;
  idx.rows = parse_int_list(text.substr(open + 1, bar - open - 1), open + 1);
  idx.cols = parse_int_list(text.substr(bar + 1, close - bar - 1), bar + 1);
  return idx;
}

std::string to_string(const MinorIndex& idx) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < idx.rows.size(); ++k) os << (k ? "," : "") << idx.rows[k];
  os << '|';
  for (std::size_t k = 0; k < idx.cols.size(); ++k) os << (k ? "," : "") << idx.cols[k];
  os << ']';
  return os.str();
}

OreAlgebraSpec oqm(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("oqm: dimensions must be positive");
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      names.push_back("x[" + std::to_string(i) + "," + std::to_string(j) + "]");
    }
  }
  auto spec = OreAlgebraSpec::with_generators(std::move(names), static_cast<std::size_t>(m + n));
  spec.name = "O_q(M_{" + std::to_string(m) + "," + std::to_string(n) + "})";
  auto at = [n](int i, int j) { return static_cast<GenIndex>((i - 1) * n + (j - 1)); };
  const RatFunc q_inv = RatFunc::q_pow(-1);
  const RatFunc correction = -(RatFunc::q() - q_inv);

  for (int k = 1; k <= m; ++k) {
    for (int l = 1; l <= n; ++l) {
      const GenIndex top = at(k, l);
      auto& weight = spec.weights[top];
      weight[static_cast<std::size_t>(k - 1)] = 1;
      weight[static_cast<std::size_t>(m + l - 1)] = 1;
      // h = (alpha, beta) with alpha_k = beta_l = q^-1 and 1 elsewhere
      // reproduces every lambda at this level.
      spec.h[top][static_cast<std::size_t>(k - 1)] = q_inv;
      spec.h[top][static_cast<std::size_t>(m + l - 1)] = q_inv;
      spec.level_q[top] = RatFunc::q_pow(-2);
      for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= n; ++j) {
          const GenIndex low = at(i, j);
          if (low >= top) break;
          if (i == k || j == l) {
            // x_{kj} x_{kl} = q x_{kl} x_{kj} (j < l) and the column analogue.
            spec.lambda_table[top][low] = q_inv;
          } else if (j < l) {
            // x_{kl} x_{ij} = x_{ij} x_{kl} - (q - q^-1) x_{il} x_{kj}
            spec.delta_table[top][low] = NcPoly::monomial(Word{at(i, l), at(k, j)}, correction);
          }
        }
      }
    }
  }
  return spec;
}

QuantumMatrix::QuantumMatrix(int rows, int cols) : rows_(rows), cols_(cols), spec_(oqm(rows, cols)) {}

GenIndex QuantumMatrix::index(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw std::out_of_range("x[" + std::to_string(i) + "," + std::to_string(j) + "] is not a generator of " +
                            spec_.name);
  }
  return static_cast<GenIndex>((i - 1) * cols_ + (j - 1));
}

std::pair<int, int> QuantumMatrix::position(GenIndex g) const {
  return {g / cols_ + 1, g % cols_ + 1};
}

void QuantumMatrix::validate(const MinorIndex& idx) const {
  auto check = [](const std::vector<int>& v, int bound, const char* what) {
    if (v.empty()) throw std::invalid_argument(std::string("minor has no ") + what);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] < 1 || v[k] > bound) throw std::invalid_argument(std::string("minor ") + what + " out of range");
      if (k > 0 && v[k] <= v[k - 1]) {
        throw std::invalid_argument(std::string("minor ") + what + " must be strictly increasing");
      }
    }
  };
  check(idx.rows, rows_, "rows");
  check(idx.cols, cols_, "columns");
  if (idx.rows.size() != idx.cols.size()) throw std::invalid_argument("minor must be square");
}

NcPoly quantum_minor(const QuantumMatrix& qm, const MinorIndex& idx) {
  qm.validate(idx);
  const std::size_t t = idx.rows.size();
  std::vector<std::size_t> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  WordSum sum;
  do {
    int length = 0;
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = a + 1; b < t; ++b) length += perm[a] > perm[b] ? 1 : 0;
    }
    Word w;
    for (std::size_t a = 0; a < t; ++a) w.push_back(qm.index(idx.rows[a], idx.cols[perm[a]]));
    RatFunc coeff = RatFunc::q_pow(length);
    if (length % 2 != 0) coeff = -coeff;
    sum.emplace(std::move(w), coeff);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return reduce(qm.spec(), std::move(sum));
}

NcPoly quantum_determinant(const QuantumMatrix& qm) {
  if (qm.rows() != qm.cols()) throw std::invalid_argument("quantum determinant needs a square algebra");
  return quantum_minor(qm, {range(1, qm.rows()), range(1, qm.cols())});
}

MinorIndex b_index(int m, int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("b_i needs 1 <= i <= n");
  if (i <= m) return {range(1, i), range(n - i + 1, n)};
  return {range(1, m), range(n - i + 1, n + m - i)};
}

MinorIndex c_index(int m, int /*n*/, int i) {
  if (i < 1 || i > m) throw std::out_of_range("c_i needs 1 <= i <= m");
  return {range(m - i + 1, m), range(1, i)};
}

NcPoly b_minor(const QuantumMatrix& qm, int i) {
  return quantum_minor(qm, b_index(qm.rows(), qm.cols(), i));
}

NcPoly c_minor(const QuantumMatrix& qm, int i) {
  return quantum_minor(qm, c_index(qm.rows(), qm.cols(), i));
}

NcPoly transpose(const QuantumMatrix& source, const NcPoly& a) {
  const QuantumMatrix target(source.cols(), source.rows());
  WordSum sum;
  for (const auto& [w, c] : a.terms()) {
    Word image;
    for (GenIndex g : w) {
      auto [i, j] = source.position(g);
      image.push_back(target.index(j, i));
    }
    auto [it, inserted] = sum.try_emplace(std::move(image), c);
    if (!inserted) it->second += c;
  }
  return reduce(target.spec(), std::move(sum));
}

std::vector<NcPoly> height_one_hprime_generators(const QuantumMatrix& qm) {
  if (qm.rows() > qm.cols()) {
    throw std::invalid_argument("height_one_hprime_generators needs m <= n; transpose first");
  }
  std::vector<NcPoly> out;
  for (int i = 1; i <= qm.cols(); ++i) out.push_back(b_minor(qm, i));
  for (int i = 1; i < qm.rows(); ++i) out.push_back(c_minor(qm, i));
  return out;
}

NcPoly project_rows(const QuantumMatrix& source, const QuantumMatrix& target, const NcPoly& a) {
  if (source.cols() != target.cols() || target.rows() > source.rows()) {
    throw std::invalid_argument("project_rows: target must keep the columns and drop rows");
  }
  WordSum sum;
  for (const auto& [w, c] : a.terms()) {
    Word image;
    bool vanishes = false;
    for (GenIndex g : w) {
      auto [i, j] = source.position(g);
      if (i > target.rows()) {
        vanishes = true;
        break;
      }
      image.push_back(target.index(i, j));
    }
    if (vanishes) continue;
    auto [it, inserted] = sum.try_emplace(std::move(image), c);
    if (!inserted) it->second += c;
  }
  return reduce(target.spec(), std::move(sum));
}

NcPoly embed_submatrix(const QuantumMatrix& sub, const QuantumMatrix& target,
                       const MinorIndex& rows_cols, const NcPoly& a) {
  if (static_cast<int>(rows_cols.rows.size()) != sub.rows() ||
      static_cast<int>(rows_cols.cols.size()) != sub.cols()) {
    throw std::invalid_argument("embed_submatrix: index sets do not match the subalgebra shape");
  }
  WordSum sum;
  for (const auto& [w, c] : a.terms()) {
    Word image;
    for (GenIndex g : w) {
      auto [i, j] = sub.position(g);
      image.push_back(target.index(rows_cols.rows[static_cast<std::size_t>(i - 1)],
                                   rows_cols.cols[static_cast<std::size_t>(j - 1)]));
    }
    auto [it, inserted] = sum.try_emplace(std::move(image), c);
    if (!inserted) it->second += c;
  }
  return reduce(target.spec(), std::move(sum));
}

}  // namespace qcgl
