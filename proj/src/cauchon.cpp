#include "qcgl/cauchon.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace qcgl {

namespace {

void check_shape(int m, int n) {
  if (m < 1 || n < 1 || m * n > 64) throw std::invalid_argument("diagram shape must satisfy 1 <= m*n <= 64");
}

std::uint64_t bit(int n, int i, int j) {
  return std::uint64_t{1} << static_cast<unsigned>((i - 1) * n + (j - 1));
}

}  // namespace

CauchonDiagram::CauchonDiagram(int m, int n, std::uint64_t black_mask) : m_(m), n_(n), mask_(black_mask) {
  check_shape(m, n);
  if (m * n < 64 && (black_mask >> static_cast<unsigned>(m * n)) != 0) {
    throw std::invalid_argument("mask has cells outside the grid");
  }
}

CauchonDiagram::CauchonDiagram(int m, int n, const std::vector<Cell>& black) : m_(m), n_(n), mask_(0) {
  check_shape(m, n);
  for (auto [i, j] : black) {
    if (i < 1 || i > m || j < 1 || j > n) throw std::invalid_argument("cell outside the grid");
    mask_ |= bit(n, i, j);
  }
}

CauchonDiagram CauchonDiagram::validate(int m, int n, const std::vector<Cell>& black) {
  CauchonDiagram d(m, n, black);
  if (!d.valid()) throw std::invalid_argument("not a Cauchon diagram");
  return d;
}

CauchonDiagram CauchonDiagram::parse(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string row;
    for (char c : line) {
      if (c == '.' || c == '#') row += c;
      else if (c != ' ' && c != '\r' && c != '\t') throw std::invalid_argument("diagram rows use '.' and '#'");
    }
    if (!row.empty()) lines.push_back(row);
  }
  if (lines.empty()) throw std::invalid_argument("empty diagram");
  const int m = static_cast<int>(lines.size());
  const int n = static_cast<int>(lines[0].size());
  std::vector<Cell> black;
  for (int i = 1; i <= m; ++i) {
    if (static_cast<int>(lines[static_cast<std::size_t>(i - 1)].size()) != n) {
      throw std::invalid_argument("diagram rows have different lengths");
    }
    for (int j = 1; j <= n; ++j) {
      if (lines[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] == '#') black.emplace_back(i, j);
    }
  }
  return CauchonDiagram(m, n, black);
}

bool CauchonDiagram::black(int i, int j) const { return (mask_ & bit(n_, i, j)) != 0; }

int CauchonDiagram::black_count() const { return std::popcount(mask_); }

std::vector<Cell> CauchonDiagram::black_cells() const {
  std::vector<Cell> cells;
  for (int i = 1; i <= m_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (black(i, j)) cells.emplace_back(i, j);
    }
  }
  return cells;
}

bool CauchonDiagram::valid() const {
  for (int i = 1; i <= m_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (!black(i, j)) continue;
      bool left = true;
      for (int l = 1; l < j && left; ++l) left = black(i, l);
      bool above = true;
      for (int k = 1; k < i && above; ++k) above = black(k, j);
      if (!left && !above) return false;
    }
  }
  return true;
}

std::string CauchonDiagram::to_string() const {
  std::string out;
  for (int i = 1; i <= m_; ++i) {
    for (int j = 1; j <= n_; ++j) out += black(i, j) ? '#' : '.';
    out += '\n';
  }
  return out;
}

bool is_valid(int m, int n, const std::vector<Cell>& black) { return CauchonDiagram(m, n, black).valid(); }

void enumerate(int m, int n, const std::function<void(const CauchonDiagram&)>& visit) {
  if (m < 1 || n < 1 || m * n > kMaxEnumerationCells) {
    throw std::invalid_argument("enumeration limited to 1 <= m*n <= " + std::to_string(kMaxEnumerationCells));
  }
  // row_full: the current row is black so far; col_full[j]: column j is
  // black in every row above the current one.
  std::vector<bool> col_full(static_cast<std::size_t>(n), true);
  std::function<void(int, std::uint64_t, bool)> place = [&](int cell, std::uint64_t mask, bool row_full) {
    if (cell == m * n) {
      visit(CauchonDiagram(m, n, mask));
      return;
    }
    const int j = cell % n;
    if (j == 0) row_full = true;
    const bool col_was = col_full[static_cast<std::size_t>(j)];
    // white
    col_full[static_cast<std::size_t>(j)] = false;
    place(cell + 1, mask, false);
    col_full[static_cast<std::size_t>(j)] = col_was;
    // black, when the condition already holds
    if (row_full || col_was) place(cell + 1, mask | (std::uint64_t{1} << static_cast<unsigned>(cell)), row_full);
  };
  place(0, 0, true);
}

std::vector<CauchonDiagram> enumerate(int m, int n) {
  std::vector<CauchonDiagram> out;
  enumerate(m, n, [&](const CauchonDiagram& d) { out.push_back(d); });
  return out;
}

std::uint64_t count(int m, int n) {
  std::uint64_t total = 0;
  enumerate(m, n, [&](const CauchonDiagram&) { ++total; });
  return total;
}

std::map<int, std::uint64_t> count_by_black(int m, int n) {
  std::map<int, std::uint64_t> hist;
  enumerate(m, n, [&](const CauchonDiagram& d) { ++hist[d.black_count()]; });
  return hist;
}

std::vector<CauchonDiagram> height_one_diagrams(int m, int n) {
  std::vector<CauchonDiagram> out;
  for (int j = 1; j <= n; ++j) out.emplace_back(m, n, std::vector<Cell>{{1, j}});
  for (int i = 2; i <= m; ++i) out.emplace_back(m, n, std::vector<Cell>{{i, 1}});
  return out;
}

}  // namespace qcgl
