#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qcgl {

// 1-based (row, column); rows run top to bottom, columns left to right.
using Cell = std::pair<int, int>;

// An m x n black/white grid. Cells are packed row-major into a 64-bit mask,
// so m * n <= 64.
class CauchonDiagram {
 public:
  CauchonDiagram(int m, int n, std::uint64_t black_mask = 0);
  CauchonDiagram(int m, int n, const std::vector<Cell>& black);

  // Throws std::invalid_argument if the grid is not a Cauchon diagram.
  static CauchonDiagram validate(int m, int n, const std::vector<Cell>& black);
  // Rows of `.` (white) and `#` (black).
  static CauchonDiagram parse(const std::string& text);

  int rows() const { return m_; }
  int cols() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  bool black(int i, int j) const;
  int black_count() const;
  std::vector<Cell> black_cells() const;
  bool valid() const;

  std::string to_string() const;

  friend bool operator==(const CauchonDiagram&, const CauchonDiagram&) = default;

 private:
  int m_;
  int n_;
  std::uint64_t mask_;
};

// Each black cell has every cell to its left black, or every cell above it
// black. Cells outside the grid are rejected with std::invalid_argument.
bool is_valid(int m, int n, const std::vector<Cell>& black);

inline constexpr int kMaxEnumerationCells = 20;

// Visits every m x n Cauchon diagram exactly once, building the grid row by
// row and only ever colouring a cell black when the condition already holds.
// Throws std::invalid_argument if m * n exceeds kMaxEnumerationCells.
void enumerate(int m, int n, const std::function<void(const CauchonDiagram&)>& visit);
std::vector<CauchonDiagram> enumerate(int m, int n);
std::uint64_t count(int m, int n);
// Number of diagrams keyed by black-cell count.
std::map<int, std::uint64_t> count_by_black(int m, int n);

// The m + n - 1 single-box diagrams (box in row 1 or column 1).
std::vector<CauchonDiagram> height_one_diagrams(int m, int n);

}  // namespace qcgl
