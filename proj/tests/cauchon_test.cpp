#include "qcgl/cauchon.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qcgl;

namespace {

// Oracle straight from the definition on a bit grid.
bool oracle_valid(int m, int n, std::uint64_t mask) {
  auto black = [&](int i, int j) { return (mask >> ((i - 1) * n + (j - 1))) & 1U; };
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (!black(i, j)) continue;
      bool left = true;
      for (int l = 1; l < j; ++l) left = left && black(i, l);
      bool up = true;
      for (int k = 1; k < i; ++k) up = up && black(k, j);
      if (!left && !up) return false;
    }
  }
  return true;
}

std::set<std::uint64_t> oracle_set(int m, int n) {
  std::set<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m * n)); ++mask) {
    if (oracle_valid(m, n, mask)) out.insert(mask);
  }
  return out;
}

TEST(Cauchon, ValidityExamples) {
  EXPECT_TRUE(is_valid(2, 2, {}));
  EXPECT_FALSE(is_valid(2, 2, {{2, 2}}));
  EXPECT_TRUE(is_valid(2, 2, {{1, 2}, {2, 2}}));
  EXPECT_TRUE(is_valid(2, 2, {{2, 1}, {2, 2}}));
  EXPECT_THROW(is_valid(2, 2, {{3, 1}}), std::invalid_argument);
  EXPECT_THROW(CauchonDiagram::validate(2, 2, {{2, 2}}), std::invalid_argument);
}

TEST(Cauchon, TextFormat) {
  const auto d = CauchonDiagram::parse(".#\n.#");
  EXPECT_EQ(d.rows(), 2);
  EXPECT_EQ(d.cols(), 2);
  EXPECT_TRUE(d.black(1, 2));
  EXPECT_FALSE(d.black(2, 1));
  EXPECT_EQ(d.black_count(), 2);
  EXPECT_EQ(d.black_cells(), (std::vector<Cell>{{1, 2}, {2, 2}}));
  EXPECT_EQ(d.to_string(), ".#\n.#\n");
  EXPECT_THROW(CauchonDiagram::parse(".#\n#"), std::invalid_argument);
  EXPECT_THROW(CauchonDiagram::parse(".x"), std::invalid_argument);
}

TEST(Cauchon, Counts) {
  EXPECT_EQ(count(1, 1), 2u);
  EXPECT_EQ(count(2, 2), 14u);
  EXPECT_EQ(count(2, 2), oracle_set(2, 2).size());
  EXPECT_EQ(count_by_black(2, 2).at(1), 3u);
  EXPECT_THROW(count(5, 5), std::invalid_argument);
}

TEST(CauchonProperty, EnumerationMatchesBruteForce) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; m * n <= 12; ++n) {
      std::set<std::uint64_t> got;
      std::size_t visits = 0;
      enumerate(m, n, [&](const CauchonDiagram& d) {
        got.insert(d.mask());
        ++visits;
      });
      EXPECT_EQ(visits, got.size());
      EXPECT_EQ(got, oracle_set(m, n)) << m << "x" << n;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m * n)); ++mask) {
        ASSERT_EQ(CauchonDiagram(m, n, mask).valid(), oracle_valid(m, n, mask));
      }
    }
  }
}

TEST(CauchonProperty, TransposeSymmetry) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; m * n <= 16; ++n) EXPECT_EQ(count(m, n), count(n, m)) << m << "x" << n;
  }
}

TEST(CauchonProperty, HistogramSumsToCount) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
    std::uint64_t total = 0;
    for (const auto& [k, v] : count_by_black(m, n)) total += v;
    EXPECT_EQ(total, count(m, n));
    EXPECT_EQ(count_by_black(m, n).at(1), static_cast<std::uint64_t>(m + n - 1));
    EXPECT_EQ(count_by_black(m, n).at(m * n), 1u);
  }
}

TEST(Cauchon, HeightOneDiagrams) {
  const auto d22 = height_one_diagrams(2, 2);
  std::set<std::vector<Cell>> cells;
  for (const auto& d : d22) cells.insert(d.black_cells());
  EXPECT_EQ(cells, (std::set<std::vector<Cell>>{{{1, 1}}, {{1, 2}}, {{2, 1}}}));
  EXPECT_EQ(height_one_diagrams(1, 4).size(), 4u);
  EXPECT_EQ(height_one_diagrams(3, 3).size(), 5u);
}

TEST(CauchonProperty, HeightOneDiagramsAreExactlyTheSingleBoxOnes) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}, {3, 3}, {3, 2}}) {
    std::set<std::uint64_t> listed;
    for (const auto& d : height_one_diagrams(m, n)) {
      EXPECT_TRUE(d.valid());
      EXPECT_EQ(d.black_count(), 1);
      listed.insert(d.mask());
    }
    std::set<std::uint64_t> single;
    for (std::uint64_t mask : oracle_set(m, n)) {
      if (__builtin_popcountll(mask) == 1) single.insert(mask);
    }
    EXPECT_EQ(listed, single);
  }
}

}  // namespace
