#include <gtest/gtest.h>

#include <random>

#include "latticelab/smith.hpp"

using namespace latticelab;

namespace {

bool is_diagonal(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d[i].size(); ++j)
      if (i != j && d[i][j] != 0) return false;
  return true;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, std::vector<mpz_class>(cols));
  for (auto& row : m)
    for (auto& x : row) x = static_cast<long>(rng() % 13) - 6;
  return m;
}

}  // namespace

TEST(Smith, SmallDiagonal) {
  auto r = smith_normal_form({{2, 0}, {0, 3}});
  EXPECT_EQ(r.invariants, (std::vector<mpz_class>{1, 6}));
}

TEST(Smith, ZeroAndEmpty) {
  auto z = smith_normal_form({{0, 0, 0}, {0, 0, 0}});
  EXPECT_EQ(z.invariants, (std::vector<mpz_class>{0, 0}));
  EXPECT_TRUE(smith_normal_form({}).invariants.empty());
}

TEST(Smith, RandomMatricesSatisfyDefinition) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    auto m = random_matrix(rng, rows, cols);
    if (trial % 5 == 0 && rows > 1) m[rows - 1] = m[0];  // force rank deficiency
    auto r = smith_normal_form(m);
    ASSERT_EQ(multiply(multiply(r.U, m), r.V), r.D) << trial;
    ASSERT_TRUE(is_diagonal(r.D));
    auto du = determinant(r.U), dv = determinant(r.V);
    ASSERT_TRUE(du == 1 || du == -1);
    ASSERT_TRUE(dv == 1 || dv == -1);
    ASSERT_EQ(r.invariants.size(), std::min(rows, cols));
    for (std::size_t i = 0; i < r.invariants.size(); ++i) {
      EXPECT_EQ(r.invariants[i], r.D[i][i]);
      EXPECT_GE(r.invariants[i], 0);
      if (i + 1 < r.invariants.size() && r.invariants[i] != 0)
        EXPECT_TRUE(mpz_divisible_p(r.invariants[i + 1].get_mpz_t(), r.invariants[i].get_mpz_t()));
      if (r.invariants[i] == 0 && i + 1 < r.invariants.size()) EXPECT_EQ(r.invariants[i + 1], 0);
    }
    if (rows == cols) {
      mpz_class prod = 1;
      for (const auto& d : r.invariants) prod *= d;
      mpz_class det = determinant(m);
      EXPECT_EQ(prod, abs(det)) << trial;
    }
  }
}

TEST(Smith, LatticeSaturation) {
  // Differences e1 - e2 and e2 - e3 span a saturated lattice.
  auto sat = make_integer_lattice({{1, -1, 0}, {0, 1, -1}});
  EXPECT_EQ(sat.rank(), 2u);
  EXPECT_TRUE(sat.saturated());
  // 2*e1 - 2*e2 is not.
  auto tors = make_integer_lattice({{2, -2, 0}});
  EXPECT_EQ(tors.rank(), 1u);
  EXPECT_FALSE(tors.saturated());
}

TEST(Smith, Determinant) {
  EXPECT_EQ(determinant({{2, 1}, {7, 4}}), 1);
  EXPECT_EQ(determinant({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 0);
}
