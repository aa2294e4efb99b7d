#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "shfkit/core.hpp"

using namespace shfkit;

TEST(ShfType, SortsAndValidates) {
  const ShfType ty{5, 1, 1};
  EXPECT_EQ(ty.weights(), (std::vector<int>{1, 1, 5}));
  EXPECT_EQ(ty.parts(), 3);
  EXPECT_EQ(ty.total(), 7);
  EXPECT_TRUE(ty.is_strong());
  EXPECT_FALSE((ShfType{2, 2}).is_strong());
  EXPECT_EQ(ty.to_string(), "{1^2, 5}");
  EXPECT_EQ((ShfType{2, 3}), (ShfType{3, 2}));
  EXPECT_EQ(strong_type(2, 5), ty);
  EXPECT_THROW(ShfType{2}, std::invalid_argument);
  EXPECT_THROW((ShfType{0, 2}), std::invalid_argument);
}

TEST(Matrix, ValidatesEntries) {
  EXPECT_THROW(Matrix(2, {{0, 1}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(Matrix(2, {{0, 1}, {1}}), std::invalid_argument);
  EXPECT_THROW(Matrix(0, 1, 2, {}), std::invalid_argument);
  const Matrix a(3, {{0, 1, 2}, {2, 1, 0}});
  EXPECT_EQ(a.column(2), (std::vector<Symbol>{2, 0}));
  EXPECT_EQ(a.without_column(1), Matrix(3, {{0, 2}, {2, 0}}));
  const std::vector<Symbol> extra{1, 1};
  EXPECT_EQ(a.with_column(extra).cols(), 4);
  const std::vector<int> pick{2, 0};
  EXPECT_EQ(a.select_columns(pick), Matrix(3, {{2, 0}, {0, 2}}));
}

TEST(Hypergraph, Validates) {
  EXPECT_THROW(Hypergraph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, {{}}), std::invalid_argument);
  EXPECT_EQ(Hypergraph(4, {{0, 1}, {1, 2, 3}}).max_edge_size(), 3);
}

TEST(LambdaStat, Examples) {
  EXPECT_EQ(lambda_stat(fixtures::fano_strong(), 0, 0), 4);
  // Symbols are 0-based, so row 0 counts symbol 0.
  EXPECT_EQ(lambda_stat(fixtures::optimal_4x10(), 0, 0), 3);
  EXPECT_THROW(lambda_stat(fixtures::optimal_4x10(), 4, 0), std::invalid_argument);
  EXPECT_THROW(lambda_stat(fixtures::optimal_4x10(), 0, 4), std::invalid_argument);
}

TEST(DStat, Examples) {
  const Matrix t = fixtures::optimal_4x10();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 4; ++y) EXPECT_LE(d_stat(t, i, j, x, y), 1);
      }
    }
  }
  EXPECT_THROW(d_stat(t, 1, 1, 0, 0), std::invalid_argument);
  const Matrix dup(3, {{0, 1, 0}, {2, 1, 2}});
  EXPECT_GE(d_stat(dup, 0, 1, 0, 2), 2);
}

TEST(LambdaMax, Examples) {
  EXPECT_EQ(lambda_max(fixtures::optimal_4x10()), 3);
  EXPECT_EQ(lambda_max(fixtures::fano_strong()), 4);
  EXPECT_EQ(lambda_max(Matrix(3, {{1, 1, 1, 1}, {2, 2, 2, 2}})), 4);
}

TEST(CoreProperties, RandomMatrices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 2 + trial % 3;
    const int cols = 1 + trial % 9;
    const int m = 2 + trial % 4;
    const Matrix a = oracle::random_matrix(rng, rows, cols, m);
    for (int i = 0; i < rows; ++i) {
      int sum = 0;
      for (int x = 0; x < m; ++x) sum += lambda_stat(a, i, x);
      EXPECT_EQ(sum, cols);
      for (int j = 0; j < rows; ++j) {
        if (i == j) continue;
        int dsum = 0;
        for (int x = 0; x < m; ++x) {
          for (int y = 0; y < m; ++y) {
            dsum += d_stat(a, i, j, x, y);
            EXPECT_EQ(d_stat(a, i, j, x, y), d_stat(a, j, i, y, x));
          }
        }
        EXPECT_EQ(dsum, cols);
      }
    }
    EXPECT_GE(lambda_max(a), (cols + m - 1) / m);
  }
}
