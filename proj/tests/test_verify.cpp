#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "shfkit/verify.hpp"

using namespace shfkit;

namespace {

void expect_sound(const Matrix& a, const Verdict& v, const ShfType& ty) {
  if (v.is_shf) return;
  ASSERT_TRUE(v.witness.has_value());
  std::vector<int> sizes;
  std::vector<int> seen(static_cast<std::size_t>(a.cols()), 0);
  for (const auto& p : v.witness->parts) {
    sizes.push_back(static_cast<int>(p.size()));
    for (int c : p) EXPECT_EQ(seen[c]++, 0) << "witness parts overlap";
  }
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, ty.weights());
  for (int r = 0; r < a.rows(); ++r) EXPECT_FALSE(row_separates(a, r, *v.witness));
}

}  // namespace

TEST(RowSeparates, Examples) {
  const Matrix e = fixtures::fano_strong();
  EXPECT_TRUE(row_separates(e, 0, {{{0}, {1}, {2, 3, 4, 5, 6}}}));
  EXPECT_TRUE(row_separates(e, 3, {{{0, 1, 2}}}));
  const Matrix f = fixtures::f1();
  for (int r = 0; r < 4; ++r) EXPECT_FALSE(row_separates(f, r, {{{0, 2}, {1, 3}}}));
  EXPECT_THROW(row_separates(f, 0, {{{0, 1}, {1, 2}}}), std::invalid_argument);
  EXPECT_THROW(row_separates(f, 0, {{{0}, {9}}}), std::invalid_argument);
  EXPECT_THROW(row_separates(f, 7, {{{0}, {1}}}), std::invalid_argument);
}

TEST(RowSeparates, RepeatsInsideAPartAreAllowed) {
  const Matrix a(3, {{0, 0, 1, 2}});
  EXPECT_TRUE(row_separates(a, 0, {{{0, 1}, {2, 3}}}));
  EXPECT_FALSE(row_separates(a, 0, {{{0, 2}, {1, 3}}}));
}

TEST(IsShf, KnownMatrices) {
  EXPECT_TRUE(is_shf(fixtures::fano_strong(), ShfType{1, 1, 5}).is_shf);
  EXPECT_TRUE(is_shf(fixtures::optimal_4x10(), ShfType{2, 2}).is_shf);
  const Verdict f = is_shf(fixtures::f1(), ShfType{2, 2});
  ASSERT_FALSE(f.is_shf);
  EXPECT_EQ(f.witness->parts, (std::vector<std::vector<int>>{{0, 2}, {1, 3}}));
  expect_sound(fixtures::f1(), f, ShfType{2, 2});
}

TEST(IsShf, NotEnoughColumns) {
  EXPECT_THROW(is_shf(fixtures::f1(), ShfType{2, 3}), std::invalid_argument);
}

TEST(IsShf, EleventhColumnAlwaysFails) {
  const Matrix t = fixtures::optimal_4x10();
  for (int code = 0; code < 256; code += 7) {
    const std::vector<Symbol> col{static_cast<Symbol>(code % 4), static_cast<Symbol>(code / 4 % 4),
                                  static_cast<Symbol>(code / 16 % 4), static_cast<Symbol>(code / 64)};
    const Matrix a = t.with_column(col);
    const Verdict v = is_shf(a, ShfType{2, 2});
    EXPECT_FALSE(v.is_shf);
    expect_sound(a, v, ShfType{2, 2});
    EXPECT_FALSE(incremental_check(a, ShfType{2, 2}, 10).is_shf);
  }
}

TEST(IsShf, FamilyCountIsExact) {
  // {2,2} families on n columns: C(n,2) * C(n-2,2) / 2.
  const Verdict v = is_shf(fixtures::optimal_4x10(), ShfType{2, 2});
  EXPECT_EQ(v.families_checked, 45u * 28u / 2u);
  // {1,1,5} on 7 columns: C(7,2) pairs of singletons, the rest forced.
  EXPECT_EQ(is_shf(fixtures::fano_strong(), ShfType{1, 1, 5}).families_checked, 21u);
}

TEST(IsShf, ThreadCountDoesNotChangeTheVerdict) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Matrix a = oracle::random_matrix(rng, 3, 7, 3);
    for (const ShfType& ty : {ShfType{2, 2}, ShfType{1, 1, 2}, ShfType{1, 2, 3}}) {
      const Verdict one = is_shf(a, ty);
      const Verdict four = is_shf(a, ty, {.threads = 4});
      EXPECT_EQ(one.is_shf, four.is_shf);
      EXPECT_EQ(one.witness, four.witness);
      EXPECT_EQ(one.families_checked, four.families_checked);
      EXPECT_EQ(one.rows_probed, four.rows_probed);
    }
  }
}

TEST(IsShf, AgreesWithNaiveEnumerator) {
  std::mt19937_64 rng(1);
  const std::vector<ShfType> types{ShfType{2, 2}, ShfType{1, 1, 2}, ShfType{1, 1}, ShfType{1, 3}, ShfType{1, 1, 1}};
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + trial % 4;
    const Matrix a = oracle::random_matrix(rng, 1 + trial % 3, n, 2 + trial % 2);
    for (const auto& ty : types) {
      const Verdict v = is_shf(a, ty);
      ASSERT_EQ(v.is_shf, oracle::naive_is_shf(a, ty)) << "trial " << trial << " type " << ty.to_string();
      expect_sound(a, v, ty);
    }
  }
}

TEST(IsShf, WideAlphabetPath) {
  // Alphabets above 64 use the wide symbol mask.
  std::vector<std::vector<int>> rows(2);
  for (int c = 0; c < 8; ++c) {
    rows[0].push_back(70 + c);
    rows[1].push_back(c % 2 == 0 ? 100 : 200);
  }
  const Matrix a(256, rows);
  EXPECT_TRUE(is_shf(a, ShfType{2, 3}).is_shf);
  // Columns 0 and 1 made equal in both rows cannot be told apart.
  rows[0][1] = 70;
  rows[1][1] = 100;
  const Matrix b(256, rows);
  EXPECT_EQ(is_shf(b, ShfType{1, 1}).is_shf, oracle::naive_is_shf(b, ShfType{1, 1}));
  EXPECT_FALSE(is_shf(b, ShfType{1, 1}).is_shf);
}

TEST(IncrementalCheck, BuildsOptimalMatrixColumnByColumn) {
  const Matrix t = fixtures::optimal_4x10();
  for (int k = 4; k <= 10; ++k) {
    std::vector<int> cols(static_cast<std::size_t>(k));
    std::iota(cols.begin(), cols.end(), 0);
    EXPECT_TRUE(incremental_check(t.select_columns(cols), ShfType{2, 2}, k - 1).is_shf);
  }
  const Matrix dup = t.with_column(t.column(3));
  EXPECT_FALSE(incremental_check(dup, ShfType{2, 2}, 10).is_shf);
}

TEST(IncrementalCheck, AgreesWithFullCheck) {
  // Prefixes are column subsets of a known SHF, so most of them qualify.
  std::mt19937_64 rng(3);
  const Matrix t = fixtures::optimal_4x10();
  std::uniform_int_distribution<int> sym(0, 3);
  int compared = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<int> cols(10);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    cols.resize(static_cast<std::size_t>(4 + trial % 6));
    std::vector<Symbol> extra(4);
    for (auto& x : extra) x = static_cast<Symbol>(sym(rng));
    const Matrix a = t.select_columns(cols).with_column(extra);
    for (const ShfType& ty : {ShfType{2, 2}, ShfType{1, 1, 2}, ShfType{1, 2, 2}}) {
      const int last = a.cols() - 1;
      if (ty.total() > last || !is_shf(a.without_column(last), ty).is_shf) continue;
      ++compared;
      const Verdict inc = incremental_check(a, ty, last);
      EXPECT_EQ(inc.is_shf, is_shf(a, ty).is_shf);
      if (!inc.is_shf) {
        expect_sound(a, inc, ty);
        bool has_new = false;
        for (const auto& p : inc.witness->parts) has_new = has_new || std::count(p.begin(), p.end(), last) > 0;
        EXPECT_TRUE(has_new);
      }
    }
  }
  EXPECT_GE(compared, 300);
}

TEST(IsShfProperties, MonotoneUnderColumnDeletion) {
  std::mt19937_64 rng(9);
  const Matrix t = fixtures::optimal_4x10();
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> cols(10);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    cols.resize(4 + trial % 6);
    std::sort(cols.begin(), cols.end());
    EXPECT_TRUE(is_shf(t.select_columns(cols), ShfType{2, 2}).is_shf);
  }
}

TEST(IsShfProperties, TypeCoarsening) {
  std::mt19937_64 rng(21);
  int positives = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Matrix a = oracle::random_matrix(rng, 3 + trial % 2, 5, 3 + trial % 2);
    if (is_shf(a, ShfType{1, 1, 2}).is_shf) {
      ++positives;
      EXPECT_TRUE(is_shf(a, ShfType{2, 2}).is_shf);
    }
  }
  EXPECT_GT(positives, 0);
}
