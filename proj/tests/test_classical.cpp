#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qgrowth/classical.hpp"

namespace {

using namespace qgrowth;

const TableauRows kExample{{1, 1, 3, 4}, {3, 5, 8}, {6, 7}, {8, 8}};

ShapeChain chain(std::initializer_list<Partition> shapes) { return ShapeChain(std::vector<Partition>(shapes)); }

// ---------------------------------------------------------------- tableaux

TEST(Tableau, RowsToChain) {
  EXPECT_EQ(rows_to_chain(kExample, 8),
            chain({{}, {2}, {2}, {3, 1}, {4, 1}, {4, 2}, {4, 2, 1}, {4, 2, 2}, {4, 3, 2, 2}}));
  EXPECT_EQ(rows_to_chain({}, 1), chain({{}, {}}));
  EXPECT_EQ(rows_to_chain({{1}}, 1), chain({{}, {1}}));
  EXPECT_EQ(rows_to_chain(kExample, 8).to_string(), "∅≺2≺2≺31≺41≺42≺421≺422≺4322");
}

TEST(Tableau, RejectsNonTableaux) {
  EXPECT_THROW(rows_to_chain({{2, 1}}, 3), ValidationError);
  EXPECT_THROW(rows_to_chain({{1, 2}, {1}}, 3), ValidationError);
  EXPECT_THROW(rows_to_chain({{1}, {2, 3}}, 3), ValidationError);
  EXPECT_THROW(rows_to_chain({{1, 4}}, 3), ValidationError);
  EXPECT_THROW(rows_to_chain({{}}, 3), ValidationError);
  EXPECT_THROW(ShapeChain(std::vector<Partition>{{}, {2, 1}}), ValidationError);
}

TEST(Tableau, RoundTripsEveryWordTableau) {
  for (const Word& w : all_words(3, 4)) {
    TableauRows rows;
    for (int a : w.letters) rows = oracle::bump_row(rows, a);
    const ShapeChain c = rows_to_chain(rows, 3);
    EXPECT_EQ(chain_to_rows(c), rows);
    EXPECT_EQ(rows_to_chain(chain_to_rows(c), 3), c);
  }
}

TEST(Tableau, StandardPredicate) {
  EXPECT_TRUE(is_standard(chain({{}, {1}, {2}, {2, 1}})));
  EXPECT_FALSE(is_standard(chain({{}, {2}, {2, 1}})));
  EXPECT_FALSE(is_standard(chain({{}, {1}, {1}})));
}

TEST(Permutation, Inverse) {
  EXPECT_EQ(inverse(Permutation::identity(4)), Permutation::identity(4));
  EXPECT_EQ(inverse(Permutation({2, 1})), Permutation({2, 1}));
  EXPECT_EQ(inverse(Permutation({1, 4, 2, 3})), Permutation({1, 3, 4, 2}));
  for (const auto& s : all_permutations(4)) {
    const auto inv = s.inverse();
    for (int m = 1; m <= 4; ++m) EXPECT_EQ(inv(s(m)), m);
  }
  EXPECT_THROW(Permutation({1, 1}), NotAPermutation);
  EXPECT_THROW(Permutation({0, 1}), NotAPermutation);
  EXPECT_EQ(all_permutations(5).size(), 120u);
}

TEST(Word, Validation) {
  EXPECT_THROW((Word{{1, 4}, 3}).validate(), LetterOutOfRange);
  EXPECT_NO_THROW((Word{{1, 3}, 3}).validate());
  EXPECT_EQ(all_words(2, 3).size(), 8u);
  EXPECT_EQ(all_words(3, 0).size(), 1u);
}

// ---------------------------------------------------------------- insertion

TEST(Classical, ColumnInsertionExample) {
  const auto p = rows_to_chain(kExample, 8);
  EXPECT_EQ(col_insert(p, 6), chain({{}, {2}, {2}, {3, 1}, {4, 1}, {4, 2}, {4, 2, 2}, {4, 3, 2}, {4, 4, 2, 2}}));
}

TEST(Classical, RowInsertionExample) {
  const auto p = rows_to_chain(kExample, 8);
  EXPECT_EQ(row_insert(p, 3),
            chain({{}, {2}, {2}, {4, 1}, {4, 2}, {4, 2, 1}, {4, 2, 1, 1}, {4, 2, 2, 1}, {4, 3, 2, 2, 1}}));
}

TEST(Classical, LetterOutOfRange) {
  EXPECT_THROW(col_insert(ShapeChain::empty(2), 3), LetterOutOfRange);
  EXPECT_THROW(row_insert(ShapeChain::empty(2), 0), LetterOutOfRange);
}

TEST(Classical, MatchesBumpingOnRows) {
  for (int n = 0; n <= 5; ++n)
    for (const Word& w : all_words(3, n)) {
      TableauRows col_rows, row_rows;
      for (int a : w.letters) {
        col_rows = oracle::bump_column(col_rows, a);
        row_rows = oracle::bump_row(row_rows, a);
      }
      EXPECT_EQ(chain_to_rows(insert_word(InsertionAlgo::column, w).p), col_rows);
      EXPECT_EQ(chain_to_rows(insert_word(InsertionAlgo::row, w).p), row_rows);
    }
}

TEST(Classical, WordExample) {
  const auto [p, q] = insert_word(InsertionAlgo::column, Word{{3, 1, 3, 4, 2}, 4});
  EXPECT_EQ(chain_to_rows(p), (TableauRows{{1, 3, 3}, {2}, {4}}));
  EXPECT_EQ(chain_to_rows(q), (TableauRows{{1, 2, 5}, {3}, {4}}));
}

TEST(Classical, WordExampleGrowthLabels) {
  // [m][k-1] for k = 1..4
  const std::vector<std::vector<Partition>> expected{
      {{}, {}, {1}, {1}},
      {{1}, {1}, {2}, {2}},
      {{1}, {1}, {2, 1}, {2, 1}},
      {{1}, {1}, {2, 1}, {2, 1, 1}},
      {{1}, {1, 1}, {3, 1}, {3, 1, 1}},
  };
  const auto history = insertion_history(InsertionAlgo::column, Word{{3, 1, 3, 4, 2}, 4});
  for (int m = 1; m <= 5; ++m)
    for (int k = 1; k <= 4; ++k)
      EXPECT_EQ(history[m][k], expected[m - 1][k - 1]) << "vertex (" << m << "," << k << ")";
  EXPECT_EQ(history[5][4], Partition({3, 1, 1}));
}

TEST(Classical, ShapesAgreeAndQIsStandard) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& s : all_permutations(n)) {
      const auto [p, q] = insert_word(InsertionAlgo::column, s.as_word());
      EXPECT_EQ(p.top(), q.top());
      EXPECT_TRUE(is_standard(q));
    }
}

TEST(Classical, SymmetryUnderInverse) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& s : all_permutations(n)) {
      const auto a = insert_word(InsertionAlgo::column, s.as_word());
      const auto b = insert_word(InsertionAlgo::column, s.inverse().as_word());
      ASSERT_EQ(b.p, a.q) << s.to_string();
      ASSERT_EQ(b.q, a.p) << s.to_string();
    }
}

TEST(Classical, ColumnRowDuality) {
  for (int ell = 1; ell <= 3; ++ell)
    for (int n = 0; n <= 5; ++n)
      for (const Word& w : all_words(ell, n))
        EXPECT_EQ(insert_word(InsertionAlgo::column, w).p, insert_word(InsertionAlgo::row, w.reversed()).p);
}

// ---------------------------------------------------------------- growth diagrams

TEST(ClassicalGrowth, SmallCases) {
  const auto one = classical_growth(Permutation({1}));
  EXPECT_EQ(one.p, chain({{}, {1}}));
  EXPECT_EQ(one.q, chain({{}, {1}}));
  const auto two = classical_growth(Permutation({2, 1}));
  EXPECT_EQ(chain_to_rows(two.p), (TableauRows{{1, 2}}));
  EXPECT_EQ(chain_to_rows(two.q), (TableauRows{{1, 2}}));
  EXPECT_EQ(classical_growth(Permutation({1, 4, 2, 3})), insert_word(InsertionAlgo::column, Word{{1, 4, 2, 3}, 4}));
}

TEST(ClassicalGrowth, AgreesWithInsertion) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& s : all_permutations(n)) {
      ASSERT_EQ(classical_growth(s), insert_word(InsertionAlgo::column, s.as_word())) << s.to_string();
      const auto grid = classical_growth_grid(s);
      const auto history = insertion_history(InsertionAlgo::column, s.as_word());
      for (int m = 0; m <= n; ++m)
        for (int k = 0; k <= n; ++k) ASSERT_EQ(grid[m][k], history[m][k]);
    }
}

TEST(ClassicalGrowth, FillOrderIrrelevant) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& s : all_permutations(n))
      EXPECT_EQ(classical_growth_grid(s, FillOrder::column_major), classical_growth_grid(s, FillOrder::row_major));
}

TEST(ClassicalGrowth, LocalRuleCases) {
  EXPECT_EQ(classical_local_rule({2, 1}, {2, 1}, {2, 1}, true), Partition({2, 1, 1}));
  EXPECT_EQ(classical_local_rule({2}, {2}, {3}, false), Partition({3}));
  EXPECT_EQ(classical_local_rule({2}, {2, 1}, {2}, false), Partition({2, 1}));
  EXPECT_EQ(classical_local_rule({1}, {2}, {1, 1}, false), Partition({2, 1}));
  EXPECT_EQ(classical_local_rule({2}, {2, 1}, {2, 1}, false), Partition({2, 2}));
  EXPECT_EQ(classical_local_rule({2, 2}, {2, 2, 1}, {2, 2, 1}, false), Partition({2, 2, 2}));
  EXPECT_EQ(classical_local_rule({2, 2}, {3, 2}, {3, 2}, false), Partition({4, 2}));
  EXPECT_THROW(classical_local_rule({1}, {2}, {1}, true), ValidationError);
}

}  // namespace
