#pragma once

#include <vector>

#include "qgrowth/tableau.hpp"

namespace qgrowth {

enum class InsertionAlgo { column, row };

/// Classical column insertion of letter k, as a recursion on the shape chain.
ShapeChain col_insert(const ShapeChain& p, int k);
/// Classical row insertion of letter k.
ShapeChain row_insert(const ShapeChain& p, int k);
ShapeChain insert_letter(InsertionAlgo algo, const ShapeChain& p, int k);

struct TableauPair {
  ShapeChain p;
  RecordingChain q;

  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

TableauPair insert_word(InsertionAlgo algo, const Word& w);

/// P(0), P(1), ..., P(n) while inserting w letter by letter. Entry [m][k] is the
/// label of vertex (m, k) in the word's growth diagram.
std::vector<ShapeChain> insertion_history(InsertionAlgo algo, const Word& w);

enum class FillOrder { column_major, row_major };

/// Labels of the n x n growth diagram of sigma computed by the local rules;
/// grid[m][k] is the shape at vertex (m, k), with ∅ on the left and bottom edges.
std::vector<std::vector<Partition>> classical_growth_grid(const Permutation& sigma,
                                                          FillOrder order = FillOrder::column_major);

/// (P, Q) read off the right and top edges of the growth diagram.
TableauPair classical_growth(const Permutation& sigma, FillOrder order = FillOrder::column_major);

/// The deterministic local rule for one box of a permutation growth diagram.
Partition classical_local_rule(const Partition& lambda, const Partition& mu1, const Partition& mu2, bool has_x);

}  // namespace qgrowth
