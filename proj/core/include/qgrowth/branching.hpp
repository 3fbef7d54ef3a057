#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qgrowth/qrat.hpp"
#include "qgrowth/tableau.hpp"

namespace qgrowth {

/// (λ^{i-1}, λ^i, λ̃^{i-1}): the old shapes at levels i-1 and i and the new shape at level i-1.
/// The branching at level i depends on nothing else.
struct Triplet {
  Partition prev_lower;
  Partition prev_upper;
  Partition new_lower;

  friend bool operator==(const Triplet&, const Triplet&) = default;
  friend auto operator<=>(const Triplet&, const Triplet&) = default;

  std::string to_string() const;
};

struct Branch {
  Partition shape;
  QRat weight;

  friend bool operator==(const Branch&, const Branch&) = default;
};
using Branches = std::vector<Branch>;

enum class Phase {
  initial,  // level == letter
  high,     // level > letter
  low,      // level < letter
};

/// Where in the insertion of a letter a branching happens.
struct InsertionStep {
  int letter = 1;
  int level = 1;
};

/// A branching insertion algorithm given by its three weight enumerators.
/// Each enumerator lists the successor shapes λ̃^i with nonzero weight.
struct BranchingRule {
  using Enumerator = std::function<Branches(const Triplet&, InsertionStep)>;

  std::string name;
  Enumerator initial;
  Enumerator high;
  Enumerator low;

  Branches branches(Phase phase, const Triplet& t, InsertionStep step) const;
};

/// The low-level enumerator shared by every rule: keep λ^i unchanged with weight 1.
Branches keep_upper(const Triplet& t, InsertionStep step);

using WeightedChains = std::map<ShapeChain, QRat>;

/// Finite map (P, Q) -> nonzero weight, merged by exact key equality.
class WeightedPairSet {
 public:
  using Key = std::pair<ShapeChain, RecordingChain>;
  using Map = std::map<Key, QRat>;

  /// The starting point of word insertion: {(∅-chain, ∅): 1}.
  static WeightedPairSet unit(int level_bound);

  /// Adds weight to (p, q); entries whose weight cancels to zero are removed.
  void add(const ShapeChain& p, const RecordingChain& q, const QRat& weight);
  void merge(const WeightedPairSet& other);

  const QRat& weight(const ShapeChain& p, const RecordingChain& q) const;
  QRat total() const;
  WeightedPairSet swapped() const;
  /// Every weight evaluated at q0, as an exact rational.
  std::map<Key, Rational> evaluated(const Rational& q0) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Map::const_iterator begin() const { return entries_.begin(); }
  Map::const_iterator end() const { return entries_.end(); }

  friend bool operator==(const WeightedPairSet&, const WeightedPairSet&) = default;

 private:
  Map entries_;
};

/// Inserts letter k into P by expanding the triplet tree level by level and
/// multiplying edge weights along each genealogy. Equal output chains are merged.
WeightedChains branch_insert_letter(const BranchingRule& rule, const ShapeChain& p, int k);

struct WordInsertOptions {
  /// Merge equal (P, Q) pairs after every letter; otherwise only at the end.
  bool merge_each_letter = true;
};

WeightedPairSet branch_insert_word(const BranchingRule& rule, const Word& w, WordInsertOptions options = {});

// ---------------------------------------------------------------- symmetry conditions

struct ConditionViolation {
  /// "i", "ii", "iii" or "iv".
  std::string condition;
  Triplet triplet;
  InsertionStep step;
  /// Second step used when comparing across letters; equals `step` otherwise.
  InsertionStep other_step;
  std::string detail;
};

struct ConditionReport {
  std::string rule;
  int size_bound = 0;
  int letter_bound = 0;
  std::size_t triplets_checked = 0;
  std::vector<ConditionViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Exhaustively checks the four sufficient conditions for the symmetry property
/// over every realisable triplet with shapes of size <= size_bound and letters,
/// levels <= letter_bound.
ConditionReport check_conditions(const BranchingRule& rule, int size_bound, int letter_bound);

}  // namespace qgrowth
