#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include "qgrowth/partition.hpp"

namespace qgrowth {

/// A tableau with entries <= level_bound, stored as the shapes of its subtableaux:
/// ∅ = shape(0) ≺ shape(1) ≺ ... ≺ shape(level_bound).
class ShapeChain {
 public:
  ShapeChain() : shapes_{Partition{}} {}
  /// Validates that the chain starts at ∅ and adjacent shapes interlace.
  explicit ShapeChain(std::vector<Partition> shapes);
  /// The tableau with no entries over the alphabet [level_bound].
  static ShapeChain empty(int level_bound);

  int level_bound() const { return static_cast<int>(shapes_.size()) - 1; }
  const Partition& operator[](int level) const { return shapes_.at(static_cast<std::size_t>(level)); }
  const Partition& top() const { return shapes_.back(); }
  const std::vector<Partition>& shapes() const { return shapes_; }

  /// Copy with one more level whose shape is `next`; validates the interlacing.
  ShapeChain extended(const Partition& next) const;

  friend bool operator==(const ShapeChain&, const ShapeChain&) = default;
  friend auto operator<=>(const ShapeChain&, const ShapeChain&) = default;

  /// Display form "∅≺2≺2≺31".
  std::string to_string() const;

 private:
  std::vector<Partition> shapes_;
};

/// Recording tableaux are shape chains that grow by exactly one box per step.
using RecordingChain = ShapeChain;

/// True when every step of the chain adds exactly one box (a standard tableau).
bool is_standard(const ShapeChain& chain);

using TableauRows = std::vector<std::vector<int>>;

/// Row-array tableau to shape chain; throws ValidationError for non-tableaux or entries > level_bound.
ShapeChain rows_to_chain(const TableauRows& rows, int level_bound);
TableauRows chain_to_rows(const ShapeChain& chain);

struct Word {
  std::vector<int> letters;
  int alphabet_bound = 0;

  /// Checks 1 <= letter <= alphabet_bound.
  void validate() const;
  Word reversed() const;
};

class Permutation {
 public:
  Permutation() = default;
  /// images[m-1] = sigma(m); must be a bijection on [n].
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int m) const { return images_.at(static_cast<std::size_t>(m - 1)); }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  Word as_word() const { return Word{images_, size()}; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_string() const;

 private:
  std::vector<int> images_;
};

Permutation inverse(const Permutation& sigma);

/// All permutations of [n] in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// All words of the given length over [alphabet_bound], lexicographic.
std::vector<Word> all_words(int alphabet_bound, int length);

inline std::ostream& operator<<(std::ostream& os, const ShapeChain& c) { return os << c.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Permutation& s) { return os << s.to_string(); }

}  // namespace qgrowth
