#include "qgrowth/tableau.hpp"

#include <algorithm>
#include <numeric>

namespace qgrowth {

ShapeChain::ShapeChain(std::vector<Partition> shapes) : shapes_(std::move(shapes)) {
  if (shapes_.empty() || !shapes_.front().empty()) throw ValidationError("shape chain must start at the empty partition");
  for (std::size_t i = 1; i < shapes_.size(); ++i)
    if (!interlaces(shapes_[i - 1], shapes_[i]))
      throw ValidationError("shape chain breaks interlacing at level " + std::to_string(i) + ": " +
                            shapes_[i - 1].to_string() + " vs " + shapes_[i].to_string());
}

ShapeChain ShapeChain::empty(int level_bound) {
  if (level_bound < 0) throw ValidationError("level bound must be nonnegative");
  return ShapeChain(std::vector<Partition>(static_cast<std::size_t>(level_bound) + 1));
}

ShapeChain ShapeChain::extended(const Partition& next) const {
  auto shapes = shapes_;
  shapes.push_back(next);
  return ShapeChain(std::move(shapes));
}

std::string ShapeChain::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < shapes_.size(); ++i) {
    if (i > 0) out += "≺";
    out += shapes_[i].to_string();
  }
  return out;
}

bool is_standard(const ShapeChain& chain) {
  for (int m = 1; m <= chain.level_bound(); ++m)
    if (!added_row(chain[m - 1], chain[m])) return false;
  return true;
}

ShapeChain rows_to_chain(const TableauRows& rows, int level_bound) {
  if (level_bound < 0) throw ValidationError("level bound must be nonnegative");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.empty()) throw ValidationError("tableau row " + std::to_string(r + 1) + " is empty");
    if (r > 0 && row.size() > rows[r - 1].size())
      throw ValidationError("tableau row " + std::to_string(r + 1) + " is longer than the row above");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > level_bound)
        throw ValidationError("tableau entry " + std::to_string(row[c]) + " outside [1," + std::to_string(level_bound) +
                              "]");
      if (c > 0 && row[c] < row[c - 1])
        throw ValidationError("tableau row " + std::to_string(r + 1) + " is not weakly increasing");
      if (r > 0 && row[c] <= rows[r - 1][c])
        throw ValidationError("tableau column " + std::to_string(c + 1) + " is not strictly increasing");
    }
  }
  std::vector<Partition> shapes;
  shapes.reserve(static_cast<std::size_t>(level_bound) + 1);
  for (int k = 0; k <= level_bound; ++k) {
    std::vector<int> parts;
    for (const auto& row : rows) {
      const auto count = std::count_if(row.begin(), row.end(), [k](int e) { return e <= k; });
      parts.push_back(static_cast<int>(count));
    }
    shapes.emplace_back(std::move(parts));
  }
  return ShapeChain(std::move(shapes));
}

TableauRows chain_to_rows(const ShapeChain& chain) {
  TableauRows rows(static_cast<std::size_t>(chain.top().length()));
  for (int k = 1; k <= chain.level_bound(); ++k) {
    const Partition& lo = chain[k - 1];
    const Partition& hi = chain[k];
    for (int j = 1; j <= hi.length(); ++j)
      rows[static_cast<std::size_t>(j - 1)].insert(rows[static_cast<std::size_t>(j - 1)].end(),
                                                    static_cast<std::size_t>(hi[j] - lo[j]), k);
  }
  return rows;
}

void Word::validate() const {
  if (alphabet_bound < 0) throw ValidationError("alphabet bound must be nonnegative");
  for (int a : letters)
    if (a < 1 || a > alphabet_bound)
      throw LetterOutOfRange("letter " + std::to_string(a) + " outside [1," + std::to_string(alphabet_bound) + "]");
}

Word Word::reversed() const { return Word{{letters.rbegin(), letters.rend()}, alphabet_bound}; }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
      throw NotAPermutation("not a permutation of [" + std::to_string(size()) + "]");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t m = 0; m < images_.size(); ++m) inv[static_cast<std::size_t>(images_[m] - 1)] = static_cast<int>(m) + 1;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() < 10;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

Permutation inverse(const Permutation& sigma) { return sigma.inverse(); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Word> all_words(int alphabet_bound, int length) {
  std::vector<Word> out;
  if (alphabet_bound < 1 && length > 0) return out;
  std::vector<int> letters(static_cast<std::size_t>(length), 1);
  while (true) {
    out.push_back(Word{letters, alphabet_bound});
    int pos = length - 1;
    while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == alphabet_bound) {
      letters[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++letters[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace qgrowth
