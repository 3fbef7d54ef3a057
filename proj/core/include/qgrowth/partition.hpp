#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qgrowth/errors.hpp"

namespace qgrowth {

/// Integer partition: weakly decreasing positive parts, trailing zeros trimmed.
/// Row indices are 1-based; reads past the last row give 0.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int operator[](int row) const {
    return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
  }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  /// Compact display: "4322" when every part is a single digit, "10,3" otherwise, "∅" when empty.
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// mu ≺ lambda: lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
bool interlaces(const Partition& mu, const Partition& lambda);

/// lambda + e_j when it is still a partition.
std::optional<Partition> add_box(const Partition& lambda, int j);

/// Row j such that to = from + e_j, if any.
std::optional<int> added_row(const Partition& from, const Partition& to);

/// Adds a box at the largest admissible row index <= k.
Partition op_I(const Partition& lambda, int k);

/// All shapes reachable by one box at rows <= k, sorted, duplicates removed.
std::vector<Partition> lambda_set(const Partition& lambda, int k);
/// lambda_set with k = length + 1: every way to add one box.
std::vector<Partition> lambda_set(const Partition& lambda);

/// lambda + e_i where i = max({i <= j : mu_{i-1} > lambda_i} ∪ {1}).
Partition op_I_rel(const Partition& lambda, const Partition& mu, int j);

/// Every partition of exactly n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

}  // namespace qgrowth
