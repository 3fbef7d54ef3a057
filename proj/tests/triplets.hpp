#pragma once

#include <functional>
#include <vector>

#include "qgrowth/branching.hpp"

namespace testing_support {

using qgrowth::Partition;

inline std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int s = 0; s <= n; ++s)
    for (auto& p : qgrowth::partitions_of(s)) out.push_back(p);
  return out;
}

/// Calls fn(phase, triplet, step) for every triplet an insertion can meet with
/// shapes of size <= size_bound and letters, levels <= level_bound.
inline void for_each_triplet(
    int size_bound, int level_bound,
    const std::function<void(qgrowth::Phase, const qgrowth::Triplet&, qgrowth::InsertionStep)>& fn) {
  const auto shapes = partitions_up_to(size_bound);
  for (int level = 1; level <= level_bound; ++level)
    for (const auto& mu : shapes) {
      if (mu.length() >= level) continue;
      for (const auto& la : shapes) {
        if (la.length() > level || !qgrowth::interlaces(mu, la)) continue;
        fn(qgrowth::Phase::initial, {mu, la, mu}, {level, level});
        fn(qgrowth::Phase::low, {mu, la, mu}, {level + 1, level});
        for (int j = 1; j < level; ++j) {
          auto nu = qgrowth::add_box(mu, j);
          if (nu && nu->length() < level) fn(qgrowth::Phase::high, {mu, la, *nu}, {1, level});
        }
      }
    }
}

}  // namespace testing_support
