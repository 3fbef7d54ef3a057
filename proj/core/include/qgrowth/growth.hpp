#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qgrowth/branching.hpp"

namespace qgrowth {

enum class GrowthVariant { qcol, qrow };

/// "qcol" or "qrow"; other names (including "dyn3") throw std::invalid_argument.
GrowthVariant growth_variant_by_name(const std::string& name);
std::string to_string(GrowthVariant v);
BranchingRule rule_for(GrowthVariant v);

/// Box corners: lambda southwest, mu1 west (northwest), mu2 south (southeast).
enum class GrowthCase {
  boring,  // lambda = mu1 = mu2, no X
  case1,   // X in the box
  case2,   // lambda = mu1 != mu2
  case3,   // lambda = mu2 != mu1
  case4,   // mu1, mu2 add boxes in different rows
  case5,   // mu1 = mu2 = lambda + e_i
};

struct LocalRuleResult {
  GrowthCase growth_case;
  Branches branches;
};

/// Weighted labels for the northeast corner of one box. Throws ValidationError
/// when the corners are not a connected triplet or an X sits on unequal corners.
LocalRuleResult local_rule(GrowthVariant v, const Partition& lambda, const Partition& mu1, const Partition& mu2,
                           bool has_x);

struct GrowthOptions {
  /// Merge equal states after every column; otherwise only at the end.
  bool merge_per_column = true;
};

/// Column-by-column dynamic programming over the growth graph of sigma.
/// P is read off the right edge, Q off the top edge.
WeightedPairSet growth_compute(GrowthVariant v, const Permutation& sigma, GrowthOptions options = {});

struct GrowthNode {
  int m = 0;
  int k = 0;
  int branch = 0;
  Partition label;
  /// Indices of the parent nodes at (m-1, k) and (m, k-1); -1 on the boundary.
  int west = -1;
  int south = -1;
  /// Weight of both incoming edges.
  QRat weight{1};
  GrowthCase growth_case = GrowthCase::boring;
};

/// The full branching lattice. A node is determined by its two parents and its
/// label; the parents must descend from the same southwest node.
struct GrowthGraph {
  GrowthVariant variant = GrowthVariant::qcol;
  Permutation sigma;
  std::vector<GrowthNode> nodes;
  /// at[m][k] lists node indices at lattice point (m, k) in branch order.
  std::vector<std::vector<std::vector<int>>> at;
  /// (m, sigma(m)) for every column.
  std::vector<std::pair<int, int>> x_marks;

  int n() const { return sigma.size(); }
  const GrowthNode& node(int m, int k, int branch) const;
};

/// Branch ids at each lattice point follow parent order, then descending target row.
GrowthGraph build_growth_graph(GrowthVariant v, const Permutation& sigma);

/// Weighted pairs read from the genealogies ending at (n, n).
WeightedPairSet graph_pairs(const GrowthGraph& g);

}  // namespace qgrowth
