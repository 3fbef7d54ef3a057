#include "qgrowth/growth.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qgrowth/rules.hpp"

namespace qgrowth {

GrowthVariant growth_variant_by_name(const std::string& name) {
  if (name == "qcol") return GrowthVariant::qcol;
  if (name == "qrow") return GrowthVariant::qrow;
  throw std::invalid_argument("no growth-graph local rules for '" + name + "' (expected qcol or qrow)");
}

std::string to_string(GrowthVariant v) { return v == GrowthVariant::qcol ? "qcol" : "qrow"; }

BranchingRule rule_for(GrowthVariant v) { return v == GrowthVariant::qcol ? qcol_rule() : qrow_rule(); }

namespace {

QRat one_minus(int a) { return QRat::one_minus_qpow(static_cast<std::size_t>(a)); }
QRat qpow(int a) { return QRat::qpow(static_cast<std::size_t>(a)); }

void push(Branches& out, const std::optional<Partition>& shape, QRat w) {
  if (w.is_zero()) return;
  if (!shape) throw std::logic_error("local rule gave nonzero weight to a non-partition");
  out.push_back({*shape, std::move(w)});
}

Branches qcol_case1(const Partition& lambda) {
  Branches out;
  for (int j = lambda.length() + 1; j >= 2; --j) push(out, add_box(lambda, j), qpow(lambda[j]) - qpow(lambda[j - 1]));
  push(out, add_box(lambda, 1), qpow(lambda[1]));
  return out;
}

Branches qcol_case5(const Partition& lambda, const Partition& mu, int i) {
  if (i == 1) return {{*add_box(mu, 1), QRat(1)}};
  const int d = lambda[i - 1] - lambda[i];
  const QRat scale = one_minus(1) / one_minus(d);
  Branches out;
  push(out, add_box(mu, i), one_minus(d - 1) / one_minus(d));
  for (int j = i - 1; j >= 2; --j)
    push(out, add_box(mu, j), scale * qpow(lambda[j] - lambda[i] - 1) * one_minus(lambda[j - 1] - lambda[j]));
  push(out, add_box(mu, 1), scale * qpow(lambda[1] - lambda[i] - 1));
  return out;
}

Branches qrow_case5(const Partition& lambda, const Partition& mu, int i) {
  const QRat split = i == 1 ? one_minus(1) : one_minus(1) / one_minus(lambda[i - 1] - lambda[i]);
  Branches out;
  push(out, add_box(mu, i + 1), split);
  push(out, add_box(mu, i), QRat(1) - split);
  return out;
}

}  // namespace

LocalRuleResult local_rule(GrowthVariant v, const Partition& lambda, const Partition& mu1, const Partition& mu2,
                           bool has_x) {
  const bool west_same = mu1 == lambda;
  const bool south_same = mu2 == lambda;
  const auto i = added_row(lambda, mu1);
  const auto j = added_row(lambda, mu2);
  if ((!west_same && !i) || (!south_same && !j))
    throw ValidationError("box corners " + lambda.to_string() + ", " + mu1.to_string() + ", " + mu2.to_string() +
                          " are not a connected triplet");
  if (has_x) {
    if (!west_same || !south_same) throw ValidationError("X-box must have equal corner shapes");
    if (v == GrowthVariant::qcol) return {GrowthCase::case1, qcol_case1(lambda)};
    return {GrowthCase::case1, {{*add_box(lambda, 1), QRat(1)}}};
  }
  if (west_same && south_same) return {GrowthCase::boring, {{lambda, QRat(1)}}};
  if (west_same) return {GrowthCase::case2, {{mu2, QRat(1)}}};
  if (south_same) return {GrowthCase::case3, {{mu1, QRat(1)}}};
  if (*i != *j) return {GrowthCase::case4, {{*add_box(mu1, *j), QRat(1)}}};
  if (v == GrowthVariant::qcol) return {GrowthCase::case5, qcol_case5(lambda, mu1, *i)};
  return {GrowthCase::case5, qrow_case5(lambda, mu1, *i)};
}

// ---------------------------------------------------------------- dynamic programming

namespace {

using Column = std::vector<Partition>;
using State = std::pair<Column, Column>;  // current column labels, top-edge labels so far

struct Walker {
  GrowthVariant v;
  int n;
  int x_row;
  const Column& prev;
  Column current;

  template <class Sink>
  void run(int k, const QRat& w, Sink&& sink) {
    if (k > n) {
      sink(current, w);
      return;
    }
    const auto res = local_rule(v, prev[k - 1], prev[k], current[k - 1], x_row == k);
    for (const auto& b : res.branches) {
      current[k] = b.shape;
      run(k + 1, w * b.weight, sink);
    }
  }
};

}  // namespace

WeightedPairSet growth_compute(GrowthVariant v, const Permutation& sigma, GrowthOptions options) {
  const int n = sigma.size();
  std::vector<std::pair<State, QRat>> states{{State{Column(n + 1), Column(1)}, QRat(1)}};
  for (int m = 1; m <= n; ++m) {
    std::vector<std::pair<State, QRat>> next;
    for (const auto& [state, w] : states) {
      Walker walker{v, n, sigma(m), state.first, Column(n + 1)};
      walker.run(1, w, [&](const Column& col, const QRat& weight) {
        Column top = state.second;
        top.push_back(col[n]);
        next.push_back({State{col, std::move(top)}, weight});
      });
    }
    if (options.merge_per_column) {
      std::map<State, QRat> merged;
      for (auto& [s, w] : next) {
        auto [it, inserted] = merged.try_emplace(s, w);
        if (!inserted) it->second += w;
      }
      next.clear();
      for (auto& [s, w] : merged)
        if (!w.is_zero()) next.push_back({s, w});
    }
    states = std::move(next);
  }
  WeightedPairSet out;
  for (const auto& [s, w] : states) out.add(ShapeChain(s.first), ShapeChain(s.second), w);
  return out;
}

// ---------------------------------------------------------------- explicit graph

const GrowthNode& GrowthGraph::node(int m, int k, int branch) const {
  return nodes.at(static_cast<std::size_t>(at.at(m).at(k).at(branch)));
}

GrowthGraph build_growth_graph(GrowthVariant v, const Permutation& sigma) {
  GrowthGraph g;
  g.variant = v;
  g.sigma = sigma;
  const int n = sigma.size();
  g.at.assign(n + 1, std::vector<std::vector<int>>(n + 1));
  auto add_node = [&g](GrowthNode node) {
    g.at[node.m][node.k].push_back(static_cast<int>(g.nodes.size()));
    g.nodes.push_back(std::move(node));
  };
  for (int m = 0; m <= n; ++m) add_node(GrowthNode{m, 0, 0, {}, -1, -1, QRat(1), GrowthCase::boring});
  for (int k = 1; k <= n; ++k) add_node(GrowthNode{0, k, 0, {}, -1, -1, QRat(1), GrowthCase::boring});
  for (int m = 1; m <= n; ++m) g.x_marks.emplace_back(m, sigma(m));

  auto southwest_of_west = [&g](int id) {
    const auto& w = g.nodes[id];
    return w.m == 0 ? g.at[0][w.k - 1][0] : w.south;
  };
  auto southwest_of_south = [&g](int id) {
    const auto& s = g.nodes[id];
    return s.k == 0 ? g.at[s.m - 1][0][0] : s.west;
  };

  for (int m = 1; m <= n; ++m) {
    for (int k = 1; k <= n; ++k) {
      std::multimap<int, int> south_by_sw;
      for (int s : g.at[m][k - 1]) south_by_sw.emplace(southwest_of_south(s), s);
      int branch = 0;
      for (int w : g.at[m - 1][k]) {
        const int sw = southwest_of_west(w);
        auto [lo, hi] = south_by_sw.equal_range(sw);
        for (auto it = lo; it != hi; ++it) {
          const int s = it->second;
          auto res = local_rule(v, g.nodes[sw].label, g.nodes[w].label, g.nodes[s].label, sigma(m) == k);
          for (auto& b : res.branches)
            add_node(GrowthNode{m, k, branch++, std::move(b.shape), w, s, std::move(b.weight), res.growth_case});
        }
      }
    }
  }
  return g;
}

WeightedPairSet graph_pairs(const GrowthGraph& g) {
  const int n = g.n();
  std::vector<QRat> cumulative(g.nodes.size(), QRat(1));
  for (std::size_t id = 0; id < g.nodes.size(); ++id) {
    const auto& node = g.nodes[id];
    if (node.west < 0) continue;
    const auto& west = g.nodes[node.west];
    const int sw = west.m == 0 ? g.at[0][west.k - 1][0] : west.south;
    cumulative[id] = node.weight * cumulative[node.west] * cumulative[node.south] / cumulative[sw];
  }
  WeightedPairSet out;
  for (int id : g.at[n][n]) {
    Column p(n + 1);
    Column q(n + 1);
    for (int cur = id; cur >= 0; cur = g.nodes[cur].south) p[g.nodes[cur].k] = g.nodes[cur].label;
    for (int cur = id; cur >= 0; cur = g.nodes[cur].west) q[g.nodes[cur].m] = g.nodes[cur].label;
    out.add(ShapeChain(std::move(p)), ShapeChain(std::move(q)), cumulative[id]);
  }
  return out;
}

}  // namespace qgrowth
