#include "qgrowth/classical.hpp"

#include <string>

namespace qgrowth {

namespace {

void check_letter(const ShapeChain& p, int k) {
  if (k < 1 || k > p.level_bound())
    throw LetterOutOfRange("letter " + std::to_string(k) + " outside [1," + std::to_string(p.level_bound()) + "]");
}

}  // namespace

ShapeChain col_insert(const ShapeChain& p, int k) {
  check_letter(p, k);
  const int ell = p.level_bound();
  std::vector<Partition> out(p.shapes().begin(), p.shapes().end());
  int j_prev = k;
  for (int i = k; i <= ell; ++i) {
    const Partition& lower = p[i - 1];
    const Partition& upper = p[i];
    int j = 1;
    for (int cand = j_prev; cand >= 2; --cand) {
      if (lower[cand - 1] > upper[cand]) {
        j = cand;
        break;
      }
    }
    out[static_cast<std::size_t>(i)] = *add_box(upper, j);
    j_prev = j;
  }
  return ShapeChain(std::move(out));
}

ShapeChain row_insert(const ShapeChain& p, int k) {
  check_letter(p, k);
  const int ell = p.level_bound();
  std::vector<Partition> out(p.shapes().begin(), p.shapes().end());
  int start = k;
  for (int row = 1; start <= ell; ++row) {
    int stop = ell + 1;
    for (int cand = start + 1; cand <= ell; ++cand) {
      if (p[cand][row] > p[cand - 1][row]) {
        stop = cand;
        break;
      }
    }
    for (int i = start; i < stop; ++i) out[static_cast<std::size_t>(i)] = *add_box(p[i], row);
    start = stop;
  }
  return ShapeChain(std::move(out));
}

ShapeChain insert_letter(InsertionAlgo algo, const ShapeChain& p, int k) {
  return algo == InsertionAlgo::column ? col_insert(p, k) : row_insert(p, k);
}

std::vector<ShapeChain> insertion_history(InsertionAlgo algo, const Word& w) {
  w.validate();
  std::vector<ShapeChain> history{ShapeChain::empty(w.alphabet_bound)};
  for (int letter : w.letters) history.push_back(insert_letter(algo, history.back(), letter));
  return history;
}

TableauPair insert_word(InsertionAlgo algo, const Word& w) {
  auto history = insertion_history(algo, w);
  std::vector<Partition> recording;
  recording.reserve(history.size());
  for (const auto& chain : history) recording.push_back(chain.top());
  return {history.back(), ShapeChain(std::move(recording))};
}

Partition classical_local_rule(const Partition& lambda, const Partition& mu1, const Partition& mu2, bool has_x) {
  if (has_x) {
    if (!(lambda == mu1 && lambda == mu2)) throw ValidationError("X-box must have equal corner shapes");
    return *add_box(lambda, lambda.length() + 1);
  }
  if (lambda == mu1) return mu2;
  if (lambda == mu2) return mu1;
  const auto i = added_row(lambda, mu1);
  const auto j = added_row(lambda, mu2);
  if (!i || !j) throw ValidationError("growth box corners are not one-box extensions of the southwest shape");
  if (*i != *j) return *add_box(mu1, *j);
  return op_I(mu1, *i);
}

std::vector<std::vector<Partition>> classical_growth_grid(const Permutation& sigma, FillOrder order) {
  const int n = sigma.size();
  std::vector<std::vector<Partition>> grid(static_cast<std::size_t>(n) + 1,
                                           std::vector<Partition>(static_cast<std::size_t>(n) + 1));
  auto fill = [&](int m, int k) {
    grid[m][k] = classical_local_rule(grid[m - 1][k - 1], grid[m - 1][k], grid[m][k - 1], sigma(m) == k);
  };
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) order == FillOrder::column_major ? fill(a, b) : fill(b, a);
  return grid;
}

TableauPair classical_growth(const Permutation& sigma, FillOrder order) {
  const auto grid = classical_growth_grid(sigma, order);
  const auto n = static_cast<std::size_t>(sigma.size());
  std::vector<Partition> p;
  std::vector<Partition> q;
  for (std::size_t i = 0; i <= n; ++i) {
    p.push_back(grid[n][i]);
    q.push_back(grid[i][n]);
  }
  return {ShapeChain(std::move(p)), ShapeChain(std::move(q))};
}

}  // namespace qgrowth
