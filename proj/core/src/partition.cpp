#include "qgrowth/partition.hpp"

#include <algorithm>
#include <numeric>

namespace qgrowth {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ValidationError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ValidationError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  if (parts_.empty()) return "∅";
  const bool compact = parts_.front() < 10;
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool interlaces(const Partition& mu, const Partition& lambda) {
  const int rows = std::max(mu.length(), lambda.length());
  for (int i = 1; i <= rows; ++i) {
    if (lambda[i] < mu[i]) return false;
    if (mu[i] < lambda[i + 1]) return false;
  }
  return true;
}

std::optional<Partition> add_box(const Partition& lambda, int j) {
  if (j < 1 || j > lambda.length() + 1) return std::nullopt;
  if (j > 1 && lambda[j - 1] <= lambda[j]) return std::nullopt;
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  if (j == lambda.length() + 1)
    parts.push_back(1);
  else
    ++parts[static_cast<std::size_t>(j - 1)];
  return Partition(std::move(parts));
}

std::optional<int> added_row(const Partition& from, const Partition& to) {
  if (to.size() != from.size() + 1) return std::nullopt;
  const int rows = std::max(from.length(), to.length());
  std::optional<int> row;
  for (int i = 1; i <= rows; ++i) {
    const int diff = to[i] - from[i];
    if (diff == 0) continue;
    if (diff != 1 || row) return std::nullopt;
    row = i;
  }
  return row;
}

Partition op_I(const Partition& lambda, int k) {
  if (k < 1) throw std::invalid_argument("op_I needs k >= 1");
  for (int j = std::min(k, lambda.length() + 1); j >= 1; --j)
    if (auto next = add_box(lambda, j)) return *next;
  return *add_box(lambda, 1);
}

std::vector<Partition> lambda_set(const Partition& lambda, int k) {
  std::vector<Partition> out;
  for (int j = 1; j <= k; ++j) out.push_back(op_I(lambda, j));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Partition> lambda_set(const Partition& lambda) { return lambda_set(lambda, lambda.length() + 1); }

Partition op_I_rel(const Partition& lambda, const Partition& mu, int j) {
  int row = 1;
  for (int i = j; i >= 2; --i) {
    if (mu[i - 1] > lambda[i]) {
      row = i;
      break;
    }
  }
  auto next = add_box(lambda, row);
  if (!next)
    throw ValidationError("op_I_rel: " + lambda.to_string() + " + e_" + std::to_string(row) + " is not a partition");
  return *next;
}

namespace {

void partitions_rec(int remaining, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, cap); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

}  // namespace qgrowth
