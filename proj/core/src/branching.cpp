#include "qgrowth/branching.hpp"

#include <stdexcept>

namespace qgrowth {

std::string Triplet::to_string() const {
  return "(" + prev_lower.to_string() + ", " + prev_upper.to_string() + ", " + new_lower.to_string() + ")";
}

Branches BranchingRule::branches(Phase phase, const Triplet& t, InsertionStep step) const {
  switch (phase) {
    case Phase::initial: return initial(t, step);
    case Phase::high: return high(t, step);
    case Phase::low: return low(t, step);
  }
  throw std::invalid_argument("unknown phase");
}

Branches keep_upper(const Triplet& t, InsertionStep /*step*/) { return {{t.prev_upper, QRat(1)}}; }

// ---------------------------------------------------------------- WeightedPairSet

WeightedPairSet WeightedPairSet::unit(int level_bound) {
  WeightedPairSet s;
  s.add(ShapeChain::empty(level_bound), ShapeChain{}, QRat(1));
  return s;
}

void WeightedPairSet::add(const ShapeChain& p, const RecordingChain& q, const QRat& weight) {
  if (weight.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(Key{p, q}, weight);
  if (inserted) return;
  it->second += weight;
  if (it->second.is_zero()) entries_.erase(it);
}

void WeightedPairSet::merge(const WeightedPairSet& other) {
  for (const auto& [key, w] : other.entries_) add(key.first, key.second, w);
}

const QRat& WeightedPairSet::weight(const ShapeChain& p, const RecordingChain& q) const {
  static const QRat zero(0);
  auto it = entries_.find(Key{p, q});
  return it == entries_.end() ? zero : it->second;
}

QRat WeightedPairSet::total() const {
  QRat sum(0);
  for (const auto& [key, w] : entries_) sum += w;
  return sum;
}

WeightedPairSet WeightedPairSet::swapped() const {
  WeightedPairSet out;
  for (const auto& [key, w] : entries_) out.add(key.second, key.first, w);
  return out;
}

std::map<WeightedPairSet::Key, Rational> WeightedPairSet::evaluated(const Rational& q0) const {
  std::map<Key, Rational> out;
  for (const auto& [key, w] : entries_) out.emplace(key, w.eval(q0));
  return out;
}

// ---------------------------------------------------------------- insertion

namespace {

Phase phase_of(int level, int letter) {
  if (level < letter) return Phase::low;
  return level == letter ? Phase::initial : Phase::high;
}

void expand(const BranchingRule& rule, const ShapeChain& p, int k, int level, std::vector<Partition>& current,
            const QRat& weight, WeightedChains& out) {
  if (level > p.level_bound()) {
    ShapeChain chain(current);
    auto [it, inserted] = out.try_emplace(std::move(chain), weight);
    if (!inserted) {
      it->second += weight;
      if (it->second.is_zero()) out.erase(it);
    }
    return;
  }
  const Triplet t{p[level - 1], p[level], current[static_cast<std::size_t>(level - 1)]};
  for (const Branch& b : rule.branches(phase_of(level, k), t, InsertionStep{k, level})) {
    if (b.weight.is_zero()) continue;
    if (!interlaces(t.new_lower, b.shape))
      throw std::logic_error("rule '" + rule.name + "' yielded " + b.shape.to_string() + " for triplet " +
                             t.to_string() + ", which does not interlace with the new lower shape");
    current[static_cast<std::size_t>(level)] = b.shape;
    expand(rule, p, k, level + 1, current, weight * b.weight, out);
  }
}

}  // namespace

WeightedChains branch_insert_letter(const BranchingRule& rule, const ShapeChain& p, int k) {
  if (k < 1 || k > p.level_bound())
    throw LetterOutOfRange("letter " + std::to_string(k) + " outside [1," + std::to_string(p.level_bound()) + "]");
  std::vector<Partition> current(p.shapes().size());
  WeightedChains out;
  expand(rule, p, k, 1, current, QRat(1), out);
  return out;
}

WeightedPairSet branch_insert_word(const BranchingRule& rule, const Word& w, WordInsertOptions options) {
  w.validate();
  struct Entry {
    ShapeChain p;
    RecordingChain q;
    QRat weight;
  };
  std::vector<Entry> collection{{ShapeChain::empty(w.alphabet_bound), ShapeChain{}, QRat(1)}};

  for (int letter : w.letters) {
    std::map<ShapeChain, WeightedChains> cache;
    std::vector<Entry> next;
    for (const auto& e : collection) {
      auto it = cache.find(e.p);
      if (it == cache.end()) it = cache.emplace(e.p, branch_insert_letter(rule, e.p, letter)).first;
      for (const auto& [p_new, iw] : it->second) next.push_back({p_new, e.q.extended(p_new.top()), e.weight * iw});
    }
    if (options.merge_each_letter) {
      WeightedPairSet merged;
      for (const auto& e : next) merged.add(e.p, e.q, e.weight);
      next.clear();
      for (const auto& [key, wt] : merged) next.push_back({key.first, key.second, wt});
    }
    collection = std::move(next);
  }

  WeightedPairSet out;
  for (const auto& e : collection) out.add(e.p, e.q, e.weight);
  return out;
}

// ---------------------------------------------------------------- conditions

namespace {

using BranchMap = std::map<Partition, QRat>;

BranchMap to_map(const Branches& bs) {
  BranchMap m;
  for (const auto& b : bs) {
    if (b.weight.is_zero()) continue;
    auto [it, inserted] = m.try_emplace(b.shape, b.weight);
    if (!inserted) {
      it->second += b.weight;
      if (it->second.is_zero()) m.erase(it);
    }
  }
  return m;
}

std::string describe(const BranchMap& m) {
  std::string out = "{";
  for (const auto& [shape, w] : m) {
    if (out.size() > 1) out += ", ";
    out += shape.to_string() + ": " + w.to_string();
  }
  return out + "}";
}

class ConditionChecker {
 public:
  ConditionChecker(const BranchingRule& rule, int size_bound, int letter_bound)
      : rule_(rule), letter_bound_(letter_bound) {
    report_.rule = rule.name;
    report_.size_bound = size_bound;
    report_.letter_bound = letter_bound;
    for (int n = 0; n <= size_bound; ++n)
      for (auto& p : partitions_of(n)) shapes_.push_back(std::move(p));
  }

  ConditionReport run() {
    for (int k = 1; k <= letter_bound_; ++k) {
      for (int level = 1; level <= letter_bound_; ++level) {
        const Phase phase = phase_of(level, k);
        for (const auto& mu : shapes_) {
          if (mu.length() > level - 1) continue;
          for (const auto& lambda : shapes_) {
            if (lambda.length() > level || !interlaces(mu, lambda)) continue;
            if (phase == Phase::high) {
              for (int j = 1; j <= level - 1; ++j) {
                auto nu = add_box(mu, j);
                if (!nu || nu->length() > level - 1) continue;
                check_high(Triplet{mu, lambda, *nu}, InsertionStep{k, level}, j);
              }
            } else {
              check_diagonal(phase, Triplet{mu, lambda, mu}, InsertionStep{k, level});
            }
          }
        }
      }
    }
    return std::move(report_);
  }

 private:
  void violation(std::string condition, const Triplet& t, InsertionStep step, InsertionStep other,
                 std::string detail) {
    report_.violations.push_back({std::move(condition), t, step, other, std::move(detail)});
  }

  // Condition (i): every successor adds one box to λ^i and interlaces with λ̃^{i-1}.
  bool check_support(const Triplet& t, InsertionStep step, const BranchMap& out) {
    bool ok = true;
    for (const auto& [shape, w] : out) {
      if (!added_row(t.prev_upper, shape) || !interlaces(t.new_lower, shape)) {
        violation("i", t, step, step, "successor " + shape.to_string() + " is not a one-box extension of λ^i");
        ok = false;
      }
    }
    return ok;
  }

  void check_diagonal(Phase phase, const Triplet& t, InsertionStep step) {
    ++report_.triplets_checked;
    const BranchMap out = to_map(rule_.branches(phase, t, step));
    if (phase == Phase::low) {
      if (!(out.size() == 1 && out.begin()->first == t.prev_upper && out.begin()->second.is_one()))
        violation("i", t, step, step, "low-level branching " + describe(out) + " is not the identity");
      return;
    }
    check_support(t, step, out);
    if (t.prev_lower == t.prev_upper) compare("iii", initial_seen_, t, step, out);
  }

  void check_high(const Triplet& t, InsertionStep step, int j) {
    ++report_.triplets_checked;
    const BranchMap out = to_map(rule_.branches(Phase::high, t, step));
    check_support(t, step, out);
    if (t.prev_upper[j] == t.prev_lower[j]) {
      const Partition expected = *add_box(t.prev_upper, j);
      if (!(out.size() == 1 && out.begin()->first == expected && out.begin()->second.is_one()))
        violation("ii", t, step, step,
                  "expected {" + expected.to_string() + ": 1}, got " + describe(out));
    }
    if (t.prev_upper == t.new_lower) {
      Triplet keyed = t;
      compare("iv", high_seen_[step.level], keyed, step, out);
    }
  }

  struct Seen {
    InsertionStep step;
    BranchMap out;
  };

  void compare(const char* condition, std::map<Triplet, Seen>& seen, const Triplet& t, InsertionStep step,
               const BranchMap& out) {
    auto [it, inserted] = seen.try_emplace(t, Seen{step, out});
    if (inserted || it->second.out == out) return;
    violation(condition, t, it->second.step, step,
              "letter " + std::to_string(it->second.step.letter) + " gives " + describe(it->second.out) +
                  ", letter " + std::to_string(step.letter) + " gives " + describe(out));
  }

  const BranchingRule& rule_;
  int letter_bound_;
  std::vector<Partition> shapes_;
  ConditionReport report_;
  std::map<Triplet, Seen> initial_seen_;
  std::map<int, std::map<Triplet, Seen>> high_seen_;
};

}  // namespace

ConditionReport check_conditions(const BranchingRule& rule, int size_bound, int letter_bound) {
  if (size_bound < 1 || letter_bound < 1) throw std::invalid_argument("condition check bounds must be >= 1");
  return ConditionChecker(rule, size_bound, letter_bound).run();
}

}  // namespace qgrowth
