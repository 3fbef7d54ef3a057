#include "qgrowth/checks.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "qgrowth/classical.hpp"
#include "qgrowth/rules.hpp"

namespace qgrowth {

Engine engine_by_name(const std::string& name) {
  if (name == "insertion") return Engine::insertion;
  if (name == "growth") return Engine::growth;
  if (name == "both") return Engine::both;
  throw std::invalid_argument("unknown engine '" + name + "' (expected insertion, growth or both)");
}

std::string to_string(Engine e) {
  switch (e) {
    case Engine::insertion: return "insertion";
    case Engine::growth: return "growth";
    case Engine::both: return "both";
  }
  return "?";
}

namespace {

std::string word_string(const Word& w) {
  std::string out;
  for (int a : w.letters) {
    if (!out.empty() && w.alphabet_bound >= 10) out += ',';
    out += std::to_string(a);
  }
  return out.empty() ? "(empty)" : out;
}

std::string pair_string(const WeightedPairSet::Key& key) {
  return "P=" + key.first.to_string() + " Q=" + key.second.to_string();
}

/// First key where a and b disagree, rendered for a witness.
std::string first_difference(const WeightedPairSet& a, const WeightedPairSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first))
      return pair_string(ia->first) + " weight " + ia->second.to_string() + " vs 0";
    if (ia == a.end() || ib->first < ia->first)
      return pair_string(ib->first) + " weight 0 vs " + ib->second.to_string();
    if (!(ia->second == ib->second))
      return pair_string(ia->first) + " weight " + ia->second.to_string() + " vs " + ib->second.to_string();
    ++ia;
    ++ib;
  }
  return "no difference";
}

/// Applies fn to every item on up to `jobs` threads; results keep the input order.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, int jobs, Fn fn) {
  using R = decltype(fn(items.front()));
  std::vector<R> results(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) results[i] = fn(items[i]);
  };
  const auto threads = static_cast<std::size_t>(std::clamp(jobs, 1, 64));
  if (threads == 1 || items.size() < 2) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(threads, items.size()); ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

CheckReport make_report(std::string check, std::vector<std::pair<std::string, std::string>> parameters) {
  CheckReport r;
  r.check = std::move(check);
  r.parameters = std::move(parameters);
  return r;
}

void finish(CheckReport& r) {
  std::sort(r.witnesses.begin(), r.witnesses.end());
  r.passed = r.witnesses.empty();
}

std::vector<std::string> merged(const std::vector<std::vector<std::string>>& parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

CheckReport check_normalization(const std::string& rule_name, int ell, int n) {
  const BranchingRule rule = rule_by_name(rule_name);
  if (ell < 1 || n < 0) throw std::invalid_argument("normalization needs ell >= 1 and n >= 0");
  CheckReport r = make_report("normalization", {{"algo", rule_name}, {"ell", std::to_string(ell)}, {"n", std::to_string(n)}});
  for (const Word& w : all_words(ell, n)) {
    ++r.cases;
    const QRat total = branch_insert_word(rule, w).total();
    if (!total.is_one()) r.witnesses.push_back("word " + word_string(w) + ": total " + total.to_string());
  }
  finish(r);
  return r;
}

namespace {

WeightedPairSet compute(const BranchingRule& rule, Engine engine, const Permutation& sigma) {
  if (engine == Engine::growth) return growth_compute(growth_variant_by_name(rule.name), sigma);
  return branch_insert_word(rule, sigma.as_word());
}

}  // namespace

CheckReport check_symmetry(const std::string& rule_name, int n, Engine engine, int jobs) {
  const BranchingRule rule = rule_by_name(rule_name);
  if (engine != Engine::insertion) growth_variant_by_name(rule_name);
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  CheckReport r = make_report("symmetry",
                {{"algo", rule_name}, {"n", std::to_string(n)}, {"engine", to_string(engine)}});
  const auto perms = all_permutations(n);
  r.cases = perms.size();

  std::vector<Engine> engines;
  if (engine == Engine::both) engines = {Engine::insertion, Engine::growth};
  else engines = {engine};

  // results[e][index of sigma]
  std::vector<std::vector<WeightedPairSet>> results;
  for (Engine e : engines)
    results.push_back(parallel_map(perms, jobs, [&](const Permutation& s) { return compute(rule, e, s); }));

  auto index_of = [&perms](const Permutation& s) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), s) - perms.begin());
  };
  for (std::size_t e = 0; e < engines.size(); ++e) {
    for (std::size_t i = 0; i < perms.size(); ++i) {
      const auto& mine = results[e][i];
      const auto& theirs = results[e][index_of(perms[i].inverse())];
      if (!(theirs == mine.swapped()))
        r.witnesses.push_back("sigma " + perms[i].to_string() + " (" + to_string(engines[e]) + "): " +
                              first_difference(mine.swapped(), theirs));
    }
  }
  if (engines.size() == 2) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (!(results[0][i] == results[1][i]))
        r.witnesses.push_back("sigma " + perms[i].to_string() + " engines differ: " +
                              first_difference(results[0][i], results[1][i]));
  }
  finish(r);
  return r;
}

CheckReport check_engine_equivalence(const std::string& rule_name, int n, int jobs) {
  const BranchingRule rule = rule_by_name(rule_name);
  const GrowthVariant v = growth_variant_by_name(rule_name);
  CheckReport r = make_report("engine-equivalence", {{"algo", rule_name}, {"n", std::to_string(n)}});
  const auto perms = all_permutations(n);
  r.cases = perms.size();
  auto witnesses = parallel_map(perms, jobs, [&](const Permutation& s) {
    std::vector<std::string> out;
    const auto a = branch_insert_word(rule, s.as_word());
    const auto b = growth_compute(v, s);
    if (!(a == b)) out.push_back("sigma " + s.to_string() + ": " + first_difference(a, b));
    return out;
  });
  r.witnesses = merged(witnesses);
  finish(r);
  return r;
}

namespace {

InsertionAlgo classical_counterpart(const std::string& rule_name) {
  if (rule_name == "qcol") return InsertionAlgo::column;
  if (rule_name == "qrow") return InsertionAlgo::row;
  throw std::invalid_argument("no classical counterpart for '" + rule_name + "' (expected qcol or qrow)");
}

void q_zero_case(const BranchingRule& rule, InsertionAlgo algo, const Word& w, CheckReport& r) {
  ++r.cases;
  const TableauPair expected = insert_word(algo, w);
  std::map<WeightedPairSet::Key, Rational> support;
  try {
    for (const auto& [key, value] : branch_insert_word(rule, w).evaluated(Rational(0)))
      if (value != 0) support.emplace(key, value);
  } catch (const PoleError& e) {
    r.witnesses.push_back("word " + word_string(w) + ": pole at q=0 (" + e.what() + ")");
    return;
  }
  const WeightedPairSet::Key key{expected.p, expected.q};
  if (support.size() != 1 || support.begin()->first != key || support.begin()->second != 1)
    r.witnesses.push_back("word " + word_string(w) + ": expected point mass on " + pair_string(key) + ", got " +
                          std::to_string(support.size()) + " support point(s)");
}

}  // namespace

CheckReport check_q_zero(const std::string& rule_name, const Word& w) {
  const BranchingRule rule = rule_by_name(rule_name);
  const InsertionAlgo algo = classical_counterpart(rule_name);
  w.validate();
  CheckReport r = make_report("qzero", {{"algo", rule_name}, {"word", word_string(w)}, {"ell", std::to_string(w.alphabet_bound)}});
  q_zero_case(rule, algo, w, r);
  finish(r);
  return r;
}

CheckReport check_q_zero_all(const std::string& rule_name, int ell, int n) {
  const BranchingRule rule = rule_by_name(rule_name);
  const InsertionAlgo algo = classical_counterpart(rule_name);
  CheckReport r = make_report("qzero", {{"algo", rule_name}, {"ell", std::to_string(ell)}, {"n", std::to_string(n)}});
  for (const Word& w : all_words(ell, n)) q_zero_case(rule, algo, w, r);
  finish(r);
  return r;
}

CheckReport check_numeric(const std::string& rule_name, const Rational& q0, int n) {
  const BranchingRule rule = rule_by_name(rule_name);
  if (q0 <= 0 || q0 >= 1) throw std::invalid_argument("q0 must lie strictly between 0 and 1");
  CheckReport r = make_report("numeric", {{"algo", rule_name}, {"q", to_string(q0)}, {"n", std::to_string(n)}});
  for (const Permutation& sigma : all_permutations(n)) {
    ++r.cases;
    Rational total = 0;
    for (const auto& [key, value] : branch_insert_word(rule, sigma.as_word()).evaluated(q0)) {
      total += value;
      if (value < 0)
        r.witnesses.push_back("sigma " + sigma.to_string() + ": " + pair_string(key) + " has weight " +
                              to_string(value));
    }
    if (total != 1) r.witnesses.push_back("sigma " + sigma.to_string() + ": total " + to_string(total));
  }
  finish(r);
  return r;
}

CheckReport check_duality(int ell, int n) {
  CheckReport r = make_report("duality", {{"ell", std::to_string(ell)}, {"n", std::to_string(n)}});
  for (const Word& w : all_words(ell, n)) {
    ++r.cases;
    const auto col = insert_word(InsertionAlgo::column, w).p;
    const auto row = insert_word(InsertionAlgo::row, w.reversed()).p;
    if (!(col == row))
      r.witnesses.push_back("word " + word_string(w) + ": " + col.to_string() + " vs " + row.to_string());
  }
  finish(r);
  return r;
}

CheckReport to_check_report(const ConditionReport& c) {
  CheckReport r = make_report("conditions",
                {{"algo", c.rule}, {"size_bound", std::to_string(c.size_bound)},
                 {"letter_bound", std::to_string(c.letter_bound)}});
  r.cases = c.triplets_checked;
  for (const auto& v : c.violations) {
    std::string w = "(" + v.condition + ") triplet " + v.triplet.to_string() + " letter " +
                    std::to_string(v.step.letter) + " level " + std::to_string(v.step.level);
    if (v.other_step.letter != v.step.letter || v.other_step.level != v.step.level)
      w += " vs letter " + std::to_string(v.other_step.letter) + " level " + std::to_string(v.other_step.level);
    r.witnesses.push_back(w + ": " + v.detail);
  }
  finish(r);
  return r;
}

}  // namespace qgrowth
