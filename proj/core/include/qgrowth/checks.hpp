#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qgrowth/branching.hpp"
#include "qgrowth/growth.hpp"

namespace qgrowth {

struct CheckReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> parameters;
  bool passed = true;
  /// Sorted; empty when the check passed.
  std::vector<std::string> witnesses;
  /// Number of words, permutations or triplets examined.
  std::size_t cases = 0;
};

enum class Engine { insertion, growth, both };
Engine engine_by_name(const std::string& name);
std::string to_string(Engine e);

/// Total weight is exactly 1 for every word in [ell]^n.
CheckReport check_normalization(const std::string& rule, int ell, int n);

/// For every sigma in S_n the pair set of sigma^-1 is the swapped pair set of sigma.
/// With Engine::both the two engines must also agree on every sigma.
CheckReport check_symmetry(const std::string& rule, int n, Engine engine, int jobs = 1);

/// Insertion engine and growth engine agree on every sigma in S_n.
CheckReport check_engine_equivalence(const std::string& rule, int n, int jobs = 1);

/// At q = 0 the output is a point mass on the classical result (column for qcol, row for qrow).
CheckReport check_q_zero(const std::string& rule, const Word& w);
/// check_q_zero over every word in [ell]^n.
CheckReport check_q_zero_all(const std::string& rule, int ell, int n);

/// Over S_n, every weight evaluated at q0 in (0,1) is >= 0 and the totals are exactly 1.
CheckReport check_numeric(const std::string& rule, const Rational& q0, int n);

/// P_col(w) = P_row(reversed w) for every word in [ell]^n.
CheckReport check_duality(int ell, int n);

CheckReport to_check_report(const ConditionReport& r);

}  // namespace qgrowth
