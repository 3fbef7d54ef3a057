#pragma once

#include <string>
#include <vector>

#include "qgrowth/branching.hpp"

namespace qgrowth {

// ---------------------------------------------------------------- q-column

/// f_0 (variant 0) and f_1 (variant 1) at row j. Both are 1 at j = 1.
/// f_1 is taken to be 1 when mu_{j-1} = mu_j, where the formula reads 0/0.
QRat qcol_f(int variant, int j, const Partition& mu, const Partition& lambda);

/// Initial weight of the successor prev_upper + e_j. The product over rows
/// runs up to l(prev_upper) + 1; further rows only contribute factors of 1.
QRat qcol_w0(const Partition& prev_lower, const Partition& prev_upper, int j);

/// High-level weight of prev_upper + e_j after the level below grew at row j_prev.
QRat qcol_w1(const Partition& prev_lower, const Partition& prev_upper, int j_prev, int j);

// ---------------------------------------------------------------- q-row

QRat qrow_g(int j, const Partition& mu, const Partition& lambda);

/// High-level weight of target given t.new_lower = t.prev_lower + e_{j_prev}.
QRat qrow_u(const Triplet& t, const Partition& target);

// ---------------------------------------------------------------- Dynamics 3

QRat dyn3_weight(const Triplet& t, const Partition& target, Phase phase, InsertionStep step);

// ---------------------------------------------------------------- rules

BranchingRule qcol_rule();
BranchingRule qrow_rule();
BranchingRule dyn3_rule();

/// "qcol", "qrow" or "dyn3"; anything else throws std::invalid_argument.
BranchingRule rule_by_name(const std::string& name);
std::vector<std::string> rule_names();

}  // namespace qgrowth
