#include "qgrowth/rules.hpp"

#include <stdexcept>

namespace qgrowth {

namespace {

QRat one_minus(int a) {
  if (a < 0) throw std::logic_error("negative exponent " + std::to_string(a) + " in a weight formula");
  return QRat::one_minus_qpow(static_cast<std::size_t>(a));
}

QRat qpow(int a) {
  if (a < 0) throw std::logic_error("negative exponent " + std::to_string(a) + " in a weight formula");
  return QRat::qpow(static_cast<std::size_t>(a));
}

int grown_row(const Triplet& t) {
  const auto j = added_row(t.prev_lower, t.new_lower);
  if (!j) throw ValidationError("triplet " + t.to_string() + " has no box added at the lower level");
  return *j;
}

void push_nonzero(Branches& out, std::optional<Partition> shape, QRat w) {
  if (shape && !w.is_zero()) out.push_back({std::move(*shape), std::move(w)});
}

}  // namespace

// ---------------------------------------------------------------- q-column

QRat qcol_f(int variant, int j, const Partition& mu, const Partition& lambda) {
  if (variant != 0 && variant != 1) throw std::invalid_argument("qcol_f variant must be 0 or 1");
  if (j <= 1) return QRat(1);
  QRat num = one_minus(mu[j - 1] - lambda[j]);
  if (variant == 0) return num;
  const int d = mu[j - 1] - mu[j];
  if (d == 0) return QRat(1);
  return num / one_minus(d);
}

QRat qcol_w0(const Partition& prev_lower, const Partition& prev_upper, int j) {
  if (j < 1) return QRat(0);
  QRat w = qcol_f(0, j, prev_lower, prev_upper);
  for (int p = j + 1; p <= prev_upper.length() + 1 && !w.is_zero(); ++p)
    w *= QRat(1) - qcol_f(0, p, prev_lower, prev_upper);
  return w;
}

QRat qcol_w1(const Partition& prev_lower, const Partition& prev_upper, int j_prev, int j) {
  if (j < 1 || j > j_prev) return QRat(0);
  if (j == j_prev) return qcol_f(1, j, prev_lower, prev_upper);
  QRat w = qcol_f(0, j, prev_lower, prev_upper);
  for (int p = j + 1; p < j_prev && !w.is_zero(); ++p) w *= QRat(1) - qcol_f(0, p, prev_lower, prev_upper);
  return w * (QRat(1) - qcol_f(1, j_prev, prev_lower, prev_upper));
}

// ---------------------------------------------------------------- q-row

QRat qrow_g(int j, const Partition& mu, const Partition& lambda) {
  if (j < 1) throw std::invalid_argument("row index must be >= 1");
  if (j == 1) return one_minus(lambda[1] - mu[1]);
  const int d = mu[j - 1] - mu[j];
  QRat num = one_minus(lambda[j] - mu[j]);
  if (num.is_zero()) return num;
  if (d == 0) throw DivisionByZero("g(" + std::to_string(j) + ") with mu_{j-1} = mu_j");
  return num / one_minus(d);
}

QRat qrow_u(const Triplet& t, const Partition& target) {
  const int j = grown_row(t);
  const QRat g = qrow_g(j, t.prev_lower, t.prev_upper);
  if (target == add_box(t.prev_upper, j + 1)) return g;
  if (target == add_box(t.prev_upper, j)) return QRat(1) - g;
  return QRat(0);
}

// ---------------------------------------------------------------- Dynamics 3

namespace {

// The fraction shared by both nonzero high-level branches.
QRat dyn3_x(const Partition& mu, const Partition& lambda, int j) {
  const int a = mu[j] - lambda[j + 1] + 1;
  QRat x = qpow(a) * one_minus(lambda[j] - mu[j]) / one_minus(a);
  if (j >= 2) x /= one_minus(mu[j - 1] - mu[j]);
  return x;
}

}  // namespace

QRat dyn3_weight(const Triplet& t, const Partition& target, Phase phase, InsertionStep step) {
  switch (phase) {
    case Phase::low: return QRat(target == t.prev_upper ? 1 : 0);
    case Phase::initial: return QRat(target == op_I_rel(t.prev_upper, t.prev_lower, step.level) ? 1 : 0);
    case Phase::high: break;
  }
  const int j = grown_row(t);
  const QRat x = dyn3_x(t.prev_lower, t.prev_upper, j);
  if (target == add_box(t.prev_upper, j + 1)) return -x;
  if (target == op_I_rel(t.prev_upper, t.prev_lower, j)) return QRat(1) + x;
  return QRat(0);
}

// ---------------------------------------------------------------- rules

BranchingRule qcol_rule() {
  BranchingRule r;
  r.name = "qcol";
  r.initial = [](const Triplet& t, InsertionStep step) {
    Branches out;
    const int top = std::min(step.level, t.prev_upper.length() + 1);
    for (int j = top; j >= 1; --j) push_nonzero(out, add_box(t.prev_upper, j), qcol_w0(t.prev_lower, t.prev_upper, j));
    return out;
  };
  r.high = [](const Triplet& t, InsertionStep) {
    Branches out;
    const int j_prev = grown_row(t);
    for (int j = j_prev; j >= 1; --j)
      push_nonzero(out, add_box(t.prev_upper, j), qcol_w1(t.prev_lower, t.prev_upper, j_prev, j));
    return out;
  };
  r.low = keep_upper;
  return r;
}

BranchingRule qrow_rule() {
  BranchingRule r;
  r.name = "qrow";
  r.initial = [](const Triplet& t, InsertionStep) { return Branches{{*add_box(t.prev_upper, 1), QRat(1)}}; };
  r.high = [](const Triplet& t, InsertionStep) {
    Branches out;
    const int j = grown_row(t);
    for (int target_row : {j + 1, j}) {
      auto shape = add_box(t.prev_upper, target_row);
      if (shape) push_nonzero(out, shape, qrow_u(t, *shape));
    }
    return out;
  };
  r.low = keep_upper;
  return r;
}

BranchingRule dyn3_rule() {
  BranchingRule r;
  r.name = "dyn3";
  r.initial = [](const Triplet& t, InsertionStep step) {
    return Branches{{op_I_rel(t.prev_upper, t.prev_lower, step.level), QRat(1)}};
  };
  r.high = [](const Triplet& t, InsertionStep step) {
    Branches out;
    const int j = grown_row(t);
    for (auto shape : {add_box(t.prev_upper, j + 1), std::optional<Partition>(op_I_rel(t.prev_upper, t.prev_lower, j))})
      if (shape) push_nonzero(out, shape, dyn3_weight(t, *shape, Phase::high, step));
    return out;
  };
  r.low = keep_upper;
  return r;
}

BranchingRule rule_by_name(const std::string& name) {
  if (name == "qcol") return qcol_rule();
  if (name == "qrow") return qrow_rule();
  if (name == "dyn3") return dyn3_rule();
  throw std::invalid_argument("unknown branching rule '" + name + "' (expected qcol, qrow or dyn3)");
}

std::vector<std::string> rule_names() { return {"qcol", "qrow", "dyn3"}; }

}  // namespace qgrowth
