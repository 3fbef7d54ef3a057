#include "qgrowth/qrat.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

namespace qgrowth {

namespace {

BigInt gcd_int(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly QPoly::constant(BigInt c) { return QPoly(std::vector<BigInt>{std::move(c)}); }

QPoly QPoly::monomial(BigInt c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t QPoly::low_order() const {
  std::size_t i = 0;
  while (i < coeffs_.size() && coeffs_[i] == 0) ++i;
  return i == coeffs_.size() ? 0 : i;
}

BigInt QPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    g = gcd_int(g, c);
    if (g == 1) break;
  }
  return g;
}

QPoly QPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt c = content();
  if (leading() < 0) c = -c;
  return divided_by(c);
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(v));
}

QPoly QPoly::scaled(const BigInt& c) const {
  if (c == 0) return {};
  QPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

QPoly QPoly::divided_by(const BigInt& c) const {
  QPoly r = *this;
  for (auto& x : r.coeffs_) x /= c;
  return r;
}

QPoly QPoly::shifted_down(std::size_t k) const {
  if (k >= coeffs_.size()) return {};
  return QPoly(std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

// Remainder of lc(b)^e * a modulo b for some e >= 0; enough for gcd computations.
QPoly QPoly::pseudo_remainder(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZero("pseudo-remainder by the zero polynomial");
  QPoly r = a;
  const int d = b.degree();
  const BigInt& lc = b.leading();
  while (!r.is_zero() && r.degree() >= d) {
    const auto shift = static_cast<std::size_t>(r.degree() - d);
    BigInt lr = r.leading();
    r = r.scaled(lc) - QPoly::monomial(lr, shift) * b;
  }
  return r;
}

std::optional<QPoly> QPoly::exact_quotient(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return QPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> rem = a.coeffs_;
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto db = static_cast<std::size_t>(b.degree());
  const BigInt& lc = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + db];
    if (top == 0) continue;
    if (top % lc != 0) return std::nullopt;
    BigInt f = top / lc;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.coeffs_[j];
    quot[k] = std::move(f);
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  return QPoly(std::move(quot));
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  QPoly x = a.primitive_part();
  QPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return QPoly::constant(1);
    QPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? QPoly{} : r.primitive_part();
  }
  return x.primitive_part();
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (c < 0)
      out << '-';
    else if (!first)
      out << '+';
    if (i == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      out << 'q';
      if (i > 1) out << '^' << i;
    }
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------- QRat

QRat::QRat(long long c) : num_(QPoly::constant(c)), den_(QPoly::constant(1)) {}

QRat::QRat(QPoly num) : num_(std::move(num)), den_(QPoly::constant(1)) { normalize(); }

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

QRat QRat::qpow(std::size_t a) { return QRat(QPoly::monomial(1, a)); }

QRat QRat::one_minus_qpow(std::size_t a) {
  if (a == 0) return QRat(0);
  std::vector<BigInt> v(a + 1);
  v[0] = 1;
  v[a] = -1;
  return QRat(QPoly(std::move(v)));
}

bool QRat::is_one() const {
  return num_.degree() == 0 && den_.degree() == 0 && num_.leading() == den_.leading();
}

void QRat::normalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    // Powers of q are split off first; they are by far the most common shared factor.
    const std::size_t shared_q = std::min(num_.low_order(), den_.low_order());
    if (shared_q > 0) {
      num_ = num_.shifted_down(shared_q);
      den_ = den_.shifted_down(shared_q);
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
      QPoly g = QPoly::gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = *QPoly::exact_quotient(num_, g);
        den_ = *QPoly::exact_quotient(den_, g);
      }
    }
  }
  BigInt c = gcd_int(num_.content(), den_.content());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    num_ = num_.divided_by(c);
    den_ = den_.divided_by(c);
  }
}

Rational QRat::eval(const Rational& q0) const {
  Rational d = den_.eval(q0);
  if (d == 0) throw PoleError("denominator " + den_.to_string() + " vanishes at q=" + qgrowth::to_string(q0));
  return num_.eval(q0) / d;
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat& QRat::operator+=(const QRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ = num_ + o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  if (is_zero() || o.is_one()) return *this;
  if (o.is_zero()) return *this = QRat(0);
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QRat& QRat::operator/=(const QRat& o) {
  if (o.is_zero()) throw DivisionByZero("division by the zero function");
  if (is_zero()) return *this;
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

QRat arith(ArithOp op, const QRat& f, const QRat& g) {
  switch (op) {
    case ArithOp::add: return f + g;
    case ArithOp::sub: return f - g;
    case ArithOp::mul: return f * g;
    case ArithOp::div: return f / g;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

// ---------------------------------------------------------------- display

namespace {

// Cyclotomic polynomials Phi_d for d >= 2, index d.
const std::vector<QPoly>& cyclotomics() {
  static const std::vector<QPoly> table = [] {
    constexpr std::size_t kMax = 48;
    std::vector<QPoly> phi(kMax + 1);
    for (std::size_t d = 1; d <= kMax; ++d) {
      std::vector<BigInt> v(d + 1);
      v[0] = -1;
      v[d] = 1;
      QPoly p(std::move(v));
      for (std::size_t e = 1; e < d; ++e)
        if (d % e == 0) p = *QPoly::exact_quotient(p, phi[e]);
      phi[d] = std::move(p);
    }
    return phi;
  }();
  return table;
}

struct FactoredSide {
  int sign = 1;
  BigInt content = 1;
  std::vector<std::string> factors;
};

std::string with_power(const std::string& base, int e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

FactoredSide factor_for_display(const QPoly& p) {
  FactoredSide side;
  side.content = p.content();
  QPoly rest = p.divided_by(side.content);

  if (std::size_t a = rest.low_order(); a > 0) {
    side.factors.push_back(a == 1 ? "q" : "q^" + std::to_string(a));
    rest = rest.shifted_down(a);
  }
  const QPoly one_minus_q{1, -1};
  int e = 0;
  while (rest.degree() > 0) {
    auto quotient = QPoly::exact_quotient(rest, one_minus_q);
    if (!quotient) break;
    rest = std::move(*quotient);
    ++e;
  }
  if (e > 0) side.factors.push_back(with_power("(1-q)", e));

  const auto& phi = cyclotomics();
  for (std::size_t d = 2; d < phi.size() && rest.degree() > 0; ++d) {
    if (phi[d].degree() > rest.degree()) continue;
    e = 0;
    while (rest.degree() > 0) {
      auto quotient = QPoly::exact_quotient(rest, phi[d]);
      if (!quotient) break;
      rest = std::move(*quotient);
      ++e;
    }
    if (e > 0) side.factors.push_back(with_power("(" + phi[d].to_string() + ")", e));
  }

  if (rest.coeff(0) < 0) {
    rest = -rest;
    side.sign = -1;
  }
  if (rest.degree() > 0) side.factors.push_back("(" + rest.to_string() + ")");
  return side;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += '*';
    out += p;
  }
  return out;
}

}  // namespace

std::string QRat::to_string() const {
  if (is_zero()) return "0";
  FactoredSide top = factor_for_display(num_);
  FactoredSide bottom = factor_for_display(den_);
  BigInt g = gcd_int(top.content, bottom.content);
  BigInt cn = top.content / g;
  BigInt cd = bottom.content / g;

  std::vector<std::string> upper = top.factors;
  if (cn != 1) upper.insert(upper.begin(), cn.str());
  std::vector<std::string> lower = bottom.factors;
  if (cd != 1) lower.insert(lower.begin(), cd.str());

  std::string out = top.sign * bottom.sign < 0 ? "-" : "";
  if (out.empty() && lower.empty() && upper.size() == 1 && upper.front().front() == '(' &&
      upper.front().back() == ')')
    return upper.front().substr(1, upper.front().size() - 2);
  out += upper.empty() ? "1" : join(upper);
  if (!lower.empty()) {
    out += '/';
    out += lower.size() == 1 ? lower.front() : "(" + join(lower) + ")";
  }
  return out;
}

// ---------------------------------------------------------------- rationals

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed rational '" + text + "'");
    for (std::size_t k = i; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k])))
        throw std::invalid_argument("malformed rational '" + text + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt n = parse_int(text.substr(0, slash));
  BigInt d = parse_int(text.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(n, d);
}

std::string to_string(const Rational& r) {
  const BigInt n = boost::multiprecision::numerator(r);
  const BigInt d = boost::multiprecision::denominator(r);
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

}  // namespace qgrowth
