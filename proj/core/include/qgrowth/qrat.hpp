#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qgrowth {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a weight expression divides by the zero function.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a rational function is evaluated at a root of its denominator.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Polynomial in q with integer coefficients, stored in ascending degree order.
/// The last stored coefficient is nonzero; zero is the empty sequence.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigInt> coeffs);
  QPoly(std::initializer_list<long long> coeffs);

  static QPoly constant(BigInt c);
  static QPoly monomial(BigInt c, std::size_t degree);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial; -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  /// Multiplicity of q as a factor (0 for the zero polynomial).
  std::size_t low_order() const;
  /// gcd of the coefficients, nonnegative.
  BigInt content() const;
  /// This divided by its content, with positive leading coefficient.
  QPoly primitive_part() const;

  Rational eval(const Rational& x) const;

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly scaled(const BigInt& c) const;
  /// Exact division of every coefficient by c; c must divide all of them.
  QPoly divided_by(const BigInt& c) const;
  QPoly shifted_down(std::size_t k) const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
  static QPoly pseudo_remainder(const QPoly& a, const QPoly& b);
  /// a / b when b divides a in Z[q].
  static std::optional<QPoly> exact_quotient(const QPoly& a, const QPoly& b);
  /// Primitive gcd in Z[q] with positive leading coefficient (content ignored).
  static QPoly gcd(const QPoly& a, const QPoly& b);

  /// Ascending-order text like "1-2*q+q^2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Element of Q(q), kept in canonical reduced form:
/// gcd(num, den) = 1 as polynomials, joint integer content 1, den leading coefficient > 0.
class QRat {
 public:
  QRat() : den_(QPoly::constant(1)) {}
  QRat(long long c);  // NOLINT(google-explicit-constructor)
  explicit QRat(QPoly num);
  QRat(QPoly num, QPoly den);

  static QRat q() { return qpow(1); }
  static QRat qpow(std::size_t a);
  static QRat one_minus_qpow(std::size_t a);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  Rational eval(const Rational& q0) const;

  QRat operator-() const;
  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);
  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }

  friend bool operator==(const QRat&, const QRat&) = default;

  /// Factored display form such as "q*(1-q)^2/(1+q)". Not meant to be parsed back.
  std::string to_string() const;

 private:
  void normalize();
  QPoly num_;
  QPoly den_;
};

enum class ArithOp { add, sub, mul, div };

QRat arith(ArithOp op, const QRat& f, const QRat& g);

/// Parses "p/r" or "p" into an exact rational.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

inline std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const QRat& f) { return os << f.to_string(); }

}  // namespace qgrowth
