#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qgrowth/qrat.hpp"

namespace {

using namespace qgrowth;

QRat q() { return QRat::q(); }

TEST(QPoly, TrimsTrailingZeros) {
  QPoly p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(QPoly({0, 0}).is_zero());
  EXPECT_EQ(QPoly{}.coeffs().size(), 0u);
}

TEST(QPoly, GcdOfCyclotomicProducts) {
  // gcd(1-q^4, 1-q^6) = q^2-1, normalised to a positive leading coefficient
  QPoly a{1, 0, 0, 0, -1};
  QPoly b{1, 0, 0, 0, 0, 0, -1};
  EXPECT_EQ(QPoly::gcd(a, b), QPoly({-1, 0, 1}));
}

TEST(QRat, Powers) {
  EXPECT_EQ(QRat::qpow(0), QRat(1));
  EXPECT_EQ(QRat::qpow(1), q());
  EXPECT_EQ(QRat::qpow(3), q() * q() * q());
  EXPECT_EQ(QRat::one_minus_qpow(0), QRat(0));
  EXPECT_EQ(QRat::one_minus_qpow(1), QRat(QPoly{1, -1}));
  EXPECT_EQ(QRat::one_minus_qpow(2), QRat(QPoly{1, 0, -1}));
}

TEST(QRat, CanonicalForm) {
  const QRat f(QPoly{2, -2}, QPoly{-4, 0, 4});  // (2-2q)/(4q^2-4) = -1/(2(1+q))
  EXPECT_EQ(f.num(), QPoly({-1}));
  EXPECT_EQ(f.den(), QPoly({2, 2}));
  EXPECT_EQ(QRat(QPoly{}, QPoly{3, 1}).den(), QPoly({1}));
  EXPECT_THROW(QRat(QPoly{1}, QPoly{}), DivisionByZero);
}

TEST(QRat, DivisionFactorsCyclotomic) {
  const QRat r = arith(ArithOp::div, QRat::one_minus_qpow(1), QRat::one_minus_qpow(2));
  EXPECT_EQ(r, QRat(1) / (QRat(1) + q()));
  EXPECT_THROW(arith(ArithOp::div, q(), QRat(0)), DivisionByZero);
}

TEST(QRat, InsertionWeightProduct) {
  const QRat omq = QRat::one_minus_qpow(1);
  const QRat omq2 = QRat::one_minus_qpow(2);
  QRat w = QRat(1) * 1 * 1 * 1 * omq * ((QRat(1) - omq / omq2) * omq2) * 1 * (omq / omq2);
  EXPECT_EQ(w, q() * omq * omq / (QRat(1) + q()));
  EXPECT_EQ(w.to_string(), "q*(1-q)^2/(1+q)");
}

TEST(QRat, TelescopingCaseOneWeights) {
  QRat s = arith(ArithOp::add, QRat::qpow(2), q() - QRat::qpow(2));
  s = arith(ArithOp::add, s, QRat::one_minus_qpow(1));
  EXPECT_TRUE(s.is_one());
}

TEST(QRat, Eval) {
  EXPECT_EQ((QRat(1) / (QRat(1) + q())).eval(0), Rational(1));
  EXPECT_EQ(QRat(0).eval(Rational(3, 7)), Rational(0));
  const QRat omq = QRat::one_minus_qpow(1);
  EXPECT_EQ((q() * omq * omq / (QRat(1) + q())).eval(Rational(1, 2)), Rational(1, 12));
  EXPECT_THROW((QRat(1) / omq).eval(1), PoleError);
}

TEST(QRat, DisplayForms) {
  EXPECT_EQ(QRat(0).to_string(), "0");
  EXPECT_EQ(QRat(1).to_string(), "1");
  EXPECT_EQ(QRat::one_minus_qpow(1).to_string(), "1-q");
  EXPECT_EQ((-QRat::qpow(2) / (QRat(1) + q())).to_string(), "-q^2/(1+q)");
  EXPECT_EQ((QRat(1) / (QRat::one_minus_qpow(1) * QRat::one_minus_qpow(3))).to_string(), "1/((1-q)^2*(1+q+q^2))");
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_EQ(to_string(Rational(-2, 4)), "-1/2");
}

// ---------------------------------------------------------------- field properties on random samples

class QRatProperties : public ::testing::TestWithParam<unsigned> {};

TEST_P(QRatProperties, FieldAxioms) {
  oracle::RandomQRat gen(GetParam());
  for (int i = 0; i < 40; ++i) {
    const QRat f = gen(), g = gen(), h = gen();
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_TRUE((f + (-f)).is_zero());
    if (!f.is_zero()) {
      EXPECT_TRUE((f * (QRat(1) / f)).is_one());
    }
  }
}

TEST_P(QRatProperties, NormalizationIsIdempotent) {
  oracle::RandomQRat gen(GetParam());
  for (int i = 0; i < 40; ++i) {
    const QRat f = gen();
    EXPECT_EQ(QRat(f.num(), f.den()), f);
    if (!f.is_zero()) {
      EXPECT_GT(f.den().leading(), 0);
      EXPECT_EQ(QPoly::gcd(f.num(), f.den()).degree(), 0);
    }
  }
}

TEST_P(QRatProperties, EqualityMatchesCrossMultiplication) {
  oracle::RandomQRat gen(GetParam());
  for (int i = 0; i < 40; ++i) {
    const QRat f = gen();
    const QRat g = i % 3 == 0 ? QRat(f.num() * QPoly{2, 1}, f.den() * QPoly{2, 1}) : gen();
    EXPECT_EQ(f == g, f.num() * g.den() == g.num() * f.den());
  }
}

TEST_P(QRatProperties, EvalIsHomomorphism) {
  oracle::RandomQRat gen(GetParam());
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const QRat f = gen(), g = gen();
    const Rational x = gen.point();
    try {
      const Rational fx = f.eval(x), gx = g.eval(x);
      EXPECT_EQ((f + g).eval(x), fx + gx);
      EXPECT_EQ((f - g).eval(x), fx - gx);
      EXPECT_EQ((f * g).eval(x), fx * gx);
      if (gx != 0) {
        EXPECT_EQ((f / g).eval(x), fx / gx);
      }
      ++checked;
    } catch (const PoleError&) {
    }
  }
  EXPECT_GT(checked, 30);
}

INSTANTIATE_TEST_SUITE_P(Seeds, QRatProperties, ::testing::Values(1u, 7u, 2024u, 99991u));

}  // namespace
