#include <gtest/gtest.h>

#include "cuspforge/error.hpp"
#include "cuspforge/etaq.hpp"
#include "cuspforge/qseries.hpp"

using namespace cuspforge;

TEST(QSeries, MonomialArithmetic) {
  const Level level(5);
  auto a = QSeries::monomial(level, 3, BigRational(2), 600);
  auto b = QSeries::monomial(level, -7, BigRational(1, 3), 600);
  auto p = a * b;
  EXPECT_EQ(p.leading_numerator(), -4);
  EXPECT_EQ(p.leading_coefficient(), BigRational(2, 3));
  EXPECT_EQ(p.leading_exponent(), Rational(-4, 60));
}

TEST(QSeries, InverseOfEta) {
  const Level level(20);
  auto e1 = eta_series(level, 1, 40);
  auto prod = e1 * e1.inverse();
  EXPECT_TRUE(agree(prod, QSeries::one(level)));
  EXPECT_EQ(prod.leading_numerator(), 0);
}

TEST(QSeries, PowNegative) {
  const Level level(7);
  auto e = eta_series(level, 2, 30);
  EXPECT_TRUE(agree(e.pow(-3) * e.pow(3), QSeries::one(level)));
  EXPECT_TRUE(agree(e.pow(2), e * e));
  EXPECT_TRUE(agree(e.pow(0), QSeries::one(level)));
}

TEST(QSeries, ZeroHasNoLeadingTerm) {
  QSeries z(Level(3), 100);
  EXPECT_TRUE(z.is_zero());
  try {
    z.leading_numerator();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TruncationTooSmall);
  }
  try {
    z.inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TruncationTooSmall);
  }
}

TEST(QSeries, AddTermRespectsBound) {
  QSeries s(Level(2), 10);
  s.add_term(9, BigRational(1));
  s.add_term(10, BigRational(1));
  s.add_term(4, BigRational(0));
  EXPECT_EQ(s.terms().size(), 1u);
  auto t = s + QSeries::monomial(Level(2), 9, BigRational(-1), 20);
  EXPECT_TRUE(t.is_zero());
  EXPECT_EQ(t.bound(), 10);
}
