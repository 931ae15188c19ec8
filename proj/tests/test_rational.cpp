#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "isod4/linalg.hpp"
#include "isod4/rational.hpp"

using isod4::Matrix;
using isod4::Rational;

TEST(Rational, NormalizesSignAndGcd) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(0, -7).den(), 1);
}

TEST(Rational, DefaultIsZeroWithUnitDenominator) {
  std::array<Rational, 4> a{};
  for (const auto &x : a) {
    EXPECT_EQ(x.num(), 0);
    EXPECT_EQ(x.den(), 1);
  }
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, OverflowThrows) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + Rational(1), std::overflow_error);
  EXPECT_THROW(big * Rational(2), std::overflow_error);
}

TEST(Rational, ToIntegerRejectsFractions) {
  EXPECT_EQ(Rational(8, 4).to_integer(), 2);
  EXPECT_THROW((void)Rational(1, 2).to_integer(), std::domain_error);
}

TEST(Rational, FieldAxiomsOnRandomSamples) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> d(-30, 30);
  auto draw = [&] {
    int den = 0;
    while (den == 0)
      den = d(rng);
    return Rational(d(rng), den);
  };
  for (int i = 0; i < 500; ++i) {
    const Rational a = draw(), b = draw(), c = draw();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
    // ordering agrees with cross multiplication in plain integers
    EXPECT_EQ(a < b, a.num() * b.den() < b.num() * a.den());
  }
}

TEST(Linalg, InverseAndDeterminant) {
  const Matrix m{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  EXPECT_EQ(isod4::determinant(m), Rational(4));
  EXPECT_EQ(m * isod4::inverse(m), Matrix::identity(4));
  EXPECT_THROW(isod4::inverse(Matrix{{1, 2}, {2, 4}}), std::domain_error);
}

TEST(Linalg, NullspaceIsAnnihilated) {
  const Matrix m{{1, -1, 0, 0}, {6, 0, 6, 0}};
  const auto basis = isod4::nullspace(m);
  ASSERT_EQ(basis.size(), 2u);
  for (const auto &v : basis)
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Rational s = 0;
      for (std::size_t c = 0; c < 4; ++c)
        s += m(r, c) * v[c];
      EXPECT_TRUE(s.is_zero());
    }
  EXPECT_EQ(isod4::rank(m), 2u);
}

TEST(Linalg, RaggedInitializerThrows) {
  EXPECT_THROW((Matrix{{1, 2}, {3}}), std::invalid_argument);
}
