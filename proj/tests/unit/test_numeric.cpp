#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "symleib/linalg.hpp"
#include "symleib/rational.hpp"
#include "symleib/scalar.hpp"

using namespace symleib;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-6/4").str(), "-3/2");
  EXPECT_EQ(Rational::parse("+7").str(), "7");
  EXPECT_EQ(Rational::parse("0/5").str(), "0");
  EXPECT_THROW(Rational::parse("0.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1e3"), std::invalid_argument);
}

TEST(Rational, Arithmetic) {
  Rational a(1, 3), b(-1, 6);
  EXPECT_EQ(a + b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(-1, 18));
  EXPECT_EQ(a / b, Rational(-2));
  EXPECT_LT(b, a);
  EXPECT_THROW(a / Rational(0), std::domain_error);
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
}

TEST(Rational, SpillsToGmpWithoutOverflow) {
  Rational big(std::numeric_limits<std::int64_t>::max());
  Rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  mpq_class ref(mpz_class(std::numeric_limits<std::int64_t>::max()));
  ref *= ref;
  EXPECT_EQ(sq.to_mpq(), ref);
  // and back down to the inline representation
  Rational back = sq / big;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
}

TEST(Rational, ExactSqrt) {
  EXPECT_EQ(*Rational(9, 4).exact_sqrt(), Rational(3, 2));
  EXPECT_FALSE(Rational(2).exact_sqrt());
  EXPECT_FALSE(Rational(-4).exact_sqrt());
}

TEST(Scalar, RegimesAndTolerance) {
  Scalar e(Rational(1, 2)), f(0.5);
  EXPECT_TRUE(e.is_exact());
  EXPECT_FALSE(f.is_exact());
  EXPECT_FALSE((e + f).is_exact());  // floating is contagious
  EXPECT_TRUE(approx_equal(Scalar(1e6), Scalar(1e6 + 1e-4)));  // scaled by magnitude
  EXPECT_FALSE(approx_equal(Scalar(1.0), Scalar(1.0 + 1e-6)));
  EXPECT_EQ(deviation(Scalar(Rational(1, 3)), Scalar(Rational(1, 3))), 0.0);
  EXPECT_NEAR(exp(Scalar(1.0)).to_double(), std::exp(1.0), 1e-15);
}

TEST(Linalg, RowReduceExamples) {
  auto id = row_reduce(QMatrix::identity(3));
  EXPECT_EQ(id.rank, 3u);
  EXPECT_EQ(id.reduced, QMatrix::identity(3));

  auto zero = row_reduce(QMatrix(2, 2));
  EXPECT_EQ(zero.rank, 0u);
  EXPECT_EQ(zero.reduced, QMatrix(2, 2));

  auto r = row_reduce(QMatrix{{1, 2}, {2, 4}});
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.reduced, (QMatrix{{1, 2}, {0, 0}}));
}

TEST(Linalg, KernelExamples) {
  EXPECT_TRUE(kernel_basis(QMatrix::identity(2)).empty());
  EXPECT_EQ(kernel_basis(QMatrix(1, 3)).size(), 3u);

  QMatrix m{{1, 1, 0}};
  auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) {
    EXPECT_TRUE(is_zero(m * v));
    EXPECT_FALSE(is_zero(v));
  }
}

TEST(Linalg, InverseAndDeterminant) {
  QMatrix a{{2, 1, 0}, {0, 1, 3}, {1, 0, 1}};
  EXPECT_EQ(determinant(a), Rational(5));  // 2*1 - 1*(0-3)
  EXPECT_EQ(a * inverse(a), QMatrix::identity(3));
  EXPECT_THROW(inverse(QMatrix{{1, 2}, {2, 4}}), std::domain_error);

  Matrix f{{Scalar(2.0), Scalar(1.0)}, {Scalar(1.0), Scalar(3.0)}};
  Matrix p = f * inverse(f);
  EXPECT_LT(max_deviation(p, to_scalar(QMatrix::identity(2))), 1e-12);
}

TEST(Linalg, FloatingRowReduceRejected) {
  Matrix f{{Scalar(0.5)}};
  EXPECT_THROW(row_reduce(f), std::invalid_argument);
}
