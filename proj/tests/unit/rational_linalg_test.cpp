#include <gtest/gtest.h>

#include <random>

#include "intertwine/error.hpp"
#include "intertwine/field.hpp"
#include "intertwine/linalg.hpp"
#include "intertwine/rational.hpp"

using namespace intertwine;

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(parse_rational("6/8"), make_rational(3, 4));
  EXPECT_EQ(to_string(parse_rational(" -2/4 ")), "-1/2");
  EXPECT_EQ(to_string(parse_rational("5")), "5");
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(Rational, MakeRationalReduces) {
  const Rational r = make_rational(10, 4);
  EXPECT_EQ(r.get_num(), 5);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(make_rational(3, -6), make_rational(-1, 2));
  EXPECT_THROW(make_rational(1, 0), DomainError);
}

TEST(Rational, FractionalPartAndFloor) {
  EXPECT_EQ(fractional_part(make_rational(7, 4)), make_rational(3, 4));
  EXPECT_EQ(fractional_part(make_rational(-1, 4)), make_rational(3, 4));
  EXPECT_EQ(floor(make_rational(-1, 4)), Rational(-1));
}

TEST(Field, ParsesNames) {
  EXPECT_EQ(FieldSpec::parse("q"), FieldSpec::rationals());
  EXPECT_EQ(FieldSpec::parse("R"), FieldSpec::rationals());
  EXPECT_EQ(FieldSpec::parse("z2"), FieldSpec::prime(2));
  EXPECT_EQ(FieldSpec::parse("Z/5").name(), "Z/5");
  EXPECT_THROW(FieldSpec::prime(4), DomainError);
  EXPECT_THROW(FieldSpec::parse("banana"), DomainError);
}

TEST(Field, PrimeFieldInverses) {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (unsigned long a = 1; a < p; ++a) EXPECT_EQ(f.mul(Rational(a), f.inv(Rational(a))), 1);
    EXPECT_THROW(f.inv(Rational(0)), DomainError);
  }
  const FieldSpec f3 = FieldSpec::prime(3);
  EXPECT_EQ(f3.reduce(make_rational(1, 2)), 2);
  EXPECT_THROW(f3.reduce(make_rational(1, 3)), DomainError);
}

TEST(Linalg, NullSpaceIsAnnihilated) {
  std::mt19937 rng(7);
  for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
      Matrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.reduce(Rational(static_cast<int>(rng() % 5) - 2));
      }
      const auto kernel = null_space(f, m);
      EXPECT_EQ(kernel.size() + rank(f, m), cols);
      for (const Vector& v : kernel) EXPECT_TRUE(is_zero(apply(f, m, v)));
    }
  }
}

TEST(Linalg, SolveFindsSolutionsOrReportsNone) {
  const FieldSpec q = FieldSpec::rationals();
  Matrix m(2, 2);
  m(0, 0) = 1; m(0, 1) = 2;
  m(1, 0) = 2; m(1, 1) = 4;
  const Vector consistent = {3, 6};
  const auto x = solve(q, m, consistent);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(apply(q, m, *x), consistent);
  const Vector inconsistent = {3, 7};
  EXPECT_FALSE(solve(q, m, inconsistent).has_value());
}
