#include "gf2seq/gf2.hpp"

#include <gtest/gtest.h>

namespace gf2seq {
namespace {

const GF2Scalar kAll[] = {GF2Scalar::zero(), GF2Scalar::one()};

TEST(GF2ScalarTest, AdditionTable) {
  EXPECT_EQ(GF2Scalar::one() + GF2Scalar::one(), GF2Scalar::zero());
  EXPECT_EQ(GF2Scalar::zero() + GF2Scalar::zero(), GF2Scalar::zero());
  EXPECT_EQ(GF2Scalar::zero() + GF2Scalar::one(), GF2Scalar::one());
  EXPECT_EQ(GF2Scalar::one() + GF2Scalar::zero(), GF2Scalar::one());
}

TEST(GF2ScalarTest, MultiplicationTable) {
  EXPECT_EQ(GF2Scalar::one() * GF2Scalar::one(), GF2Scalar::one());
  EXPECT_EQ(GF2Scalar::zero() * GF2Scalar::one(), GF2Scalar::zero());
  EXPECT_EQ(GF2Scalar::one() * GF2Scalar::zero(), GF2Scalar::zero());
  EXPECT_EQ(GF2Scalar::zero() * GF2Scalar::zero(), GF2Scalar::zero());
}

TEST(GF2ScalarTest, AbsVal) {
  EXPECT_EQ(abs_val(GF2Scalar::zero()), 0);
  EXPECT_EQ(abs_val(GF2Scalar::one()), 1);
  // multiplicativity forces |1*0| = |1|*|0|
  EXPECT_EQ(abs_val(GF2Scalar::one() * GF2Scalar::zero()),
            abs_val(GF2Scalar::one()) * abs_val(GF2Scalar::zero()));
}

TEST(GF2ScalarTest, AdditionGroupLaws) {
  for (GF2Scalar a : kAll) {
    EXPECT_EQ(a + a, GF2Scalar::zero());
    EXPECT_EQ(a + GF2Scalar::zero(), a);
    for (GF2Scalar b : kAll) EXPECT_EQ(a + b, b + a);
  }
}

TEST(GF2ScalarTest, AbsValMultiplicativeAndSubadditive) {
  for (GF2Scalar a : kAll)
    for (GF2Scalar b : kAll) {
      EXPECT_EQ(abs_val(a * b), abs_val(a) * abs_val(b));
      EXPECT_LE(abs_val(a + b), abs_val(a) + abs_val(b));
    }
}

TEST(GF2ScalarTest, CompoundAssignment) {
  GF2Scalar a = GF2Scalar::one();
  a += GF2Scalar::one();
  EXPECT_EQ(a, GF2Scalar::zero());
  a += GF2Scalar::one();
  a *= GF2Scalar::one();
  EXPECT_EQ(a, GF2Scalar::one());
  a *= GF2Scalar::zero();
  EXPECT_EQ(a, GF2Scalar::zero());
}

TEST(GF2ScalarTest, TextRoundTrip) {
  EXPECT_EQ(GF2Scalar::parse("0"), GF2Scalar::zero());
  EXPECT_EQ(GF2Scalar::parse("1"), GF2Scalar::one());
  EXPECT_EQ(GF2Scalar::zero().to_char(), '0');
  EXPECT_EQ(GF2Scalar::one().to_char(), '1');
  EXPECT_THROW(GF2Scalar::parse("2"), ParseError);
  EXPECT_THROW(GF2Scalar::parse(""), ParseError);
  EXPECT_THROW(GF2Scalar::parse("01"), ParseError);
}

}  // namespace
}  // namespace gf2seq
