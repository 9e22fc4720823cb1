#include "gf2seq/vector.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace gf2seq {
namespace {

FinSupportVec vec(std::vector<std::uint64_t> support) { return FinSupportVec(std::move(support)); }

TEST(FinSupportVecTest, ConstructionValidatesCanonicalForm) {
  EXPECT_NO_THROW(vec({}));
  EXPECT_NO_THROW(vec({1, 2, 9}));
  EXPECT_THROW(vec({2, 1}), std::invalid_argument);
  EXPECT_THROW(vec({1, 1}), std::invalid_argument);
  EXPECT_THROW(vec({0}), std::invalid_argument);
}

TEST(FinSupportVecTest, BasisVectors) {
  EXPECT_EQ(FinSupportVec::basis(1), vec({1}));
  EXPECT_EQ(FinSupportVec::basis(3), vec({3}));
  EXPECT_EQ(norm(FinSupportVec::basis(7)), 1);
  EXPECT_TRUE((FinSupportVec::basis(2) + FinSupportVec::basis(2)).is_zero());
  EXPECT_THROW(FinSupportVec::basis(0), std::invalid_argument);
}

TEST(FinSupportVecTest, AdditionIsSymmetricDifference) {
  EXPECT_EQ(vec({1, 2}) + vec({2, 3}), vec({1, 3}));
  EXPECT_EQ(vec({1, 5}) + vec({1, 5}), FinSupportVec{});
  EXPECT_EQ(vec({1, 5}) + FinSupportVec{}, vec({1, 5}));
  EXPECT_EQ(FinSupportVec{} + FinSupportVec{}, FinSupportVec{});
}

TEST(FinSupportVecTest, ScalarMultiplication) {
  EXPECT_EQ(GF2Scalar::zero() * vec({1, 5}), FinSupportVec{});
  EXPECT_EQ(GF2Scalar::one() * vec({1, 5}), vec({1, 5}));
  EXPECT_EQ(GF2Scalar::one() * FinSupportVec{}, FinSupportVec{});
}

TEST(FinSupportVecTest, DiscreteNorm) {
  EXPECT_EQ(norm(FinSupportVec{}), 0);
  EXPECT_EQ(norm(vec({5})), 1);
  EXPECT_EQ(norm(vec({1, 3, 7})), 1);
}

TEST(FinSupportVecTest, AdditionLawsExhaustive) {
  // commutativity over every pair with support within {1..8}
  std::vector<FinSupportVec> table;
  for (std::uint64_t m = 0; m < 256; ++m) table.push_back(unrank(m));
  for (const auto& x : table)
    for (const auto& y : table) ASSERT_EQ(x + y, y + x);

  // associativity, exhaustive at p=5
  std::vector<FinSupportVec> small;
  for (std::uint64_t m = 0; m < 32; ++m) small.push_back(unrank(m));
  for (const auto& x : small)
    for (const auto& y : small)
      for (const auto& z : small) ASSERT_EQ((x + y) + z, x + (y + z));
}

TEST(FinSupportVecTest, AdditionLawsSampledAtLargerSupport) {
  std::mt19937_64 rng(421);
  for (int i = 0; i < 20000; ++i) {
    const FinSupportVec x = unrank(rng() & 0xffff);
    const FinSupportVec y = unrank(rng() & 0xffff);
    const FinSupportVec z = unrank(rng() & 0xffff);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ(x + y, y + x);
    ASSERT_TRUE((x + x).is_zero());
  }
}

TEST(FinSupportVecTest, ScalarLawsExhaustive) {
  const GF2Scalar scalars[] = {GF2Scalar::zero(), GF2Scalar::one()};
  for (std::uint64_t m = 0; m < 64; ++m) {
    const FinSupportVec x = unrank(m);
    EXPECT_EQ(GF2Scalar::one() * x, x);
    for (GF2Scalar a : scalars) {
      EXPECT_EQ(norm(a * x), abs_val(a) * norm(x));
      for (GF2Scalar b : scalars) {
        EXPECT_EQ(a * (b * x), (a * b) * x);
        EXPECT_EQ((a + b) * x, (a * x) + (b * x));
      }
      for (std::uint64_t n = 0; n < 64; ++n) {
        const FinSupportVec y = unrank(n);
        EXPECT_EQ(a * (x + y), (a * x) + (a * y));
      }
    }
  }
}

TEST(FinSupportVecTest, ParseAcceptsCanonicalLiterals) {
  EXPECT_EQ(FinSupportVec::parse("{}"), FinSupportVec{});
  EXPECT_EQ(FinSupportVec::parse("{1,3,7}"), vec({1, 3, 7}));
  EXPECT_EQ(FinSupportVec::parse("{ 1 , 3 }"), vec({1, 3}));
  EXPECT_EQ(FinSupportVec::parse("  {2}  "), vec({2}));
  EXPECT_EQ(FinSupportVec::parse("{ }"), FinSupportVec{});
}

TEST(FinSupportVecTest, ParseRejectsMalformedLiterals) {
  EXPECT_THROW(FinSupportVec::parse("{2,1}"), ParseError);
  EXPECT_THROW(FinSupportVec::parse("{1,1}"), ParseError);
  EXPECT_THROW(FinSupportVec::parse("{0}"), ParseError);
  EXPECT_THROW(FinSupportVec::parse("{1,}"), ParseError);
  EXPECT_THROW(FinSupportVec::parse("{,1}"), ParseError);
  EXPECT_THROW(FinSupportVec::parse("1,2"), ParseError);
  EXPECT_THROW(FinSupportVec::parse("{1,2"), ParseError);
  EXPECT_THROW(FinSupportVec::parse("{1} x"), ParseError);
  EXPECT_THROW(FinSupportVec::parse("{a}"), ParseError);
  EXPECT_THROW(FinSupportVec::parse(""), ParseError);
  EXPECT_THROW(FinSupportVec::parse("{99999999999999999999999}"), ParseError);
}

TEST(FinSupportVecTest, ParseErrorNamesOffendingToken) {
  try {
    FinSupportVec::parse("{3,xyz}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& err) {
    EXPECT_NE(std::string(err.what()).find("xyz"), std::string::npos);
  }
}

TEST(FinSupportVecTest, ToStringRoundTrips) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const FinSupportVec x = unrank(rng());
    EXPECT_EQ(FinSupportVec::parse(x.to_string()), x);
  }
  EXPECT_EQ(FinSupportVec{}.to_string(), "{}");
  EXPECT_EQ(vec({1, 3, 7}).to_string(), "{1,3,7}");
}

TEST(FinSupportVecTest, RankExamples) {
  EXPECT_EQ(rank(FinSupportVec{}), 0u);
  EXPECT_EQ(rank(vec({1})), 1u);
  EXPECT_EQ(rank(vec({1, 3})), 5u);
  EXPECT_EQ(rank(vec({4})), 8u);
}

TEST(FinSupportVecTest, UnrankExamples) {
  EXPECT_EQ(unrank(0), FinSupportVec{});
  EXPECT_EQ(unrank(5), vec({1, 3}));
  EXPECT_EQ(unrank(8), vec({4}));
}

TEST(FinSupportVecTest, RankUnrankInverse) {
  for (std::uint64_t n = 0; n <= 65535; ++n) ASSERT_EQ(rank(unrank(n)), n);

  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t n = rng() & ((std::uint64_t{1} << 62) - 1);
    const FinSupportVec x = unrank(n);
    ASSERT_EQ(unrank(rank(x)), x);
  }
}

TEST(FinSupportVecTest, RankOverflowSignalled) {
  EXPECT_EQ(rank(vec({62}), 62), std::uint64_t{1} << 61);
  EXPECT_THROW(rank(vec({63}), 62), RankOverflowError);
  EXPECT_THROW(rank(vec({1, 100})), RankOverflowError);
  EXPECT_EQ(rank(vec({64}), 64), std::uint64_t{1} << 63);
  try {
    rank(vec({63}), 62);
    FAIL() << "expected RankOverflowError";
  } catch (const RankOverflowError& err) {
    EXPECT_EQ(err.index(), 63u);
    EXPECT_EQ(err.width(), 62u);
  }
  EXPECT_THROW(rank(vec({1}), 0), std::invalid_argument);
  EXPECT_THROW(rank(vec({1}), 65), std::invalid_argument);
}

TEST(FinSupportVecTest, OrderingIsLexicographicOnSupport) {
  EXPECT_LT(FinSupportVec{}, vec({1}));
  EXPECT_LT(vec({1}), vec({1, 2}));
  EXPECT_LT(vec({1, 2}), vec({2}));
}

}  // namespace
}  // namespace gf2seq
