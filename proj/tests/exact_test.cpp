#include "zdi/exact.hpp"

#include <gtest/gtest.h>

#include <random>

#include "zdi/errors.hpp"

namespace zdi {
namespace {

ExactRational Q(long num, long den) { return ExactRational(BigInt(num), BigInt(den)); }

TEST(ExactRationalTest, ReducesToLowestTerms) {
  auto q = Q(6, -4);
  EXPECT_EQ(q.numerator(), -3);
  EXPECT_EQ(q.denominator(), 2);
  EXPECT_EQ(q.ToString(), "-3/2");
  EXPECT_EQ(Q(8, 4).ToString(), "2");
}

TEST(ExactRationalTest, ZeroDenominatorRejected) {
  EXPECT_THROW(Q(1, 0), Error);
}

TEST(ExactRationalTest, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(ExactRational::Parse("175/6"), Q(175, 6));
  EXPECT_EQ(ExactRational::Parse("12/8"), Q(3, 2));
  EXPECT_EQ(ExactRational::Parse("-7"), Q(-7, 1));
  EXPECT_THROW(ExactRational::Parse("1/0"), Error);
  EXPECT_THROW(ExactRational::Parse("abc"), Error);
  EXPECT_THROW(ExactRational::Parse("1.5"), Error);
}

TEST(ExactRationalTest, ArithmeticIsExact) {
  EXPECT_EQ(Q(1, 2) + Q(1, 3), Q(5, 6));
  EXPECT_EQ(Q(2, 3) * Q(9, 4), Q(3, 2));
  EXPECT_LT(Q(1, 3), Q(1, 2));
}

TEST(PowerProductTest, NormalizesTerms) {
  PowerProduct p;
  p.MultiplyPower(7, 2).MultiplyPower(2, 3).MultiplyPower(7, 1).MultiplyPower(1, 100).MultiplyPower(5, 0);
  ASSERT_EQ(p.terms().size(), 2u);
  EXPECT_EQ(p.terms()[0], (PowerTerm{2, 3}));
  EXPECT_EQ(p.terms()[1], (PowerTerm{7, 3}));
  EXPECT_EQ(p.ToString(), "1 * 2^3 * 7^3");
  EXPECT_EQ(p.Expand(), ExactRational(BigInt(8 * 343)));
}

TEST(PowerProductTest, ZeroBaseCollapses) {
  PowerProduct p(Q(3, 2));
  p.MultiplyPower(0, 4).MultiplyPower(9, 9);
  EXPECT_TRUE(p.terms().empty());
  EXPECT_TRUE(p.scalar().is_zero());
  EXPECT_EQ(p.ToString(), "0");
}

TEST(PowerProductTest, ExpansionThreshold) {
  PowerProduct p;
  p.MultiplyPower(25, 18);
  EXPECT_TRUE(p.Expandable());
  EXPECT_FALSE(p.Expandable(50.0));
  try {
    p.Expand(50.0);
    FAIL() << "expected a threshold error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kExpansionThreshold);
  }
  PowerProduct huge;
  huge.MultiplyPower(3, BigInt("2000000"));
  EXPECT_FALSE(huge.Expandable());
}

TEST(PowerProductTest, ResidueMatchesExpansion) {
  PowerProduct p(Q(1, 2));
  p.MultiplyPower(7, 6);
  const std::uint64_t prime = 1'000'000'007ULL;
  BigInt expected = (BigInt(117649) * BigInt(500000004)) % BigInt(1000000007);
  EXPECT_EQ(*p.ResidueMod(prime), expected.get_ui());
  PowerProduct bad(Q(1, 1000000007));
  EXPECT_FALSE(bad.ResidueMod(prime).has_value());
}

// Random products survive print/parse unchanged.
TEST(PowerProductTest, TextRoundTripProperty) {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    PowerProduct p(Q(static_cast<long>(rng() % 1000) + 1, static_cast<long>(rng() % 97) + 1));
    int terms = static_cast<int>(rng() % 5);
    for (int i = 0; i < terms; ++i) p.MultiplyPower(BigInt(rng() % 50), BigInt(rng() % 40));
    EXPECT_EQ(PowerProduct::Parse(p.ToString()), p) << p.ToString();
    FactoredSum s({p, PowerProduct(Q(1, 3))});
    EXPECT_EQ(FactoredSum::Parse(s.ToString()), s) << s.ToString();
  }
}

TEST(FactoredSumTest, ExpandAndText) {
  FactoredSum s;
  EXPECT_EQ(s.ToString(), "0");
  EXPECT_EQ(s.Expand(), ExactRational());
  s.Add(PowerProduct(Q(1, 2)).MultiplyPower(6, 4));
  s.Add(PowerProduct(Q(1, 2)).MultiplyPower(12, 2));
  s.Add(PowerProduct(Q(1, 1)).MultiplyPower(12, 1));
  EXPECT_EQ(s.ToString(), "1/2 * 6^4 + 1/2 * 12^2 + 1 * 12^1");
  EXPECT_EQ(s.Expand(), ExactRational(BigInt(732)));
}

TEST(CompareValuesTest, ExactWhenExpandable) {
  FactoredSum a({PowerProduct(Q(1, 2)).MultiplyPower(2, 3)});
  FactoredSum b({PowerProduct(Q(4, 1))});
  EXPECT_EQ(CompareValues(a, b), Comparison::kEqual);
  EXPECT_EQ(CompareValues(a, FactoredSum({PowerProduct(Q(5, 1))})), Comparison::kDifferent);
}

TEST(CompareValuesTest, HugeValuesUseFingerprints) {
  FactoredSum a({PowerProduct().MultiplyPower(3, BigInt("5000000"))});
  FactoredSum b({PowerProduct().MultiplyPower(3, BigInt("5000001"))});
  EXPECT_EQ(CompareValues(a, b), Comparison::kDifferent);
  EXPECT_EQ(CompareValues(a, a), Comparison::kUndetermined);
}

}  // namespace
}  // namespace zdi
