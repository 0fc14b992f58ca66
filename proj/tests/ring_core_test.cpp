#include "zdi/ring_core.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "zdi/errors.hpp"

namespace zdi {
namespace {

TEST(FactorizeTest, Examples) {
  EXPECT_EQ(Modulus::Factorize(12).factors(), (std::vector<PrimePower>{{2, 2}, {3, 1}}));
  EXPECT_EQ(Modulus::Factorize(27).factors(), (std::vector<PrimePower>{{3, 3}}));
  EXPECT_EQ(Modulus::Factorize(97).factors(), (std::vector<PrimePower>{{97, 1}}));
  EXPECT_TRUE(Modulus::Factorize(97).is_prime());
}

TEST(FactorizeTest, RejectsSmallModuli) {
  EXPECT_THROW(Modulus::Factorize(0), Error);
  EXPECT_THROW(Modulus::Factorize(1), Error);
}

TEST(FactorizeTest, InvariantsHoldUpTo5000) {
  for (std::uint64_t m = 2; m <= 5000; ++m) {
    auto mod = Modulus::Factorize(m);
    std::uint64_t product = 1;
    std::uint64_t last = 0;
    for (const auto& f : mod.factors()) {
      EXPECT_TRUE(IsPrime(f.prime));
      EXPECT_GT(f.prime, last);
      EXPECT_GE(f.exponent, 1u);
      last = f.prime;
      for (unsigned i = 0; i < f.exponent; ++i) product *= f.prime;
    }
    EXPECT_EQ(product, m);
  }
}

TEST(FactorizeTest, LargePrimePowersBypassTrialDivision) {
  const std::uint64_t p = 999999937;
  auto mod = Modulus::Factorize(p * p);
  EXPECT_EQ(mod.factors(), (std::vector<PrimePower>{{p, 2}}));
  EXPECT_EQ(Modulus::Factorize(1ULL << 62).factors(), (std::vector<PrimePower>{{2, 62}}));
  // 10^12 + 39 is prime but above the trial-division limit.
  EXPECT_THROW(Modulus::Factorize(1'000'000'000'039ULL), Error);
}

TEST(PrimePowerOfTest, OverflowAndPrimality) {
  EXPECT_EQ(Modulus::PrimePowerOf(3, 4).value(), 81u);
  EXPECT_THROW(Modulus::PrimePowerOf(4, 2), Error);
  EXPECT_THROW(Modulus::PrimePowerOf(2, 64), Error);
}

TEST(EulerPhiTest, Examples) {
  EXPECT_EQ(EulerPhi(1), 1u);
  EXPECT_EQ(EulerPhi(9), 6u);
  EXPECT_EQ(EulerPhi(12), 4u);
  EXPECT_THROW(EulerPhi(0), Error);
}

TEST(EulerPhiTest, MatchesCountingAndIsMultiplicative) {
  for (std::uint64_t m = 1; m <= 300; ++m) {
    std::uint64_t count = 0;
    for (std::uint64_t x = 1; x <= m; ++x) count += std::gcd(x, m) == 1;
    EXPECT_EQ(EulerPhi(m), count) << m;
  }
  for (std::uint64_t a = 1; a <= 60; ++a) {
    for (std::uint64_t b = 1; b <= 60; ++b) {
      if (std::gcd(a, b) == 1) EXPECT_EQ(EulerPhi(a * b), EulerPhi(a) * EulerPhi(b));
    }
  }
}

TEST(ValuationTest, Examples) {
  EXPECT_EQ(Valuation(12, 2), 2u);
  EXPECT_EQ(Valuation(27, 3), 3u);
  EXPECT_EQ(Valuation(5, 2), 0u);
  EXPECT_THROW(Valuation(0, 2), Error);
}

TEST(ZeroDivisorsTest, Examples) {
  EXPECT_EQ(ZeroDivisors(Modulus::Factorize(12)), (std::vector<std::uint64_t>{2, 3, 4, 6, 8, 9, 10}));
  EXPECT_TRUE(ZeroDivisors(Modulus::Factorize(7)).empty());
  EXPECT_EQ(ZeroDivisors(Modulus::Factorize(27)), (std::vector<std::uint64_t>{3, 6, 9, 12, 15, 18, 21, 24}));
}

TEST(ZeroDivisorsTest, MatchesGcdScanAndCount) {
  for (std::uint64_t m = 2; m <= 1000; ++m) {
    auto mod = Modulus::Factorize(m);
    std::vector<std::uint64_t> scan;
    for (std::uint64_t x = 1; x < m; ++x) {
      if (std::gcd(x, m) > 1) scan.push_back(x);
    }
    auto zd = ZeroDivisors(mod);
    ASSERT_EQ(zd, scan) << m;
    EXPECT_EQ(ZeroDivisorCount(mod), zd.size());
    // Sum of class sizes phi(m/d) over proper divisors.
    std::uint64_t by_class = 0;
    for (std::uint64_t d : Divisors(mod)) {
      if (d != 1 && d != m) by_class += EulerPhi(m / d);
    }
    EXPECT_EQ(by_class, zd.size()) << m;
  }
}

TEST(ZeroDivisorsTest, PrimePowerCardinality) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    std::uint64_t pn = p;
    for (unsigned n = 2; pn * p <= 200000; ++n) {
      pn *= p;
      EXPECT_EQ(ZeroDivisors(Modulus::PrimePowerOf(p, n)).size(), pn / p - 1) << p << "^" << n;
    }
  }
}

TEST(DivisorsTest, SortedAndComplete) {
  EXPECT_EQ(Divisors(Modulus::Factorize(12)), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(GcdClassMembers(Modulus::Factorize(16), 4), (std::vector<std::uint64_t>{4, 12}));
  EXPECT_THROW(GcdClassMembers(Modulus::Factorize(16), 3), Error);
}

}  // namespace
}  // namespace zdi
