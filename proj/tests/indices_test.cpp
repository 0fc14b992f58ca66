#include "zdi/indices.hpp"

#include <gtest/gtest.h>

#include <random>

#include "brute_force_oracle.hpp"
#include "zdi/errors.hpp"

namespace zdi {
namespace {

ZeroDivisorGraph G(std::uint64_t m) { return ZeroDivisorGraph::Build(Modulus::Factorize(m)); }
ExactRational Q(long num, long den = 1) { return ExactRational(BigInt(num), BigInt(den)); }

TEST(NeighborStatsTest, Examples) {
  auto g27 = G(27);
  auto s3 = NeighborStatsOf(g27.graph(), g27.graph().index_of(3));
  EXPECT_EQ(s3.sum, 14);
  EXPECT_EQ(s3.product.Expand(), Q(49));
  EXPECT_EQ(s3.product.ToString(), "1 * 7^2");

  auto s9 = NeighborStatsOf(g27.graph(), g27.graph().index_of(9));
  EXPECT_EQ(s9.sum, 19);
  EXPECT_EQ(s9.product.Expand(), Q(448));
  EXPECT_EQ(s9.product.ToString(), "1 * 2^6 * 7^1");

  auto g8 = G(8);
  auto s4 = NeighborStatsOf(g8.graph(), g8.graph().index_of(4));
  EXPECT_EQ(s4.sum, 2);
  EXPECT_EQ(s4.product.Expand(), Q(1));
  EXPECT_FALSE(s4.isolated);
}

TEST(NeighborStatsTest, IsolatedVertexUsesEmptyProduct) {
  auto g4 = G(4);
  auto s = NeighborStatsOf(g4.graph(), 0);
  EXPECT_TRUE(s.isolated);
  EXPECT_EQ(s.sum, 0);
  EXPECT_EQ(s.product.Expand(), Q(1));
}

TEST(EciTest, Examples) {
  EXPECT_EQ(Eci(G(27).graph()), 38);
  EXPECT_EQ(Eci(G(8).graph()), 6);
  EXPECT_EQ(Eci(G(12).graph()), 38);
  EXPECT_EQ(Eci(G(4).graph()), 0);
}

TEST(AeciTest, Examples) {
  EXPECT_EQ(Aeci(G(16).graph()), Q(28));
  EXPECT_EQ(Aeci(G(27).graph()), Q(1043));
  EXPECT_EQ(Aeci(G(9).graph()), Q(2));
}

TEST(EdizTest, Examples) {
  EXPECT_EQ(Ediz(G(27).graph()), Q(80));
  EXPECT_EQ(Ediz(G(8).graph()), Q(4));
  EXPECT_EQ(Ediz(G(16).graph()), Q(28));
}

TEST(IndicesTest, SingleVertexIsUndefinedForRatios) {
  auto g4 = G(4);
  for (auto fn : {+[](const SimpleGraph& g) { return Aeci(g); }, +[](const SimpleGraph& g) { return Ediz(g); }}) {
    try {
      fn(g4.graph());
      FAIL() << "expected undefined";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kUndefinedIndex);
      EXPECT_NE(std::string(e.what()).find("eccentricity 0"), std::string::npos);
    }
  }
  auto q4 = QuotientGraph::Build(Modulus::Factorize(4));
  EXPECT_EQ(Eci(q4), 0);
  EXPECT_THROW(Ediz(q4), Error);
  EXPECT_THROW(AeciFactored(q4), Error);
}

TEST(IndicesTest, EmptyGraphIsUndefined) {
  auto g = G(13);
  EXPECT_THROW(Eci(g.graph()), Error);
  EXPECT_THROW(Aeci(g.graph()), Error);
  EXPECT_THROW(Eci(QuotientGraph::Build(Modulus::Factorize(13))), Error);
}

TEST(AeciTest, ThresholdExceededPointsAtFactoredPath) {
  auto g = G(81);
  try {
    Aeci(g.graph(), 20.0);
    FAIL() << "expected a threshold error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kExpansionThreshold);
    EXPECT_NE(std::string(e.what()).find("factored"), std::string::npos);
  }
  auto ecc = Eccentricities(g.graph());
  EXPECT_EQ(AeciFactored(g.graph(), ecc).Expand(), Aeci(g.graph()));
}

// K_k from Z_{p^2}: eci = k(k-1), ediz = k(k-1)^2, aeci = k(k-1)^(k-1).
TEST(AnalyticOraclesTest, CompleteGraphs) {
  for (long p : {3, 5, 7}) {
    auto g = G(p * p);
    const long k = p - 1;
    ASSERT_EQ(g.graph().size(), static_cast<std::size_t>(k));
    EXPECT_EQ(g.graph().edge_count(), static_cast<std::uint64_t>(k * (k - 1) / 2));
    EXPECT_EQ(Eci(g.graph()), k * (k - 1));
    EXPECT_EQ(Ediz(g.graph()), Q(k * (k - 1) * (k - 1)));
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), k - 1, k - 1);
    EXPECT_EQ(Aeci(g.graph()), ExactRational(BigInt(k) * power));
  }
}

// K_{1,s} from Z_{2q}: eci = 3s, ediz = s^2/2 + s, aeci = s^2/2 + 1.
TEST(AnalyticOraclesTest, Stars) {
  for (long q : {3, 5, 7, 11}) {
    auto g = G(2 * q);
    const long s = q - 1;
    ASSERT_EQ(g.graph().size(), static_cast<std::size_t>(s + 1));
    EXPECT_EQ(Eci(g.graph()), 3 * s);
    EXPECT_EQ(Ediz(g.graph()), Q(s * s, 2) + Q(s));
    EXPECT_EQ(Aeci(g.graph()), Q(s * s, 2) + Q(1));
  }
}

// Indices only depend on the unlabelled graph.
TEST(IndicesTest, RelabelingInvariance) {
  std::mt19937_64 rng(7);
  for (std::uint64_t m : {12, 18, 30, 36, 64, 100}) {
    auto built = G(m);
    const auto& g = built.graph();
    std::vector<std::uint64_t> fresh(g.size());
    for (std::size_t i = 0; i < fresh.size(); ++i) fresh[i] = 1000 + i;
    std::shuffle(fresh.begin(), fresh.end(), rng);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    for (auto [u, v] : g.edge_list()) edges.emplace_back(fresh[g.index_of(u)], fresh[g.index_of(v)]);
    auto h = SimpleGraph::FromEdges(fresh, edges);
    EXPECT_EQ(Eci(h), Eci(g));
    EXPECT_EQ(Aeci(h), Aeci(g));
    EXPECT_EQ(Ediz(h), Ediz(g));
  }
}

TEST(IndicesTest, PrimePowerDenominatorsDivideTwo) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (unsigned n = 3; n <= 6; ++n) {
      auto mod = Modulus::PrimePowerOf(p, n);
      if (ZeroDivisorCount(mod) > 2500) continue;
      auto g = ZeroDivisorGraph::Build(mod);
      EXPECT_EQ(2 % Aeci(g.graph()).denominator(), 0);
      EXPECT_EQ(2 % Ediz(g.graph()).denominator(), 0);
    }
  }
}

TEST(IndicesTest, ExplicitAgreesWithDefinitionOracle) {
  for (std::uint64_t m = 6; m <= 150; ++m) {
    auto ref = oracle::Build(m);
    if (ref.vertices.size() < 2) continue;
    auto g = G(m);
    EXPECT_EQ(Eci(g.graph()), oracle::Eci(ref)) << m;
    EXPECT_EQ(Aeci(g.graph()).ToString(), oracle::Text(oracle::Aeci(ref))) << m;
    EXPECT_EQ(Ediz(g.graph()).ToString(), oracle::Text(oracle::Ediz(ref))) << m;
  }
}

TEST(QuotientIndicesTest, MatchExplicit) {
  for (std::uint64_t m = 6; m <= 500; ++m) {
    auto mod = Modulus::Factorize(m);
    if (mod.is_prime()) continue;
    auto g = ZeroDivisorGraph::Build(mod);
    auto q = QuotientGraph::Build(mod);
    EXPECT_EQ(Eci(q), Eci(g.graph())) << m;
    EXPECT_EQ(Aeci(q), Aeci(g.graph())) << m;
    EXPECT_EQ(Ediz(q), Ediz(g.graph())) << m;
  }
}

TEST(QuotientIndicesTest, ClassStatsForZ27) {
  auto q = QuotientGraph::Build(Modulus::Factorize(27));
  auto s = ClassNeighborStats(q, 1);
  EXPECT_EQ(s.sum, 19);
  EXPECT_EQ(s.product.Expand(), Q(448));
  EXPECT_EQ(AeciFactored(q).ToString(), "3 * 7^2 + 2 * 2^6 * 7^1");
}

TEST(IndexValueTest, TextForms) {
  IndexValue v{IndexKind::kAeci, Method::kClass, Q(175, 6)};
  EXPECT_EQ(v.ToString(), "175/6");
  EXPECT_FALSE(v.factored());
  EXPECT_EQ(ParseMethod("quotient"), Method::kQuotient);
  EXPECT_THROW(ParseIndexKind("wiener"), Error);
}

}  // namespace
}  // namespace zdi
