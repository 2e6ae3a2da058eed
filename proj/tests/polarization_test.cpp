#include "enriques/polarization.hpp"

#include <numeric>
#include <random>

#include "enriques/collections.hpp"
#include "gtest/gtest.h"
#include "support.hpp"

namespace enriques {
namespace {

using namespace enriques::testing;

class PolarizationTest : public ::testing::Test {
 protected:
  GramLattice L = e10_preset();
  DivisorClass FG{e() + f()};
  CurveTestSet uv{L, {e(), f()}, e() + f()};
};

TEST_F(PolarizationTest, GcdCondition) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 20; ++i) {
    EXPECT_TRUE(gcd_condition(L, random_divisor(rng, 3), random_divisor(rng, 3), 1));
  }
  EXPECT_FALSE(gcd_condition(L, DivisorClass(e() + 2 * f()), FG, 3));  // H.D = 3
  EXPECT_TRUE(gcd_condition(L, DivisorClass(e() + f()), FG, 3));       // H.D = 2
  EXPECT_FALSE(gcd_condition(L, DivisorClass(e()), DivisorClass(e()), 3));  // gcd(0, 3) = 3
  EXPECT_THROW(gcd_condition(L, FG, FG, 0), Error);
}

TEST_F(PolarizationTest, RankOneIsImmediate) {
  const MukaiVector v{1, FG, 3};
  const DivisorClass seed(2 * e() + 2 * f());
  const auto cert = find_coprime_ample(L, v, seed, uv);
  EXPECT_EQ(cert.gcd_value, 1);
  EXPECT_EQ(verify_certificate(L, v, seed, uv, cert), "");
}

TEST_F(PolarizationTest, RankThreeWorkedExample) {
  const MukaiVector v{3, FG, 1};
  const auto cert = find_coprime_ample(L, v, FG, uv);
  EXPECT_EQ(cert.d, 1);
  EXPECT_EQ(pair(L, cert.X, FG.num), 1);
  EXPECT_EQ(cert.Hprime.num, cert.X + 3 * cert.k * FG.num);
  EXPECT_EQ(std::gcd(pair(L, cert.Hprime, FG), Int{3}), 1);
  EXPECT_GE(square(L, cert.Hprime), 6);
  EXPECT_EQ(verify_certificate(L, v, FG, uv, cert), "");
}

TEST_F(PolarizationTest, NumericallyTrivialD) {
  const MukaiVector v{1, canonical_class(), 1};
  const DivisorClass seed(2 * e() + 2 * f());
  const auto cert = find_coprime_ample(L, v, seed, uv);
  EXPECT_TRUE(cert.X.is_zero());
  EXPECT_EQ(cert.Hprime.num, seed.num);
  EXPECT_EQ(verify_certificate(L, v, seed, uv, cert), "");
}

TEST_F(PolarizationTest, Errors) {
  EXPECT_THROW(find_coprime_ample(L, MukaiVector{2, FG, 2}, FG, uv), Error);
  EXPECT_THROW(find_coprime_ample(L, MukaiVector{3, FG, 1}, DivisorClass(e()), uv), Error);
  const MukaiVector v{1, DivisorClass(e() - 5 * f()), -9};
  ASSERT_TRUE(is_exceptional(L, v));
  try {
    find_coprime_ample(L, v, FG, uv, 1);
    FAIL() << "expected budget exhaustion";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::BudgetExceeded);
    // H_1 = e + 2f is positive on the curves but has square 4.
    EXPECT_NE(std::string(err.what()).find("H^2=4"), std::string::npos);
  }
}

TEST_F(PolarizationTest, DivisibilityCoprimeToRank) {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 500; ++i) {
    // Scale D to make nontrivial divisibility common.
    DivisorClass D = static_cast<Int>(1 + rng() % 3) * random_divisor(rng, 3);
    const Int N = 1 + square(L, D);
    for (Int r = 1; r <= (N < 0 ? -N : N); ++r) {
      if (N % r != 0) continue;
      const MukaiVector v{r, D, N / r};
      ASSERT_EQ(square(L, v), 1);
      EXPECT_EQ(std::gcd(divisibility(L, D.num), r), 1);
    }
  }
}

TEST_F(PolarizationTest, RandomCertificatesValidate) {
  const auto seq = find_isotropic_sequence(L, 10, 2);
  const auto T = half_pencil_test_set(L, seq);
  const DivisorClass seed(T.cone_ref());
  std::mt19937_64 rng(63);
  for (int i = 0; i < 200; ++i) {
    const auto v = random_exceptional(L, rng);
    const auto cert = find_coprime_ample(L, v, seed, T);
    EXPECT_EQ(verify_certificate(L, v, seed, T, cert), "");
    EXPECT_EQ(std::gcd(pair(L, cert.Hprime, v.D), v.r), 1);
    const Int m = v.r;
    EXPECT_EQ(((pair(L, cert.Hprime, v.D) - pair(L, cert.X, v.D.num)) % m + m) % m, 0);
  }
}

TEST_F(PolarizationTest, VerifierCatchesTampering) {
  const MukaiVector v{3, FG, 1};
  auto cert = find_coprime_ample(L, v, FG, uv);
  auto bad = cert;
  bad.k += 1;
  EXPECT_NE(verify_certificate(L, v, FG, uv, bad), "");
  bad = cert;
  bad.gcd_value = 3;
  EXPECT_NE(verify_certificate(L, v, FG, uv, bad), "");
}

}  // namespace
}  // namespace enriques
