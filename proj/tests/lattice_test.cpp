#include "enriques/lattice.hpp"

#include <fstream>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "support.hpp"

namespace enriques {
namespace {

using namespace enriques::testing;

TEST(E10Preset, GramEntries) {
  const auto L = e10_preset();
  EXPECT_EQ(L.rank(), 10u);
  EXPECT_EQ(L.at(0, 1), 1);
  EXPECT_EQ(L.at(0, 0), 0);
  EXPECT_EQ(L.at(1, 1), 0);
  EXPECT_EQ(L.at(2, 2), -2);
  // a8 hangs off a5.
  EXPECT_EQ(L.at(9, 6), 1);
  EXPECT_EQ(L.at(9, 8), 0);
}

TEST(E10Preset, EvenUnimodular) {
  const auto L = e10_preset();
  EXPECT_TRUE(L.is_even());
  EXPECT_EQ(laplace_determinant(L), -1);
  EXPECT_EQ(L.determinant(), -1);
  EXPECT_TRUE(L.is_unimodular());
}

TEST(E10Preset, DataFileMatchesPreset) {
  const auto L = load_gram_file(std::string(ENRIQUES_DATA_DIR) + "/e10_v1.gram");
  EXPECT_EQ(L, e10_preset());
}

TEST(GramLattice, RejectsAsymmetricAndNonSquare) {
  EXPECT_THROW(GramLattice({{0, 1}, {2, 0}}), Error);
  EXPECT_THROW(GramLattice({{0, 1, 0}, {1, 0}}), Error);
  EXPECT_THROW(parse_gram_text("1 x\n"), Error);
}

TEST(GramLattice, DeterminantNeedsPivoting) {
  // Zero leading entry forces a row swap in the elimination.
  const GramLattice U({{0, 1}, {1, 0}});
  EXPECT_EQ(U.determinant(), -1);
  const GramLattice A2({{2, -1}, {-1, 2}});
  EXPECT_EQ(A2.determinant(), 3);
}

TEST(Pair, Examples) {
  const auto L = e10_preset();
  EXPECT_EQ(pair(L, e(), f()), 1);
  EXPECT_EQ(pair(L, e() + f(), e() + f()), 2);
  EXPECT_THROW(pair(L, e(), NumClass{1, 0}), Error);
}

TEST(Pair, MatchesDoubleSumAndIsBilinear) {
  const auto L = e10_preset();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_class(rng, 20), y = random_class(rng, 20), z = random_class(rng, 20);
    EXPECT_EQ(pair(L, x, y), brute_pair(L, x, y));
    EXPECT_EQ(pair(L, x, y), pair(L, y, x));
    EXPECT_EQ(pair(L, x + y, z), pair(L, x, z) + pair(L, y, z));
    EXPECT_EQ(square(L, x) % 2, 0);
  }
}

TEST(Pair, OverflowIsAnError) {
  const auto L = e10_preset();
  const Int big = Int{1} << 40;
  NumClass x = big * e();
  NumClass y = big * f();
  EXPECT_THROW(pair(L, x, y), Error);
}

TEST(Divisibility, Examples) {
  const auto L = e10_preset();
  EXPECT_EQ(divisibility(L, NumClass::zero(10)), 0);
  EXPECT_EQ(divisibility(L, e()), 1);
  EXPECT_EQ(divisibility(L, 2 * e() + 2 * f()), 2);
}

TEST(Divisibility, DividesEveryPairing) {
  const auto L = e10_preset();
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const auto x = static_cast<Int>(1 + rng() % 4) * random_class(rng, 5);
    if (x.is_zero()) continue;
    const Int d = divisibility(L, x);
    ASSERT_GE(d, 1);
    // Unimodular: divisibility equals the coordinate content.
    EXPECT_EQ(d, x.content());
    const auto y = random_class(rng, 9);
    EXPECT_EQ(pair(L, x, y) % d, 0);
  }
}

TEST(SolvePairing, Examples) {
  const auto L = e10_preset();
  const auto X = solve_pairing(L, f(), 1);
  EXPECT_EQ(pair(L, X, f()), 1);
  const NumClass D = 2 * e() + 2 * f();
  EXPECT_EQ(pair(L, solve_pairing(L, D, 2), D), 2);
  try {
    solve_pairing(L, D, 1);
    FAIL() << "expected not divisible";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotDivisible);
  }
  try {
    solve_pairing(L, NumClass::zero(10), 1);
    FAIL() << "expected zero class";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::ZeroClass);
  }
}

TEST(SolvePairing, RoundTripsOnRandomClasses) {
  const auto L = e10_preset();
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const auto D = random_class(rng, 6);
    if (D.is_zero()) continue;
    const Int d = divisibility(L, D);
    const Int target = d * static_cast<Int>(rng() % 21 - 10);
    EXPECT_EQ(pair(L, solve_pairing(L, D, target), D), target);
  }
}

TEST(EnumerateIsotropic, BoundOne) {
  const auto L = e10_preset();
  const auto iso = enumerate_isotropic(L, 1);
  std::set<NumClass> seen(iso.begin(), iso.end());
  EXPECT_EQ(seen.size(), iso.size());
  EXPECT_TRUE(seen.count(e()));
  EXPECT_TRUE(seen.count(f()));
  for (const auto& x : iso) {
    EXPECT_EQ(square(L, x), 0);
    EXPECT_TRUE(x.is_primitive());
    EXPECT_EQ(x.max_abs(), 1);
    // first nonzero coordinate positive
    for (Int c : x.coords()) {
      if (c != 0) {
        EXPECT_GT(c, 0);
        break;
      }
    }
    EXPECT_FALSE(seen.count(-x));
  }
  EXPECT_TRUE(std::is_sorted(iso.begin(), iso.end()));
}

TEST(EnumerateIsotropic, BoundTwoMatchesBoxScan) {
  const auto L = e10_preset();
  const auto iso = enumerate_isotropic(L, 2);
  EXPECT_EQ(iso.size(), brute_isotropic_count(L, 2));
}

TEST(EnumerateIsotropic, SmallLatticesAgainstBoxScan) {
  // Forms with nonzero leading diagonal exercise the quadratic solve.
  const GramLattice hyperbolic({{2, 1, 0}, {1, -2, 0}, {0, 0, -2}});
  const GramLattice odd({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
  for (const auto* L : {&hyperbolic, &odd}) {
    for (Int b = 1; b <= 4; ++b) {
      EXPECT_EQ(enumerate_isotropic(*L, b).size(), brute_isotropic_count(*L, b));
    }
  }
}

TEST(EnumerateIsotropic, RejectsBadBound) {
  EXPECT_THROW(enumerate_isotropic(e10_preset(), 0), Error);
}

}  // namespace
}  // namespace enriques
