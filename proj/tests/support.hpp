#pragma once

// Random generators and independent oracles shared by the unit and
// acceptance suites. Oracles deliberately avoid the library's code paths.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "enriques/enriques.hpp"

namespace enriques::testing {

inline constexpr std::size_t kRank = 10;

inline NumClass e() { return NumClass::basis(kRank, 0); }
inline NumClass f() { return NumClass::basis(kRank, 1); }
inline NumClass alpha(std::size_t i) { return NumClass::basis(kRank, i + 1); }  // alpha(1..8)

inline NumClass random_class(std::mt19937_64& rng, Int bound, std::size_t n = kRank) {
  std::uniform_int_distribution<Int> dist(-bound, bound);
  std::vector<Int> c(n);
  for (auto& x : c) x = dist(rng);
  return NumClass(std::move(c));
}

inline DivisorClass random_divisor(std::mt19937_64& rng, Int bound) {
  return DivisorClass(random_class(rng, bound), static_cast<int>(rng() & 1));
}

/// Parity-valid vector with |coords| <= coord_bound, |r|, |t| <= rt_bound.
inline MukaiVector random_vector(std::mt19937_64& rng, Int coord_bound = 5, Int rt_bound = 99) {
  std::uniform_int_distribution<Int> dist(-rt_bound, rt_bound);
  const Int r = dist(rng);
  Int t = dist(rng);
  if (((r ^ t) & 1) != 0) t += (t < rt_bound) ? 1 : -1;
  return {r, random_divisor(rng, coord_bound), t};
}

/// Exceptional vector: random D, then r a positive divisor of 1 + D^2 and
/// t = (1 + D^2) / r.
inline MukaiVector random_exceptional(const GramLattice& L, std::mt19937_64& rng, Int coord_bound = 3) {
  const DivisorClass D = random_divisor(rng, coord_bound);
  const Int N = 1 + square(L, D.num);
  std::vector<Int> divisors;
  for (Int d = 1; d * d <= (N < 0 ? -N : N); ++d) {
    if (N % d == 0) {
      divisors.push_back(d);
      divisors.push_back((N < 0 ? -N : N) / d);
    }
  }
  const Int r = divisors[rng() % divisors.size()];
  return {r, D, N / r};
}

// ---- oracles --------------------------------------------------------------

/// sum_i sum_j x_i G_ij y_j, entry by entry.
inline Int brute_pair(const GramLattice& L, const NumClass& x, const NumClass& y) {
  Int acc = 0;
  for (std::size_t i = 0; i < L.rank(); ++i) {
    for (std::size_t j = 0; j < L.rank(); ++j) acc += x[i] * L.at(i, j) * y[j];
  }
  return acc;
}

/// r s' + r' s - D.D' over exact rationals with s = t/2.
inline boost::rational<long long> rational_mukai_pair(const GramLattice& L, const MukaiVector& v,
                                                      const MukaiVector& w) {
  using Q = boost::rational<long long>;
  const Q s(v.t, 2), s2(w.t, 2);
  return Q(v.r) * s2 + Q(w.r) * s - Q(brute_pair(L, v.D.num, w.D.num));
}

/// Determinant by Laplace expansion along the first row, memoized on the set
/// of remaining columns.
inline boost::multiprecision::cpp_int laplace_determinant(const GramLattice& L) {
  using boost::multiprecision::cpp_int;
  const std::size_t n = L.rank();
  std::vector<cpp_int> memo(std::size_t{1} << n);
  std::vector<bool> known(std::size_t{1} << n, false);
  auto rec = [&](auto&& self, std::size_t row, std::uint32_t cols) -> cpp_int {
    if (row == n) return 1;
    if (known[cols]) return memo[cols];
    cpp_int acc = 0;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      if (L.at(row, c) != 0) acc += sign * L.at(row, c) * self(self, row + 1, cols & ~(1u << c));
      sign = -sign;
    }
    known[cols] = true;
    memo[cols] = acc;
    return acc;
  };
  return rec(rec, 0, (1u << n) - 1);
}

/// Every x in [-bound, bound]^n, checked directly.
inline std::size_t brute_isotropic_count(const GramLattice& L, Int bound) {
  const std::size_t n = L.rank();
  std::vector<Int> x(n, -bound);
  std::size_t count = 0;
  while (true) {
    Int q = 0, g = 0;
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) q += x[i] * L.at(i, j) * x[j];
      g = std::gcd(g, x[i] < 0 ? -x[i] : x[i]);
      if (first == n && x[i] != 0) first = i;
    }
    if (q == 0 && g == 1 && x[first] > 0) ++count;
    std::size_t k = 0;
    while (k < n && x[k] == bound) x[k++] = -bound;
    if (k == n) break;
    ++x[k];
  }
  return count;
}

/// chi(O_C(A)) = deg A + 1 - g with g = 1 + C^2/2 (adjunction, K.C = 0).
inline Int riemann_roch_curve(Int c_squared, Int degA) {
  const Int genus = 1 + c_squared / 2;
  return degA + 1 - genus;
}

}  // namespace enriques::testing
