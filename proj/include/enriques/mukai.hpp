#pragma once

// Mukai vectors (r, D, s) on an Enriques surface. The half-integral component
// s is stored doubled as t = 2s, so t = r (mod 2) for every vector arising
// from a sheaf.

#include <string>

#include "enriques/picard.hpp"

namespace enriques {

struct MukaiVector {
  Int r = 0;
  DivisorClass D;
  Int t = 0;

  bool parity_ok() const noexcept { return ((r ^ t) & 1) == 0; }

  friend MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
    return {checked::add(a.r, b.r), a.D + b.D, checked::add(a.t, b.t)};
  }
  friend MukaiVector operator*(Int k, const MukaiVector& v) {
    return {checked::mul(k, v.r), k * v.D, checked::mul(k, v.t)};
  }
  friend MukaiVector operator-(const MukaiVector& v) { return (-1) * v; }
  friend MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) { return a + (-b); }

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

inline void require_parity(const MukaiVector& v) {
  if (!v.parity_ok()) {
    throw Error(ErrorKind::ParityViolation,
                "t = r (mod 2) fails for r = " + std::to_string(v.r) + ", t = " + std::to_string(v.t));
  }
}

/// v^2 = 2rs - D^2 = r t - D^2.
inline Int square(const GramLattice& L, const MukaiVector& v) {
  return checked::sub(checked::mul(v.r, v.t), square(L, v.D));
}

/// <v, w> = r s' + r' s - D.D' = chi(E, F). The torsion bit does not enter.
inline Int mukai_pair(const GramLattice& L, const MukaiVector& v, const MukaiVector& w) {
  require_parity(v);
  require_parity(w);
  // r t' + r' t is even because both vectors satisfy the parity invariant.
  const Int twice = checked::add(checked::mul(v.r, w.t), checked::mul(w.r, v.t));
  return checked::sub(twice / 2, pair(L, v.D, w.D));
}

/// t = D^2 - 2 c2 + r, i.e. s = D^2/2 - c2 + r chi(O_S)/2 with chi(O_S) = 1.
inline MukaiVector from_chern(const GramLattice& L, Int r, const DivisorClass& D, Int c2) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "rank must be nonnegative");
  const Int t = checked::add(checked::sub(square(L, D), checked::mul<Int>(2, c2)), r);
  return {r, D, t};
}

/// chi(E, E) = r^2 chi(O_S) + (r - 1) c1^2 - 2 r c2.
inline Int chi_self_formula(Int r, Int c1_sq, Int c2) {
  if (c1_sq % 2 != 0) throw Error(ErrorKind::InvalidArgument, "c1^2 must be even");
  return checked::sub(checked::add(checked::mul(r, r), checked::mul(checked::sub<Int>(r, 1), c1_sq)),
                      checked::mul(checked::mul<Int>(2, r), c2));
}

/// v(E^*) = (r, -D, s); the eps bit is unchanged since -K ~ K.
inline MukaiVector dual(const MukaiVector& v) {
  require_parity(v);
  return {v.r, -v.D, v.t};
}

/// v(E (x) M) = v(E) . ch(M).
inline MukaiVector twist(const GramLattice& L, const MukaiVector& v, const DivisorClass& M) {
  require_parity(v);
  const Int t = checked::add(checked::add(v.t, checked::mul<Int>(2, pair(L, v.D, M))),
                             checked::mul(v.r, square(L, M)));
  return {v.r, v.D + v.r * M, t};
}

/// v(O(D)) = (1, D, D^2/2 + 1/2).
inline MukaiVector line_bundle_vector(const GramLattice& L, const DivisorClass& D) {
  return {1, D, checked::add<Int>(square(L, D), 1)};
}

inline MukaiVector structure_sheaf_vector(std::size_t rank = 10) {
  return {1, DivisorClass(NumClass::zero(rank)), 1};
}

/// v(O_x) = (0, 0, 1) for a point x.
inline MukaiVector point_vector(std::size_t rank = 10) {
  return {0, DivisorClass(NumClass::zero(rank)), 2};
}

/// v(O_C(A)) for a curve class C and deg A; chi(O_C(A)) = deg A - C^2/2 by
/// adjunction with K.C = 0.
inline MukaiVector curve_sheaf_vector(const GramLattice& L, const NumClass& C, Int degA) {
  const Int c2 = square(L, C);
  if (c2 % 2 != 0) throw Error(ErrorKind::InvalidArgument, "C^2 must be even");
  return {0, DivisorClass(C), checked::sub(checked::mul<Int>(2, degA), c2)};
}

inline MukaiVector add(const MukaiVector& v, const MukaiVector& w) { return v + w; }

/// Numerically exceptional: r > 0 and v^2 = 1.
inline bool is_exceptional(const GramLattice& L, const MukaiVector& v) {
  require_parity(v);
  return v.r > 0 && square(L, v) == 1;
}

/// chi(E) = <v(O), v> = (t + r) / 2.
inline Int euler_chi(const MukaiVector& v) {
  require_parity(v);
  return checked::add(v.t, v.r) / 2;
}

}  // namespace enriques
