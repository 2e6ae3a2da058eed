#pragma once

// Pullback of Mukai vectors along the K3 double cover pi: X -> S. Only the
// sublattice pi^* Num(S) = E10(2) is modelled: D' keeps its E10 coordinates and
// the intersection form is doubled.

#include "enriques/mukai.hpp"

namespace enriques {

struct K3MukaiVector {
  Int r = 0;
  NumClass D;  // coordinates in the E10 basis; form doubled
  Int s = 0;

  friend bool operator==(const K3MukaiVector&, const K3MukaiVector&) = default;
};

/// <w, w> = 2 r s - D'^2 with D'^2 = 2 D^2.
inline Int k3_square(const GramLattice& L, const K3MukaiVector& w) {
  return checked::sub(checked::mul(checked::mul<Int>(2, w.r), w.s),
                      checked::mul<Int>(2, square(L, w.D)));
}

/// pi^*(r, D, s) = (r, pi^*D, 2s): chi(O_X) = 2 absorbs the half, and
/// pi^*K ~ 0 drops the torsion bit.
inline K3MukaiVector pullback(const MukaiVector& v) {
  require_parity(v);
  return {v.r, v.D.num, v.t};
}

/// Hypothesis of Kuleshov's existence theorem: r > 0 and w^2 = 2.
inline bool kuleshov_realizable(const GramLattice& L, const K3MukaiVector& w) {
  return w.r > 0 && k3_square(L, w) == 2;
}

/// gcd(pi^*H . pi^*D, r) = gcd(2 H.D, r) = 1. For odd r this agrees with
/// gcd(H.D, r) = 1, which is what lets H-coprimality transfer to the cover.
inline bool coprime_transfer(const GramLattice& L, const DivisorClass& H, const DivisorClass& D,
                             Int r) {
  if (checked::mod<Int>(r, 2) == 0) {
    throw Error(ErrorKind::EvenRank, "r = " + std::to_string(r));
  }
  const Int hd = pair(L, H, D);
  const bool upstairs = checked::gcd(checked::mul<Int>(2, hd), r) == 1;
  const bool downstairs = checked::gcd(hd, r) == 1;
  if (upstairs != downstairs) {
    throw Error(ErrorKind::InvariantViolation, "gcd(2HD, r) and gcd(HD, r) disagree for odd r");
  }
  return upstairs;
}

}  // namespace enriques
