#pragma once

// The reflection R(r, D, s) = (2s, D + (s + r/2) K, r/2) on Mukai vectors.
// Both sheaf-level constructions of R (from a globally generated E, and its
// reverse from F) have this same closed form; R is an involution.

#include "enriques/mukai.hpp"

namespace enriques {

inline MukaiVector reflect(const MukaiVector& v) {
  require_parity(v);
  const Int k_coeff = checked::add(v.t, v.r) / 2;  // s + r/2
  return {v.t, DivisorClass(v.D.num, static_cast<int>(v.D.eps + checked::mod<Int>(k_coeff, 2))), v.r};
}

/// Class of E-bar in 0 -> E-bar^* -> H^0(E) (x) O -> E -> 0, i.e.
/// h v(O) - v(E^*) with h = chi(E). Ranks may be negative: this is a formal
/// K-theory class.
inline MukaiVector v_bar(const MukaiVector& v) {
  const Int h = euler_chi(v);
  if (h <= 0) {
    throw Error(ErrorKind::NotGloballyPresentable, "chi(E) = " + std::to_string(h) + " <= 0");
  }
  const std::size_t n = v.D.num.size();
  return h * structure_sheaf_vector(n) - dual(v);
}

/// v(E-hat) = h v(K) + v(E-bar) from the universal extension
/// 0 -> H^1(E-bar) (x) K -> E-hat -> E-bar -> 0.
inline MukaiVector reflect_via_sequences(const MukaiVector& v) {
  const MukaiVector bar = v_bar(v);
  const Int h = euler_chi(v);
  const std::size_t n = v.D.num.size();
  const MukaiVector canonical{1, canonical_class(n), 1};
  return h * canonical + bar;
}

/// rank(E) = rank(R(E)) mod 2.
inline bool rank_parity(const MukaiVector& v) {
  return checked::mod<Int>(v.r, 2) == checked::mod<Int>(reflect(v).r, 2);
}

}  // namespace enriques
