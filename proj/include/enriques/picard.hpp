#pragma once

// Divisor classes on an Enriques surface: a numerical class plus the
// coefficient of the 2-torsion canonical class K.

#include <string>
#include <variant>
#include <vector>

#include "enriques/lattice.hpp"

namespace enriques {

/// num + eps*K with eps in {0, 1}; 2K ~ 0.
struct DivisorClass {
  NumClass num;
  int eps = 0;

  DivisorClass() = default;
  DivisorClass(NumClass n, int e = 0) : num(std::move(n)), eps(static_cast<int>(checked::mod<Int>(e, 2))) {}

  DivisorClass& operator+=(const DivisorClass& o) {
    num += o.num;
    eps ^= o.eps;
    return *this;
  }
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }

  /// k * (num + eps K) = k num + (k eps mod 2) K.
  friend DivisorClass operator*(Int k, const DivisorClass& d) {
    return DivisorClass(k * d.num, static_cast<int>(checked::mod<Int>(checked::mul<Int>(k, d.eps), 2)));
  }
  /// -K ~ K, so negation keeps eps.
  friend DivisorClass operator-(const DivisorClass& d) { return DivisorClass(-d.num, d.eps); }
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + (-b); }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

inline DivisorClass canonical_class(std::size_t rank = 10) {
  return DivisorClass(NumClass::zero(rank), 1);
}

inline Int pair(const GramLattice& L, const DivisorClass& a, const DivisorClass& b) {
  return pair(L, a.num, b.num);
}

inline Int square(const GramLattice& L, const DivisorClass& d) { return square(L, d.num); }

/// Finite stand-in for "every curve": nef and ample are decided only against
/// these classes plus a positive-cone orientation.
class CurveTestSet {
 public:
  CurveTestSet(const GramLattice& L, std::vector<NumClass> curves, NumClass cone_ref)
      : curves_(std::move(curves)), cone_ref_(std::move(cone_ref)) {
    for (std::size_t i = 0; i < curves_.size(); ++i) {
      const Int sq = square(L, curves_[i]);
      if (sq < -2 || sq % 2 != 0) {
        throw Error(ErrorKind::InvariantViolation,
                    "curve " + std::to_string(i) + " has square " + std::to_string(sq) +
                        " (need even and >= -2)");
      }
    }
    if (square(L, cone_ref_) <= 0) {
      throw Error(ErrorKind::InvariantViolation, "cone_ref must have positive square");
    }
  }

  const std::vector<NumClass>& curves() const noexcept { return curves_; }
  const NumClass& cone_ref() const noexcept { return cone_ref_; }

 private:
  std::vector<NumClass> curves_;
  NumClass cone_ref_;
};

/// chi(O(D)) = 1 + D^2/2; the torsion bit does not enter.
inline Int rr_line_bundle(const GramLattice& L, const DivisorClass& D) {
  return checked::add<Int>(1, square(L, D) / 2);
}

inline bool is_nef_wrt(const GramLattice& L, const DivisorClass& D, const CurveTestSet& T) {
  for (const auto& c : T.curves()) {
    if (pair(L, D.num, c) < 0) return false;
  }
  return pair(L, D.num, T.cone_ref()) >= 0;
}

inline bool is_ample_wrt(const GramLattice& L, const DivisorClass& D, const CurveTestSet& T) {
  for (const auto& c : T.curves()) {
    if (pair(L, D.num, c) <= 0) return false;
  }
  return pair(L, D.num, T.cone_ref()) > 0 && square(L, D) > 0;
}

struct Irreducible {
  friend bool operator==(const Irreducible&, const Irreducible&) = default;
};

/// D ~ multiplicity * primitive.
struct Pencil {
  Int multiplicity;
  NumClass primitive;
  friend bool operator==(const Pencil&, const Pencil&) = default;
};

using FreeSystemType = std::variant<Irreducible, Pencil>;

/// Dichotomy for a linear system without fixed components. The caller vouches
/// for that hypothesis; only the numerical data is examined.
inline FreeSystemType classify_free_system(const GramLattice& L, const DivisorClass& D) {
  if (D.num.is_zero()) throw Error(ErrorKind::ZeroClass, "D is numerically trivial");
  const Int sq = square(L, D);
  if (sq < 0) throw Error(ErrorKind::NegativeSquare, "D^2 = " + std::to_string(sq));
  if (sq > 0) return Irreducible{};
  // Coordinate content; equals divisibility(L, D.num) on a unimodular lattice.
  const Int k = D.num.content();
  return Pencil{k, D.num.divided_by(k)};
}

struct AmpleReport {
  bool criteria_met = false;
  bool ample = false;
  bool two_D_globally_generated = false;
  bool three_D_very_ample = false;
};

/// A nef class with D^2 >= 6 is ample, 2D is base-point free and 3D very ample.
inline AmpleReport ample_criteria(const GramLattice& L, const DivisorClass& D,
                                  const CurveTestSet& T) {
  if (!is_nef_wrt(L, D, T) || square(L, D) < 6) return {};
  return {true, true, true, true};
}

}  // namespace enriques
