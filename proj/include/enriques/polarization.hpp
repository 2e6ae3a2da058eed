#pragma once

// Constructive search for a polarization H' with gcd(D.H', r) = 1 for an
// exceptional vector (r, D, s), together with a checkable certificate.
//
// Outline: d = divisibility(D) is coprime to r (r t - D^2 = 1 gives
// D^2 = -1 mod r while d^2 | D^2). Pick X with X.D = d, then
// H_k = X + k r H_seed has H_k.D = d (mod r) for every k, and for k large
// enough H_k is positive on the test set with H_k^2 >= 6.

#include <optional>
#include <string>

#include "enriques/mukai.hpp"

namespace enriques {

inline constexpr Int kDefaultKmax = 64;

struct PolarizationCertificate {
  NumClass X;
  Int k = 0;
  DivisorClass Hprime;
  Int d = 0;          // divisibility of D (1 when D = 0)
  Int gcd_value = 0;  // gcd(H'.D, r)
};

/// gcd(|H.D|, r) = 1, with gcd(0, r) = r.
inline bool gcd_condition(const GramLattice& L, const DivisorClass& H, const DivisorClass& D,
                          Int r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "r must be >= 1");
  return checked::gcd(pair(L, H, D), r) == 1;
}

/// Independent re-check of a certificate against its inputs. Returns an empty
/// string on success, otherwise the first failed condition.
inline std::string verify_certificate(const GramLattice& L, const MukaiVector& v,
                                      const DivisorClass& Hseed, const CurveTestSet& T,
                                      const PolarizationCertificate& cert) {
  if (cert.Hprime.num != cert.X + checked::mul(cert.k, v.r) * Hseed.num) {
    return "Hprime != X + k r Hseed";
  }
  const Int hd = pair(L, cert.Hprime, v.D);
  if (checked::gcd(hd, v.r) != 1) return "gcd(H'.D, r) != 1";
  if (cert.gcd_value != 1) return "recorded gcd_value != 1";
  if (checked::mod(hd, v.r) != checked::mod(pair(L, cert.X, v.D.num), v.r)) {
    return "H'.D != X.D (mod r)";
  }
  for (std::size_t i = 0; i < T.curves().size(); ++i) {
    if (pair(L, cert.Hprime.num, T.curves()[i]) <= 0) {
      return "H'.c <= 0 for test curve " + std::to_string(i);
    }
  }
  if (pair(L, cert.Hprime.num, T.cone_ref()) <= 0) return "H'.cone_ref <= 0";
  if (square(L, cert.Hprime) < 6) return "H'^2 < 6";
  return {};
}

inline PolarizationCertificate find_coprime_ample(const GramLattice& L, const MukaiVector& v,
                                                  const DivisorClass& Hseed,
                                                  const CurveTestSet& T,
                                                  Int kmax = kDefaultKmax) {
  if (!is_exceptional(L, v)) {
    throw Error(ErrorKind::InvalidArgument, "v is not exceptional (need r > 0, v^2 = 1)");
  }
  if (!is_ample_wrt(L, Hseed, T)) {
    throw Error(ErrorKind::InvalidArgument, "Hseed is not ample relative to the test set");
  }
  if (kmax < 1) throw Error(ErrorKind::InvalidArgument, "kmax must be >= 1");

  const std::size_t n = L.rank();
  if (v.D.num.is_zero()) {
    // r t = 1 forces r = 1, so the seed itself is coprime: X = 0, k = 1.
    if (square(L, Hseed) < 6) throw Error(ErrorKind::BudgetExceeded, "Hseed^2 < 6");
    return {NumClass::zero(n), 1, DivisorClass(Hseed.num, 0), 1,
            checked::gcd(pair(L, Hseed, v.D), v.r)};
  }

  const Int d = divisibility(L, v.D.num);
  if (checked::gcd(d, v.r) != 1) {
    throw Error(ErrorKind::InvariantViolation,
                "gcd(divisibility(D), r) = " + std::to_string(checked::gcd(d, v.r)));
  }
  const NumClass X = solve_pairing(L, v.D.num, d);
  const NumClass step = v.r * Hseed.num;

  NumClass H = X;
  for (Int k = 0; k <= kmax; ++k, H += step) {
    const DivisorClass Hk(H, 0);
    if (!is_ample_wrt(L, Hk, T) || square(L, Hk) < 6) continue;
    PolarizationCertificate cert{X, k, Hk, d, checked::gcd(pair(L, Hk, v.D), v.r)};
    if (cert.gcd_value != 1) {
      throw Error(ErrorKind::InvariantViolation, "gcd(H_k.D, r) != 1");
    }
    return cert;
  }
  H -= step;
  std::string failing;
  for (std::size_t i = 0; i < T.curves().size(); ++i) {
    const Int hc = pair(L, H, T.curves()[i]);
    if (hc <= 0) failing += " curve[" + std::to_string(i) + "].H=" + std::to_string(hc);
  }
  if (pair(L, H, T.cone_ref()) <= 0) failing += " cone_ref.H<=0";
  if (square(L, H) < 6) failing += " H^2=" + std::to_string(square(L, H));
  throw Error(ErrorKind::BudgetExceeded,
              "no k <= " + std::to_string(kmax) + " works; at k = kmax:" + failing);
}

}  // namespace enriques
