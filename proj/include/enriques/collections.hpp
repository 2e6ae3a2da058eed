#pragma once

// Isotropic sequences f_1..f_n in E10 (f_i^2 = 0, f_i.f_j = 1), i.e. the
// numerical classes of half-pencils, and chi-level checks for exceptional
// collections.

#include <string>
#include <vector>

#include "enriques/mukai.hpp"

namespace enriques {

struct IsotropicSequence {
  std::vector<NumClass> classes;

  /// Throws InvariantViolation naming the first broken invariant.
  void validate(const GramLattice& L) const {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (square(L, classes[i]) != 0) {
        throw Error(ErrorKind::InvariantViolation, "f_" + std::to_string(i) + "^2 != 0");
      }
      if (!classes[i].is_primitive()) {
        throw Error(ErrorKind::InvariantViolation, "f_" + std::to_string(i) + " not primitive");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (pair(L, classes[i], classes[j]) != 1) {
          throw Error(ErrorKind::InvariantViolation,
                      "f_" + std::to_string(j) + ".f_" + std::to_string(i) + " != 1");
        }
      }
    }
  }
};

/// Backtracking over enumerate_isotropic(L, bound) in ascending lexicographic
/// order; members are taken in increasing candidate order, so the first hit is
/// the lexicographically smallest index tuple.
inline IsotropicSequence find_isotropic_sequence(const GramLattice& L, std::size_t length,
                                                 Int bound) {
  if (length < 1 || length > 10) throw Error(ErrorKind::InvalidArgument, "length must be in 1..10");
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "bound must be >= 1");

  const std::vector<NumClass> cands = enumerate_isotropic(L, bound);
  std::vector<NumClass> images;
  images.reserve(cands.size());
  for (const auto& c : cands) images.push_back(apply(L, c));
  const std::size_t n = L.rank();
  auto dot = [&](std::size_t a, std::size_t b) {
    Int acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += images[a][i] * cands[b][i];
    return acc;
  };

  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self, const std::vector<std::size_t>& pool) -> bool {
    if (chosen.size() == length) return true;
    if (chosen.size() + pool.size() < length) return false;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (chosen.size() + (pool.size() - k) < length) return false;
      const std::size_t c = pool[k];
      std::vector<std::size_t> next;
      for (std::size_t m = k + 1; m < pool.size(); ++m) {
        if (dot(c, pool[m]) == 1) next.push_back(pool[m]);
      }
      chosen.push_back(c);
      if (self(self, next)) return true;
      chosen.pop_back();
    }
    return false;
  };

  std::vector<std::size_t> all(cands.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (!search(search, all)) {
    throw Error(ErrorKind::NotFound, "no isotropic sequence of length " + std::to_string(length) +
                                         " with coordinates bounded by " + std::to_string(bound));
  }
  IsotropicSequence out;
  for (std::size_t idx : chosen) out.classes.push_back(cands[idx]);
  out.validate(L);
  return out;
}

/// Curves f_1..f_n with cone reference f_1 + ... + f_n (square n(n-1)).
inline CurveTestSet half_pencil_test_set(const GramLattice& L, const IsotropicSequence& seq) {
  NumClass sum = NumClass::zero(L.rank());
  for (const auto& f : seq.classes) sum += f;
  return CurveTestSet(L, seq.classes, sum);
}

struct CollectionReport {
  std::vector<std::vector<Int>> chi;  // chi[a][b] = <v_a, v_b>
  bool pass = false;
};

/// Necessary chi-level conditions: chi(v_a, v_a) = 1 and chi(v_a, v_b) = 0
/// for a != b. Ext-level vanishing is not decidable from the vectors.
inline CollectionReport check_exceptional_collection_necessary(const GramLattice& L,
                                                               const std::vector<MukaiVector>& vs) {
  CollectionReport report;
  report.pass = true;
  report.chi.assign(vs.size(), std::vector<Int>(vs.size(), 0));
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = 0; b < vs.size(); ++b) {
      const Int c = mukai_pair(L, vs[a], vs[b]);
      report.chi[a][b] = c;
      if (c != (a == b ? 1 : 0)) report.pass = false;
    }
  }
  return report;
}

}  // namespace enriques
