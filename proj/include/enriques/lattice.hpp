#pragma once

// Integral symmetric bilinear forms on Z^n and the Enriques numerical
// lattice E10 = U + E8(-1).

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "enriques/checked.hpp"
#include "enriques/error.hpp"

namespace enriques {

/// Integer coordinate vector in a fixed lattice basis.
class NumClass {
 public:
  NumClass() = default;
  explicit NumClass(std::vector<Int> coords) : coords_(std::move(coords)) {}
  NumClass(std::initializer_list<Int> coords) : coords_(coords) {}

  static NumClass zero(std::size_t n) { return NumClass(std::vector<Int>(n, 0)); }

  static NumClass basis(std::size_t n, std::size_t i) {
    NumClass out = zero(n);
    out.coords_.at(i) = 1;
    return out;
  }

  std::size_t size() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Int> coords() const noexcept { return coords_; }

  bool is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
  }

  Int max_abs() const {
    Int m = 0;
    for (Int c : coords_) m = std::max(m, checked::abs(c));
    return m;
  }

  /// gcd of the coordinates; 0 for the zero vector.
  Int content() const {
    Int g = 0;
    for (Int c : coords_) g = checked::gcd(g, c);
    return g;
  }

  bool is_primitive() const { return content() == 1; }

  NumClass& operator+=(const NumClass& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] = checked::add(coords_[i], o.coords_[i]);
    return *this;
  }
  NumClass& operator-=(const NumClass& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] = checked::sub(coords_[i], o.coords_[i]);
    return *this;
  }
  NumClass& operator*=(Int k) {
    for (Int& c : coords_) c = checked::mul(c, k);
    return *this;
  }

  friend NumClass operator+(NumClass a, const NumClass& b) { return a += b; }
  friend NumClass operator-(NumClass a, const NumClass& b) { return a -= b; }
  friend NumClass operator*(Int k, NumClass a) { return a *= k; }
  friend NumClass operator-(NumClass a) { return a *= -1; }

  /// Exact division by a common factor of all coordinates.
  NumClass divided_by(Int k) const {
    NumClass out = *this;
    for (Int& c : out.coords_) {
      if (k == 0 || c % k != 0) {
        throw Error(ErrorKind::NotDivisible, "coordinate not divisible by " + std::to_string(k));
      }
      c /= k;
    }
    return out;
  }

  friend bool operator==(const NumClass&, const NumClass&) = default;
  friend auto operator<=>(const NumClass&, const NumClass&) = default;

 private:
  void require_same_size(const NumClass& o) const {
    if (o.size() != size()) {
      throw Error(ErrorKind::DimensionMismatch,
                  std::to_string(size()) + " vs " + std::to_string(o.size()));
    }
  }

  std::vector<Int> coords_;
};

/// A symmetric integer Gram matrix defining a bilinear form on Z^rank.
class GramLattice {
 public:
  explicit GramLattice(std::vector<std::vector<Int>> rows) {
    rank_ = rows.size();
    if (rank_ == 0) throw Error(ErrorKind::InvalidArgument, "lattice rank must be positive");
    gram_.reserve(rank_ * rank_);
    for (const auto& row : rows) {
      if (row.size() != rank_) {
        throw Error(ErrorKind::DimensionMismatch, "Gram matrix must be square");
      }
      gram_.insert(gram_.end(), row.begin(), row.end());
    }
    for (std::size_t i = 0; i < rank_; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (at(i, j) != at(j, i)) {
          throw Error(ErrorKind::InvariantViolation,
                      "Gram matrix symmetry fails at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
        }
      }
    }
  }

  std::size_t rank() const noexcept { return rank_; }
  Int at(std::size_t i, std::size_t j) const { return gram_[i * rank_ + j]; }
  std::span<const Int> row(std::size_t i) const {
    return std::span<const Int>(gram_).subspan(i * rank_, rank_);
  }

  std::vector<std::vector<Int>> rows() const {
    std::vector<std::vector<Int>> out(rank_);
    for (std::size_t i = 0; i < rank_; ++i) out[i].assign(row(i).begin(), row(i).end());
    return out;
  }

  Int max_abs_entry() const {
    Int m = 0;
    for (Int g : gram_) m = std::max(m, checked::abs(g));
    return m;
  }

  bool is_even() const {
    for (std::size_t i = 0; i < rank_; ++i) {
      if (at(i, i) % 2 != 0) return false;
    }
    return true;
  }

  /// Exact determinant by fraction-free (Bareiss) elimination.
  Int determinant() const {
    std::vector<Int> m = gram_;
    const std::size_t n = rank_;
    auto cell = [&](std::size_t i, std::size_t j) -> Int& { return m[i * n + j]; };
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (cell(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && cell(p, k) == 0) ++p;
        if (p == n) return 0;
        for (std::size_t j = 0; j < n; ++j) std::swap(cell(k, j), cell(p, j));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          Int num = checked::sub(checked::mul(cell(i, j), cell(k, k)),
                                 checked::mul(cell(i, k), cell(k, j)));
          cell(i, j) = num / prev;
        }
      }
      prev = cell(k, k);
    }
    return checked::mul(sign, cell(n - 1, n - 1));
  }

  bool is_unimodular() const {
    Int d = determinant();
    return d == 1 || d == -1;
  }

  friend bool operator==(const GramLattice&, const GramLattice&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Int> gram_;
};

namespace detail {

inline void require_rank(const GramLattice& L, const NumClass& x) {
  if (x.size() != L.rank()) {
    throw Error(ErrorKind::DimensionMismatch, "class of length " + std::to_string(x.size()) +
                                                  " in lattice of rank " +
                                                  std::to_string(L.rank()));
  }
}

}  // namespace detail

/// E10 = U + E8(-1) in the basis (e, f, a1..a8). The E8 Dynkin diagram is the
/// chain a1-a2-a3-a4-a5-a6-a7 with a8 attached to a5.
inline GramLattice e10_preset() {
  std::vector<std::vector<Int>> g(10, std::vector<Int>(10, 0));
  g[0][1] = g[1][0] = 1;
  for (std::size_t i = 2; i < 10; ++i) g[i][i] = -2;
  constexpr std::pair<std::size_t, std::size_t> kEdges[] = {
      {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}};
  for (auto [a, b] : kEdges) {
    g[a + 1][b + 1] = 1;
    g[b + 1][a + 1] = 1;
  }
  return GramLattice(std::move(g));
}

/// G * x.
inline NumClass apply(const GramLattice& L, const NumClass& x) {
  detail::require_rank(L, x);
  NumClass out = NumClass::zero(L.rank());
  for (std::size_t i = 0; i < L.rank(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < L.rank(); ++j) {
      acc = checked::add(acc, checked::mul(L.at(i, j), x[j]));
    }
    out[i] = acc;
  }
  return out;
}

inline Int pair(const GramLattice& L, const NumClass& x, const NumClass& y) {
  detail::require_rank(L, y);
  const NumClass gx = apply(L, x);
  Int acc = 0;
  for (std::size_t i = 0; i < L.rank(); ++i) acc = checked::add(acc, checked::mul(gx[i], y[i]));
  return acc;
}

inline Int square(const GramLattice& L, const NumClass& x) { return pair(L, x, x); }

/// gcd of x.b over all basis vectors b. Zero iff x is in the kernel of the
/// form, so zero iff x = 0 on a unimodular lattice.
inline Int divisibility(const GramLattice& L, const NumClass& x) {
  return apply(L, x).content();
}

/// Some X with pair(X, D) = target, built from an extended-gcd combination of
/// the basis pairings of D.
inline NumClass solve_pairing(const GramLattice& L, const NumClass& D, Int target) {
  detail::require_rank(L, D);
  if (D.is_zero()) throw Error(ErrorKind::ZeroClass, "cannot solve X.D = target for D = 0");
  const NumClass p = apply(L, D);
  const Int d = p.content();
  if (d == 0 || target % d != 0) {
    throw Error(ErrorKind::NotDivisible, "divisibility " + std::to_string(d) +
                                             " does not divide " + std::to_string(target));
  }
  // Invariant: sum_i coeff[i] * p[i] == g.
  NumClass coeff = NumClass::zero(L.rank());
  Int g = 0;
  for (std::size_t i = 0; i < L.rank(); ++i) {
    if (p[i] == 0) continue;
    if (g == 0) {
      g = checked::abs(p[i]);
      coeff[i] = p[i] > 0 ? 1 : -1;
      continue;
    }
    if (p[i] % g == 0) continue;
    auto [ng, x, y] = checked::ext_gcd(g, p[i]);
    coeff *= x;
    coeff[i] = y;
    g = ng;
  }
  return (target / d) * coeff;
}

/// All primitive x with x.x = 0 and 0 < max|x_i| <= bound, one per sign pair
/// (first nonzero coordinate positive), sorted ascending lexicographically.
inline std::vector<NumClass> enumerate_isotropic(const GramLattice& L, Int bound) {
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "bound must be >= 1");
  const std::size_t n = L.rank();
  {
    // Every intermediate below is bounded by n^2 * max|G| * bound^2 in
    // magnitude; refuse inputs where that could overflow.
    const long double worst = static_cast<long double>(n) * n * (L.max_abs_entry() + 1) *
                              bound * bound * 4.0L;
    if (worst > static_cast<long double>(std::numeric_limits<Int>::max() / 4)) {
      throw Error(ErrorKind::Overflow, "enumeration bound too large for this Gram matrix");
    }
  }

  std::vector<NumClass> out;
  std::vector<Int> x(n, 0);

  if (n == 1) {
    // x0^2 * G00 = 0 has a nonzero solution only in a degenerate form.
    if (L.at(0, 0) == 0) out.push_back(NumClass{1});
    return out;
  }

  // Coordinates 1..n-1 are scanned; coordinate 0 is solved from the quadratic
  //   G00 x0^2 + 2 x0 lin + rest = 0,  lin = sum_{j>=1} G0j xj.
  // partial[k][j] holds sum_{i > k} G(j, i) x_i for the coordinates fixed so far.
  std::vector<std::vector<Int>> partial(n + 1, std::vector<Int>(n, 0));
  std::vector<Int> rest(n + 1, 0);  // quadratic form restricted to fixed coords

  const Int g00 = L.at(0, 0);

  auto emit = [&](Int x0) {
    if (x0 < -bound || x0 > bound) return;
    x[0] = x0;
    Int g = 0;
    Int m = 0;
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i) {
      g = checked::gcd(g, x[i]);
      m = std::max(m, x[i] < 0 ? -x[i] : x[i]);
      if (first == n && x[i] != 0) first = i;
    }
    if (m == 0 || g != 1 || x[first] < 0) return;
    out.emplace_back(x);
  };

  auto isqrt = [](Int v) -> Int {
    if (v < 0) return -1;
    Int s = static_cast<Int>(std::sqrt(static_cast<long double>(v)));
    while (s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s * s == v ? s : -1;
  };

  auto solve_leaf = [&](Int lin, Int q) {
    if (g00 == 0) {
      if (lin == 0) {
        if (q != 0) return;
        for (Int x0 = -bound; x0 <= bound; ++x0) emit(x0);
        return;
      }
      // 2 x0 lin + q = 0
      if (q % (2 * lin) != 0) return;
      emit(-q / (2 * lin));
      return;
    }
    // x0 = (-lin +- sqrt(lin^2 - g00 q)) / g00
    const Int disc = lin * lin - g00 * q;
    const Int s = isqrt(disc);
    if (s < 0) return;
    for (Int root : {-lin + s, -lin - s}) {
      if (root % g00 == 0) emit(root / g00);
      if (s == 0) break;
    }
  };

  // Depth-first over coordinates n-1 down to 1.
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == 0) {
      solve_leaf(partial[1][0], rest[1]);
      return;
    }
    for (Int v = -bound; v <= bound; ++v) {
      x[k] = v;
      // rest over coords >= k: rest[k+1] + G_kk v^2 + 2 v partial[k+1][k]
      rest[k] = rest[k + 1] + L.at(k, k) * v * v + 2 * v * partial[k + 1][k];
      for (std::size_t j = 0; j < k; ++j) partial[k][j] = partial[k + 1][j] + L.at(j, k) * v;
      self(self, k - 1);
    }
    x[k] = 0;
  };
  recurse(recurse, n - 1);

  std::sort(out.begin(), out.end());
  return out;
}

// Gram text format: one row per line, entries separated by whitespace.
// Blank lines and lines starting with '#' are ignored.

inline GramLattice parse_gram_text(const std::string& text) {
  std::vector<std::vector<Int>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<Int> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      Int value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) {
        throw Error(ErrorKind::Parse,
                    "line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
      }
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  return GramLattice(std::move(rows));
}

inline GramLattice load_gram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open lattice file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_gram_text(buf.str());
}

inline std::string format_gram_text(const GramLattice& L) {
  std::ostringstream out;
  for (std::size_t i = 0; i < L.rank(); ++i) {
    for (std::size_t j = 0; j < L.rank(); ++j) {
      if (j) out << ' ';
      out << L.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace enriques
