#pragma once

// Overflow-checked integer arithmetic. Any overflow throws; nothing wraps.

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include "enriques/error.hpp"

namespace enriques {

using Int = std::int64_t;

namespace checked {

template <std::signed_integral T>
constexpr T add(T a, T b) {
  T out{};
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

template <std::signed_integral T>
constexpr T sub(T a, T b) {
  T out{};
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, std::to_string(a) + " - " + std::to_string(b));
  }
  return out;
}

template <std::signed_integral T>
constexpr T mul(T a, T b) {
  T out{};
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

template <std::signed_integral T>
constexpr T neg(T a) {
  return sub<T>(T{0}, a);
}

template <std::signed_integral T>
constexpr T abs(T a) {
  return a < 0 ? neg(a) : a;
}

/// Nonnegative gcd; gcd(0, 0) = 0.
template <std::signed_integral T>
constexpr T gcd(T a, T b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    T r = a % b;
    a = b;
    b = r;
  }
  return a;
}

template <std::signed_integral T>
struct Bezout {
  T g;  // nonnegative
  T x;
  T y;
};

/// a*x + b*y = g = gcd(a, b) >= 0.
template <std::signed_integral T>
constexpr Bezout<T> ext_gcd(T a, T b) {
  T old_r = a, r = b;
  T old_s = 1, s = 0;
  T old_t = 0, t = 1;
  while (r != 0) {
    T q = old_r / r;
    old_r = sub(old_r, mul(q, r));
    std::swap(old_r, r);
    old_s = sub(old_s, mul(q, s));
    std::swap(old_s, s);
    old_t = sub(old_t, mul(q, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) return {neg(old_r), neg(old_s), neg(old_t)};
  return {old_r, old_s, old_t};
}

/// Floor-mod into [0, m).
template <std::signed_integral T>
constexpr T mod(T a, T m) {
  T r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace checked
}  // namespace enriques
