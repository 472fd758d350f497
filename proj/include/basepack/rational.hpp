#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace basepack {

/// Exact nonnegative rational with an explicit +infinity (den == 0).
/// Strength ratios and eta estimates are carried as Rationals so that
/// ordering assertions never depend on floating-point rounding.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (d < 0) throw std::invalid_argument("negative denominator");
    if (d == 0) {
      num = 1;  // canonical +infinity
    } else {
      long long g = std::gcd(num < 0 ? -num : num, den);
      if (g > 1) {
        num /= g;
        den /= g;
      }
    }
  }

  static Rational infinity() { return Rational(1, 0); }
  bool is_infinite() const { return den == 0; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a < b || a == b;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  double to_double() const {
    if (is_infinite()) return 1e308;
    return static_cast<double>(num) / static_cast<double>(den);
  }

  std::string str() const {
    if (is_infinite()) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

/// Smallest integer l with 2^l >= x, for positive rational x.
/// Handles x < 1 (negative result) exactly.
inline int ceil_log2(const Rational& x) {
  if (x.is_infinite() || x.num <= 0) {
    throw std::invalid_argument("ceil_log2 requires a positive finite value");
  }
  int l = 0;
  // 2^l >= num/den  <=>  den * 2^l >= num (for l >= 0), and symmetrically
  // num * 2^(-l) <= den for l < 0.
  if (x.num > x.den) {
    __int128 pow = x.den;
    while (pow < x.num) {
      pow *= 2;
      ++l;
    }
  } else {
    __int128 pow = x.num;
    while (pow * 2 <= x.den) {
      pow *= 2;
      --l;
    }
  }
  return l;
}

inline int ceil_log2(long long v) { return ceil_log2(Rational(v, 1)); }

}  // namespace basepack
