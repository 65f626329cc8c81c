#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "chainring/errors.hpp"

namespace chainring {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Integer power without reduction; throws if the result exceeds 2^63.
inline u64 checked_pow(u64 base, unsigned exp) {
  u64 out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > (u64{1} << 63) / base)
      throw std::overflow_error("power exceeds 2^63");
    out *= base;
  }
  return out;
}

/// Shared descriptor of the coefficient ring Z/p^r.
struct Modulus {
  u64 p = 2;
  unsigned r = 1;
  u64 value = 2;  // p^r

  Modulus() = default;
  Modulus(u64 prime, unsigned exponent) : p(prime), r(exponent) {
    if (!is_prime(prime)) throw std::invalid_argument("modulus base " + std::to_string(prime) + " is not prime");
    if (exponent < 1) throw std::invalid_argument("modulus exponent must be >= 1");
    value = checked_pow(prime, exponent);
  }

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.p == b.p && a.r == b.r; }

  u64 reduce(u64 x) const { return x % value; }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= value ? s - value : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + value - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : value - a; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % value); }
  u64 pow(u64 a, u64 e) const {
    u64 out = 1 % value, base = a % value;
    while (e) {
      if (e & 1) out = mul(out, base);
      base = mul(base, base);
      e >>= 1;
    }
    return out;
  }
  /// p-adic valuation of a residue; returns r for zero.
  unsigned valuation(u64 a) const {
    a %= value;
    if (a == 0) return r;
    unsigned v = 0;
    while (a % p == 0) {
      a /= p;
      ++v;
    }
    return v;
  }
  bool is_unit(u64 a) const { return a % p != 0; }
  /// Inverse of a unit via Euler's theorem (|U(Z/p^r)| = p^r - p^(r-1)).
  u64 inverse(u64 a) const {
    if (!is_unit(a)) throw MathError("element " + std::to_string(a) + " is not a unit mod " + std::to_string(value));
    return pow(a, value - value / p - 1);
  }
};

inline void require_same(const Modulus& a, const Modulus& b) {
  if (!(a == b))
    throw std::invalid_argument("mixed moduli: " + std::to_string(a.value) + " vs " + std::to_string(b.value));
}

/// An element of Z/p^r, always reduced into [0, p^r).
class ZMod {
 public:
  ZMod(const Modulus& m, u64 v) : mod_(m), value_(m.reduce(v)) {}
  static ZMod from_signed(const Modulus& m, long long v) {
    long long mv = static_cast<long long>(m.value);
    long long r = v % mv;
    if (r < 0) r += mv;
    return ZMod(m, static_cast<u64>(r));
  }

  u64 value() const { return value_; }
  const Modulus& modulus() const { return mod_; }
  bool is_zero() const { return value_ == 0; }
  bool is_unit() const { return mod_.is_unit(value_); }
  unsigned valuation() const { return mod_.valuation(value_); }

  ZMod operator+(const ZMod& o) const { return require_same(mod_, o.mod_), ZMod(mod_, mod_.add(value_, o.value_)); }
  ZMod operator-(const ZMod& o) const { return require_same(mod_, o.mod_), ZMod(mod_, mod_.sub(value_, o.value_)); }
  ZMod operator*(const ZMod& o) const { return require_same(mod_, o.mod_), ZMod(mod_, mod_.mul(value_, o.value_)); }
  ZMod operator-() const { return ZMod(mod_, mod_.neg(value_)); }
  ZMod pow(u64 e) const { return ZMod(mod_, mod_.pow(value_, e)); }
  ZMod inverse() const { return ZMod(mod_, mod_.inverse(value_)); }

  friend bool operator==(const ZMod& a, const ZMod& b) { return a.mod_ == b.mod_ && a.value_ == b.value_; }

 private:
  Modulus mod_;
  u64 value_;
};

}  // namespace chainring
