#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chainring/zmod.hpp"

namespace chainring {

/// Univariate polynomial over Z/p^r, coefficients lowest degree first.
/// Trailing zero coefficients are never stored; the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Modulus& m) : mod_(m) {}
  UniPoly(const Modulus& m, std::vector<u64> coeffs) : mod_(m), c_(std::move(coeffs)) {
    for (auto& x : c_) x = mod_.reduce(x);
    trim();
  }
  UniPoly(const Modulus& m, std::initializer_list<u64> coeffs) : UniPoly(m, std::vector<u64>(coeffs)) {}

  static UniPoly monomial(const Modulus& m, std::size_t degree, u64 coeff = 1) {
    std::vector<u64> c(degree + 1, 0);
    c[degree] = coeff;
    return UniPoly(m, std::move(c));
  }
  static UniPoly constant(const Modulus& m, u64 v) { return UniPoly(m, std::vector<u64>{v}); }

  const Modulus& modulus() const { return mod_; }
  const std::vector<u64>& coeffs() const { return c_; }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  u64 leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  /// True iff every coefficient lies in {0, ..., p-1}.
  bool has_digit_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [&](u64 x) { return x < mod_.p; });
  }

  /// Same representatives, reinterpreted over another modulus.
  UniPoly with_modulus(const Modulus& m) const { return UniPoly(m, c_); }
  /// Image in Z/p[X].
  UniPoly mod_p() const { return with_modulus(Modulus(mod_.p, 1)); }

  UniPoly operator+(const UniPoly& o) const {
    require_same(mod_, o.mod_);
    std::vector<u64> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_.add(coeff(i), o.coeff(i));
    return UniPoly(mod_, std::move(c));
  }
  UniPoly operator-(const UniPoly& o) const {
    require_same(mod_, o.mod_);
    std::vector<u64> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_.sub(coeff(i), o.coeff(i));
    return UniPoly(mod_, std::move(c));
  }
  UniPoly operator-() const { return UniPoly(mod_) - *this; }
  UniPoly operator*(const UniPoly& o) const {
    require_same(mod_, o.mod_);
    if (is_zero() || o.is_zero()) return UniPoly(mod_);
    std::vector<u64> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = mod_.add(c[i + j], mod_.mul(c_[i], o.c_[j]));
    return UniPoly(mod_, std::move(c));
  }
  UniPoly scaled(u64 k) const {
    std::vector<u64> c = c_;
    for (auto& x : c) x = mod_.mul(x, k);
    return UniPoly(mod_, std::move(c));
  }
  UniPoly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<u64> c(k, 0);
    c.insert(c.end(), c_.begin(), c_.end());
    return UniPoly(mod_, std::move(c));
  }
  u64 eval(u64 x) const {
    u64 acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod_.add(mod_.mul(acc, x), *it);
    return acc;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.mod_ == b.mod_ && a.c_ == b.c_; }

  std::string to_string(char var = 'X') const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  Modulus mod_;
  std::vector<u64> c_;
};

inline std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(i));
    if (mono.empty())
      out += std::to_string(c_[i]);
    else if (c_[i] == 1)
      out += mono;
    else
      out += std::to_string(c_[i]) + "*" + mono;
  }
  return out;
}

/// Division by a monic polynomial; exact over Z/p^r since no inversion is needed.
inline std::pair<UniPoly, UniPoly> poly_divrem_monic(const UniPoly& f, const UniPoly& g) {
  require_same(f.modulus(), g.modulus());
  if (!g.is_monic()) throw std::invalid_argument("divisor is not monic");
  if (g.degree() < 1) throw std::invalid_argument("divisor must have degree >= 1");
  const Modulus& m = f.modulus();
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  std::vector<u64> rem = f.coeffs();
  if (rem.size() <= dg) return {UniPoly(m), f};
  std::vector<u64> quot(rem.size() - dg, 0);
  for (std::size_t i = rem.size(); i-- > dg;) {
    u64 c = rem[i];
    if (c == 0) continue;
    quot[i - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] = m.sub(rem[i - dg + j], m.mul(c, g.coeff(j)));
  }
  rem.resize(dg);
  return {UniPoly(m, std::move(quot)), UniPoly(m, std::move(rem))};
}

/// Remainder of f modulo a monic g.
inline UniPoly poly_rem_monic(const UniPoly& f, const UniPoly& g) { return poly_divrem_monic(f, g).second; }

/// Monic polynomial of the given degree over Z/p whose non-leading
/// coefficients are the base-p digits of `index` (coefficient of X^0 is the
/// least significant digit). Indices 0..p^deg-1 enumerate all monic
/// polynomials of that degree in lexicographic order, compared from X^(deg-1)
/// down to X^0.
inline UniPoly monic_from_index(u64 p, unsigned deg, u64 index) {
  Modulus m(p, 1);
  std::vector<u64> c(deg + 1, 0);
  for (unsigned i = 0; i < deg; ++i) {
    c[i] = index % p;
    index /= p;
  }
  c[deg] = 1;
  return UniPoly(m, std::move(c));
}

/// Irreducibility over Z/p by trial division with every monic polynomial of
/// degree <= deg/2. Fine for the desk-scale degrees used here; the
/// X^(p^d) == X (mod g) criterion would be the fast path for larger inputs.
inline bool is_irreducible_mod_p(const UniPoly& g_in, u64 p) {
  UniPoly g = g_in.with_modulus(Modulus(p, 1));
  if (g.is_zero()) throw std::invalid_argument("zero polynomial has no irreducibility status");
  if (!g.is_monic()) throw std::invalid_argument("polynomial is not monic mod p");
  const int d = g.degree();
  if (d < 1) throw std::invalid_argument("constant polynomial has no irreducibility status");
  for (unsigned k = 1; 2 * k <= static_cast<unsigned>(d); ++k) {
    u64 count = checked_pow(p, k);
    for (u64 idx = 0; idx < count; ++idx)
      if (poly_rem_monic(g, monic_from_index(p, k, idx)).is_zero()) return false;
  }
  return true;
}

/// Lexicographically least monic irreducible polynomial of degree d over Z/p.
inline UniPoly gen_irreducible(u64 p, unsigned d) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  u64 count = checked_pow(p, d);
  for (u64 idx = 0; idx < count; ++idx) {
    UniPoly g = monic_from_index(p, d, idx);
    if (is_irreducible_mod_p(g, p)) return g;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

/// All monic irreducible polynomials of degree d over Z/p, in lexicographic order.
inline std::vector<UniPoly> all_irreducibles(u64 p, unsigned d) {
  std::vector<UniPoly> out;
  u64 count = checked_pow(p, d);
  for (u64 idx = 0; idx < count; ++idx) {
    UniPoly g = monic_from_index(p, d, idx);
    if (is_irreducible_mod_p(g, p)) out.push_back(g);
  }
  return out;
}

/// Polynomial of degree < d with digit coefficients in {0..p-1} read from
/// the base-p expansion of `index` (X^0 least significant).
inline UniPoly digit_poly(const Modulus& m, unsigned d, u64 index) {
  std::vector<u64> c(d, 0);
  for (unsigned i = 0; i < d; ++i) {
    c[i] = index % m.p;
    index /= m.p;
  }
  return UniPoly(m, std::move(c));
}

inline u64 digit_poly_index(const UniPoly& w, unsigned d) {
  u64 idx = 0;
  for (unsigned i = d; i-- > 0;) idx = idx * w.modulus().p + w.coeff(i);
  return idx;
}

/// Bivariate polynomial: part(b) is the coefficient of Y^b as a polynomial in X.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(const Modulus& m) : mod_(m) {}
  BiPoly(const Modulus& m, std::vector<UniPoly> parts) : mod_(m), parts_(std::move(parts)) {
    for (auto& u : parts_) require_same(mod_, u.modulus());
    trim();
  }
  /// Embeds a univariate polynomial as Y^ydeg * u(X).
  static BiPoly from_uni(const UniPoly& u, std::size_t ydeg = 0) {
    std::vector<UniPoly> parts(ydeg + 1, UniPoly(u.modulus()));
    parts[ydeg] = u;
    return BiPoly(u.modulus(), std::move(parts));
  }
  static BiPoly monomial(const Modulus& m, std::size_t xdeg, std::size_t ydeg, u64 coeff = 1) {
    return from_uni(UniPoly::monomial(m, xdeg, coeff), ydeg);
  }
  static BiPoly constant(const Modulus& m, u64 v) { return from_uni(UniPoly::constant(m, v)); }

  const Modulus& modulus() const { return mod_; }
  const std::vector<UniPoly>& parts() const { return parts_; }
  UniPoly part(std::size_t b) const { return b < parts_.size() ? parts_[b] : UniPoly(mod_); }
  /// Y-degree, or -1 for zero.
  int y_degree() const { return static_cast<int>(parts_.size()) - 1; }
  int x_degree() const {
    int d = -1;
    for (auto& u : parts_) d = std::max(d, u.degree());
    return d;
  }
  bool is_zero() const { return parts_.empty(); }

  BiPoly operator+(const BiPoly& o) const {
    require_same(mod_, o.mod_);
    std::vector<UniPoly> out(std::max(parts_.size(), o.parts_.size()), UniPoly(mod_));
    for (std::size_t b = 0; b < out.size(); ++b) out[b] = part(b) + o.part(b);
    return BiPoly(mod_, std::move(out));
  }
  BiPoly operator-(const BiPoly& o) const {
    require_same(mod_, o.mod_);
    std::vector<UniPoly> out(std::max(parts_.size(), o.parts_.size()), UniPoly(mod_));
    for (std::size_t b = 0; b < out.size(); ++b) out[b] = part(b) - o.part(b);
    return BiPoly(mod_, std::move(out));
  }
  BiPoly operator*(const BiPoly& o) const {
    require_same(mod_, o.mod_);
    if (is_zero() || o.is_zero()) return BiPoly(mod_);
    std::vector<UniPoly> out(parts_.size() + o.parts_.size() - 1, UniPoly(mod_));
    for (std::size_t i = 0; i < parts_.size(); ++i)
      for (std::size_t j = 0; j < o.parts_.size(); ++j) out[i + j] = out[i + j] + parts_[i] * o.parts_[j];
    return BiPoly(mod_, std::move(out));
  }
  BiPoly scaled(u64 k) const {
    std::vector<UniPoly> out;
    for (auto& u : parts_) out.push_back(u.scaled(k));
    return BiPoly(mod_, std::move(out));
  }
  BiPoly pow(unsigned e) const {
    BiPoly out = constant(mod_, 1), base = *this;
    while (e) {
      if (e & 1) out = out * base;
      base = base * base;
      e >>= 1;
    }
    return out;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.mod_ == b.mod_ && a.parts_ == b.parts_; }

 private:
  void trim() {
    while (!parts_.empty() && parts_.back().is_zero()) parts_.pop_back();
  }

  Modulus mod_;
  std::vector<UniPoly> parts_;
};

}  // namespace chainring
