#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chainring/poly.hpp"

namespace chainring {

/// Residue of F_p[X]/(modulus): exactly `degree` digit coefficients.
struct FieldElem {
  std::vector<u64> c;
  auto operator<=>(const FieldElem&) const = default;
};

/// The finite field F_p[X]/(g) for monic irreducible g.
class FieldRep {
 public:
  FieldRep(u64 p, const UniPoly& modulus) : fp_(p, 1), g_(modulus.with_modulus(Modulus(p, 1))) {
    if (!g_.is_monic() || g_.degree() < 1) throw MathError("field modulus must be monic of degree >= 1");
    if (!is_irreducible_mod_p(g_, p)) throw MathError("field modulus " + g_.to_string() + " is reducible");
    d_ = static_cast<unsigned>(g_.degree());
    q_ = checked_pow(p, d_);
  }

  u64 p() const { return fp_.p; }
  unsigned degree() const { return d_; }
  u64 size() const { return q_; }
  const UniPoly& modulus() const { return g_; }
  const Modulus& prime_modulus() const { return fp_; }

  FieldElem zero() const { return FieldElem{std::vector<u64>(d_, 0)}; }
  FieldElem one() const { return from_scalar(1); }
  FieldElem from_scalar(u64 v) const {
    FieldElem e = zero();
    e.c[0] = v % fp_.p;
    return e;
  }
  /// Class of X.
  FieldElem gen() const { return from_poly(UniPoly::monomial(fp_, 1)); }
  FieldElem from_poly(const UniPoly& f) const {
    UniPoly r = d_ >= 1 ? poly_rem_monic(f.with_modulus(fp_), g_) : UniPoly(fp_);
    FieldElem e = zero();
    for (unsigned i = 0; i < d_; ++i) e.c[i] = r.coeff(i);
    return e;
  }
  UniPoly to_poly(const FieldElem& e) const { return UniPoly(fp_, e.c); }

  FieldElem from_index(u64 idx) const {
    FieldElem e = zero();
    for (unsigned i = 0; i < d_; ++i) {
      e.c[i] = idx % fp_.p;
      idx /= fp_.p;
    }
    return e;
  }
  u64 index(const FieldElem& e) const {
    u64 idx = 0;
    for (unsigned i = d_; i-- > 0;) idx = idx * fp_.p + e.c[i];
    return idx;
  }

  bool is_zero(const FieldElem& e) const {
    for (auto x : e.c)
      if (x) return false;
    return true;
  }
  FieldElem add(const FieldElem& a, const FieldElem& b) const {
    FieldElem e = zero();
    for (unsigned i = 0; i < d_; ++i) e.c[i] = fp_.add(a.c[i], b.c[i]);
    return e;
  }
  FieldElem sub(const FieldElem& a, const FieldElem& b) const {
    FieldElem e = zero();
    for (unsigned i = 0; i < d_; ++i) e.c[i] = fp_.sub(a.c[i], b.c[i]);
    return e;
  }
  FieldElem neg(const FieldElem& a) const { return sub(zero(), a); }
  FieldElem mul(const FieldElem& a, const FieldElem& b) const { return from_poly(to_poly(a) * to_poly(b)); }
  FieldElem pow(const FieldElem& a, u64 e) const {
    FieldElem out = one(), base = a;
    while (e) {
      if (e & 1) out = mul(out, base);
      base = mul(base, base);
      e >>= 1;
    }
    return out;
  }
  FieldElem inverse(const FieldElem& a) const {
    if (is_zero(a)) throw MathError("inverse of zero in F_" + std::to_string(q_));
    return pow(a, q_ - 2);
  }

  /// Multiplicative order of a nonzero element.
  u64 order(const FieldElem& a) const {
    if (is_zero(a)) throw MathError("zero has no multiplicative order");
    FieldElem x = a, o = one();
    for (u64 k = 1;; ++k) {
      if (x == o) return k;
      x = mul(x, a);
    }
  }
  /// Least element (by index) of order q-1.
  FieldElem multiplicative_generator() const {
    for (u64 idx = 1; idx < q_; ++idx) {
      FieldElem e = from_index(idx);
      if (order(e) == q_ - 1) return e;
    }
    throw std::logic_error("multiplicative group is not cyclic");  // unreachable for a field
  }

  /// Evaluates h (coefficients read mod p) at e.
  FieldElem eval(const UniPoly& h, const FieldElem& e) const {
    FieldElem acc = zero();
    const auto& c = h.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = add(mul(acc, e), from_scalar(*it % fp_.p));
    return acc;
  }

  /// Monic minimal polynomial over Z/p, as the product over the Frobenius orbit.
  UniPoly min_poly(const FieldElem& e) const {
    std::vector<FieldElem> orbit{e};
    for (FieldElem x = pow(e, fp_.p); x != e; x = pow(x, fp_.p)) orbit.push_back(x);
    // Coefficients of prod (T - x) live in F_q; they land in F_p.
    std::vector<FieldElem> coeffs{one()};
    for (const auto& x : orbit) {
      std::vector<FieldElem> next(coeffs.size() + 1, zero());
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        next[i + 1] = add(next[i + 1], coeffs[i]);
        next[i] = sub(next[i], mul(coeffs[i], x));
      }
      coeffs = std::move(next);
    }
    std::vector<u64> out;
    for (const auto& c : coeffs) {
      for (unsigned i = 1; i < d_; ++i)
        if (c.c[i] != 0) throw std::logic_error("minimal polynomial coefficient outside F_p");
      out.push_back(c.c[0]);
    }
    return UniPoly(fp_, std::move(out));
  }

  /// All roots of h in this field, in index order.
  std::vector<FieldElem> roots_of(const UniPoly& h) const {
    std::vector<FieldElem> out;
    for (u64 idx = 0; idx < q_; ++idx) {
      FieldElem e = from_index(idx);
      if (is_zero(eval(h, e))) out.push_back(e);
    }
    return out;
  }

  /// Membership in (K*)^2; zero is reported as not in the group.
  bool is_square(const FieldElem& e) const { return sqrt(e).has_value(); }
  /// Least (by index) nonzero square root, if e is a nonzero square.
  std::optional<FieldElem> sqrt(const FieldElem& e) const {
    if (is_zero(e)) return std::nullopt;
    for (u64 idx = 1; idx < q_; ++idx) {
      FieldElem v = from_index(idx);
      if (mul(v, v) == e) return v;
    }
    return std::nullopt;
  }

  friend bool operator==(const FieldRep& a, const FieldRep& b) { return a.fp_ == b.fp_ && a.g_ == b.g_; }

 private:
  Modulus fp_;
  UniPoly g_;
  unsigned d_ = 1;
  u64 q_ = 2;
};

/// Field isomorphism determined by the image of the class of X.
class FieldIso {
 public:
  FieldIso(FieldRep src, FieldRep dst, FieldElem image_of_x)
      : src_(std::move(src)), dst_(std::move(dst)), image_(std::move(image_of_x)) {}

  const FieldRep& source() const { return src_; }
  const FieldRep& target() const { return dst_; }
  const FieldElem& image_of_x() const { return image_; }
  FieldElem apply(const FieldElem& e) const { return dst_.eval(src_.to_poly(e), image_); }

 private:
  FieldRep src_, dst_;
  FieldElem image_;
};

/// Every isomorphism K1 -> K2, one per root of K1's modulus in K2.
inline std::vector<FieldIso> field_isos(const FieldRep& k1, const FieldRep& k2) {
  std::vector<FieldIso> out;
  if (k1.p() != k2.p() || k1.degree() != k2.degree()) return out;
  for (auto& root : k2.roots_of(k1.modulus())) out.emplace_back(k1, k2, root);
  return out;
}

}  // namespace chainring
