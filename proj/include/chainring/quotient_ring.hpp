#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chainring/field.hpp"
#include "chainring/presentation.hpp"

namespace chainring {

/// Digit matrix of a normal form, flattened as index b*d + a for the
/// coefficient of X^a Y^b. Every entry lies in {0..p-1}.
using Digits = std::vector<u64>;

/// Order in which the rewriting rules are applied within one Y-row.
///   XFirst: reduce X-degree with g first, then split p-digits.
///   PFirst: split p-digits first, then reduce X-degree, then split again.
/// Both produce the same normal form whenever the presentation is sound;
/// certification compares them.
enum class RewriteOrder { XFirst, PFirst };

/// Z/p^r[X,Y]/Q realized on canonical digit matrices. Rewriting rules:
///   R1  drop monomials of Y-degree > s;
///   R4  reduce coefficients mod p in rows b >= s+1-t_1 (p Y^(s+1-t_1) is in Q);
///   R2  replace h*g by h * sum v_j Y^(s_j) (or 0 for empty g_rel);
///   R3  replace p*c1*X^a Y^b by c1*X^a Y^b * sum u_i Y^(t_i).
/// Rows are processed from Y^0 upward. R2 and R3 only push material into
/// strictly higher rows (t_i, s_j >= 1), so one pass terminates.
class QuotientRing {
 public:
  static std::shared_ptr<const QuotientRing> make(const Presentation& pres) {
    auto rep = validate(pres);
    if (!rep.ok()) {
      std::string msg = "invalid presentation:";
      for (const auto& v : rep.violations) msg += " " + v + ";";
      throw MathError(msg);
    }
    return std::shared_ptr<const QuotientRing>(new QuotientRing(pres));
  }

  const Presentation& presentation() const { return pres_; }
  const Modulus& modulus() const { return mod_; }
  u64 p() const { return mod_.p; }
  unsigned r() const { return mod_.r; }
  unsigned d() const { return d_; }
  unsigned s() const { return s_; }
  unsigned t1() const { return t1_; }
  u64 q() const { return q_; }
  std::size_t digit_count() const { return k_; }
  /// q^(s+1) when it fits in 64 bits.
  std::optional<u64> order() const { return order_; }
  u64 order_checked(u64 bound) const {
    if (!order_ || *order_ > bound)
      throw BoundError("ring order exceeds bound " + std::to_string(bound));
    return *order_;
  }

  Digits zero() const { return Digits(k_, 0); }
  Digits one() const { return normal_form(BiPoly::constant(mod_, 1)); }
  Digits x_class() const { return normal_form(BiPoly::monomial(mod_, 1, 0)); }
  Digits y_class() const { return normal_form(BiPoly::monomial(mod_, 0, 1)); }
  Digits from_integer(u64 c) const { return normal_form(BiPoly::constant(mod_, c)); }
  Digits from_uni(const UniPoly& f) const { return normal_form(BiPoly::from_uni(f.with_modulus(mod_))); }

  Digits normal_form(const BiPoly& f, RewriteOrder order = RewriteOrder::XFirst) const {
    const std::size_t width = std::max<std::size_t>(static_cast<std::size_t>(std::max(f.x_degree(), 0)) + 1, 2 * d_ - 1) +
                              (order == RewriteOrder::PFirst ? (s_ + 2) * d_ : 0);
    std::vector<u64> buf((s_ + 1) * width, 0);
    for (std::size_t b = 0; b <= s_ && b < f.parts().size(); ++b) {
      const auto& c = f.parts()[b].coeffs();
      for (std::size_t a = 0; a < c.size(); ++a) buf[b * width + a] = mod_.reduce(c[a]);
    }
    if (order == RewriteOrder::XFirst)
      reduce_x_first(buf.data(), width);
    else
      reduce_p_first(buf.data(), width);
    return extract(buf.data(), width);
  }

  Digits add(const Digits& x, const Digits& y) const {
    auto& buf = scratch(fast_width());
    const std::size_t w = fast_width();
    for (unsigned b = 0; b <= s_; ++b)
      for (unsigned a = 0; a < d_; ++a) buf[b * w + a] = x[b * d_ + a] + y[b * d_ + a];
    reduce_x_first(buf.data(), w);
    return extract(buf.data(), w);
  }
  Digits neg(const Digits& x) const { return scalar(mod_.value - 1, x); }
  Digits sub(const Digits& x, const Digits& y) const { return add(x, neg(y)); }
  /// Action of c in Z/p^r.
  Digits scalar(u64 c, const Digits& x) const {
    auto& buf = scratch(fast_width());
    const std::size_t w = fast_width();
    c = mod_.reduce(c);
    for (unsigned b = 0; b <= s_; ++b)
      for (unsigned a = 0; a < d_; ++a) buf[b * w + a] = mod_.mul(c, x[b * d_ + a]);
    reduce_x_first(buf.data(), w);
    return extract(buf.data(), w);
  }
  Digits mul(const Digits& x, const Digits& y) const {
    auto& buf = scratch(fast_width());
    const std::size_t w = fast_width();
    for (unsigned b1 = 0; b1 <= s_; ++b1)
      for (unsigned a1 = 0; a1 < d_; ++a1) {
        u64 c1 = x[b1 * d_ + a1];
        if (!c1) continue;
        for (unsigned b2 = 0; b1 + b2 <= s_; ++b2)
          for (unsigned a2 = 0; a2 < d_; ++a2) {
            u64 c2 = y[b2 * d_ + a2];
            if (!c2) continue;
            u64& dst = buf[(b1 + b2) * w + a1 + a2];
            dst = mod_.add(dst, mod_.mul(c1, c2));
          }
      }
    reduce_x_first(buf.data(), w);
    return extract(buf.data(), w);
  }
  /// x * X^a Y^b.
  Digits mul_monomial(const Digits& x, unsigned a, unsigned b) const {
    if (a >= d_) return mul(x, normal_form(BiPoly::monomial(mod_, a, b)));
    auto& buf = scratch(fast_width());
    const std::size_t w = fast_width();
    for (unsigned b1 = 0; b1 + b <= s_; ++b1)
      for (unsigned a1 = 0; a1 < d_; ++a1) buf[(b1 + b) * w + a1 + a] = x[b1 * d_ + a1];
    reduce_x_first(buf.data(), w);
    return extract(buf.data(), w);
  }
  Digits pow(const Digits& x, u64 e) const {
    Digits out = one(), base = x;
    while (e) {
      if (e & 1) out = mul(out, base);
      base = mul(base, base);
      e >>= 1;
    }
    return out;
  }

  /// NF of the unreduced polynomial c * X^a * Y^b * x under the given rule order.
  Digits normal_form_lift(const Digits& x, u64 c, unsigned a, unsigned b, RewriteOrder order) const {
    const std::size_t width = std::max<std::size_t>(d_ + a, 2 * d_ - 1) +
                              (order == RewriteOrder::PFirst ? (s_ + 2) * d_ : 0);
    auto& buf = scratch(width);
    c = mod_.reduce(c);
    for (unsigned b1 = 0; b1 + b <= s_; ++b1)
      for (unsigned a1 = 0; a1 < d_; ++a1) buf[(b1 + b) * width + a1 + a] = mod_.mul(c, x[b1 * d_ + a1]);
    if (order == RewriteOrder::XFirst)
      reduce_x_first(buf.data(), width);
    else
      reduce_p_first(buf.data(), width);
    return extract(buf.data(), width);
  }

  bool is_zero(const Digits& x) const {
    return std::all_of(x.begin(), x.end(), [](u64 c) { return c == 0; });
  }
  bool is_unit(const Digits& x) const {
    for (unsigned a = 0; a < d_; ++a)
      if (x[a]) return true;
    return false;
  }
  /// Inverse by exponentiation to |U(R)| - 1 = q^(s+1) - q^s - 1.
  Digits inverse(const Digits& x) const {
    if (!is_unit(x)) throw MathError("element is not a unit");
    if (!order_) throw BoundError("unit group order does not fit in 64 bits");
    return pow(x, *order_ - *order_ / q_ - 1);
  }

  FieldRep residue_field() const { return FieldRep(mod_.p, pres_.g.mod_p()); }
  FieldElem residue(const Digits& x) const {
    FieldElem e{std::vector<u64>(x.begin(), x.begin() + d_)};
    return e;
  }

  /// Mixed-radix index: digit (b, a) has weight p^(b*d + a).
  u64 index(const Digits& x) const {
    u64 i = 0;
    for (std::size_t k = k_; k-- > 0;) i = i * mod_.p + x[k];
    return i;
  }
  Digits from_index(u64 i) const {
    Digits x(k_, 0);
    for (std::size_t k = 0; k < k_; ++k) {
      x[k] = i % mod_.p;
      i /= mod_.p;
    }
    return x;
  }
  BiPoly to_poly(const Digits& x) const {
    std::vector<UniPoly> parts;
    for (unsigned b = 0; b <= s_; ++b)
      parts.emplace_back(mod_, std::vector<u64>(x.begin() + b * d_, x.begin() + (b + 1) * d_));
    return BiPoly(mod_, std::move(parts));
  }

  /// Generators of Q as polynomials.
  std::vector<BiPoly> generators() const {
    std::vector<BiPoly> out;
    out.push_back(BiPoly::monomial(mod_, 0, s_ + 1));
    if (mod_.r >= 2) {
      out.push_back(BiPoly::monomial(mod_, 0, s_ + 1 - t1_, mod_.p));
      BiPoly prel = BiPoly::constant(mod_, mod_.p);
      for (const auto& t : pres_.p_rel) prel = prel - BiPoly::from_uni(t.poly, t.exp);
      out.push_back(prel);
    }
    BiPoly grel = BiPoly::from_uni(pres_.g);
    for (const auto& t : pres_.g_rel) grel = grel - BiPoly::from_uni(t.poly, t.exp);
    out.push_back(grel);
    return out;
  }

  std::string to_string(const Digits& x) const {
    std::string out;
    for (unsigned b = 0; b <= s_; ++b)
      for (unsigned a = 0; a < d_; ++a) {
        u64 c = x[b * d_ + a];
        if (!c) continue;
        std::string mono;
        if (a == 1) mono = "X";
        if (a > 1) mono = "X^" + std::to_string(a);
        if (b >= 1) mono += std::string(mono.empty() ? "" : "*") + (b == 1 ? "Y" : "Y^" + std::to_string(b));
        std::string term = mono.empty() ? std::to_string(c) : (c == 1 ? mono : std::to_string(c) + "*" + mono);
        out += (out.empty() ? "" : " + ") + term;
      }
    return out.empty() ? "0" : out;
  }

 private:
  explicit QuotientRing(const Presentation& pres) : pres_(pres), mod_(pres.modulus()) {
    d_ = pres.d();
    s_ = pres.s;
    t1_ = pres.t1();
    q_ = pres.q();
    k_ = static_cast<std::size_t>(d_) * (s_ + 1);
    try {
      order_ = pres.order();
    } catch (const std::overflow_error&) {
      order_.reset();
    }
    g_.assign(d_, 0);
    for (unsigned i = 0; i < d_; ++i) g_[i] = pres.g.coeff(i);
    for (const auto& t : pres.g_rel) grel_.push_back(dense_term(t));
    for (const auto& t : pres.p_rel) prel_.push_back(dense_term(t));
  }

  struct DenseTerm {
    unsigned exp;
    std::vector<u64> c;  // length d
  };
  DenseTerm dense_term(const RelTerm& t) const {
    DenseTerm out{t.exp, std::vector<u64>(d_, 0)};
    for (unsigned i = 0; i < d_; ++i) out.c[i] = mod_.reduce(t.poly.coeff(i));
    return out;
  }

  std::size_t fast_width() const { return 2 * d_ - 1; }
  std::vector<u64>& scratch(std::size_t width) const {
    thread_local std::vector<u64> buf;
    buf.assign((s_ + 1) * width, 0);
    return buf;
  }

  Digits extract(const u64* buf, std::size_t width) const {
    Digits x(k_);
    for (unsigned b = 0; b <= s_; ++b)
      for (unsigned a = 0; a < d_; ++a) x[b * d_ + a] = buf[b * width + a];
    return x;
  }

  void annihilator_rule(u64* row, std::size_t width, unsigned b) const {
    if (mod_.r >= 2 && b + t1_ >= s_ + 1)
      for (std::size_t a = 0; a < width; ++a) row[a] %= mod_.p;
  }
  // R2 on columns >= d of row b, highest X-degree first.
  void g_rule(u64* buf, std::size_t width, unsigned b) const {
    u64* row = buf + b * width;
    for (std::size_t a = width; a-- > d_;) {
      u64 c = mod_.reduce(row[a]);
      row[a] = 0;
      if (!c) continue;
      const std::size_t base = a - d_;
      for (unsigned i = 0; i < d_; ++i) row[base + i] = mod_.sub(mod_.reduce(row[base + i]), mod_.mul(c, g_[i]));
      for (const auto& t : grel_) {
        if (b + t.exp > s_) continue;
        u64* hr = buf + (b + t.exp) * width;
        for (unsigned i = 0; i < d_; ++i)
          if (t.c[i]) hr[base + i] = mod_.add(mod_.reduce(hr[base + i]), mod_.mul(c, t.c[i]));
      }
    }
  }
  // R3 on columns [0, upto) of row b.
  void p_rule(u64* buf, std::size_t width, unsigned b, std::size_t upto) const {
    u64* row = buf + b * width;
    for (std::size_t a = 0; a < upto; ++a) {
      u64 c = mod_.reduce(row[a]);
      row[a] = c % mod_.p;
      u64 c1 = c / mod_.p;
      if (!c1) continue;
      for (const auto& t : prel_) {
        if (b + t.exp > s_) continue;
        u64* hr = buf + (b + t.exp) * width;
        for (unsigned i = 0; i < d_; ++i)
          if (t.c[i]) hr[a + i] = mod_.add(mod_.reduce(hr[a + i]), mod_.mul(c1, t.c[i]));
      }
    }
  }

  // Requires width >= 2d-1 so p-carries from columns < d stay in range.
  void reduce_x_first(u64* buf, std::size_t width) const {
    for (unsigned b = 0; b <= s_; ++b) {
      annihilator_rule(buf + b * width, width, b);
      g_rule(buf, width, b);
      p_rule(buf, width, b, d_);
    }
  }
  // Requires headroom of (s+2)*d columns beyond the input's X-degree.
  void reduce_p_first(u64* buf, std::size_t width) const {
    for (unsigned b = 0; b <= s_; ++b) {
      annihilator_rule(buf + b * width, width, b);
      p_rule(buf, width, b, width - d_ + 1);
      g_rule(buf, width, b);
      p_rule(buf, width, b, d_);
    }
  }

  Presentation pres_;
  Modulus mod_;
  unsigned d_ = 1, s_ = 1, t1_ = 2;
  u64 q_ = 2;
  std::size_t k_ = 2;
  std::optional<u64> order_;
  std::vector<u64> g_;
  std::vector<DenseTerm> grel_, prel_;
};

using RingPtr = std::shared_ptr<const QuotientRing>;

/// An element of a presented ring: a normal form plus its ring.
class RingElem {
 public:
  RingElem(RingPtr ring, Digits digits) : ring_(std::move(ring)), digits_(std::move(digits)) {}

  const QuotientRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const Digits& digits() const { return digits_; }
  u64 digit(unsigned b, unsigned a) const { return digits_[b * ring_->d() + a]; }
  u64 index() const { return ring_->index(digits_); }
  bool is_zero() const { return ring_->is_zero(digits_); }

  RingElem operator+(const RingElem& o) const { return check(o), RingElem(ring_, ring_->add(digits_, o.digits_)); }
  RingElem operator-(const RingElem& o) const { return check(o), RingElem(ring_, ring_->sub(digits_, o.digits_)); }
  RingElem operator*(const RingElem& o) const { return check(o), RingElem(ring_, ring_->mul(digits_, o.digits_)); }
  RingElem operator-() const { return RingElem(ring_, ring_->neg(digits_)); }
  RingElem pow(u64 e) const { return RingElem(ring_, ring_->pow(digits_, e)); }
  RingElem scaled(u64 c) const { return RingElem(ring_, ring_->scalar(c, digits_)); }

  friend bool operator==(const RingElem& a, const RingElem& b) {
    return a.ring_->presentation() == b.ring_->presentation() && a.digits_ == b.digits_;
  }
  std::string to_string() const { return ring_->to_string(digits_); }

 private:
  void check(const RingElem& o) const {
    if (ring_ != o.ring_ && !(ring_->presentation() == o.ring_->presentation()))
      throw std::invalid_argument("operands belong to different presentations");
  }

  RingPtr ring_;
  Digits digits_;
};

inline RingElem normal_form(const BiPoly& f, const RingPtr& ring, RewriteOrder order = RewriteOrder::XFirst) {
  return RingElem(ring, ring->normal_form(f, order));
}
inline RingElem ring_zero(const RingPtr& ring) { return RingElem(ring, ring->zero()); }
inline RingElem ring_one(const RingPtr& ring) { return RingElem(ring, ring->one()); }
inline RingElem ring_x(const RingPtr& ring) { return RingElem(ring, ring->x_class()); }
inline RingElem ring_y(const RingPtr& ring) { return RingElem(ring, ring->y_class()); }

inline FieldElem residue(const RingElem& x) { return x.ring().residue(x.digits()); }
inline bool is_unit(const RingElem& x) { return x.ring().is_unit(x.digits()); }
inline RingElem inverse(const RingElem& x) { return RingElem(x.ring_ptr(), x.ring().inverse(x.digits())); }

/// Every normal form of a ring, in index order.
class ElementRange {
 public:
  class iterator {
   public:
    using value_type = RingElem;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;
    iterator(const RingPtr* ring, u64 i) : ring_(ring), i_(i) {}
    RingElem operator*() const { return RingElem(*ring_, (*ring_)->from_index(i_)); }
    iterator& operator++() { return ++i_, *this; }
    iterator operator++(int) {
      auto t = *this;
      ++i_;
      return t;
    }
    bool operator==(const iterator& o) const { return i_ == o.i_; }

   private:
    const RingPtr* ring_;
    u64 i_;
  };

  ElementRange(RingPtr ring, u64 bound) : ring_(std::move(ring)), n_(ring_->order_checked(bound)) {}
  iterator begin() const { return iterator(&ring_, 0); }
  iterator end() const { return iterator(&ring_, n_); }
  u64 size() const { return n_; }

 private:
  RingPtr ring_;
  u64 n_;
};

inline ElementRange elements(const RingPtr& ring, u64 bound = 1u << 20) { return ElementRange(ring, bound); }

}  // namespace chainring
