#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chainring/field.hpp"
#include "chainring/linear_quotient.hpp"
#include "chainring/quotient_ring.hpp"

namespace chainring {

/// Finite commutative ring given by explicit addition and multiplication
/// tables over element indices 0..n-1.
class TableRing {
 public:
  using Idx = std::uint16_t;
  static constexpr std::size_t kMaxOrder = 65535;

  TableRing() = default;
  TableRing(std::size_t n, std::vector<Idx> add_table, std::vector<Idx> mul_table, Idx zero, Idx one)
      : n_(n), add_(std::move(add_table)), mul_(std::move(mul_table)), zero_(zero), one_(one) {
    if (n_ < 1 || n_ > kMaxOrder) throw BoundError("table ring order " + std::to_string(n_) + " out of range");
    if (add_.size() != n_ * n_ || mul_.size() != n_ * n_) throw std::invalid_argument("table size mismatch");
    for (auto v : add_)
      if (v >= n_) throw std::invalid_argument("addition table entry out of range");
    for (auto v : mul_)
      if (v >= n_) throw std::invalid_argument("multiplication table entry out of range");
    if (zero_ >= n_ || one_ >= n_) throw std::invalid_argument("zero/one index out of range");
    neg_.assign(n_, 0);
    for (std::size_t x = 0; x < n_; ++x) {
      const Idx* row = add_.data() + x * n_;
      std::size_t y = static_cast<std::size_t>(std::find(row, row + n_, zero_) - row);
      if (y == n_) throw MathError("element " + std::to_string(x) + " has no additive inverse");
      neg_[x] = static_cast<Idx>(y);
    }
  }

  std::size_t size() const { return n_; }
  Idx zero() const { return zero_; }
  Idx one() const { return one_; }
  Idx add(std::size_t x, std::size_t y) const { return add_[x * n_ + y]; }
  Idx mul(std::size_t x, std::size_t y) const { return mul_[x * n_ + y]; }
  Idx neg(std::size_t x) const { return neg_[x]; }
  Idx sub(std::size_t x, std::size_t y) const { return add(x, neg_[y]); }
  const Idx* add_row(std::size_t x) const { return add_.data() + x * n_; }
  const Idx* mul_row(std::size_t x) const { return mul_.data() + x * n_; }
  const std::vector<Idx>& add_table() const { return add_; }
  const std::vector<Idx>& mul_table() const { return mul_; }

  Idx pow(Idx x, u64 e) const {
    Idx out = one_, base = x;
    while (e) {
      if (e & 1) out = mul(out, base);
      base = mul(base, base);
      e >>= 1;
    }
    return out;
  }
  /// k * x for a nonnegative integer k.
  Idx times(u64 k, Idx x) const {
    Idx out = zero_, base = x;
    while (k) {
      if (k & 1) out = add(out, base);
      base = add(base, base);
      k >>= 1;
    }
    return out;
  }
  Idx from_integer(u64 k) const { return times(k, one_); }
  u64 additive_order(Idx x) const {
    u64 k = 1;
    for (Idx y = x; y != zero_; y = add(y, x)) ++k;
    return k;
  }
  u64 characteristic() const { return additive_order(one_); }
  bool is_unit(Idx x) const {
    const Idx* row = mul_row(x);
    return std::find(row, row + n_, one_) != row + n_;
  }
  Idx inverse(Idx x) const {
    const Idx* row = mul_row(x);
    auto it = std::find(row, row + n_, one_);
    if (it == row + n_) throw MathError("element " + std::to_string(x) + " is not a unit");
    return static_cast<Idx>(it - row);
  }

  friend bool operator==(const TableRing& a, const TableRing& b) {
    return a.n_ == b.n_ && a.zero_ == b.zero_ && a.one_ == b.one_ && a.add_ == b.add_ && a.mul_ == b.mul_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Idx> add_, mul_, neg_;
  Idx zero_ = 0, one_ = 0;
};

/// Checks commutative-ring axioms; exhaustive over triples when n <= triple_bound.
inline bool check_ring_axioms(const TableRing& R, std::size_t triple_bound = 64, u64 samples = 200000,
                              std::string* failure = nullptr) {
  const std::size_t n = R.size();
  auto fail = [&](const std::string& why) {
    if (failure) *failure = why;
    return false;
  };
  if (n > 1 && R.one() == R.zero()) return fail("one equals zero");
  for (std::size_t x = 0; x < n; ++x) {
    if (R.add(x, R.zero()) != x || R.mul(x, R.one()) != x) return fail("identity law fails at " + std::to_string(x));
    for (std::size_t y = 0; y < n; ++y)
      if (R.add(x, y) != R.add(y, x) || R.mul(x, y) != R.mul(y, x))
        return fail("commutativity fails at " + std::to_string(x) + "," + std::to_string(y));
  }
  auto triple = [&](std::size_t x, std::size_t y, std::size_t z) {
    return R.add(R.add(x, y), z) == R.add(x, R.add(y, z)) && R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z)) &&
           R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z));
  };
  if (n <= triple_bound) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (!triple(x, y, z)) return fail("associativity/distributivity fails");
  } else {
    std::mt19937_64 rng(12345);
    for (u64 i = 0; i < samples; ++i)
      if (!triple(rng() % n, rng() % n, rng() % n)) return fail("associativity/distributivity fails (sampled)");
  }
  return true;
}

/// Subset of a table ring stored as a bitset over element indices.
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(std::size_t n) : n_(n), bits_((n + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }
  bool contains(std::size_t x) const { return (bits_[x >> 6] >> (x & 63)) & 1; }
  void insert(std::size_t x) { bits_[x >> 6] |= u64{1} << (x & 63); }
  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < n_; ++x)
      if (contains(x)) out.push_back(x);
    return out;
  }
  bool subset_of(const Ideal& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }
  const std::vector<u64>& words() const { return bits_; }

  /// Principal-generator witness, when known.
  std::optional<std::size_t> generator;

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }
  friend bool operator<(const Ideal& a, const Ideal& b) {
    std::size_t sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.members() < b.members();
  }

 private:
  std::size_t n_ = 0;
  std::vector<u64> bits_;
};

// ---------------------------------------------------------------------------
// Builders for known-answer rings.

namespace detail {
template <class AddFn, class MulFn>
TableRing build_table(std::size_t n, AddFn&& add, MulFn&& mul, std::size_t zero, std::size_t one) {
  if (n > TableRing::kMaxOrder) throw BoundError("table ring too large");
  std::vector<TableRing::Idx> at(n * n), mt(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      at[x * n + y] = static_cast<TableRing::Idx>(add(x, y));
      mt[x * n + y] = static_cast<TableRing::Idx>(mul(x, y));
    }
  return TableRing(n, std::move(at), std::move(mt), static_cast<TableRing::Idx>(zero),
                   static_cast<TableRing::Idx>(one));
}
}  // namespace detail

/// Z/p^k with element index equal to its value.
inline TableRing zmod_table(u64 p, unsigned k) {
  Modulus m(p, k);
  return detail::build_table(
      m.value, [&](u64 x, u64 y) { return m.add(x, y); }, [&](u64 x, u64 y) { return m.mul(x, y); }, 0, 1);
}

/// f: A -> B is a bijective ring homomorphism, given that add_gens generate (A, +)
/// and ring_gens together with 1 generate A as a ring. Checks f(x + m) = f(x) + f(m)
/// and f(x g) = f(x) f(g) for every x; both identities then extend to all of A.
inline bool is_isomorphism_on(const TableRing& A, const TableRing& B, const std::vector<std::size_t>& f,
                              const std::vector<std::size_t>& add_gens, const std::vector<std::size_t>& ring_gens) {
  const std::size_t n = A.size();
  if (B.size() != n || f.size() != n || f[A.one()] != B.one()) return false;
  std::vector<char> hit(n, 0);
  for (auto y : f) {
    if (y >= n || hit[y]) return false;
    hit[y] = 1;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (auto m : add_gens)
      if (f[A.add(x, m)] != B.add(f[x], f[m])) return false;
    for (auto g : ring_gens)
      if (f[A.mul(x, g)] != B.mul(f[x], f[g])) return false;
  }
  return true;
}

/// F_q[T]/(T^k) with F_q = F_p[X]/(modulus); index = sum field_index(a_i) q^i.
inline TableRing truncated_poly_table(const FieldRep& F, unsigned k) {
  const u64 q = F.size();
  const u64 n = checked_pow(q, k);
  std::vector<FieldElem> elems;
  for (u64 i = 0; i < q; ++i) elems.push_back(F.from_index(i));
  std::vector<std::vector<u64>> mul_idx(q, std::vector<u64>(q)), add_idx(q, std::vector<u64>(q));
  for (u64 a = 0; a < q; ++a)
    for (u64 b = 0; b < q; ++b) {
      mul_idx[a][b] = F.index(F.mul(elems[a], elems[b]));
      add_idx[a][b] = F.index(F.add(elems[a], elems[b]));
    }
  // k <= log_2(kMaxOrder) < 16 once n is within the table bound
  if (n > TableRing::kMaxOrder) throw BoundError("table ring too large");
  using Coeffs = std::array<u64, 16>;
  auto digits = [&](u64 x) {
    Coeffs c{};
    for (unsigned i = 0; i < k; ++i) c[i] = x % q, x /= q;
    return c;
  };
  auto pack = [&](const Coeffs& c) {
    u64 x = 0;
    for (unsigned i = k; i-- > 0;) x = x * q + c[i];
    return x;
  };
  return detail::build_table(
      n,
      [&](u64 x, u64 y) {
        auto a = digits(x), b = digits(y);
        for (unsigned i = 0; i < k; ++i) a[i] = add_idx[a[i]][b[i]];
        return pack(a);
      },
      [&](u64 x, u64 y) {
        auto a = digits(x), b = digits(y);
        Coeffs c{};
        for (unsigned i = 0; i < k; ++i)
          for (unsigned j = 0; i + j < k; ++j) c[i + j] = add_idx[c[i + j]][mul_idx[a[i]][b[j]]];
        return pack(c);
      },
      0, 1);
}

/// F_p[x,y]/(x,y)^2: index a + b p + c p^2 for a + b x + c y. Local, not a PIR.
inline TableRing fp_xy_square_table(u64 p) {
  Modulus m(p, 1);
  const u64 n = p * p * p;
  auto unpack = [&](u64 i) { return std::array<u64, 3>{i % p, (i / p) % p, i / (p * p)}; };
  auto pack = [&](std::array<u64, 3> c) { return c[0] + c[1] * p + c[2] * p * p; };
  return detail::build_table(
      n,
      [&](u64 x, u64 y) {
        auto a = unpack(x), b = unpack(y);
        return pack({m.add(a[0], b[0]), m.add(a[1], b[1]), m.add(a[2], b[2])});
      },
      [&](u64 x, u64 y) {
        auto a = unpack(x), b = unpack(y);
        return pack({m.mul(a[0], b[0]), m.add(m.mul(a[0], b[1]), m.mul(a[1], b[0])),
                     m.add(m.mul(a[0], b[2]), m.mul(a[2], b[0]))});
      },
      0, 1);
}

/// R1 x R2 with index i1 + n1 * i2.
inline TableRing direct_product(const TableRing& A, const TableRing& B) {
  const std::size_t n1 = A.size(), n = A.size() * B.size();
  return detail::build_table(
      n, [&](std::size_t x, std::size_t y) { return A.add(x % n1, y % n1) + n1 * B.add(x / n1, y / n1); },
      [&](std::size_t x, std::size_t y) { return A.mul(x % n1, y % n1) + n1 * B.mul(x / n1, y / n1); },
      A.zero() + n1 * B.zero(), A.one() + n1 * B.one());
}

/// Table of a linear-algebra quotient; index = the quotient's mixed-radix index.
inline TableRing to_table(const LinearQuotient& lq, u64 bound = 4096) {
  const u64 n = lq.size(bound);
  std::vector<std::vector<u64>> elems;
  for (u64 i = 0; i < n; ++i) elems.push_back(lq.element(i));
  return detail::build_table(
      n, [&](u64 x, u64 y) { return lq.index(lq.add(elems[x], elems[y])); },
      [&](u64 x, u64 y) { return lq.index(lq.mul(elems[x], elems[y])); }, 0,
      lq.index(lq.reduce_poly(BiPoly::constant(lq.modulus(), 1))));
}

/// Tables of a presented ring; index i is the normal form QuotientRing::from_index(i)
/// (so zero is 0 and one is 1). Only K*n products and sums go through the
/// rewriting engine; the remaining entries follow from y = y' + e_k, where e_k
/// is the basis monomial at the lowest nonzero digit of y:
///   x + y = (x + y') + e_k,   x * y = x * y' + x * e_k.
/// Sound once certify() has shown the digit model is the quotient ring.
inline TableRing to_table(const QuotientRing& R, u64 bound = 4096) {
  const u64 n = R.order_checked(std::min<u64>(bound, TableRing::kMaxOrder));
  const std::size_t K = R.digit_count();
  const u64 p = R.p();
  std::vector<u64> weight(K);
  for (std::size_t k = 0; k < K; ++k) weight[k] = k == 0 ? 1 : weight[k - 1] * p;

  std::vector<std::uint8_t> low(n, 0);
  std::vector<TableRing::Idx> prev(n, 0);
  for (u64 y = 1; y < n; ++y) {
    std::size_t k = 0;
    while ((y / weight[k]) % p == 0) ++k;
    low[y] = static_cast<std::uint8_t>(k);
    prev[y] = static_cast<TableRing::Idx>(y - weight[k]);
  }

  // x + e_k is a plain index shift unless digit k overflows; x e_k composes X and Y shifts
  std::vector<TableRing::Idx> plus_e(K * n), times_e(K * n), times_x(n), times_y(n);
  for (u64 x = 0; x < n; ++x) {
    Digits dx = R.from_index(x);
    for (std::size_t k = 0; k < K; ++k) {
      if ((x / weight[k]) % p + 1 < p) {
        plus_e[k * n + x] = static_cast<TableRing::Idx>(x + weight[k]);
      } else {
        Digits e(K, 0);
        e[k] = 1;
        plus_e[k * n + x] = static_cast<TableRing::Idx>(R.index(R.add(dx, e)));
      }
    }
    times_x[x] = static_cast<TableRing::Idx>(R.index(R.mul_monomial(dx, 1, 0)));
    times_y[x] = static_cast<TableRing::Idx>(R.index(R.mul_monomial(dx, 0, 1)));
  }
  for (std::size_t k = 0; k < K; ++k)
    for (u64 x = 0; x < n; ++x)
      times_e[k * n + x] = k == 0              ? static_cast<TableRing::Idx>(x)
                           : k % R.d() != 0    ? times_x[times_e[(k - 1) * n + x]]
                                               : times_y[times_e[(k - R.d()) * n + x]];

  std::vector<TableRing::Idx> at(n * n), mt(n * n);
  for (u64 x = 0; x < n; ++x) {
    TableRing::Idx* arow = at.data() + x * n;
    arow[0] = static_cast<TableRing::Idx>(x);
    for (u64 y = 1; y < n; ++y) arow[y] = plus_e[low[y] * n + arow[prev[y]]];
  }
  // y = hi B + lo has disjoint digits, so x y = x (hi B) + x lo; the inner loop has no carried dependency
  const u64 B = weight[K / 2];
  for (u64 x = 0; x < n; ++x) {
    TableRing::Idx* mrow = mt.data() + x * n;
    mrow[0] = 0;
    for (u64 y = 1; y < B; ++y) mrow[y] = at[mrow[prev[y]] * n + times_e[low[y] * n + x]];
    for (u64 y = B; y < n; y += B) mrow[y] = at[mrow[prev[y]] * n + times_e[low[y] * n + x]];
    for (u64 hi = B; hi < n; hi += B) {
      const TableRing::Idx* hrow = at.data() + std::size_t{mrow[hi]} * n;
      for (u64 lo = 1; lo < B; ++lo) mrow[hi + lo] = hrow[mrow[lo]];
    }
  }
  return TableRing(n, std::move(at), std::move(mt), 0, 1);
}

/// Slow path: every entry straight from the rewriting engine.
inline TableRing to_table_direct(const QuotientRing& R, u64 bound = 4096) {
  const u64 n = R.order_checked(std::min<u64>(bound, TableRing::kMaxOrder));
  std::vector<Digits> elems;
  for (u64 i = 0; i < n; ++i) elems.push_back(R.from_index(i));
  return detail::build_table(
      n, [&](u64 x, u64 y) { return R.index(R.add(elems[x], elems[y])); },
      [&](u64 x, u64 y) { return R.index(R.mul(elems[x], elems[y])); }, 0, 1);
}

}  // namespace chainring
