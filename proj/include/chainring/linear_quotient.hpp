#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "chainring/poly.hpp"

namespace chainring {

/// A finite ring  Z/p^r[X,Y] / (G, Y^N, h_1, ..., h_k)  computed by linear
/// algebra over Z/p^r.
///
/// G must be monic in X of degree d with Y-free leading coefficient, so the
/// base ring T = Z/p^r[X,Y]/(G, Y^N) is free over Z/p^r on the monomials
/// X^a Y^b (a < d, b < N). The ideal generated by the h_i is the Z/p^r-span
/// of h_i * X^a Y^b; a Howell basis of that span gives a unique reduced
/// representative for every coset. Nothing here uses rewriting rules, so it
/// serves as an independent model of a quotient ring.
class LinearQuotient {
 public:
  struct PivotRow {
    std::size_t col;
    unsigned valuation;
    std::vector<u64> row;
  };

  LinearQuotient(const Modulus& m, const BiPoly& monic_in_x, unsigned y_trunc, const std::vector<BiPoly>& gens)
      : mod_(m), n_(y_trunc) {
    require_same(m, monic_in_x.modulus());
    if (y_trunc < 1) throw std::invalid_argument("Y truncation must be >= 1");
    int dx = monic_in_x.x_degree();
    if (dx < 1) throw std::invalid_argument("X-relation must have X-degree >= 1");
    d_ = static_cast<unsigned>(dx);
    if (monic_in_x.part(0).coeff(d_) != 1) throw std::invalid_argument("X-relation is not monic in X");
    for (std::size_t b = 1; b < monic_in_x.parts().size(); ++b)
      if (monic_in_x.part(b).coeff(d_) != 0) throw std::invalid_argument("X-relation leading coefficient involves Y");
    dim_ = static_cast<std::size_t>(d_) * n_;
    tail_.assign(dim_, 0);
    for (unsigned b = 0; b < n_; ++b)
      for (unsigned a = 0; a < d_; ++a) tail_[b * d_ + a] = monic_in_x.part(b).coeff(a);

    basis_products_.resize(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        BiPoly prod = BiPoly::monomial(mod_, i % d_ + j % d_, i / d_ + j / d_);
        basis_products_[i * dim_ + j] = reduce_in_base(prod);
      }

    std::vector<std::vector<u64>> pool;
    for (const auto& h : gens) {
      require_same(mod_, h.modulus());
      for (std::size_t k = 0; k < dim_; ++k) {
        auto v = reduce_in_base(h * BiPoly::monomial(mod_, k % d_, k / d_));
        if (!is_zero_vec(v)) pool.push_back(std::move(v));
      }
    }
    build_howell(std::move(pool));

    radix_.assign(dim_, mod_.value);
    for (const auto& pr : pivots_) radix_[pr.col] = checked_pow(mod_.p, pr.valuation);
    log_order_ = 0;
    for (u64 rdx : radix_)
      for (; rdx > 1; rdx /= mod_.p) ++log_order_;
  }

  const Modulus& modulus() const { return mod_; }
  unsigned x_degree() const { return d_; }
  unsigned y_truncation() const { return n_; }
  std::size_t dimension() const { return dim_; }
  const std::vector<PivotRow>& howell_basis() const { return pivots_; }

  /// log_p of the number of cosets.
  unsigned log_p_order() const { return log_order_; }

  /// Number of elements; throws when it does not fit the requested bound.
  u64 size(u64 bound = u64{1} << 40) const {
    u64 n = 1;
    for (auto rdx : radix_) {
      if (n > bound / rdx) throw BoundError("quotient ring larger than bound");
      n *= rdx;
    }
    return n;
  }

  /// Coordinates of f in the base ring (index b*d + a).
  std::vector<u64> reduce_in_base(const BiPoly& f) const {
    require_same(mod_, f.modulus());
    int xd = std::max(f.x_degree(), static_cast<int>(d_) - 1);
    std::size_t width = static_cast<std::size_t>(xd) + 1;
    std::vector<u64> m(static_cast<std::size_t>(n_) * width, 0);
    for (unsigned b = 0; b < n_ && b < f.parts().size(); ++b)
      for (std::size_t a = 0; a < f.parts()[b].coeffs().size(); ++a) m[b * width + a] = f.parts()[b].coeff(a);
    for (std::size_t a = width; a-- > d_;)
      for (unsigned b = 0; b < n_; ++b) {
        u64 c = m[b * width + a];
        if (!c) continue;
        m[b * width + a] = 0;
        // X^d = -(tail), tail = sum tail[b'][a'] X^a' Y^b'
        for (unsigned b2 = 0; b + b2 < n_; ++b2)
          for (unsigned a2 = 0; a2 < d_; ++a2) {
            u64 t = tail_[b2 * d_ + a2];
            if (!t) continue;
            u64& dst = m[(b + b2) * width + (a - d_ + a2)];
            dst = mod_.sub(dst, mod_.mul(c, t));
          }
      }
    std::vector<u64> v(dim_, 0);
    for (unsigned b = 0; b < n_; ++b)
      for (unsigned a = 0; a < d_; ++a) v[b * d_ + a] = m[b * width + a];
    return v;
  }

  /// Unique representative of v + I.
  std::vector<u64> reduce(std::vector<u64> v) const {
    for (const auto& pr : pivots_) {
      u64 c = v[pr.col];
      u64 unit = checked_pow(mod_.p, pr.valuation);
      u64 k = c / unit;
      if (!k) continue;
      for (std::size_t j = pr.col; j < dim_; ++j) v[j] = mod_.sub(v[j], mod_.mul(k, pr.row[j]));
    }
    return v;
  }

  std::vector<u64> reduce_poly(const BiPoly& f) const { return reduce(reduce_in_base(f)); }

  BiPoly to_poly(const std::vector<u64>& v) const {
    std::vector<UniPoly> parts;
    for (unsigned b = 0; b < n_; ++b)
      parts.emplace_back(mod_, std::vector<u64>(v.begin() + b * d_, v.begin() + (b + 1) * d_));
    return BiPoly(mod_, std::move(parts));
  }

  std::vector<u64> add(const std::vector<u64>& x, const std::vector<u64>& y) const {
    std::vector<u64> v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = mod_.add(x[k], y[k]);
    return reduce(std::move(v));
  }
  std::vector<u64> mul(const std::vector<u64>& x, const std::vector<u64>& y) const {
    std::vector<u64> v(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (!y[j]) continue;
        u64 c = mod_.mul(x[i], y[j]);
        const auto& bp = basis_products_[i * dim_ + j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (bp[k]) v[k] = mod_.add(v[k], mod_.mul(c, bp[k]));
      }
    }
    return reduce(std::move(v));
  }

  /// Canonical representative with mixed-radix index i.
  std::vector<u64> element(u64 i) const {
    std::vector<u64> v(dim_, 0);
    for (std::size_t k = 0; k < dim_; ++k) {
      v[k] = i % radix_[k];
      i /= radix_[k];
    }
    return v;
  }
  u64 index(const std::vector<u64>& v) const {
    u64 i = 0;
    for (std::size_t k = dim_; k-- > 0;) i = i * radix_[k] + v[k];
    return i;
  }

 private:
  static bool is_zero_vec(const std::vector<u64>& v) {
    for (auto x : v)
      if (x) return false;
    return true;
  }

  void build_howell(std::vector<std::vector<u64>> pool) {
    for (std::size_t col = 0; col < dim_; ++col) {
      std::size_t best = pool.size();
      unsigned best_val = mod_.r;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        unsigned v = mod_.valuation(pool[i][col]);
        if (v < best_val) {
          best_val = v;
          best = i;
        }
      }
      if (best == pool.size()) continue;
      std::vector<u64> piv = std::move(pool[best]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
      u64 pv = checked_pow(mod_.p, best_val);
      u64 unit_inv = mod_.inverse(piv[col] / pv);
      for (auto& x : piv) x = mod_.mul(x, unit_inv);
      for (auto& row : pool) {
        u64 k = row[col] / pv;
        if (!k) continue;
        for (std::size_t j = col; j < dim_; ++j) row[j] = mod_.sub(row[j], mod_.mul(k, piv[j]));
      }
      if (best_val > 0) {
        std::vector<u64> extra(dim_);
        u64 f = checked_pow(mod_.p, mod_.r - best_val);
        for (std::size_t j = 0; j < dim_; ++j) extra[j] = mod_.mul(piv[j], f);
        pool.push_back(std::move(extra));
      }
      std::erase_if(pool, [](const std::vector<u64>& r) { return is_zero_vec(r); });
      pivots_.push_back(PivotRow{col, best_val, std::move(piv)});
    }
  }

  Modulus mod_;
  unsigned d_ = 1, n_ = 1;
  std::size_t dim_ = 1;
  std::vector<u64> tail_;
  std::vector<std::vector<u64>> basis_products_;
  std::vector<PivotRow> pivots_;
  std::vector<u64> radix_;
  unsigned log_order_ = 0;
};

}  // namespace chainring
