#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "chainring/field.hpp"
#include "chainring/quotient_ring.hpp"
#include "chainring/table_ring.hpp"

namespace chainring {

// ---------------------------------------------------------------------------
// Brute-force isomorphism oracle.

namespace detail {

/// Invariant of an element preserved by every ring isomorphism.
struct ElemSig {
  u64 add_order = 0;
  u64 preperiod = 0;  // powers x, x^2, ... : x^(preperiod+1) first repeats
  u64 period = 0;
  auto operator<=>(const ElemSig&) const = default;
};

inline std::vector<ElemSig> signatures(const TableRing& R) {
  const std::size_t n = R.size();
  std::vector<ElemSig> out(n);
  std::vector<u64> stamp(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    out[x].add_order = R.additive_order(static_cast<TableRing::Idx>(x));
    // stamp[y] = exponent k at which y = x^k was first seen, in this round
    std::vector<std::size_t> seen;
    u64 k = 1;
    std::size_t y = x;
    while (!stamp[y]) {
      stamp[y] = k++;
      seen.push_back(y);
      y = R.mul(y, x);
    }
    out[x].preperiod = stamp[y] - 1;
    out[x].period = k - stamp[y];
    for (auto z : seen) stamp[z] = 0;
  }
  return out;
}

}  // namespace detail

struct IsoOptions {
  std::size_t bound = 729;          // largest order searched
  bool full_verification = true;    // re-check the found map on all n^2 pairs
};

/// An isomorphism A -> B as an image table, or nullopt when none exists.
/// Generators of A are picked greedily (rarest signature class in B first) until
/// the subring they generate is A; every element gets a construction path
/// (monomial in the generators, or earlier element plus monomial). Backtracking
/// assigns generator images among signature-compatible elements of B, pruning
/// on inconsistent monomial images. A candidate is accepted once it is a
/// bijection with f(x + m) = f(x) + f(m) for every monomial m and
/// f(x g) = f(x) f(g) for every generator g; those identities propagate to all
/// of A because A is additively spanned by the monomials and generated as a
/// ring by the generators.
inline std::optional<std::vector<std::size_t>> brute_force_iso(const TableRing& A, const TableRing& B,
                                                               const IsoOptions& opt = {}) {
  const std::size_t n = A.size();
  if (n != B.size()) return std::nullopt;
  if (n > opt.bound) throw BoundError("isomorphism oracle bound " + std::to_string(opt.bound) + " exceeded");
  if (A.characteristic() != B.characteristic()) return std::nullopt;
  auto sa = detail::signatures(A), sb = detail::signatures(B);
  {
    auto ca = sa, cb = sb;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }
  std::map<detail::ElemSig, std::vector<std::size_t>> classes;
  for (std::size_t y = 0; y < n; ++y) classes[sb[y]].push_back(y);

  // Monomials in the generators: mono[i] = mono[parent] * gens[gen]; mono 0 = 1.
  struct Mono {
    std::size_t elem, parent, gen;
  };
  std::vector<std::size_t> gens;
  std::vector<Mono> monos;
  std::vector<std::size_t> span_parent, span_mono;  // elem = span_parent + monos[span_mono]
  std::vector<std::size_t> span_order;              // BFS order of the additive span

  auto build_plan = [&] {
    monos.assign(1, Mono{A.one(), 0, 0});
    std::vector<char> is_mono(n, 0);
    is_mono[A.one()] = 1;
    for (std::size_t i = 0; i < monos.size(); ++i)
      for (std::size_t g = 0; g < gens.size(); ++g) {
        std::size_t e = A.mul(monos[i].elem, gens[g]);
        if (!is_mono[e]) is_mono[e] = 1, monos.push_back(Mono{e, i, g});
      }
    span_parent.assign(n, n);
    span_mono.assign(n, 0);
    span_order.assign(1, A.zero());
    span_parent[A.zero()] = A.zero();
    for (std::size_t i = 0; i < span_order.size(); ++i)
      for (std::size_t m = 0; m < monos.size(); ++m) {
        std::size_t e = A.add(span_order[i], monos[m].elem);
        if (span_parent[e] == n) span_parent[e] = span_order[i], span_mono[e] = m, span_order.push_back(e);
      }
  };
  build_plan();
  while (span_order.size() < n) {
    std::size_t best = n, best_count = n + 1;
    for (std::size_t x = 0; x < n; ++x)
      if (span_parent[x] == n) {
        std::size_t c = classes[sa[x]].size();
        if (c < best_count) best = x, best_count = c;
      }
    gens.push_back(best);
    build_plan();
  }

  // Images of generators, monomials and elements during the search.
  std::vector<std::size_t> gimg(gens.size());
  std::vector<std::size_t> mimg(monos.size());
  std::vector<std::size_t> img(n);
  std::vector<std::size_t> inv(n);

  auto monos_consistent = [&](std::size_t level) {
    // images of monomials built from gens[0..level]
    std::vector<char> known(n, 0);
    std::vector<std::size_t> at(n, 0);
    for (std::size_t i = 0; i < monos.size(); ++i) {
      bool usable = true;
      for (std::size_t j = i; j != 0; j = monos[j].parent)
        if (monos[j].gen > level) usable = false;
      if (!usable) continue;
      mimg[i] = i == 0 ? B.one() : B.mul(mimg[monos[i].parent], gimg[monos[i].gen]);
      if (sb[mimg[i]] != sa[monos[i].elem]) return false;
    }
    // products of usable monomials with usable generators must agree
    for (std::size_t i = 0; i < monos.size(); ++i) {
      bool usable = true;
      for (std::size_t j = i; j != 0; j = monos[j].parent)
        if (monos[j].gen > level) usable = false;
      if (!usable) continue;
      if (known[monos[i].elem] && at[monos[i].elem] != mimg[i]) return false;
      known[monos[i].elem] = 1, at[monos[i].elem] = mimg[i];
    }
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (!known[monos[i].elem]) continue;
      for (std::size_t g = 0; g <= level; ++g) {
        std::size_t e = A.mul(monos[i].elem, gens[g]);
        if (known[e] && at[e] != B.mul(at[monos[i].elem], gimg[g])) return false;
      }
    }
    return true;
  };

  auto full_check = [&] {
    std::fill(inv.begin(), inv.end(), n);
    img[A.zero()] = B.zero();
    for (std::size_t i = 1; i < span_order.size(); ++i) {
      std::size_t e = span_order[i];
      img[e] = B.add(img[span_parent[e]], mimg[span_mono[e]]);
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (inv[img[x]] != n) return false;
      inv[img[x]] = x;
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t m = 0; m < monos.size(); ++m)
        if (img[A.add(x, monos[m].elem)] != B.add(img[x], mimg[m])) return false;
      for (std::size_t g = 0; g < gens.size(); ++g)
        if (img[A.mul(x, gens[g])] != B.mul(img[x], gimg[g])) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t level) -> bool {
    if (level == gens.size()) return full_check();
    for (std::size_t cand : classes[sa[gens[level]]]) {
      gimg[level] = cand;
      if (monos_consistent(level) && search(level + 1)) return true;
    }
    return false;
  };
  if (gens.empty()) {
    mimg[0] = B.one();
    if (!full_check()) return std::nullopt;
  } else if (!search(0)) {
    return std::nullopt;
  }

  if (opt.full_verification)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (img[A.add(x, y)] != B.add(img[x], img[y]) || img[A.mul(x, y)] != B.mul(img[x], img[y]))
          throw std::logic_error("isomorphism oracle accepted a non-homomorphism");
  return img;
}

/// True iff f is a bijective ring homomorphism A -> B (checked on all pairs).
inline bool is_isomorphism(const TableRing& A, const TableRing& B, const std::vector<std::size_t>& f) {
  const std::size_t n = A.size();
  if (B.size() != n || f.size() != n || f[A.one()] != B.one()) return false;
  std::vector<char> hit(n, 0);
  for (auto y : f) {
    if (y >= n || hit[y]) return false;
    hit[y] = 1;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (f[A.add(x, y)] != B.add(f[x], f[y]) || f[A.mul(x, y)] != B.mul(f[x], f[y])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Rings Z/p^2[X,Y]/(g_i [- u_{2+i} Y], Y^2 - p u_i, pY) and their isomorphism criteria.

struct Prop44Instance {
  u64 p = 2;
  UniPoly g1, g2;  // over Z/p^2, digit coefficients
  UniPoly u1, u2;  // degree < deg g_i, nonzero mod (p, g_i)
};

struct Prop45Instance {
  u64 p = 2;
  UniPoly g1, g2;
  UniPoly u1, u2, u3, u4;  // relations g_1 - u_3 Y and g_2 - u_4 Y
};

inline FieldRep residue_field_of(u64 p, const UniPoly& g) { return FieldRep(p, g.mod_p()); }

/// Z/p^2[X,Y]/(g - c Y, Y^2 - p u, pY) in presentation form: p = w Y^2 with
/// w the digit lift of u^-1 in F_p[X]/(g); c = 0 drops the Y term.
inline Presentation quadratic_presentation(u64 p, const UniPoly& g, const UniPoly& u,
                                           const std::optional<UniPoly>& c = std::nullopt) {
  Modulus m(p, 2);
  FieldRep K = residue_field_of(p, g);
  FieldElem ub = K.from_poly(u.mod_p());
  if (K.is_zero(ub)) throw MathError("u lies in (p, g)");
  Presentation P;
  P.p = p;
  P.r = 2;
  P.s = 2;
  P.g = g.with_modulus(m);
  P.p_rel.push_back(RelTerm{2, K.to_poly(K.inverse(ub)).with_modulus(m)});
  if (c) {
    FieldElem cb = K.from_poly(c->mod_p());
    if (K.is_zero(cb)) throw MathError("Y-coefficient of the g-relation lies in (p, g)");
    P.g_rel.push_back(RelTerm{1, c->with_modulus(m)});
  }
  return P;
}

inline void check_instance(u64 p, const UniPoly& g, std::initializer_list<const UniPoly*> us) {
  FieldRep K = residue_field_of(p, g);  // throws if g is reducible mod p
  for (auto* u : us) {
    if (u->degree() >= g.degree()) throw MathError("parameter degree must be below deg g");
    if (K.is_zero(K.from_poly(u->mod_p()))) throw MathError("parameter lies in (p, g)");
  }
}

struct SquareWitness {
  std::size_t tau = 0;   // index into field_isos(K1, K2)
  FieldElem tau_x;       // image of the class of X
  FieldElem v2;          // u2 = v2^2 tau(u1) in K2
};

/// Searches tau in field_isos order for u2 * tau(u1)^-1 a square in K2.
inline std::optional<SquareWitness> square_criterion(u64 p, const UniPoly& g1, const UniPoly& g2, const UniPoly& u1,
                                                     const UniPoly& u2) {
  FieldRep K1 = residue_field_of(p, g1), K2 = residue_field_of(p, g2);
  auto isos = field_isos(K1, K2);
  FieldElem u2b = K2.from_poly(u2.mod_p());
  for (std::size_t i = 0; i < isos.size(); ++i) {
    FieldElem t = isos[i].apply(K1.from_poly(u1.mod_p()));
    if (auto v = K2.sqrt(K2.mul(u2b, K2.inverse(t)))) return SquareWitness{i, isos[i].image_of_x(), *v};
  }
  return std::nullopt;
}

struct Prop44Verdict {
  bool necessary = false;
  std::optional<SquareWitness> witness;
};

inline Prop44Verdict prop44_test(const Prop44Instance& in) {
  check_instance(in.p, in.g1, {&in.u1});
  check_instance(in.p, in.g2, {&in.u2});
  Prop44Verdict v;
  v.witness = square_criterion(in.p, in.g1, in.g2, in.u1, in.u2);
  v.necessary = v.witness.has_value();
  return v;
}

struct Prop44Map {
  UniPoly w1;                     // u1 = w1^2 u2 in K
  UniPoly w2;                     // u2 = w2^2 u1 in K
  std::vector<std::size_t> map;   // table of R1 -> R2 on normal-form indices
};

/// X -> X, Y -> w1(X) Y from R1 to R2 (same g), verified on the full tables.
inline Prop44Map prop44_construct(u64 p, const UniPoly& g, const UniPoly& u1, const UniPoly& u2) {
  check_instance(p, g, {&u1, &u2});
  FieldRep K = residue_field_of(p, g);
  FieldElem a = K.from_poly(u1.mod_p()), b = K.from_poly(u2.mod_p());
  auto w1 = K.sqrt(K.mul(a, K.inverse(b)));
  auto w2 = K.sqrt(K.mul(b, K.inverse(a)));
  if (!w1 || !w2) throw MathError("square hypothesis fails");
  Modulus m(p, 2);
  Prop44Map out{K.to_poly(*w1).with_modulus(m), K.to_poly(*w2).with_modulus(m), {}};
  auto R1 = QuotientRing::make(quadratic_presentation(p, g, u1));
  auto R2 = QuotientRing::make(quadratic_presentation(p, g, u2));
  const u64 n = R1->order_checked(TableRing::kMaxOrder);
  Digits wy = R2->mul(R2->from_uni(out.w1), R2->y_class());
  std::vector<Digits> wy_pow{R2->one()};
  for (unsigned b2 = 1; b2 <= R1->s(); ++b2) wy_pow.push_back(R2->mul(wy_pow.back(), wy));
  out.map.resize(n);
  for (u64 i = 0; i < n; ++i) {
    Digits x = R1->from_index(i), acc = R2->zero();
    for (unsigned bb = 0; bb <= R1->s(); ++bb)
      for (unsigned aa = 0; aa < R1->d(); ++aa)
        if (u64 c = x[bb * R1->d() + aa])
          acc = R2->add(acc, R2->scalar(c, R2->mul_monomial(wy_pow[bb], aa, 0)));
    out.map[i] = R2->index(acc);
  }
  if (!is_isomorphism(to_table(*R1), to_table(*R2), out.map))
    throw std::logic_error("constructed map is not an isomorphism");
  return out;
}

struct Prop45Verdict {
  bool necessary = false;
  std::optional<bool> sufficient;  // only decided when g1 = g2
  std::optional<SquareWitness> witness;
  std::optional<UniPoly> v1, v2;   // sufficiency witnesses mod (p, g^2)
};

namespace detail {
/// Least v (digit polynomial of degree < 2 deg g) with a = v^e b and c = v d mod (p, g^2).
inline std::optional<UniPoly> congruence_witness(u64 p, const UniPoly& g, unsigned e, const UniPoly& a,
                                                 const UniPoly& b, const UniPoly& c, const UniPoly& dd) {
  Modulus fp(p, 1);
  UniPoly gbar = g.mod_p(), g2 = gbar * gbar;
  const unsigned deg = static_cast<unsigned>(g2.degree());
  auto red = [&](const UniPoly& f) { return poly_rem_monic(f.with_modulus(fp), g2); };
  UniPoly ar = red(a), cr = red(c), br = red(b), dr = red(dd);
  for (u64 i = 0; i < checked_pow(p, deg); ++i) {
    UniPoly v = digit_poly(fp, deg, i);
    UniPoly ve = e == 2 ? red(v * v) : v;
    if (red(ve * br) == ar && red(v * dr) == cr) return v;
  }
  return std::nullopt;
}
}  // namespace detail

/// The necessary square condition, plus (for g1 = g2) the four congruences mod (p, g^2):
///   u2 = v2^2 u1, u4 = v2 u3, u1 = v1 u2, u3 = v1 u4.
inline Prop45Verdict prop45_test(const Prop45Instance& in) {
  check_instance(in.p, in.g1, {&in.u1, &in.u3});
  check_instance(in.p, in.g2, {&in.u2, &in.u4});
  Prop45Verdict v;
  v.witness = square_criterion(in.p, in.g1, in.g2, in.u1, in.u2);
  v.necessary = v.witness.has_value();
  if (in.g1.mod_p() == in.g2.mod_p()) {
    v.v2 = detail::congruence_witness(in.p, in.g2, 2, in.u2, in.u1, in.u4, in.u3);
    v.v1 = detail::congruence_witness(in.p, in.g1, 1, in.u1, in.u2, in.u3, in.u4);
    v.sufficient = v.v1 && v.v2;
  }
  return v;
}

}  // namespace chainring
