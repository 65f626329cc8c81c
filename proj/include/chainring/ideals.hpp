#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chainring/table_ring.hpp"

namespace chainring {

namespace detail {

struct WordsHash {
  std::size_t operator()(const std::vector<u64>& w) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : w) h = (h ^ x) * 0x100000001b3ull + (h >> 29);
    return h;
  }
};

/// Smallest additive subgroup containing the subgroup H and the element x.
inline Ideal adjoin(const TableRing& R, Ideal H, std::size_t x) {
  if (H.contains(x)) return H;
  std::vector<std::size_t> base = H.members(), frontier;
  // H + <x> = union over k of (H + k*x)
  for (std::size_t m = R.add(R.zero(), x); m != R.zero(); m = R.add(m, x))
    for (auto h : base) H.insert(R.add(h, m));
  H.generator.reset();
  return H;
}

}  // namespace detail

/// Additive closure of a set of elements.
inline Ideal additive_closure(const TableRing& R, const std::vector<std::size_t>& gens) {
  Ideal H(R.size());
  H.insert(R.zero());
  for (auto g : gens) H = detail::adjoin(R, std::move(H), g);
  return H;
}

/// R*x, with the closure under addition computed explicitly.
inline Ideal principal_ideal(const TableRing& R, std::size_t x) {
  Ideal I(R.size());
  I.insert(R.zero());
  const auto* row = R.mul_row(x);
  std::vector<std::size_t> seen;
  for (std::size_t r = 0; r < R.size(); ++r)
    if (!I.contains(row[r])) {
      I.insert(row[r]);
      seen.push_back(row[r]);
    }
  for (auto a : seen)
    if (!I.contains(R.add(a, a))) {
      I = additive_closure(R, seen);
      break;
    }
  I.generator = x;
  return I;
}

/// Sum of two ideals.
inline Ideal ideal_sum(const TableRing& R, const Ideal& I, const Ideal& J) {
  if (J.subset_of(I)) return I;
  if (I.subset_of(J)) return J;
  Ideal H = I;
  for (auto x : J.members()) H = detail::adjoin(R, std::move(H), x);
  return H;
}

/// Ideal generated by the products a*b, a in I, b in J.
inline Ideal ideal_product(const TableRing& R, const Ideal& I, const Ideal& J) {
  std::vector<std::size_t> prods;
  Ideal P(R.size());
  auto jm = J.members();
  for (auto a : I.members())
    for (auto b : jm) {
      auto c = R.mul(a, b);
      if (!P.contains(c)) P.insert(c), prods.push_back(c);
    }
  return additive_closure(R, prods);
}

inline Ideal whole_ring(const TableRing& R) {
  Ideal I(R.size());
  for (std::size_t x = 0; x < R.size(); ++x) I.insert(x);
  I.generator = R.one();
  return I;
}

/// Every ideal of R, sorted by (size, members). Principal ideals carry a generator.
inline std::vector<Ideal> all_ideals(const TableRing& R, std::size_t bound = 4096) {
  if (R.size() > bound) throw BoundError("ideal enumeration bound exceeded");
  std::unordered_map<std::vector<u64>, std::size_t, detail::WordsHash> index;
  std::vector<Ideal> out;
  auto add = [&](Ideal I) {
    auto [it, fresh] = index.emplace(I.words(), out.size());
    if (fresh) out.push_back(std::move(I));
    return fresh;
  };
  for (std::size_t x = 0; x < R.size(); ++x) add(principal_ideal(R, x));
  const std::size_t principal_count = out.size();
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < principal_count && j < out.size(); ++j) {
      if (out[j].subset_of(out[i]) || out[i].subset_of(out[j])) continue;
      add(ideal_sum(R, out[i], out[j]));
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t count_nontrivial(const TableRing& R, const std::vector<Ideal>& ideals) {
  std::size_t c = 0;
  for (const auto& I : ideals)
    if (I.size() != 1 && I.size() != R.size()) ++c;
  return c;
}

struct LocalReport {
  bool local = false;
  Ideal maximal;
};

/// R is local iff its non-units form an ideal; that ideal is then the maximal one.
inline LocalReport is_local(const TableRing& R) {
  LocalReport rep;
  const std::size_t n = R.size();
  Ideal nonunits(n);
  std::vector<std::size_t> nu;
  for (std::size_t x = 0; x < n; ++x)
    if (!R.is_unit(static_cast<TableRing::Idx>(x))) nonunits.insert(x), nu.push_back(x);
  rep.maximal = nonunits;
  if (n < 2) return rep;
  for (auto a : nu)
    for (auto b : nu)
      if (!nonunits.contains(R.add(a, b))) return rep;
  rep.local = true;
  return rep;
}

/// Sets I.generator to a single generator if one exists.
inline bool find_generator(const TableRing& R, Ideal& I) {
  if (I.generator && principal_ideal(R, *I.generator) == I) return true;
  for (auto x : I.members())
    if (principal_ideal(R, x) == I) {
      I.generator = x;
      return true;
    }
  I.generator.reset();
  return false;
}

inline bool is_pir(const TableRing& R, std::size_t bound = 4096) {
  for (auto& I : all_ideals(R, bound))
    if (!find_generator(R, I)) return false;
  return true;
}

/// Least k with I^k = 0.
inline unsigned nilpotency_index(const TableRing& R, const Ideal& I) {
  Ideal P = I;
  for (unsigned k = 1;; ++k) {
    if (P.size() == 1) return k;
    Ideal next = ideal_product(R, P, I);
    if (next == P) throw MathError("not nilpotent");
    P = std::move(next);
  }
}

struct Lemma21Stats {
  u64 p = 0;
  unsigned r = 0, s = 0, t = 0;
  bool inequalities_hold() const { return r <= s && s <= t; }
};

namespace detail {
inline std::optional<std::pair<u64, unsigned>> prime_power(u64 n) {
  if (n < 2) return std::nullopt;
  u64 p = 2;
  while (n % p) ++p;
  unsigned e = 0;
  while (n % p == 0) n /= p, ++e;
  if (n != 1) return std::nullopt;
  return std::make_pair(p, e);
}
}  // namespace detail

/// (p, r, s, t) with char R = p^r, |R| = p^t and s the nilpotency index of the maximal ideal.
inline Lemma21Stats lemma21_stats(const TableRing& R) {
  auto loc = is_local(R);
  if (!loc.local) throw MathError("ring is not local");
  auto ch = detail::prime_power(R.characteristic());
  auto ord = detail::prime_power(R.size());
  if (!ch || !ord || ch->first != ord->first) throw MathError("characteristic or order is not a power of one prime");
  Lemma21Stats st;
  st.p = ch->first;
  st.r = ch->second;
  st.t = ord->second;
  st.s = nilpotency_index(R, loc.maximal);
  return st;
}

struct TwoGeneratedReport {
  bool cyclic = false;
  std::size_t nontrivial_ideals = 0;
  u64 p = 0;
  bool bound_holds = true;         // nontrivial_ideals >= p + 2 (vacuous when cyclic)
  std::vector<Ideal> witnesses;    // (x,y), (y), (x + m y) for m = 0..p-1
  bool witnesses_distinct = true;
};

inline TwoGeneratedReport two_generated_check(const TableRing& R, std::size_t x, std::size_t y,
                                              std::size_t bound = 4096) {
  auto loc = is_local(R);
  if (!loc.local) throw MathError("ring is not local");
  if (!loc.maximal.contains(x) || !loc.maximal.contains(y)) throw MathError("x and y must lie in the maximal ideal");
  TwoGeneratedReport rep;
  rep.p = detail::prime_power(R.characteristic())->first;
  Ideal xy = ideal_sum(R, principal_ideal(R, x), principal_ideal(R, y));
  rep.cyclic = find_generator(R, xy);
  if (rep.cyclic) return rep;
  rep.nontrivial_ideals = count_nontrivial(R, all_ideals(R, bound));
  rep.bound_holds = rep.nontrivial_ideals >= rep.p + 2;
  rep.witnesses.push_back(xy);
  rep.witnesses.push_back(principal_ideal(R, y));
  std::size_t my = R.zero();
  for (u64 m = 0; m < rep.p; ++m, my = R.add(my, y)) rep.witnesses.push_back(principal_ideal(R, R.add(x, my)));
  for (std::size_t i = 0; i < rep.witnesses.size(); ++i)
    for (std::size_t j = i + 1; j < rep.witnesses.size(); ++j)
      if (rep.witnesses[i] == rep.witnesses[j]) rep.witnesses_distinct = false;
  return rep;
}

}  // namespace chainring
