#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "chainring/ideals.hpp"
#include "chainring/presentation.hpp"

namespace chainring {

/// Maximal ideal, its powers and the residue data of a finite local ring.
struct LocalData {
  Ideal maximal;
  std::vector<Ideal> powers;  // powers[k] = m^k for k = 0..sigma (powers[0] = R)
  unsigned sigma = 1;         // nilpotency index of m
  u64 p = 0;                  // residue characteristic
  unsigned r = 0;             // char R = p^r
  u64 q = 0;                  // |R/m|
  unsigned d = 0;             // q = p^d

  /// Least k with x in m^k \ m^(k+1); sigma for zero.
  unsigned valuation(std::size_t x) const {
    for (unsigned k = 0; k + 1 < powers.size(); ++k)
      if (!powers[k + 1].contains(x)) return k;
    return sigma;
  }
};

inline LocalData local_data(const TableRing& R) {
  auto loc = is_local(R);
  if (!loc.local) throw MathError("ring is not local");
  auto ch = detail::prime_power(R.characteristic());
  if (!ch) throw MathError("characteristic is not a prime power");
  LocalData L;
  L.maximal = loc.maximal;
  L.p = ch->first;
  L.r = ch->second;
  L.q = R.size() / L.maximal.size();
  auto qd = detail::prime_power(L.q);
  if (L.q == 1 || !qd || qd->first != L.p) throw MathError("residue field order is not a power of p");
  L.d = qd->second;
  L.powers.push_back(whole_ring(R));
  L.powers.push_back(L.maximal);
  while (L.powers.back().size() > 1) {
    Ideal next = ideal_product(R, L.powers.back(), L.maximal);
    if (next == L.powers.back()) throw MathError("not nilpotent");
    L.powers.push_back(std::move(next));
  }
  L.sigma = static_cast<unsigned>(L.powers.size() - 1);
  return L;
}

namespace detail {

/// Order of the residue class of a unit x in (R/m)^*.
inline u64 residue_order(const TableRing& R, const LocalData& L, std::size_t x) {
  u64 k = 1;
  for (std::size_t y = x; !L.maximal.contains(R.sub(y, R.one())); y = R.mul(y, x)) ++k;
  return k;
}

/// Least-index unit whose residue generates (R/m)^*.
inline std::size_t residue_generator(const TableRing& R, const LocalData& L) {
  for (std::size_t x = 0; x < R.size(); ++x)
    if (!L.maximal.contains(x) && residue_order(R, L, x) == L.q - 1) return x;
  throw std::logic_error("no residue generator found");
}

/// w(beta) for w with integer coefficients.
inline std::size_t eval_at(const TableRing& R, const UniPoly& w, std::size_t beta) {
  std::size_t acc = R.zero();
  for (std::size_t i = w.coeffs().size(); i-- > 0;)
    acc = R.add(R.mul(acc, beta), R.from_integer(w.coeff(i)));
  return acc;
}

}  // namespace detail

struct CoeffField {
  std::size_t beta = 0;   // generator of A^*
  std::size_t beta1 = 0;  // residue-generator lift the construction started from
  unsigned t = 1;         // least t with q^t >= sigma
  std::size_t x = 0;      // beta1^(q^t - 1) - 1, an element of m
  u64 order = 1;          // q - 1
  std::vector<std::size_t> members;  // {0} and the powers of beta, sorted
  bool binomial_identity = false;    // (1+x)^(q^t-1) = 1 + sum_{k=1}^{sigma-1} (-1)^k x^k on all of m
};

/// Coefficient field of a finite local ring of prime characteristic.
inline CoeffField coefficient_field(const TableRing& R, std::optional<std::size_t> beta1 = std::nullopt) {
  LocalData L = local_data(R);
  if (L.r != 1) throw MathError("characteristic is not prime");
  CoeffField A;
  A.order = L.q - 1;
  A.beta1 = beta1 ? *beta1 : detail::residue_generator(R, L);
  if (L.maximal.contains(A.beta1) || detail::residue_order(R, L, A.beta1) != L.q - 1)
    throw MathError("beta1 does not lift a generator of the residue field");
  u64 qt = L.q;
  while (qt < L.sigma) qt *= L.q, ++A.t;
  A.x = R.sub(R.pow(static_cast<TableRing::Idx>(A.beta1), qt - 1), R.one());
  A.beta = R.mul(A.beta1, R.add(R.one(), A.x));

  if (R.pow(static_cast<TableRing::Idx>(A.beta), A.order) != R.one()) throw std::logic_error("beta^(q-1) != 1");
  Ideal set(R.size());
  set.insert(R.zero());
  std::size_t y = R.one();
  for (u64 i = 0; i < A.order; ++i, y = R.mul(y, A.beta)) set.insert(y);
  A.members = set.members();
  if (A.members.size() != L.q) throw std::logic_error("coefficient field has the wrong size");
  for (auto a : A.members)
    for (auto b : A.members) {
      if (!set.contains(R.sub(a, b))) throw std::logic_error("coefficient field not closed under subtraction");
      if (a != b && L.maximal.contains(R.sub(a, b))) throw std::logic_error("residues of A are not distinct");
    }
  A.binomial_identity = true;
  for (auto m : L.maximal.members()) {
    std::size_t lhs = R.pow(R.add(R.one(), static_cast<TableRing::Idx>(m)), qt - 1);
    std::size_t rhs = R.one(), xk = R.one();
    for (unsigned k = 1; k < L.sigma; ++k) {
      xk = R.mul(xk, m);
      rhs = (k % 2) ? R.sub(rhs, xk) : R.add(rhs, xk);
    }
    if (lhs != rhs) A.binomial_identity = false;
  }
  if (!A.binomial_identity) throw std::logic_error("binomial identity fails");
  return A;
}

/// Least-index element of m \ m^2; it generates m whenever m is principal.
inline std::size_t maximal_generator(const LocalData& L) {
  const Ideal& m2 = L.powers.size() > 2 ? L.powers[2] : L.powers.back();
  for (auto x : L.maximal.members())
    if (!m2.contains(x)) return x;
  throw MathError("maximal ideal is zero");
}

struct CanonicalIso {
  FieldRep field;
  unsigned sigma = 1;
  std::shared_ptr<const TableRing> target;  // F_q[T]/(T^sigma)
  std::vector<std::size_t> image;   // image[i] = element of R for target element i
  std::size_t alpha = 0, beta = 0;  // generator of m, coefficient-field generator
  std::size_t field_root = 0;       // image of the class of X of field
};

namespace detail {

/// Shared F_q[T]/(T^k) tables keyed by field and k; safe to call from several threads.
inline std::shared_ptr<const TableRing> truncated_poly_cached(const FieldRep& F, unsigned k) {
  static std::mutex lock;
  static std::map<std::tuple<u64, std::vector<u64>, unsigned>, std::shared_ptr<const TableRing>> cache;
  auto key = std::make_tuple(F.p(), F.modulus().coeffs(), k);
  {
    std::lock_guard<std::mutex> g(lock);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto T = std::make_shared<const TableRing>(truncated_poly_table(F, k));
  std::lock_guard<std::mutex> g(lock);
  return cache.emplace(key, T).first->second;
}

}  // namespace detail

/// Explicit isomorphism F_q[T]/(T^sigma) -> R, sum a_i T^i -> sum a_i alpha^i, for a
/// finite local PIR of prime characteristic. Verified bijective and a homomorphism.
inline CanonicalIso char_p_canonical_iso(const TableRing& R) {
  LocalData L = local_data(R);
  if (L.r != 1) throw MathError("characteristic is not prime");
  std::size_t alpha = L.sigma > 1 ? maximal_generator(L) : R.zero();
  if (L.sigma > 1 && !(principal_ideal(R, alpha) == L.maximal)) throw MathError("ring is not a PIR");
  CoeffField A = coefficient_field(R);
  FieldRep F(L.p, gen_irreducible(L.p, L.d));
  std::optional<std::size_t> root;
  UniPoly mod = F.modulus();
  for (auto a : A.members)
    if (detail::eval_at(R, mod, a) == R.zero()) {
      root = a;
      break;
    }
  if (!root) throw std::logic_error("field modulus has no root in the coefficient field");

  CanonicalIso out{F, L.sigma, detail::truncated_poly_cached(F, L.sigma), {}, alpha, A.beta, *root};
  const TableRing& target = *out.target;
  const u64 q = L.q, n = target.size();
  if (n != R.size()) throw MathError("ring is not a PIR");
  std::vector<std::size_t> field_img(q);
  for (u64 i = 0; i < q; ++i) field_img[i] = detail::eval_at(R, F.to_poly(F.from_index(i)), *root);
  out.image.assign(n, 0);
  for (u64 i = 0; i < n; ++i) {
    std::size_t acc = R.zero(), ak = R.one();
    for (u64 j = i; j; j /= q, ak = R.mul(ak, alpha)) acc = R.add(acc, R.mul(field_img[j % q], ak));
    out.image[i] = acc;
  }
  // additive basis X^i T^j has index p^(i + d j); T and X generate the target as a ring
  std::vector<std::size_t> basis, ring_gens;
  for (u64 w = 1; w < n; w *= L.p) basis.push_back(w);
  if (L.sigma > 1) ring_gens.push_back(q);
  if (L.d > 1) ring_gens.push_back(L.p);
  if (!is_isomorphism_on(target, R, out.image, basis, ring_gens))
    throw std::logic_error("canonical map is not a ring isomorphism");
  return out;
}

struct UnitPower {
  unsigned k = 0;
  std::size_t unit = 0;
};

/// x = unit * alpha^k with k the valuation of x; nullopt for x = 0.
inline std::optional<UnitPower> unit_power_decompose(const TableRing& R, const LocalData& L, std::size_t x,
                                                     std::size_t alpha) {
  if (!L.maximal.contains(x)) throw MathError("element is not in the maximal ideal");
  if (!(principal_ideal(R, alpha) == L.maximal)) throw MathError("alpha does not generate the maximal ideal");
  if (x == R.zero()) return std::nullopt;
  UnitPower out;
  out.k = L.valuation(x);
  std::size_t ak = R.pow(static_cast<TableRing::Idx>(alpha), out.k);
  for (std::size_t u = 0; u < R.size(); ++u)
    if (!L.maximal.contains(u) && R.mul(u, ak) == x) {
      out.unit = u;
      return out;
    }
  throw std::logic_error("no unit multiple found");
}

inline std::optional<UnitPower> unit_power_decompose(const TableRing& R, std::size_t x, std::size_t alpha) {
  return unit_power_decompose(R, local_data(R), x, alpha);
}

/// x = sum_k w_k(beta) alpha^k, with digit polynomials w_k of degree < d.
using DigitExpansion = std::vector<RelTerm>;

inline DigitExpansion digit_expand(const TableRing& R, const LocalData& L, std::size_t x, std::size_t alpha,
                                   std::size_t beta, const Modulus& coeffs) {
  if (!L.maximal.contains(x)) throw MathError("element is not in the maximal ideal");
  DigitExpansion out;
  std::vector<std::size_t> wvals(L.q);
  for (u64 i = 0; i < L.q; ++i) wvals[i] = detail::eval_at(R, digit_poly(coeffs, L.d, i), beta);
  for (unsigned guard = 0; x != R.zero(); ++guard) {
    if (guard > L.sigma) throw std::logic_error("digit expansion does not terminate");
    unsigned k = L.valuation(x);
    std::size_t ak = R.pow(static_cast<TableRing::Idx>(alpha), k);
    const Ideal& next = L.powers[k + 1];
    bool found = false;
    for (u64 i = 1; i < L.q && !found; ++i) {
      std::size_t rest = R.sub(x, R.mul(wvals[i], ak));
      if (next.contains(rest)) {
        out.push_back(RelTerm{k, digit_poly(coeffs, L.d, i)});
        x = rest;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no digit found");
  }
  return out;
}

/// sum_k w_k(beta) alpha^k.
inline std::size_t digit_eval(const TableRing& R, const DigitExpansion& e, std::size_t alpha, std::size_t beta) {
  std::size_t acc = R.zero();
  for (const auto& t : e)
    acc = R.add(acc, R.mul(detail::eval_at(R, t.poly, beta), R.pow(static_cast<TableRing::Idx>(alpha), t.exp)));
  return acc;
}

struct Recovery {
  Presentation presentation;
  std::size_t alpha = 0, beta = 0;
};

/// Presentation of a finite chain ring: alpha = least element of m \ m^2,
/// beta = least unit whose residue generates (R/m)^*, g = monic digit lift of
/// the minimal polynomial of beta mod m, relations from the digit expansions
/// of p and g(beta).
inline Recovery recover_presentation(const TableRing& R, const LocalData& L) {
  if (L.sigma < 2) throw MathError("ring is a field; no presentation with s >= 1");
  Recovery rec;
  rec.alpha = maximal_generator(L);
  if (!(principal_ideal(R, rec.alpha) == L.maximal)) throw MathError("maximal ideal is not principal");
  rec.beta = detail::residue_generator(R, L);
  const Modulus mod(L.p, L.r);

  std::optional<UniPoly> g;
  for (u64 i = 0; i < checked_pow(L.p, L.d) && !g; ++i) {
    UniPoly h = monic_from_index(L.p, L.d, i).with_modulus(mod);
    if (L.maximal.contains(detail::eval_at(R, h, rec.beta))) g = h;
  }
  if (!g) throw std::logic_error("minimal polynomial of the residue generator not found");

  Presentation& P = rec.presentation;
  P.p = L.p;
  P.r = L.r;
  P.s = L.sigma - 1;
  P.g = *g;
  P.p_rel = digit_expand(R, L, R.from_integer(L.p), rec.alpha, rec.beta, mod);
  P.g_rel = digit_expand(R, L, detail::eval_at(R, *g, rec.beta), rec.alpha, rec.beta, mod);
  auto rep = validate(P);
  if (!rep.ok()) {
    std::string msg = "recovered presentation is invalid:";
    for (const auto& v : rep.violations) msg += " " + v + ";";
    throw std::logic_error(msg);
  }
  return rec;
}

inline Recovery recover_presentation(const TableRing& R) { return recover_presentation(R, local_data(R)); }

/// Lemma21Stats from precomputed local data.
inline Lemma21Stats lemma21_stats(const TableRing& R, const LocalData& L) {
  auto ord = detail::prime_power(R.size());
  if (!ord || ord->first != L.p) throw MathError("order is not a power of the residue characteristic");
  return Lemma21Stats{L.p, L.r, L.sigma, ord->second};
}

}  // namespace chainring
