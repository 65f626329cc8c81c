#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chainring/certify.hpp"
#include "chainring/iso.hpp"
#include "chainring/structure.hpp"

namespace chainring {

/// One family member: a raw quotient Z/p^r[X,Y]/(gens) together with the
/// presentation recovered from it.
struct CatalogEntry {
  std::string label;                        // e.g. "3.2b"
  std::map<std::string, UniPoly> params;    // g, u, v, w, y, z as applicable
  u64 p = 2;
  unsigned r = 1;
  u64 order = 0;
  u64 characteristic = 0;
  std::size_t nontrivial_ideals = 0;
  unsigned p_valuation = 0;                 // k with p in U(R) alpha^k (sigma when p = 0)
  Presentation presentation;
  bool certified = false;
  std::size_t iso_class = 0;
};

struct CatalogOptions {
  u64 ring_bound = 4096;     // largest member order
  u64 max_per_case = 0;      // 0 = every coefficient choice
  bool dedup = false;        // group members into isomorphism classes
  std::size_t iso_bound = 729;
  // Rewriting checks on the recovered presentation; the order check is always exact.
  CertifyOptions certify{256, 32, 2000, 0x5eed};
};

namespace detail {

inline bool all_zero(const std::vector<u64>& v) {
  return std::all_of(v.begin(), v.end(), [](u64 x) { return x == 0; });
}

struct FamilySpec {
  std::string label;
  unsigned r;
  unsigned y_trunc;  // N with Y^N added to the ideal; 1 means no Y at all
  // X-relation and the remaining generators, built from the parameter map.
  std::function<BiPoly(const std::map<std::string, UniPoly>&)> xrel;
  std::function<std::vector<BiPoly>(const std::map<std::string, UniPoly>&)> gens;
  std::vector<std::string> free_params;     // any digit polynomial of degree < d
  std::vector<std::string> nonzero_params;  // nonzero mod g
};

inline std::vector<FamilySpec> families(u64 p, unsigned c) {
  using P = std::map<std::string, UniPoly>;
  auto Y = [](const P&, std::size_t k, const UniPoly& f) { return BiPoly::from_uni(f, k); };
  auto X = [](const P& m, const std::string& k) { return BiPoly::from_uni(m.at(k)); };
  auto pc = [p](const P& m) { return BiPoly::constant(m.at("g").modulus(), p); };
  auto ymono = [](const P& m, std::size_t k, u64 coef = 1) { return BiPoly::monomial(m.at("g").modulus(), 0, k, coef); };
  std::vector<FamilySpec> out;
  const unsigned N = c + 2;
  // char p: Z_p[X,Y]/(g, Y^(c+1))
  out.push_back({std::to_string(c) + ".1", 1, c + 1, [=](const P& m) { return X(m, "g"); },
                 [](const P&) { return std::vector<BiPoly>{}; }, {}, {}});
  // Z_{p^(c+1)}[X]/(g + p y + p^2 z + p^3 w) (trailing terms per c)
  {
    std::vector<std::string> names = c == 1 ? std::vector<std::string>{"w"}
                                   : c == 2 ? std::vector<std::string>{"z", "w"}
                                            : std::vector<std::string>{"y", "z", "w"};
    out.push_back({std::to_string(c) + ".3", c + 1, 1,
                   [=](const P& m) {
                     BiPoly f = X(m, "g");
                     u64 pk = p;
                     for (const auto& nm : names) f = f + X(m, nm).scaled(pk), pk *= p;
                     return f;
                   },
                   [](const P&) { return std::vector<BiPoly>{}; }, names, {}});
  }
  if (c == 1) {
    out.back().label = "1.2";
    return out;
  }
  if (c == 2) {
    auto rel = [=](const P& m) { return std::vector<BiPoly>{pc(m) - Y(m, 2, m.at("u")), ymono(m, 1, p)}; };
    out.push_back({"2.2a", 2, N, [=](const P& m) { return X(m, "g") + X(m, "w").scaled(p); }, rel, {"w"}, {"u"}});
    out.push_back({"2.2b", 2, N,
                   [=](const P& m) { return X(m, "g") - Y(m, 1, m.at("v")) + X(m, "w").scaled(p); }, rel, {"w"},
                   {"u", "v"}});
    return out;
  }
  // c == 3
  auto rel3 = [=](const P& m) {
    return std::vector<BiPoly>{ymono(m, 3) - X(m, "u").scaled(p), ymono(m, 1, p)};
  };
  auto rel2 = [=](const P& m) {
    return std::vector<BiPoly>{ymono(m, 2) - X(m, "u").scaled(p) - Y(m, 1, m.at("z")).scaled(p)};
  };
  out.push_back({"3.2a", 2, N, [=](const P& m) { return X(m, "g") + X(m, "w").scaled(p); }, rel3, {"w"}, {"u"}});
  out.push_back({"3.2b", 2, N,
                 [=](const P& m) { return X(m, "g") - Y(m, 2, m.at("v")) + X(m, "w").scaled(p); }, rel3, {"w"},
                 {"u", "v"}});
  out.push_back({"3.2c", 2, N,
                 [=](const P& m) { return X(m, "g") - Y(m, 1, m.at("v")) + X(m, "w").scaled(p); }, rel3, {"w"},
                 {"u", "v"}});
  out.push_back({"3.2d", 2, N, [=](const P& m) { return X(m, "g") - Y(m, 1, m.at("v")).scaled(p); }, rel2, {"z"},
                 {"u", "v"}});
  out.push_back({"3.2e", 2, N,
                 [=](const P& m) { return X(m, "g") - X(m, "w").scaled(p) - Y(m, 1, m.at("y")).scaled(p); }, rel2,
                 {"w", "y", "z"}, {"u"}});
  out.push_back({"3.2f", 2, N,
                 [=](const P& m) {
                   return X(m, "g") - Y(m, 1, m.at("v")) - Y(m, 1, m.at("y")).scaled(p) - X(m, "w").scaled(p);
                 },
                 rel2, {"w", "y", "z"}, {"u", "v"}});
  return out;
}

}  // namespace detail

/// Every member of the family list for rings with exactly c nontrivial ideals
/// (c in 1..3) over residue fields F_p[X]/(g), deg g = d. Each member is built
/// by linear algebra, checked to have c nontrivial ideals, recovered into a
/// presentation and certified.
inline std::vector<CatalogEntry> catalog(u64 p, unsigned d, unsigned c, const CatalogOptions& opt = {}) {
  if (!is_prime(p) || d < 1 || c < 1 || c > 3) throw MathError("catalog parameters out of range");
  if (checked_pow(p, d * (c + 1)) > std::min<u64>(opt.ring_bound, TableRing::kMaxOrder))
    throw BoundError("catalog rings exceed the ring bound");
  std::vector<CatalogEntry> out;
  for (const auto& fam : detail::families(p, c)) {
    Modulus mod(p, fam.r);
    std::vector<std::string> names = fam.free_params;
    names.insert(names.end(), fam.nonzero_params.begin(), fam.nonzero_params.end());
    const u64 q = checked_pow(p, d);
    u64 combos = 1;
    for (std::size_t i = 0; i < names.size(); ++i) combos *= q;
    u64 emitted = 0;
    for (const auto& g0 : all_irreducibles(p, d)) {
      for (u64 code = 0; code < combos; ++code) {
        std::map<std::string, UniPoly> params{{"g", g0.with_modulus(mod)}};
        u64 rest = code;
        bool ok = true;
        for (std::size_t i = 0; i < names.size(); ++i) {
          UniPoly w = digit_poly(mod, d, rest % q);
          rest /= q;
          bool must_be_nonzero = i >= fam.free_params.size();
          if (must_be_nonzero && w.is_zero()) ok = false;
          params[names[i]] = w;
        }
        if (!ok) continue;
        if (opt.max_per_case && emitted >= opt.max_per_case) break;
        ++emitted;

        LinearQuotient lq(mod, fam.xrel(params), fam.y_trunc, fam.gens(params));
        if (fam.y_trunc > 1 && !detail::all_zero(lq.reduce_poly(BiPoly::monomial(mod, 0, c + 1))))
          throw std::logic_error(fam.label + ": Y^(c+1) does not vanish");
        TableRing T = to_table(lq, opt.ring_bound);
        CatalogEntry e;
        e.label = fam.label;
        e.params = params;
        e.p = p;
        e.order = T.size();
        e.characteristic = T.characteristic();
        e.r = detail::prime_power(e.characteristic)->second;
        e.nontrivial_ideals = count_nontrivial(T, all_ideals(T, opt.ring_bound));
        LocalData L = local_data(T);
        auto rec = recover_presentation(T);
        e.presentation = rec.presentation;
        e.p_valuation = L.valuation(T.from_integer(p));
        auto ring = QuotientRing::make(e.presentation);
        e.certified = certify(ring, opt.certify).pass();
        out.push_back(std::move(e));
      }
      if (opt.max_per_case && emitted >= opt.max_per_case) break;
    }
  }
  if (opt.dedup) {
    std::vector<TableRing> reps;
    std::vector<std::size_t> rep_entry;
    for (std::size_t i = 0; i < out.size(); ++i) {
      TableRing T = to_table(*QuotientRing::make(out[i].presentation), opt.ring_bound);
      std::size_t cls = reps.size();
      for (std::size_t j = 0; j < reps.size() && cls == reps.size(); ++j)
        if (brute_force_iso(T, reps[j], IsoOptions{opt.iso_bound, false})) cls = j;
      if (cls == reps.size()) reps.push_back(std::move(T));
      out[i].iso_class = cls;
    }
  }
  return out;
}

}  // namespace chainring
