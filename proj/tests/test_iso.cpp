#include <catch2/catch_amalgamated.hpp>

#include "chainring/catalog.hpp"
#include "chainring/iso.hpp"
#include "chainring/structure.hpp"
#include "chainring/table_ring.hpp"

using namespace chainring;

namespace {

UniPoly poly(u64 p, unsigned r, std::vector<u64> c) { return UniPoly(Modulus(p, r), std::move(c)); }
TableRing table(const Presentation& P) { return to_table(*QuotientRing::make(P)); }
TableRing quad(u64 p, const UniPoly& g, const UniPoly& u, const std::optional<UniPoly>& c = std::nullopt) {
  return table(quadratic_presentation(p, g, u, c));
}

// Units of Z/p^2 as constant polynomials.
std::vector<UniPoly> unit_constants(u64 p) {
  std::vector<UniPoly> out;
  for (u64 a = 1; a < p * p; ++a)
    if (a % p) out.push_back(poly(p, 2, {a}));
  return out;
}

// Nonzero digit polynomials of degree < deg g over Z/p^2.
std::vector<UniPoly> digit_params(u64 p, unsigned d) {
  std::vector<UniPoly> out;
  for (u64 i = 1; i < checked_pow(p, d); ++i) out.push_back(digit_poly(Modulus(p, 2), d, i));
  return out;
}

}  // namespace

TEST_CASE("brute-force isomorphism: examples", "[iso][oracle]") {
  TableRing Z4 = zmod_table(2, 2);
  TableRing F2Y = table(Presentation{2, 1, 1, poly(2, 1, {0, 1}), {}, {}});
  CHECK_FALSE(brute_force_iso(Z4, F2Y).has_value());
  auto self = brute_force_iso(Z4, Z4);
  REQUIRE(self);
  CHECK(is_isomorphism(Z4, Z4, *self));

  TableRing A = quad(3, poly(3, 2, {0, 1}), poly(3, 2, {1}));
  TableRing B = quad(3, poly(3, 2, {0, 1}), poly(3, 2, {2}));
  CHECK(A.size() == 27);
  // Y^2 = 3 in A and Y^2 = 6 in B
  CHECK_FALSE(brute_force_iso(A, B).has_value());
}

TEST_CASE("brute-force isomorphism is complete on small permuted copies", "[iso][oracle]") {
  // relabel a table by a fixed permutation; the oracle must find an isomorphism
  TableRing R = quad(2, poly(2, 2, {1, 1, 1}), poly(2, 2, {1}));
  const std::size_t n = R.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = (i * 5 + 3) % n;
  std::vector<TableRing::Idx> at(n * n), mt(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      at[perm[x] * n + perm[y]] = static_cast<TableRing::Idx>(perm[R.add(x, y)]);
      mt[perm[x] * n + perm[y]] = static_cast<TableRing::Idx>(perm[R.mul(x, y)]);
    }
  TableRing S(n, at, mt, static_cast<TableRing::Idx>(perm[R.zero()]), static_cast<TableRing::Idx>(perm[R.one()]));
  auto f = brute_force_iso(R, S);
  REQUIRE(f);
  CHECK(is_isomorphism(R, S, *f));
  auto g = brute_force_iso(S, R);
  REQUIRE(g);
  CHECK(is_isomorphism(S, R, *g));
}

TEST_CASE("brute-force isomorphism enforces its bound", "[iso][oracle]") {
  TableRing Z = zmod_table(2, 10);
  CHECK_THROWS_AS(brute_force_iso(Z, Z, IsoOptions{512}), BoundError);
}

TEST_CASE("square criterion: examples", "[iso][criterion]") {
  const UniPoly X = poly(3, 2, {0, 1});
  CHECK_FALSE(prop44_test({3, X, X, poly(3, 2, {1}), poly(3, 2, {2})}).necessary);
  auto v = prop44_test({3, X, X, poly(3, 2, {1}), poly(3, 2, {4})});
  CHECK(v.necessary);
  REQUIRE(v.witness);

  const UniPoly g = poly(2, 2, {1, 1, 1});
  for (const auto& u : digit_params(2, 2)) {
    auto w = prop44_test({2, g, g, u, u});
    REQUIRE(w.witness);
    CHECK(w.witness->tau == 0);
  }
}

TEST_CASE("square criterion rejects invalid instances", "[iso][criterion]") {
  const UniPoly X = poly(3, 2, {0, 1});
  CHECK_THROWS_AS(prop44_test({3, X, X, poly(3, 2, {3}), poly(3, 2, {1})}), MathError);
  CHECK_THROWS_AS(prop44_test({2, poly(2, 2, {1, 0, 1}), X, poly(2, 2, {1}), poly(2, 2, {1})}), MathError);
}

TEST_CASE("square criterion is necessary for isomorphism", "[iso][criterion]") {
  struct Case {
    u64 p;
    UniPoly g;
    std::vector<UniPoly> us;
  };
  std::vector<Case> cases{{3, poly(3, 2, {0, 1}), unit_constants(3)},
                          {2, poly(2, 2, {0, 1}), unit_constants(2)},
                          {2, poly(2, 2, {1, 1, 1}), digit_params(2, 2)}};
  for (const auto& c : cases) {
    std::vector<TableRing> tables;
    for (const auto& u : c.us) tables.push_back(quad(c.p, c.g, u));
    for (std::size_t i = 0; i < c.us.size(); ++i)
      for (std::size_t j = 0; j < c.us.size(); ++j) {
        bool crit = prop44_test({c.p, c.g, c.g, c.us[i], c.us[j]}).necessary;
        bool iso = brute_force_iso(tables[i], tables[j]).has_value();
        INFO("p=" << c.p << " g=" << c.g.to_string() << " u1=" << c.us[i].to_string() << " u2=" << c.us[j].to_string());
        if (iso) CHECK(crit);
        CHECK(iso == brute_force_iso(tables[j], tables[i]).has_value());
      }
  }
}

TEST_CASE("residue degree mismatch: criterion and oracle both say no", "[iso][criterion]") {
  const UniPoly X = poly(2, 2, {0, 1}), g = poly(2, 2, {1, 1, 1});
  CHECK_FALSE(prop44_test({2, X, g, poly(2, 2, {1}), poly(2, 2, {1})}).necessary);
  CHECK_FALSE(brute_force_iso(quad(2, X, poly(2, 2, {1})), quad(2, g, poly(2, 2, {1}))).has_value());
}

TEST_CASE("explicit isomorphism construction: examples", "[iso][construct]") {
  {
    const UniPoly X = poly(3, 2, {0, 1});
    auto m = prop44_construct(3, X, poly(3, 2, {1}), poly(3, 2, {1}));
    CHECK(m.w1 == poly(3, 2, {1}));
    std::vector<std::size_t> id(m.map.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    CHECK(m.map == id);
  }
  {
    const UniPoly X = poly(3, 2, {0, 1});
    auto m = prop44_construct(3, X, poly(3, 2, {1}), poly(3, 2, {4}));
    TableRing A = quad(3, X, poly(3, 2, {1})), B = quad(3, X, poly(3, 2, {4}));
    CHECK(m.map.size() == 27);
    CHECK(is_isomorphism(A, B, m.map));
  }
  {
    // u2 = X (X + 1)^2 = X + 1 mod X^2 + X + 1
    const UniPoly g = poly(2, 2, {1, 1, 1});
    auto m = prop44_construct(2, g, poly(2, 2, {0, 1}), poly(2, 2, {1, 1}));
    TableRing A = quad(2, g, poly(2, 2, {0, 1})), B = quad(2, g, poly(2, 2, {1, 1}));
    CHECK(is_isomorphism(A, B, m.map));
    CHECK(brute_force_iso(A, B).has_value());
  }
  CHECK_THROWS_AS(prop44_construct(3, poly(3, 2, {0, 1}), poly(3, 2, {1}), poly(3, 2, {2})), MathError);
}

TEST_CASE("explicit construction agrees with the oracle whenever its hypothesis holds", "[iso][construct]") {
  for (auto [p, g] : {std::pair<u64, UniPoly>{3, poly(3, 2, {0, 1})}, {2, poly(2, 2, {1, 1, 1})},
                      {3, poly(3, 2, {1, 0, 1})}}) {
    auto us = digit_params(p, static_cast<unsigned>(g.degree()));
    if (p == 3 && g.degree() == 1) us = unit_constants(3);
    for (const auto& u1 : us)
      for (const auto& u2 : us) {
        if (!prop44_test({p, g, g, u1, u2}).necessary) continue;
        auto m = prop44_construct(p, g, u1, u2);
        CHECK(is_isomorphism(quad(p, g, u1), quad(p, g, u2), m.map));
      }
  }
}

TEST_CASE("congruence criterion: examples", "[iso][criterion]") {
  const UniPoly X = poly(3, 2, {0, 1}), one = poly(3, 2, {1}), two = poly(3, 2, {2});
  auto same = prop45_test({3, X, X, one, one, two, two});
  CHECK(same.necessary);
  REQUIRE(same.sufficient);
  CHECK(*same.sufficient);
  REQUIRE(same.v1);
  CHECK(*same.v1 == poly(3, 1, {1}));
  for (const auto& u3 : {one, two})
    for (const auto& u4 : {one, two}) CHECK_FALSE(prop45_test({3, X, X, one, two, u3, u4}).necessary);
  auto diff = prop45_test({2, X, poly(2, 2, {1, 1, 1}), poly(2, 2, {1}), poly(2, 2, {1}), poly(2, 2, {1}),
                           poly(2, 2, {1})});
  CHECK_FALSE(diff.necessary);
  CHECK_FALSE(diff.sufficient.has_value());
}

TEST_CASE("congruence criterion verdicts are consistent with the oracle", "[iso][criterion]") {
  for (u64 p : {2, 3}) {
    const UniPoly X = poly(p, 2, {0, 1});
    auto us = unit_constants(p), cs = digit_params(p, 1);
    std::vector<std::vector<TableRing>> tables(us.size());
    for (std::size_t i = 0; i < us.size(); ++i)
      for (const auto& c : cs) tables[i].push_back(quad(p, X, us[i], c));
    for (std::size_t a = 0; a < us.size(); ++a)
      for (std::size_t b = 0; b < us.size(); ++b)
        for (std::size_t c = 0; c < cs.size(); ++c)
          for (std::size_t e = 0; e < cs.size(); ++e) {
            auto v = prop45_test({p, X, X, us[a], us[b], cs[c], cs[e]});
            bool iso = brute_force_iso(tables[a][c], tables[b][e]).has_value();
            INFO("p=" << p << " u=" << us[a].to_string() << "," << us[b].to_string() << "," << cs[c].to_string()
                      << "," << cs[e].to_string());
            if (iso) CHECK(v.necessary);
            REQUIRE(v.sufficient);
            if (*v.sufficient) CHECK(iso);
          }
  }
}

TEST_CASE("catalog membership: examples", "[iso][catalog]") {
  auto contains = [](const std::vector<CatalogEntry>& cat, const TableRing& R) {
    for (const auto& e : cat)
      if (e.order == R.size() && brute_force_iso(table(e.presentation), R)) return true;
    return false;
  };
  auto c1 = catalog(2, 1, 1);
  CHECK(contains(c1, table(Presentation{2, 1, 1, poly(2, 1, {0, 1}), {}, {}})));
  CHECK(contains(c1, zmod_table(2, 2)));
  auto c2 = catalog(2, 1, 2);
  CHECK(contains(c2, zmod_table(2, 3)));
  CHECK(contains(c2, table(Presentation{2, 2, 2, poly(2, 2, {0, 1}), {{2, poly(2, 2, {1})}}, {}})));
}

TEST_CASE("catalog members have the requested number of ideals", "[iso][catalog]") {
  for (unsigned c = 1; c <= 3; ++c)
    for (unsigned d = 1; d <= 2; ++d) {
      CatalogOptions opt;
      if (d == 2) opt.max_per_case = 6;  // full residue-degree-2 catalogs take minutes
      auto cat = catalog(2, d, c, opt);
      CHECK_FALSE(cat.empty());
      for (const auto& e : cat) {
        INFO("label " << e.label);
        TableRing T = table(e.presentation);
        CHECK(T.size() == e.order);
        CHECK(count_nontrivial(T, all_ideals(T)) == c);
        CHECK(e.certified);
        if (c == 3 && e.r == 2) CHECK((e.p_valuation == 2 || e.p_valuation == 3));
        CHECK((e.r != 3 || c != 3));
        if (c == 3 && e.r == 4) CHECK(e.p_valuation == 1);
      }
    }
}

TEST_CASE("catalog deduplication groups isomorphic members", "[iso][catalog]") {
  CatalogOptions opt;
  opt.dedup = true;
  auto cat = catalog(2, 1, 2, opt);
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      bool same = cat[i].iso_class == cat[j].iso_class;
      bool iso = cat[i].order == cat[j].order &&
                 brute_force_iso(table(cat[i].presentation), table(cat[j].presentation)).has_value();
      CHECK(same == iso);
    }
}
