#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "chainring/iso.hpp"
#include "chainring/structure.hpp"
#include "chainring/table_ring.hpp"

using namespace chainring;

namespace {

UniPoly poly(u64 p, unsigned r, std::vector<u64> c) { return UniPoly(Modulus(p, r), std::move(c)); }
Presentation f2y2() { return Presentation{2, 1, 1, poly(2, 1, {0, 1}), {}, {}}; }
Presentation f4y2() { return Presentation{2, 1, 1, poly(2, 1, {1, 1, 1}), {}, {}}; }
Presentation f4y3() { return Presentation{2, 1, 2, poly(2, 1, {1, 1, 1}), {}, {}}; }
// Z/2[X,Y]/(Y^2, X^2 + X + 1 - Y)
Presentation f4_shifted() { return Presentation{2, 1, 1, poly(2, 1, {1, 1, 1}), {}, {{1, poly(2, 1, {1})}}}; }
Presentation pc() { return Presentation{2, 2, 2, poly(2, 2, {0, 1}), {{2, poly(2, 2, {1})}}, {}}; }
Presentation z8() { return Presentation{2, 3, 2, poly(2, 3, {0, 1}), {{1, poly(2, 3, {1})}}, {}}; }

TableRing table(const Presentation& P) { return to_table(*QuotientRing::make(P)); }

// Exhaustive coefficient-field invariants, independent of the construction.
void check_coeff_field(const TableRing& R, const CoeffField& A) {
  LocalData L = local_data(R);
  CHECK(A.members.size() == L.q);
  CHECK(R.pow(static_cast<TableRing::Idx>(A.beta), L.q - 1) == R.one());
  std::set<std::size_t> S(A.members.begin(), A.members.end());
  for (auto a : A.members)
    for (auto b : A.members) {
      CHECK(S.count(R.sub(a, b)));
      CHECK(S.count(R.mul(a, b)));
    }
  // residues of A are pairwise distinct, so they exhaust R/m
  for (auto a : A.members)
    for (auto b : A.members)
      if (a != b) CHECK_FALSE(L.maximal.contains(R.sub(a, b)));
  CHECK(A.binomial_identity);
}

}  // namespace

TEST_CASE("coefficient field: examples", "[structure][coeff]") {
  TableRing A2 = table(f2y2());
  auto cf2 = coefficient_field(A2);
  CHECK(cf2.members == std::vector<std::size_t>{0, 1});

  auto R = QuotientRing::make(f4y2());
  TableRing T = to_table(*R);
  std::size_t x = R->index(R->x_class()), y = R->index(R->y_class());
  std::size_t x1 = R->index(R->add(R->x_class(), R->one()));
  auto cf = coefficient_field(T, T.add(x, y));
  // x = (X + 1) Y and beta = X
  CHECK(cf.x == T.mul(x1, y));
  CHECK(cf.beta == x);
  CHECK(T.pow(static_cast<TableRing::Idx>(cf.beta), 3) == T.one());
  std::vector<std::size_t> expect{0, 1, x, x1};
  std::sort(expect.begin(), expect.end());
  CHECK(cf.members == expect);
  check_coeff_field(T, cf);

  TableRing F9 = truncated_poly_table(FieldRep(3, poly(3, 1, {1, 0, 1})), 1);
  auto cf9 = coefficient_field(F9);
  CHECK(cf9.members.size() == 9);
  check_coeff_field(F9, cf9);
}

TEST_CASE("coefficient field rejects characteristic p^2", "[structure][coeff]") {
  CHECK_THROWS_AS(coefficient_field(zmod_table(2, 2)), MathError);
}

TEST_CASE("coefficient field invariants on char-p local rings", "[structure][coeff]") {
  std::vector<TableRing> rings{table(f2y2()), table(f4y2()), table(f4y3()), table(f4_shifted()),
                               table(Presentation{3, 1, 2, poly(3, 1, {1, 0, 1}), {}, {}}),
                               table(Presentation{2, 1, 2, poly(2, 1, {1, 1, 0, 1}), {}, {}}),
                               fp_xy_square_table(2), fp_xy_square_table(3)};
  for (const auto& R : rings) {
    auto cf = coefficient_field(R);
    check_coeff_field(R, cf);
  }
}

TEST_CASE("coefficient field from every residue-generator lift", "[structure][coeff]") {
  TableRing T = table(f4y3());
  LocalData L = local_data(T);
  std::size_t lifts = 0;
  for (std::size_t b = 0; b < T.size(); ++b) {
    if (L.maximal.contains(b)) continue;
    // residue of b has order 3 iff b^3 - 1 in m and b - 1 not in m
    bool gen = L.maximal.contains(T.sub(T.pow(static_cast<TableRing::Idx>(b), 3), T.one())) &&
               !L.maximal.contains(T.sub(b, T.one()));
    if (!gen) {
      CHECK_THROWS_AS(coefficient_field(T, b), MathError);
      continue;
    }
    ++lifts;
    check_coeff_field(T, coefficient_field(T, b));
  }
  CHECK(lifts == 2 * 16);
}

TEST_CASE("canonical isomorphism: examples", "[structure][canon]") {
  for (const auto& P : {f4y2(), f4y3(), f4_shifted()}) {
    TableRing R = table(P);
    auto c = char_p_canonical_iso(R);
    CHECK(c.sigma == P.s + 1);
    CHECK(c.target->size() == R.size());
    CHECK(is_isomorphism(*c.target, R, c.image));
    FieldRep F4(2, poly(2, 1, {1, 1, 1}));
    CHECK(brute_force_iso(*c.target, truncated_poly_table(F4, P.s + 1)).has_value());
  }
}

TEST_CASE("canonical isomorphism rejects non-principal rings", "[structure][canon]") {
  CHECK_THROWS_AS(char_p_canonical_iso(fp_xy_square_table(2)), MathError);
  CHECK_THROWS_AS(char_p_canonical_iso(zmod_table(3, 2)), MathError);
}

TEST_CASE("unit-power decomposition: examples", "[structure][digits]") {
  auto C = QuotientRing::make(pc());
  TableRing T = to_table(*C);
  std::size_t y = C->index(C->y_class()), y2 = C->index(C->mul(C->y_class(), C->y_class()));
  std::size_t one_y = C->index(C->add(C->one(), C->y_class()));
  auto d1 = unit_power_decompose(T, T.add(y, y2), y);
  REQUIRE(d1);
  CHECK(d1->k == 1);
  CHECK(d1->unit == one_y);
  auto d2 = unit_power_decompose(T, T.from_integer(2), y);
  REQUIRE(d2);
  CHECK(d2->k == 2);
  CHECK(d2->unit == T.one());
  CHECK_FALSE(unit_power_decompose(T, T.zero(), y));
  CHECK_THROWS_AS(unit_power_decompose(T, T.one(), y), MathError);
  CHECK_THROWS_AS(unit_power_decompose(T, y, y2), MathError);
}

TEST_CASE("digit expansion: examples", "[structure][digits]") {
  {
    auto R = QuotientRing::make(z8());
    TableRing T = to_table(*R);
    LocalData L = local_data(T);
    std::size_t a = R->index(R->y_class());
    auto e = digit_expand(T, L, T.from_integer(2), a, T.one(), Modulus(2, 3));
    CHECK(e == DigitExpansion{RelTerm{1, poly(2, 3, {1})}});
  }
  {
    auto R = QuotientRing::make(pc());
    TableRing T = to_table(*R);
    LocalData L = local_data(T);
    std::size_t a = R->index(R->y_class());
    auto e = digit_expand(T, L, T.from_integer(2), a, T.one(), Modulus(2, 2));
    CHECK(e == DigitExpansion{RelTerm{2, poly(2, 2, {1})}});
    CHECK(digit_expand(T, L, T.zero(), a, T.one(), Modulus(2, 2)).empty());
    CHECK_THROWS_AS(digit_expand(T, L, T.one(), a, T.one(), Modulus(2, 2)), MathError);
  }
}

TEST_CASE("digit expansion re-evaluates to the input on all of m", "[structure][digits]") {
  std::vector<Presentation> ps{pc(), z8(), f4y3(), f4_shifted(),
                               Presentation{3, 2, 2, poly(3, 2, {1, 0, 1}), {{2, poly(3, 2, {2})}}, {}}};
  for (const auto& P : ps) {
    TableRing T = table(P);
    LocalData L = local_data(T);
    auto rec = recover_presentation(T, L);
    for (auto x : L.maximal.members()) {
      auto e = digit_expand(T, L, x, rec.alpha, rec.beta, Modulus(L.p, L.r));
      CHECK(digit_eval(T, e, rec.alpha, rec.beta) == x);
      for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i - 1].exp < e[i].exp);
      for (const auto& t : e) CHECK_FALSE(t.poly.mod_p().is_zero());
    }
  }
}

TEST_CASE("presentation recovery: examples", "[structure][recover]") {
  {
    TableRing Z9 = zmod_table(3, 2);
    auto rec = recover_presentation(Z9);
    CHECK(rec.beta == 2);
    CHECK(rec.alpha == 3);
    const auto& P = rec.presentation;
    CHECK(P.r == 2);
    CHECK(P.s == 1);
    CHECK(P.g == poly(3, 2, {1, 1}));
    CHECK(P.p_rel == std::vector<RelTerm>{{1, poly(3, 2, {1})}});
    CHECK(P.g_rel == std::vector<RelTerm>{{1, poly(3, 2, {1})}});
    CHECK(brute_force_iso(table(P), Z9).has_value());
  }
  {
    // with beta = 1 the least monic lift vanishing mod m is X + 1
    TableRing Z4 = zmod_table(2, 2);
    auto rec = recover_presentation(Z4);
    const auto& P = rec.presentation;
    CHECK(P.g == poly(2, 2, {1, 1}));
    CHECK(P.p_rel == std::vector<RelTerm>{{1, poly(2, 2, {1})}});
    CHECK(P.g_rel == std::vector<RelTerm>{{1, poly(2, 2, {1})}});
    CHECK(brute_force_iso(table(P), Z4).has_value());
  }
  {
    TableRing F = table(f4y2());
    auto rec = recover_presentation(F);
    const auto& P = rec.presentation;
    CHECK(P.r == 1);
    CHECK(P.s == 1);
    CHECK(P.p_rel.empty());
    CHECK(P.g == poly(2, 1, {1, 1, 1}));
    CHECK(brute_force_iso(table(P), F).has_value());
  }
}

TEST_CASE("presentation recovery round trips", "[structure][recover]") {
  std::vector<TableRing> rings{zmod_table(2, 3), zmod_table(5, 2), table(pc()), table(z8()), table(f4y3()),
                               table(f4_shifted()),
                               table(Presentation{3, 2, 2, poly(3, 2, {1, 0, 1}), {{2, poly(3, 2, {2})}}, {}}),
                               table(Presentation{2, 2, 3, poly(2, 2, {0, 1}),
                                                  {{2, poly(2, 2, {1})}, {3, poly(2, 2, {1})}}, {}})};
  for (const auto& R : rings) {
    auto rec = recover_presentation(R);
    CHECK(validate(rec.presentation).ok());
    CHECK(brute_force_iso(table(rec.presentation), R).has_value());
  }
}

TEST_CASE("presentation recovery rejects non-chain rings", "[structure][recover]") {
  CHECK_THROWS_AS(recover_presentation(fp_xy_square_table(2)), MathError);
  CHECK_THROWS_AS(recover_presentation(direct_product(zmod_table(2, 1), zmod_table(3, 1))), MathError);
  CHECK_THROWS_AS(recover_presentation(zmod_table(3, 1)), MathError);
}

TEST_CASE("local data statistics agree with the table statistics", "[structure]") {
  for (const auto& R : {zmod_table(2, 3), table(pc()), table(f4y3()), fp_xy_square_table(3)}) {
    LocalData L = local_data(R);
    auto a = lemma21_stats(R), b = lemma21_stats(R, L);
    CHECK(a.p == b.p);
    CHECK(a.r == b.r);
    CHECK(a.s == b.s);
    CHECK(a.t == b.t);
  }
}
