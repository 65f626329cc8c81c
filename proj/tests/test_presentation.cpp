#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "chainring/certify.hpp"
#include "chainring/iso.hpp"
#include "chainring/linear_quotient.hpp"
#include "chainring/presentation.hpp"
#include "chainring/quotient_ring.hpp"
#include "chainring/table_ring.hpp"

using namespace chainring;

namespace {

UniPoly poly(u64 p, unsigned r, std::vector<u64> c) { return UniPoly(Modulus(p, r), std::move(c)); }

Presentation z4() { return Presentation{2, 2, 1, poly(2, 2, {0, 1}), {{1, poly(2, 2, {1})}}, {}}; }
// Z/4[Y]/(Y^2 - 2, 2Y)
Presentation pc() { return Presentation{2, 2, 2, poly(2, 2, {0, 1}), {{2, poly(2, 2, {1})}}, {}}; }
// F_4[Y]/(Y^2)
Presentation f4y2() { return Presentation{2, 1, 1, poly(2, 1, {1, 1, 1}), {}, {}}; }

BiPoly mono(const Modulus& m, std::size_t a, std::size_t b, u64 c = 1) { return BiPoly::monomial(m, a, b, c); }

}  // namespace

TEST_CASE("validation: examples", "[presentation]") {
  CHECK(validate(z4()).ok());
  auto bad_s = z4();
  bad_s.s = 2;
  CHECK_FALSE(validate(bad_s).ok());
  Presentation reducible{2, 1, 3, poly(2, 1, {1, 0, 1}), {}, {}};
  CHECK_FALSE(validate(reducible).ok());
  auto zero_u = pc();
  zero_u.p_rel[0].poly = poly(2, 2, {2});  // u_1 in (p, g)
  CHECK_FALSE(validate(zero_u).ok());
  CHECK_THROWS_AS(QuotientRing::make(zero_u), MathError);
}

TEST_CASE("validation: the t_1 window and the shape of relations", "[presentation]") {
  // r = 3, t_1 = 1 needs 2 <= s < 3
  Presentation P{2, 3, 2, poly(2, 3, {0, 1}), {{1, poly(2, 3, {1})}}, {}};
  CHECK(validate(P).ok());
  P.s = 3;
  CHECK_FALSE(validate(P).ok());
  // r = 1 must not carry a p-relation; r >= 2 must
  Presentation Q{2, 1, 2, poly(2, 1, {0, 1}), {{1, poly(2, 1, {1})}}, {}};
  CHECK_FALSE(validate(Q).ok());
  Presentation R{2, 2, 1, poly(2, 2, {0, 1}), {}, {}};
  CHECK_FALSE(validate(R).ok());
  // exponents increasing within [1, s]
  Presentation S{2, 1, 2, poly(2, 1, {0, 1}), {}, {{3, poly(2, 1, {1})}}};
  CHECK_FALSE(validate(S).ok());
}

TEST_CASE("normal form: examples", "[presentation]") {
  auto R = QuotientRing::make(z4());
  const Modulus& m = R->modulus();
  CHECK(R->normal_form(BiPoly::constant(m, 2)) == R->y_class());
  CHECK(R->is_zero(R->normal_form(mono(m, 0, 3))));
  auto C = QuotientRing::make(pc());
  CHECK(C->is_zero(C->normal_form(mono(C->modulus(), 0, 3))));
  CHECK(C->normal_form(mono(C->modulus(), 0, 1, 3)) == C->y_class());
  CHECK(C->normal_form(BiPoly::constant(C->modulus(), 2)) == C->normal_form(mono(C->modulus(), 0, 2)));
}

TEST_CASE("normal form agrees across rule orders", "[presentation]") {
  for (const auto& P : {z4(), pc(), f4y2()}) {
    auto R = QuotientRing::make(P);
    const Modulus& m = R->modulus();
    for (unsigned a = 0; a < 5; ++a)
      for (unsigned b = 0; b < 5; ++b)
        for (u64 c = 1; c < m.value; ++c)
          CHECK(R->normal_form(mono(m, a, b, c), RewriteOrder::XFirst) ==
                R->normal_form(mono(m, a, b, c), RewriteOrder::PFirst));
  }
}

TEST_CASE("ring operations: examples", "[presentation]") {
  auto R = QuotientRing::make(z4());
  CHECK(R->is_zero(R->add(R->y_class(), R->y_class())));
  auto C = QuotientRing::make(pc());
  Digits y2 = C->mul(C->y_class(), C->y_class());
  Digits expect = C->zero();
  expect[2] = 1;  // digit at (b = 2, a = 0)
  CHECK(y2 == expect);
  CHECK(y2 == C->from_integer(2));
  CHECK(C->is_zero(C->mul(y2, C->y_class())));
  for (const auto& P : {z4(), pc(), f4y2()}) {
    auto Q = QuotientRing::make(P);
    for (u64 i = 0; i < *Q->order(); ++i) CHECK(Q->mul(Q->from_index(i), Q->one()) == Q->from_index(i));
  }
}

TEST_CASE("ring order: examples", "[presentation]") {
  CHECK(QuotientRing::make(z4())->order() == 4);
  CHECK(QuotientRing::make(pc())->order() == 8);
  CHECK(QuotientRing::make(f4y2())->order() == 16);
}

TEST_CASE("units, inverses and residues: examples", "[presentation]") {
  auto R = QuotientRing::make(z4());
  Digits u = R->add(R->one(), R->y_class());
  CHECK(R->is_unit(u));
  CHECK(R->inverse(u) == u);
  CHECK_FALSE(R->is_unit(R->y_class()));
  CHECK_THROWS_AS(R->inverse(R->y_class()), MathError);

  auto F = QuotientRing::make(f4y2());
  Digits xy = F->add(F->x_class(), F->y_class());
  FieldRep K = F->residue_field();
  CHECK(F->residue(xy) == K.gen());
}

TEST_CASE("inverse is a two-sided inverse for every unit", "[presentation]") {
  for (const auto& P : {z4(), pc(), f4y2()}) {
    auto R = QuotientRing::make(P);
    for (u64 i = 0; i < *R->order(); ++i) {
      Digits x = R->from_index(i);
      if (R->is_unit(x)) CHECK(R->mul(x, R->inverse(x)) == R->one());
    }
  }
}

TEST_CASE("certify: examples", "[presentation][certify]") {
  CHECK(certify(QuotientRing::make(z4())).pass());
  auto rep = certify(QuotientRing::make(pc()));
  CHECK(rep.pass());
  auto C = QuotientRing::make(pc());
  CHECK_FALSE(C->is_zero(C->from_integer(2)));
  CHECK(C->from_integer(2) == C->mul(C->y_class(), C->y_class()));
  CHECK(C->is_zero(C->from_integer(4)));
  for (const auto& c : rep.checks) CHECK(c.exhaustive);
}

TEST_CASE("rewriting tables match the linear-algebra model", "[presentation][certify]") {
  std::vector<Presentation> ps{z4(), pc(), f4y2()};
  // Z/9 presented with g = X + 1 and g(beta) = Y
  ps.push_back(Presentation{3, 2, 1, poly(3, 2, {1, 1}), {{1, poly(3, 2, {1})}}, {{1, poly(3, 2, {1})}}});
  // Z/2[X,Y]/(Y^2, X^2 + X + 1 - Y)
  ps.push_back(Presentation{2, 1, 1, poly(2, 1, {1, 1, 1}), {}, {{1, poly(2, 1, {1})}}});
  // t_1 = 2: 2 = Y^2 + Y^3 over Z/4
  ps.push_back(Presentation{2, 2, 3, poly(2, 2, {0, 1}), {{2, poly(2, 2, {1})}, {3, poly(2, 2, {1})}}, {}});
  for (const auto& P : ps) {
    INFO("p=" << P.p << " r=" << P.r << " s=" << P.s << " g=" << P.g.to_string());
    auto R = QuotientRing::make(P);
    LinearQuotient lq = linear_model(P);
    REQUIRE(lq.size() == *R->order());
    TableRing A = to_table(*R), B = to_table(lq);
    CHECK(brute_force_iso(A, B).has_value());
    CHECK(to_table_direct(*R) == A);
  }
}

TEST_CASE("distinct normal forms of bounded-degree inputs number q^(s+1)", "[presentation]") {
  for (const auto& P : {z4(), pc(), f4y2()}) {
    auto R = QuotientRing::make(P);
    const Modulus& m = R->modulus();
    std::set<Digits> seen;
    // every polynomial with X-degree <= d and Y-degree <= s, all coefficients mod p^r
    std::vector<std::pair<unsigned, unsigned>> monos;
    for (unsigned a = 0; a <= R->d(); ++a)
      for (unsigned b = 0; b <= R->s(); ++b) monos.emplace_back(a, b);
    u64 total = 1;
    for (std::size_t i = 0; i < monos.size(); ++i) total *= m.value;
    for (u64 code = 0; code < total; ++code) {
      BiPoly f(m);
      u64 rest = code;
      for (auto [a, b] : monos) {
        if (rest % m.value) f = f + mono(m, a, b, rest % m.value);
        rest /= m.value;
      }
      seen.insert(R->normal_form(f));
    }
    CHECK(seen.size() == *R->order());
  }
}

TEST_CASE("unbounded presentations fail the order bound", "[presentation]") {
  Presentation big{3, 2, 12, poly(3, 2, {1, 0, 1}), {{7, poly(3, 2, {1})}}, {}};
  REQUIRE(validate(big).ok());
  auto R = QuotientRing::make(big);
  CHECK_THROWS_AS(R->order_checked(4096), BoundError);
}
