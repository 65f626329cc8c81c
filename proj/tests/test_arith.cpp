#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "chainring/field.hpp"
#include "chainring/poly.hpp"
#include "chainring/zmod.hpp"

using namespace chainring;

namespace {

// Monic polynomials of degree d over F_p that are products of two monic factors
// of positive degree: the complement among all monic polys is the irreducibles.
std::set<std::vector<u64>> reducible_sieve(u64 p, unsigned d) {
  Modulus m(p, 1);
  std::set<std::vector<u64>> out;
  for (unsigned a = 1; a < d; ++a)
    for (u64 i = 0; i < checked_pow(p, a); ++i)
      for (u64 j = 0; j < checked_pow(p, d - a); ++j)
        out.insert((monic_from_index(p, a, i) * monic_from_index(p, d - a, j)).coeffs());
  return out;
}

// Number of monic irreducibles of degree d over F_p (Gauss): (1/d) sum_{k | d} mu(k) p^(d/k).
long long necklace(u64 p, unsigned d) {
  auto mu = [](unsigned n) {
    int s = 1;
    for (unsigned f = 2; f * f <= n; ++f)
      if (n % f == 0) {
        n /= f;
        if (n % f == 0) return 0;
        s = -s;
      }
    return n > 1 ? -s : s;
  };
  long long acc = 0;
  for (unsigned k = 1; k <= d; ++k)
    if (d % k == 0) acc += mu(k) * static_cast<long long>(checked_pow(p, d / k));
  return acc / d;
}

UniPoly poly(u64 p, unsigned r, std::vector<u64> c) { return UniPoly(Modulus(p, r), std::move(c)); }

}  // namespace

TEST_CASE("Z/p^r satisfies the commutative ring axioms exhaustively", "[arith][zmod]") {
  for (auto [p, r] : {std::pair<u64, unsigned>{2, 2}, {2, 3}, {3, 2}, {5, 2}, {2, 8}, {3, 5}}) {
    Modulus m(p, r);
    const u64 n = m.value;
    REQUIRE(n <= 256);
    bool ok = true;
    for (u64 a = 0; a < n && ok; ++a)
      for (u64 b = 0; b < n && ok; ++b) {
        ok = m.add(a, b) == (a + b) % n && m.mul(a, b) == (a * b) % n && m.add(a, m.neg(a)) == 0 &&
             m.sub(a, b) == (a + n - b) % n;
        for (u64 c = 0; c < n && ok; ++c)
          ok = m.mul(a, m.add(b, c)) == m.add(m.mul(a, b), m.mul(a, c)) &&
               m.mul(m.mul(a, b), c) == m.mul(a, m.mul(b, c)) && m.add(m.add(a, b), c) == m.add(a, m.add(b, c));
      }
    CHECK(ok);
    for (u64 a = 0; a < n; ++a) {
      CHECK(m.is_unit(a) == (a % p != 0));
      if (m.is_unit(a)) CHECK(m.mul(a, m.inverse(a)) == 1);
    }
  }
}

TEST_CASE("valuations in Z/p^r", "[arith][zmod]") {
  Modulus m(3, 3);
  CHECK(m.valuation(1) == 0);
  CHECK(m.valuation(3) == 1);
  CHECK(m.valuation(18) == 2);
  CHECK(m.valuation(0) == 3);
}

TEST_CASE("checked_pow detects overflow", "[arith]") {
  CHECK(checked_pow(3, 4) == 81);
  CHECK_THROWS_AS(checked_pow(2, 64), std::overflow_error);
}

TEST_CASE("division by a monic polynomial: examples", "[arith][poly]") {
  auto [q1, r1] = poly_divrem_monic(poly(2, 2, {3, 0, 1}), poly(2, 2, {1, 1}));
  CHECK(q1 == poly(2, 2, {3, 1}));
  CHECK(r1.is_zero());
  auto [q2, r2] = poly_divrem_monic(poly(2, 2, {0, 1}), poly(2, 2, {0, 1}));
  CHECK(q2 == poly(2, 2, {1}));
  CHECK(r2.is_zero());
  auto [q3, r3] = poly_divrem_monic(poly(2, 2, {2}), poly(2, 2, {0, 1}));
  CHECK(q3.is_zero());
  CHECK(r3 == poly(2, 2, {2}));
}

TEST_CASE("division re-multiplies to the dividend", "[arith][poly]") {
  std::mt19937_64 rng(7);
  for (auto [p, r] : {std::pair<u64, unsigned>{2, 3}, {3, 2}, {5, 1}}) {
    Modulus m(p, r);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<u64> f(rng() % 9), g(1 + rng() % 4);
      for (auto& c : f) c = rng() % m.value;
      for (auto& c : g) c = rng() % m.value;
      g.push_back(1);
      UniPoly F(m, f), G(m, g);
      auto [q, rem] = poly_divrem_monic(F, G);
      CHECK(q * G + rem == F);
      CHECK(rem.degree() < G.degree());
    }
  }
}

TEST_CASE("irreducibility: examples", "[arith][poly]") {
  CHECK(is_irreducible_mod_p(poly(2, 1, {1, 1, 1}), 2));
  CHECK_FALSE(is_irreducible_mod_p(poly(2, 1, {1, 0, 1}), 2));
  for (u64 p : {2, 3, 5}) CHECK(is_irreducible_mod_p(poly(p, 1, {0, 1}), p));
  CHECK(gen_irreducible(2, 1) == poly(2, 1, {0, 1}));
  CHECK(gen_irreducible(2, 2) == poly(2, 1, {1, 1, 1}));
  CHECK(gen_irreducible(3, 2) == poly(3, 1, {1, 0, 1}));
}

TEST_CASE("irreducibility agrees with a product sieve and the necklace count", "[arith][poly]") {
  for (auto [p, dmax] : {std::pair<u64, unsigned>{2, 6}, {3, 4}, {5, 3}}) {
    for (unsigned d = 1; d <= dmax; ++d) {
      auto reducible = reducible_sieve(p, d);
      std::size_t count = 0;
      for (u64 i = 0; i < checked_pow(p, d); ++i) {
        UniPoly f = monic_from_index(p, d, i);
        bool irr = !reducible.count(f.coeffs());
        CHECK(is_irreducible_mod_p(f, p) == irr);
        count += irr;
      }
      CHECK(static_cast<long long>(count) == necklace(p, d));
      CHECK(all_irreducibles(p, d).size() == count);
    }
  }
}

TEST_CASE("finite field arithmetic: examples", "[arith][field]") {
  FieldRep F4(2, poly(2, 1, {1, 1, 1}));
  FieldElem g = F4.multiplicative_generator();
  CHECK(F4.to_poly(g) == poly(2, 1, {0, 1}));
  CHECK(F4.pow(g, 3) == F4.one());
  CHECK_FALSE(F4.pow(g, 1) == F4.one());

  FieldRep F3(3, poly(3, 1, {0, 1}));
  CHECK_FALSE(F3.is_square(F3.from_scalar(2)));
  CHECK(F3.is_square(F3.from_scalar(1)));
  CHECK(F4.min_poly(F4.zero()) == poly(2, 1, {0, 1}));
}

TEST_CASE("field axioms and inverses exhaustively in small fields", "[arith][field]") {
  for (auto [p, d] : {std::pair<u64, unsigned>{2, 3}, {3, 2}, {5, 2}}) {
    FieldRep F(p, gen_irreducible(p, d));
    const u64 q = F.size();
    for (u64 i = 0; i < q; ++i) {
      FieldElem a = F.from_index(i);
      CHECK(F.index(a) == i);
      if (i) CHECK(F.mul(a, F.inverse(a)) == F.one());
      CHECK(F.pow(a, q) == a);
      CHECK(F.is_zero(F.eval(F.min_poly(a), a)));
      for (u64 j = 0; j < q; ++j) {
        FieldElem b = F.from_index(j);
        CHECK(F.mul(a, b) == F.mul(b, a));
        if (auto s = F.sqrt(b)) CHECK(F.mul(*s, *s) == b);
      }
    }
    // the generator has order exactly q - 1
    FieldElem g = F.multiplicative_generator();
    for (u64 k = 1; k < q - 1; ++k) CHECK_FALSE(F.pow(g, k) == F.one());
    CHECK(F.pow(g, q - 1) == F.one());
  }
}

TEST_CASE("field isomorphisms", "[arith][field]") {
  FieldRep F4(2, poly(2, 1, {1, 1, 1})), F2(2, poly(2, 1, {0, 1}));
  auto isos = field_isos(F4, F4);
  REQUIRE(isos.size() == 2);
  std::set<std::vector<u64>> images;
  for (const auto& f : isos) images.insert(F4.to_poly(f.image_of_x()).coeffs());
  CHECK(images == std::set<std::vector<u64>>{{0, 1}, {1, 1}});
  CHECK(field_isos(F2, F4).empty());

  FieldRep A(3, poly(3, 1, {1, 0, 1})), B(3, poly(3, 1, {2, 1, 1}));
  auto ab = field_isos(A, B);
  CHECK(ab.size() == 2);
  for (const auto& f : ab) {
    for (u64 i = 0; i < 9; ++i)
      for (u64 j = 0; j < 9; ++j) {
        FieldElem x = A.from_index(i), y = A.from_index(j);
        CHECK(f.apply(A.mul(x, y)) == B.mul(f.apply(x), f.apply(y)));
        CHECK(f.apply(A.add(x, y)) == B.add(f.apply(x), f.apply(y)));
      }
  }
}
