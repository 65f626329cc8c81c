#pragma once

#include <random>
#include <string>
#include <vector>

#include "chainring/linear_quotient.hpp"
#include "chainring/quotient_ring.hpp"

namespace chainring {

struct CertifyOptions {
  u64 pair_bound = 4096;   // exhaustive pairwise checks when |R| <= this
  u64 triple_bound = 512;  // exhaustive triple checks when |R| <= this
  u64 samples = 100000;    // random cases otherwise
  u64 seed = 0x5eed;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  bool exhaustive = true;
  u64 cases = 0;
  std::string detail;
};

struct CertReport {
  std::vector<CheckResult> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// The same ring modelled by linear algebra, with no rewriting involved.
inline LinearQuotient linear_model(const Presentation& pr) {
  Modulus m = pr.modulus();
  BiPoly gx = BiPoly::from_uni(pr.g);
  for (const auto& t : pr.g_rel) gx = gx - BiPoly::from_uni(t.poly, t.exp);
  std::vector<BiPoly> gens;
  if (pr.r >= 2) {
    BiPoly prel = BiPoly::constant(m, pr.p);
    for (const auto& t : pr.p_rel) prel = prel - BiPoly::from_uni(t.poly, t.exp);
    gens.push_back(prel);
    gens.push_back(BiPoly::monomial(m, 0, pr.s + 1 - pr.t1(), pr.p));
  }
  return LinearQuotient(m, gx, pr.s + 1, gens);
}

namespace detail {

/// A lift of x that is not in normal form: x + (generator of Q) * X^a Y^b.
inline BiPoly perturbed(const QuotientRing& R, const Digits& x, const std::vector<BiPoly>& gens, u64 salt) {
  const BiPoly& gen = gens[salt % gens.size()];
  unsigned a = static_cast<unsigned>((salt / gens.size()) % (R.d() + 1));
  unsigned b = static_cast<unsigned>((salt / gens.size() / (R.d() + 1)) % 2);
  return R.to_poly(x) + gen * BiPoly::monomial(R.modulus(), a, b).scaled(1 + salt % R.modulus().value);
}

}  // namespace detail

/// Runtime certificate that the digit model is Z/p^r[X,Y]/Q with
/// nilpotency index s+1 and characteristic p^r.
inline CertReport certify(const RingPtr& ring, const CertifyOptions& opt = {}) {
  const QuotientRing& R = *ring;
  const Modulus& m = R.modulus();
  CertReport rep;
  const u64 n = R.order().value_or(~u64{0});
  std::mt19937_64 rng(opt.seed);
  auto random_elem = [&] {
    Digits x(R.digit_count());
    for (auto& c : x) c = rng() % m.p;
    return x;
  };
  auto gens = R.generators();

  {  // (a) every generator of Q, and its multiples by basis monomials, vanishes
    CheckResult c;
    c.name = "generators_vanish";
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (unsigned b = 0; b <= R.s(); ++b)
        for (unsigned a = 0; a < R.d(); ++a) {
          ++c.cases;
          if (!R.is_zero(R.normal_form(gens[i] * BiPoly::monomial(m, a, b)))) {
            c.pass = false;
            c.detail = "generator " + std::to_string(i) + " times X^" + std::to_string(a) + "Y^" + std::to_string(b);
          }
        }
    rep.checks.push_back(c);
  }
  {  // (b) NF is the identity on normal forms
    CheckResult c;
    c.name = "idempotence";
    c.exhaustive = n <= (u64{1} << 20);
    u64 cases = c.exhaustive ? n : opt.samples;
    for (u64 i = 0; i < cases && c.pass; ++i) {
      Digits x = c.exhaustive ? R.from_index(i) : random_elem();
      ++c.cases;
      if (R.normal_form(R.to_poly(x)) != x || R.normal_form(R.to_poly(x), RewriteOrder::PFirst) != x) {
        c.pass = false;
        c.detail = "NF moves " + R.to_string(x);
      }
    }
    rep.checks.push_back(c);
  }
  {  // (c) NF(f+g) = NF(NF f + NF g), NF(fg) = NF(NF f * NF g) on perturbed lifts
    CheckResult c;
    c.name = "compatibility";
    c.exhaustive = n <= opt.pair_bound;
    u64 cases = c.exhaustive ? n * n : opt.samples;
    for (u64 i = 0; i < cases && c.pass; ++i) {
      Digits x = c.exhaustive ? R.from_index(i / n) : random_elem();
      Digits y = c.exhaustive ? R.from_index(i % n) : random_elem();
      BiPoly f = detail::perturbed(R, x, gens, i), g = detail::perturbed(R, y, gens, i * 7 + 3);
      ++c.cases;
      if (R.normal_form(f + g) != R.add(x, y) || R.normal_form(f * g) != R.mul(x, y)) {
        c.pass = false;
        c.detail = "fails at x = " + R.to_string(x) + ", y = " + R.to_string(y);
      }
    }
    rep.checks.push_back(c);
  }
  {  // (d) commutative ring axioms
    CheckResult c;
    c.name = "ring_axioms";
    c.exhaustive = n <= opt.triple_bound;
    u64 cases = c.exhaustive ? n * n * n : opt.samples;
    const Digits zero = R.zero(), one = R.one();
    for (u64 i = 0; i < cases && c.pass; ++i) {
      Digits x = c.exhaustive ? R.from_index(i / (n * n)) : random_elem();
      Digits y = c.exhaustive ? R.from_index((i / n) % n) : random_elem();
      Digits z = c.exhaustive ? R.from_index(i % n) : random_elem();
      ++c.cases;
      bool ok = R.add(R.add(x, y), z) == R.add(x, R.add(y, z)) && R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z)) &&
                R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z));
      if (!c.exhaustive || (i % n == 0 && (i / n) % n == 0)) {
        ok = ok && R.add(x, y) == R.add(y, x) && R.mul(x, y) == R.mul(y, x) && R.mul(x, one) == x &&
             R.add(x, zero) == x && R.is_zero(R.add(x, R.neg(x)));
      }
      if (!ok) {
        c.pass = false;
        c.detail = "fails at (" + R.to_string(x) + ", " + R.to_string(y) + ", " + R.to_string(z) + ")";
      }
    }
    if (R.one() == R.zero()) c.pass = false, c.detail = "1 = 0";
    rep.checks.push_back(c);
  }
  {  // (e) characteristic p^r and nilpotency index s+1
    CheckResult c;
    c.name = "characteristic_nilpotency";
    c.cases = 4;
    bool ys = !R.is_zero(R.normal_form(BiPoly::monomial(m, 0, R.s())));
    bool ys1 = R.is_zero(R.normal_form(BiPoly::monomial(m, 0, R.s() + 1)));
    u64 pr1 = checked_pow(m.p, m.r - 1);
    bool ch1 = !R.is_zero(R.scalar(pr1, R.one()));
    bool ch = R.is_zero(R.scalar(m.p, R.scalar(pr1, R.one())));
    c.pass = ys && ys1 && ch1 && ch;
    if (!c.pass)
      c.detail = std::string(ys ? "" : "Y^s = 0; ") + (ys1 ? "" : "Y^(s+1) != 0; ") + (ch1 ? "" : "p^(r-1) = 0; ") +
                 (ch ? "" : "p^r != 0; ");
    rep.checks.push_back(c);
  }
  {  // (f) |Z/p^r[X,Y]/Q| computed by linear algebra equals q^(s+1)
    CheckResult c;
    c.name = "quotient_order";
    c.cases = 1;
    LinearQuotient lq = linear_model(R.presentation());
    unsigned expect = R.d() * (R.s() + 1);
    c.pass = lq.log_p_order() == expect;
    c.detail = "log_p |S/Q| = " + std::to_string(lq.log_p_order()) + ", expected " + std::to_string(expect);
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace chainring
