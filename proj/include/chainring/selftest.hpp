#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "chainring/catalog.hpp"
#include "chainring/certify.hpp"
#include "chainring/ideals.hpp"
#include "chainring/iso.hpp"
#include "chainring/structure.hpp"

namespace chainring::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = true;
  u64 cases = 0;
  u64 failures = 0;
  double seconds = 0;
  std::string detail;  // first failure, or a summary
};

inline CriterionResult criterion(int id, std::string name) {
  CriterionResult c;
  c.id = id;
  c.name = std::move(name);
  return c;
}

struct SweepOptions {
  u64 ring_bound = 4096;
  unsigned s_max = 4, r_max = 4;
  std::vector<u64> primes{2, 3};
  std::vector<unsigned> degrees{1, 2};
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  double time_limit_seconds = 600;
  // Per-ring certification inside the sweep. The digit model is pinned by the exact
  // linear-algebra order check and exhaustive idempotence; pair and triple checks are
  // exhaustive up to these sizes and sampled beyond.
  CertifyOptions certify{64, 16, 64, 0x5eed};
};

/// Nonempty (or any, when allow_empty) strictly increasing exponent lists in
/// [1, s] with a nonzero digit polynomial of degree < d attached to each.
inline void for_each_relation(const Modulus& m, unsigned d, unsigned s, bool allow_empty,
                              const std::function<bool(unsigned)>& first_ok,
                              const std::function<void(const std::vector<RelTerm>&)>& fn) {
  const u64 q = checked_pow(m.p, d);
  for (unsigned mask = allow_empty ? 0 : 1; mask < (1u << s); ++mask) {
    std::vector<unsigned> exps;
    for (unsigned e = 1; e <= s; ++e)
      if (mask & (1u << (e - 1))) exps.push_back(e);
    if (!exps.empty() && !first_ok(exps.front())) continue;
    u64 combos = 1;
    for (std::size_t i = 0; i < exps.size(); ++i) combos *= q - 1;
    for (u64 code = 0; code < combos; ++code) {
      std::vector<RelTerm> terms;
      u64 rest = code;
      for (auto e : exps) {
        terms.push_back(RelTerm{e, digit_poly(m, d, 1 + rest % (q - 1))});
        rest /= q - 1;
      }
      fn(terms);
    }
  }
}

/// Every valid presentation in the sweep box, in a fixed order.
inline std::vector<Presentation> enumerate_presentations(const SweepOptions& opt) {
  std::vector<Presentation> out;
  for (u64 p : opt.primes)
    for (unsigned d : opt.degrees)
      for (unsigned r = 1; r <= opt.r_max; ++r)
        for (unsigned s = 1; s <= opt.s_max; ++s) {
          u64 order = 0;
          try {
            order = checked_pow(checked_pow(p, d), s + 1);
          } catch (const std::overflow_error&) {
            continue;
          }
          if (order > opt.ring_bound) continue;
          Modulus m(p, r);
          for (const auto& g0 : all_irreducibles(p, d)) {
            UniPoly g = g0.with_modulus(m);
            auto t1_ok = [&](unsigned t1) { return (r - 1) * t1 <= s && s < r * t1; };
            auto with_prel = [&](const std::vector<RelTerm>& prel) {
              for_each_relation(m, d, s, true, [](unsigned) { return true; }, [&](const std::vector<RelTerm>& grel) {
                out.push_back(Presentation{p, r, s, g, prel, grel});
              });
            };
            if (r == 1)
              with_prel({});
            else
              for_each_relation(m, d, s, false, t1_ok, with_prel);
          }
        }
  return out;
}

/// Outcome of the per-ring checks for one presentation.
struct RingOutcome {
  bool c1 = true, c2 = true, c3 = true, c4 = true, c5 = true, c9 = true;
  bool char_p = false;
  double c1_seconds = 0;  // certify, tables, nilpotency and ideal chain only
  std::string why1, why2, why3, why4, why5, why9;
};

inline std::string describe(const Presentation& P) {
  std::ostringstream os;
  os << "p=" << P.p << " r=" << P.r << " s=" << P.s << " g=" << P.g.to_string() << " p_rel=[";
  for (const auto& t : P.p_rel) os << "(" << t.exp << "," << t.poly.to_string() << ")";
  os << "] g_rel=[";
  for (const auto& t : P.g_rel) os << "(" << t.exp << "," << t.poly.to_string() << ")";
  os << "]";
  return os.str();
}

/// Distinct normal forms and agreement of the two rule orders on the lifts
/// p x, X^d x, Y x, p X^d Y x of every normal form x. Idempotence is certified separately.
inline bool canonicity(const QuotientRing& R, std::string& why) {
  const u64 n = R.order_checked(TableRing::kMaxOrder);
  std::vector<char> seen(n, 0);
  u64 distinct = 0;
  for (u64 i = 0; i < n; ++i) {
    Digits x = R.normal_form_lift(R.from_index(i), 1, 0, 0, RewriteOrder::XFirst);
    u64 idx = R.index(x);
    if (!seen[idx]) seen[idx] = 1, ++distinct;
    struct Lift {
      u64 c;
      unsigned a, b;
    };
    for (Lift l : {Lift{R.p(), 0, 0}, Lift{1, R.d(), 0}, Lift{1, 0, 1}, Lift{R.p(), R.d(), 1}}) {
      Digits u = R.normal_form_lift(x, l.c, l.a, l.b, RewriteOrder::XFirst);
      Digits v = R.normal_form_lift(x, l.c, l.a, l.b, RewriteOrder::PFirst);
      if (u != v) {
        why = "rule orders disagree on a lift of " + R.to_string(x);
        return false;
      }
    }
  }
  if (distinct != n) {
    why = "distinct normal forms " + std::to_string(distinct) + " != " + std::to_string(n);
    return false;
  }
  return true;
}

inline RingOutcome check_ring(const Presentation& P, const SweepOptions& opt) {
  RingOutcome o;
  auto fail = [](bool& flag, std::string& why, const std::string& msg) {
    if (flag) why = msg;
    flag = false;
  };
  try {
    const auto t0 = std::chrono::steady_clock::now();
    auto ring = QuotientRing::make(P);
    const QuotientRing& R = *ring;
    auto rep = certify(ring, opt.certify);
    if (!rep.pass())
      for (const auto& c : rep.checks)
        if (!c.pass) fail(o.c1, o.why1, "certify " + c.name + ": " + c.detail);
    TableRing T = to_table(R, opt.ring_bound);
    const u64 pr = checked_pow(P.p, P.r);
    if (T.characteristic() != pr) fail(o.c1, o.why1, "char " + std::to_string(T.characteristic()));

    LocalData L = local_data(T);
    if (L.sigma != P.s + 1) fail(o.c1, o.why1, "nilpotency index " + std::to_string(L.sigma));
    auto ideals = all_ideals(T, opt.ring_bound);
    if (count_nontrivial(T, ideals) != P.s)
      fail(o.c1, o.why1, "nontrivial ideals " + std::to_string(count_nontrivial(T, ideals)));
    std::set<std::vector<u64>> chain;
    Digits yk = R.one();
    for (unsigned k = 1; k <= P.s; ++k) {
      yk = R.mul(yk, R.y_class());
      chain.insert(principal_ideal(T, R.index(yk)).words());
    }
    if (chain.size() != P.s) fail(o.c1, o.why1, "(Y^k) not distinct");
    for (const auto& I : ideals)
      if (I.size() != 1 && I.size() != T.size() && !chain.count(I.words()))
        fail(o.c1, o.why1, "ideal outside the (Y^k) chain");
    o.c1_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    auto st = lemma21_stats(T, L);
    if (!st.inequalities_hold() || st.r != P.r || st.s != P.s + 1)
      fail(o.c2, o.why2, "stats (" + std::to_string(st.r) + "," + std::to_string(st.s) + "," + std::to_string(st.t) + ")");

    if (P.r == 1) {
      o.char_p = true;
      try {
        auto A = coefficient_field(T);
        if (A.members.size() != L.q || !A.binomial_identity) fail(o.c3, o.why3, "coefficient field invariants");
      } catch (const std::exception& e) {
        fail(o.c3, o.why3, e.what());
      }
      try {
        auto ci = char_p_canonical_iso(T);
        if (ci.sigma != P.s + 1) fail(o.c4, o.why4, "sigma mismatch");
        const TableRing& F = *ci.target;
        std::vector<char> hit(T.size(), 0);
        for (auto v : ci.image) hit[v] = 1;
        if (std::count(hit.begin(), hit.end(), 1) != static_cast<std::ptrdiff_t>(T.size()))
          fail(o.c4, o.why4, "canonical map not bijective");
        for (std::size_t a = 0; a < F.size() && o.c4; ++a)
          for (std::size_t b = 0; b < F.size(); ++b)
            if (ci.image[F.mul(a, b)] != T.mul(ci.image[a], ci.image[b]) ||
                ci.image[F.add(a, b)] != T.add(ci.image[a], ci.image[b])) {
              fail(o.c4, o.why4, "canonical map not a homomorphism");
              break;
            }
      } catch (const std::exception& e) {
        fail(o.c4, o.why4, e.what());
      }
    }

    try {
      auto rec = recover_presentation(T, L);
      const auto& Q = rec.presentation;
      if (!((Q.r - 1) * Q.t1() <= Q.s && (Q.r == 1 || Q.s < Q.r * Q.t1()))) fail(o.c5, o.why5, "recovered t_1 bounds");
      TableRing T2 = to_table(*QuotientRing::make(Q), opt.ring_bound);
      if (!brute_force_iso(T2, T, IsoOptions{opt.ring_bound, false})) fail(o.c5, o.why5, "recovered ring not isomorphic");
    } catch (const std::exception& e) {
      fail(o.c5, o.why5, e.what());
    }

    std::string why;
    if (!canonicity(R, why)) fail(o.c9, o.why9, why);
    if (!rep.find("idempotence")->pass) fail(o.c9, o.why9, rep.find("idempotence")->detail);
    if (rep.find("quotient_order") && !rep.find("quotient_order")->pass)
      fail(o.c9, o.why9, rep.find("quotient_order")->detail);
  } catch (const std::exception& e) {
    fail(o.c1, o.why1, e.what());
  }
  return o;
}

/// Runs fn(i) for i in [0, n) on opt.threads workers.
inline void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
}

struct SweepResult {
  std::vector<CriterionResult> criteria;  // 1, 2 (sweep part), 3, 4, 5, 9
  u64 rings = 0;
  double seconds = 0;        // wall time of the whole sweep
  double c1_seconds = 0;     // criterion-1 work per worker thread
  unsigned threads = 1;
};

inline SweepResult presentation_sweep(const SweepOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  auto pres = enumerate_presentations(opt);
  std::vector<RingOutcome> outs(pres.size());
  parallel_for(pres.size(), opt.threads, [&](std::size_t i) { outs[i] = check_ring(pres[i], opt); });
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  SweepResult res;
  res.rings = pres.size();
  res.seconds = secs;
  res.threads = std::max(1u, opt.threads);
  for (const auto& o : outs) res.c1_seconds += o.c1_seconds;
  res.c1_seconds /= res.threads;
  auto make = [&](int id, const char* name, bool RingOutcome::*flag, std::string RingOutcome::*why, bool char_p_only) {
    CriterionResult c;
    c.id = id;
    c.name = name;
    c.seconds = secs;
    for (std::size_t i = 0; i < outs.size(); ++i) {
      if (char_p_only && !outs[i].char_p) continue;
      ++c.cases;
      if (!(outs[i].*flag)) {
        if (!c.failures) c.detail = describe(pres[i]) + ": " + outs[i].*why;
        ++c.failures;
      }
    }
    c.pass = c.failures == 0;
    return c;
  };
  res.criteria.push_back(make(1, "presentation sweep", &RingOutcome::c1, &RingOutcome::why1, false));
  res.criteria.push_back(make(2, "r <= s <= t invariants (sweep)", &RingOutcome::c2, &RingOutcome::why2, false));
  res.criteria.push_back(make(3, "coefficient field (sweep)", &RingOutcome::c3, &RingOutcome::why3, true));
  res.criteria.push_back(make(4, "canonical char-p isomorphism", &RingOutcome::c4, &RingOutcome::why4, true));
  res.criteria.push_back(make(5, "presentation round trip", &RingOutcome::c5, &RingOutcome::why5, false));
  res.criteria.push_back(make(9, "canonicity", &RingOutcome::c9, &RingOutcome::why9, false));
  return res;
}

/// Known-answer rings outside the presentation sweep: Z/p^k, F_q[T]/(T^k), F_p[x,y]/(x,y)^2.
inline std::vector<std::pair<std::string, TableRing>> oracle_rings() {
  std::vector<std::pair<std::string, TableRing>> out;
  for (u64 p : {2, 3}) {
    for (unsigned k = 1; checked_pow(p, k) <= 729; ++k)
      out.emplace_back("Z/" + std::to_string(p) + "^" + std::to_string(k), zmod_table(p, k));
    for (unsigned d = 1; d <= 2; ++d) {
      FieldRep F(p, gen_irreducible(p, d));
      for (unsigned k = 1; checked_pow(F.size(), k) <= 729; ++k)
        out.emplace_back("F_" + std::to_string(F.size()) + "[T]/(T^" + std::to_string(k) + ")", truncated_poly_table(F, k));
    }
    out.emplace_back("F_" + std::to_string(p) + "[x,y]/(x,y)^2", fp_xy_square_table(p));
  }
  return out;
}

inline CriterionResult lemma21_oracle_rings() {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult c = criterion(2, "r <= s <= t invariants (oracle rings)");
  for (const auto& [name, T] : oracle_rings()) {
    ++c.cases;
    try {
      auto st = lemma21_stats(T);
      if (!st.inequalities_hold()) throw MathError("r <= s <= t fails");
    } catch (const std::exception& e) {
      if (!c.failures) c.detail = name + ": " + e.what();
      ++c.failures;
    }
  }
  c.pass = c.failures == 0;
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

inline CriterionResult coefficient_field_non_pir() {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult c = criterion(3, "coefficient field (non-PIR F_p[x,y]/(x,y)^2)");
  std::string summary;
  for (u64 p : {2, 3}) {
    ++c.cases;
    TableRing T = fp_xy_square_table(p);
    try {
      if (is_pir(T)) throw std::logic_error("expected a non-PIR");
      auto A = coefficient_field(T);
      if (A.members.size() != p || !A.binomial_identity) throw std::logic_error("invariants");
    } catch (const std::exception& e) {
      if (!c.failures) c.detail = "p=" + std::to_string(p) + ": " + e.what();
      ++c.failures;
    }
  }
  c.pass = c.failures == 0;
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

inline CriterionResult catalog_criterion(unsigned threads) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult c = criterion(6, "few-ideal family catalogs");
  std::vector<std::tuple<u64, unsigned>> jobs;
  for (u64 p : {2, 3})
    for (unsigned ideals = 1; ideals <= 3; ++ideals) jobs.emplace_back(p, ideals);
  std::vector<std::vector<CatalogEntry>> results(jobs.size());
  std::vector<std::string> errors(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t i) {
    try {
      results[i] = catalog(std::get<0>(jobs[i]), 1, std::get<1>(jobs[i]));
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  auto fail = [&](const std::string& msg) {
    if (!c.failures) c.detail = msg;
    ++c.failures;
  };
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto [p, ideals] = jobs[i];
    std::string tag = "p=" + std::to_string(p) + " c=" + std::to_string(ideals) + " ";
    if (!errors[i].empty()) fail(tag + errors[i]);
    for (const auto& e : results[i]) {
      ++c.cases;
      if (e.nontrivial_ideals != ideals) fail(tag + e.label + ": " + std::to_string(e.nontrivial_ideals) + " ideals");
      if (!e.certified) fail(tag + e.label + ": recovered presentation not certified");
      if (ideals == 3 && e.characteristic == p * p * p) fail(tag + e.label + ": characteristic p^3");
      if (ideals == 3 && e.r == 2 && e.p_valuation != 2 && e.p_valuation != 3) fail(tag + e.label + ": v(p)");
      if (ideals == 3 && e.r == 4 && e.p_valuation != 1) fail(tag + e.label + ": v(p) for char p^4");
    }
  }
  c.pass = c.failures == 0;
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

/// Quadratic-family isomorphism criteria against the oracle over every u-parameter choice.
inline CriterionResult quadratic_iso_criterion() {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult c = criterion(7, "isomorphism criteria vs oracle");
  auto fail = [&](const std::string& msg) {
    if (!c.failures) c.detail = msg;
    ++c.failures;
  };
  struct Base {
    u64 p;
    UniPoly g;
  };
  std::vector<Base> bases;
  {
    Modulus m3(3, 2), m2(2, 2);
    bases.push_back({3, UniPoly(m3, {0, 1})});
    bases.push_back({2, UniPoly(m2, {0, 1})});
    bases.push_back({2, UniPoly(m2, {1, 1, 1})});
  }
  auto units = [](const Base& b) {
    std::vector<UniPoly> out;
    unsigned d = static_cast<unsigned>(b.g.degree());
    for (u64 i = 1; i < checked_pow(b.p, d); ++i) out.push_back(digit_poly(b.g.modulus(), d, i));
    return out;
  };
  auto table = [](const Presentation& P) { return to_table(*QuotientRing::make(P)); };
  for (const auto& b1 : bases)
    for (const auto& b2 : bases) {
      if (b1.p != b2.p) continue;
      for (const auto& u1 : units(b1))
        for (const auto& u2 : units(b2)) {
          ++c.cases;
          Prop44Instance in{b1.p, b1.g, b2.g, u1, u2};
          auto verdict = prop44_test(in);
          TableRing T1 = table(quadratic_presentation(b1.p, b1.g, u1));
          TableRing T2 = table(quadratic_presentation(b2.p, b2.g, u2));
          bool iso = brute_force_iso(T1, T2).has_value();
          std::string tag = "p=" + std::to_string(b1.p) + " g1=" + b1.g.to_string() + " g2=" + b2.g.to_string() +
                            " u1=" + u1.to_string() + " u2=" + u2.to_string();
          if (iso && !verdict.necessary) fail("prop44_test necessary condition missed: " + tag);
          if (b1.g == b2.g) {
            bool hyp = false;
            try {
              prop44_construct(b1.p, b1.g, u1, u2);
              hyp = true;
            } catch (const MathError&) {
            } catch (const std::exception& e) {
              fail("prop44_construct map failed verification: " + tag + ": " + e.what());
            }
            if (hyp && !iso) fail("prop44_construct hypothesis holds but oracle finds no isomorphism: " + tag);
          }
          for (const auto& u3 : units(b1))
            for (const auto& u4 : units(b2)) {
              ++c.cases;
              Prop45Instance in5{b1.p, b1.g, b2.g, u1, u2, u3, u4};
              auto v5 = prop45_test(in5);
              TableRing S1 = table(quadratic_presentation(b1.p, b1.g, u1, u3));
              TableRing S2 = table(quadratic_presentation(b2.p, b2.g, u2, u4));
              bool iso5 = brute_force_iso(S1, S2).has_value();
              std::string tag5 = tag + " u3=" + u3.to_string() + " u4=" + u4.to_string();
              if (iso5 && !v5.necessary) fail("prop45_test necessary condition missed: " + tag5);
              if (v5.sufficient.value_or(false) && !iso5) fail("prop45_test sufficient but not isomorphic: " + tag5);
            }
        }
    }
  // goldens: u1 = 1 vs u2 = 2 (non-isomorphic), u1 = 1 vs u2 = 4 (isomorphic) at p = 3, g = X
  Modulus m(3, 2);
  UniPoly g(m, {0, 1});
  auto goldens = {std::make_pair(u64{2}, false), std::make_pair(u64{4}, true)};
  for (auto [u2, expect] : goldens) {
    ++c.cases;
    bool iso = brute_force_iso(table(quadratic_presentation(3, g, UniPoly(m, {1}))),
                               table(quadratic_presentation(3, g, UniPoly(m, {u2}))))
                   .has_value();
    bool nec = prop44_test(Prop44Instance{3, g, g, UniPoly(m, {1}), UniPoly(m, {u2})}).necessary;
    if (iso != expect || nec != expect) fail("golden u1=1, u2=" + std::to_string(u2));
  }
  c.pass = c.failures == 0;
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

inline CriterionResult two_generated_criterion() {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult c = criterion(8, "p+2 bound for non-cyclic (x,y)");
  auto fail = [&](const std::string& msg) {
    if (!c.failures) c.detail = msg;
    ++c.failures;
  };
  std::string summary;
  for (u64 p : {2, 3}) {
    ++c.cases;
    TableRing T = fp_xy_square_table(p);
    const std::size_t x = p, y = p * p;  // index b p + c p^2 of b x + c y
    auto rep = two_generated_check(T, x, y);
    std::size_t total = count_nontrivial(T, all_ideals(T));
    if (rep.cyclic) fail("(x,y) reported cyclic");
    if (rep.nontrivial_ideals != total) fail("count mismatch");
    if (p == 2 && total != 4) fail("F_2 analogue has " + std::to_string(total) + " nontrivial ideals");
    if (p == 3 && total < 5) fail("F_3 analogue has " + std::to_string(total) + " nontrivial ideals");
    if (rep.witnesses.size() != p + 2 || !rep.witnesses_distinct) fail("witnesses");
    if (p == 2) {
      // (x,y), (y), (x), (x+y)
      std::vector<std::size_t> gens{x, y, x, T.add(x, y)};
      for (std::size_t i = 1; i < 4; ++i)
        if (!(rep.witnesses[i] == principal_ideal(T, gens[i]))) fail("witness order");
    }
    summary += (summary.empty() ? "F_" : ", F_") + std::to_string(p) + ": " + std::to_string(total) + " nontrivial";
  }
  if (!c.failures) c.detail = summary;
  c.pass = c.failures == 0;
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

/// All criteria in id order; sweep criteria carry the sweep wall time.
inline std::vector<CriterionResult> run_all(const SweepOptions& opt) {
  std::vector<CriterionResult> out;
  auto sweep = presentation_sweep(opt);
  for (auto& c : sweep.criteria) out.push_back(c);
  auto& c1 = out[0];
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << sweep.rings << " presentations; criterion-1 work " << sweep.c1_seconds << " s per thread ("
     << sweep.threads << " threads, limit " << opt.time_limit_seconds << " s); whole sweep " << sweep.seconds << " s";
  c1.detail = (c1.pass ? std::string() : c1.detail + "; ") + os.str();
  if (sweep.c1_seconds > opt.time_limit_seconds) c1.pass = false;
  out.push_back(lemma21_oracle_rings());
  out.push_back(coefficient_field_non_pir());
  out.push_back(catalog_criterion(opt.threads));
  out.push_back(quadratic_iso_criterion());
  out.push_back(two_generated_criterion());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

}  // namespace chainring::selftest
