#pragma once

#include <string>
#include <vector>

#include "chainring/poly.hpp"

namespace chainring {

/// One term  poly(X) * Y^exp  of a relation.
struct RelTerm {
  unsigned exp = 1;
  UniPoly poly;
  friend bool operator==(const RelTerm&, const RelTerm&) = default;
};

/// Parameters of the ideal
///   Q = (p Y^(s+1-t_1), Y^(s+1), p - sum u_i(X) Y^(t_i), g(X) - sum v_j(X) Y^(s_j))
/// of Z/p^r[X,Y]. For r = 1 the p-relation is absent (p_rel empty) and Q
/// reduces to (Y^(s+1), g - sum v_j Y^(s_j)). An empty g_rel means the
/// generator is g(X) alone.
struct Presentation {
  u64 p = 2;
  unsigned r = 1;
  unsigned s = 1;
  UniPoly g;
  std::vector<RelTerm> p_rel;  // (t_i, u_i)
  std::vector<RelTerm> g_rel;  // (s_j, v_j)

  Modulus modulus() const { return Modulus(p, r); }
  unsigned d() const { return static_cast<unsigned>(g.degree()); }
  u64 q() const { return checked_pow(p, d()); }
  /// |R| = q^(s+1); throws on overflow.
  u64 order() const { return checked_pow(q(), s + 1); }
  unsigned t1() const { return p_rel.empty() ? s + 1 : p_rel.front().exp; }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

namespace detail {

inline void check_terms(const Presentation& pr, const std::vector<RelTerm>& terms, const char* name,
                        std::vector<std::string>& out) {
  const unsigned d = pr.d();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    std::string tag = std::string(name) + "[" + std::to_string(i) + "]";
    if (t.exp < 1 || t.exp > pr.s) out.push_back(tag + ": exponent " + std::to_string(t.exp) + " outside [1, s]");
    if (i > 0 && t.exp <= terms[i - 1].exp) out.push_back(tag + ": exponents not strictly increasing");
    if (!(t.poly.modulus() == pr.modulus())) out.push_back(tag + ": polynomial over the wrong modulus");
    if (t.poly.degree() >= static_cast<int>(d)) out.push_back(tag + ": degree not below deg g");
    if (!t.poly.has_digit_coeffs()) out.push_back(tag + ": coefficients not in {0..p-1}");
    UniPoly gbar = pr.g.mod_p();
    if (gbar.is_monic() && gbar.degree() >= 1 && poly_rem_monic(t.poly.mod_p(), gbar).is_zero())
      out.push_back(tag + ": polynomial lies in (p, g)");
  }
}

}  // namespace detail

/// Checks every structural constraint; the report lists each violation.
inline ValidationReport validate(const Presentation& pr) {
  ValidationReport rep;
  auto& v = rep.violations;
  if (!is_prime(pr.p)) {
    v.push_back("p = " + std::to_string(pr.p) + " is not prime");
    return rep;
  }
  if (pr.r < 1) v.push_back("r must be >= 1");
  if (pr.s < 1) v.push_back("s must be >= 1");
  if (!v.empty()) return rep;
  try {
    (void)pr.modulus();
  } catch (const std::exception& e) {
    v.push_back(std::string("modulus: ") + e.what());
    return rep;
  }
  if (!(pr.g.modulus() == pr.modulus())) v.push_back("g is over the wrong modulus");
  if (!pr.g.is_monic() || pr.g.degree() < 1) {
    v.push_back("g must be monic of degree >= 1");
    return rep;
  }
  if (!pr.g.has_digit_coeffs()) v.push_back("g coefficients not in {0..p-1}");
  if (!is_irreducible_mod_p(pr.g, pr.p)) v.push_back("g is reducible mod p");

  detail::check_terms(pr, pr.p_rel, "p_rel", v);
  detail::check_terms(pr, pr.g_rel, "g_rel", v);

  if (pr.r == 1) {
    if (!pr.p_rel.empty()) v.push_back("p_rel must be empty when r = 1");
  } else if (pr.p_rel.empty()) {
    v.push_back("p_rel must be nonempty when r >= 2");
  } else {
    const unsigned t1 = pr.p_rel.front().exp;
    if ((pr.r - 1) * t1 > pr.s)
      v.push_back("(r-1)*t_1 <= s fails: " + std::to_string((pr.r - 1) * t1) + " > " + std::to_string(pr.s));
    if (!(pr.s < pr.r * t1))
      v.push_back("s < r*t_1 fails: " + std::to_string(pr.s) + " >= " + std::to_string(pr.r * t1));
  }
  return rep;
}

}  // namespace chainring
