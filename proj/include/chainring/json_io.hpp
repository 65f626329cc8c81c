#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "chainring/catalog.hpp"
#include "chainring/certify.hpp"
#include "chainring/ideals.hpp"
#include "chainring/iso.hpp"
#include "chainring/structure.hpp"

namespace chainring::json {

using nlohmann::json;

/// Malformed input (wrong shape, missing keys); distinct from mathematical rejection.
struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline json to_json(const UniPoly& f) {
  json a = json::array();
  for (auto c : f.coeffs()) a.push_back(c);
  return a;
}

inline UniPoly uni_from_json(const json& j, const Modulus& m) {
  if (!j.is_array()) throw FormatError("polynomial must be an array of coefficients");
  std::vector<u64> c;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) throw FormatError("coefficients must be nonnegative integers");
    c.push_back(x.get<u64>());
  }
  return UniPoly(m, std::move(c));
}

inline json to_json(const FieldRep& K) { return {{"p", K.p()}, {"modulus", to_json(K.modulus())}}; }

inline FieldRep field_from_json(const json& j) {
  if (!j.contains("p") || !j.contains("modulus")) throw FormatError("field needs p and modulus");
  u64 p = j.at("p").get<u64>();
  if (!is_prime(p)) throw MathError("p is not prime");
  return FieldRep(p, uni_from_json(j.at("modulus"), Modulus(p, 1)));
}

inline json to_json(const FieldRep& K, const FieldElem& e) { return to_json(K.to_poly(e)); }

inline json to_json(const Presentation& P) {
  json pr = json::array(), gr = json::array();
  for (const auto& t : P.p_rel) pr.push_back({{"t", t.exp}, {"u", to_json(t.poly)}});
  for (const auto& t : P.g_rel) gr.push_back({{"s", t.exp}, {"v", to_json(t.poly)}});
  return {{"p", P.p}, {"r", P.r}, {"s", P.s}, {"g", to_json(P.g)}, {"p_rel", pr}, {"g_rel", gr}};
}

inline Presentation presentation_from_json(const json& j) {
  for (const char* k : {"p", "r", "s", "g"})
    if (!j.contains(k)) throw FormatError(std::string("presentation is missing \"") + k + "\"");
  Presentation P;
  P.p = j.at("p").get<u64>();
  P.r = j.at("r").get<unsigned>();
  P.s = j.at("s").get<unsigned>();
  if (!is_prime(P.p)) throw MathError("p = " + std::to_string(P.p) + " is not prime");
  if (P.r < 1) throw MathError("r must be >= 1");
  Modulus m(P.p, P.r);
  P.g = uni_from_json(j.at("g"), m);
  auto terms = [&](const char* key, const char* e, const char* c) {
    std::vector<RelTerm> out;
    if (!j.contains(key)) return out;
    if (!j.at(key).is_array()) throw FormatError(std::string(key) + " must be an array");
    for (const auto& t : j.at(key)) {
      if (!t.contains(e) || !t.contains(c)) throw FormatError(std::string(key) + " entries need " + e + " and " + c);
      out.push_back(RelTerm{t.at(e).get<unsigned>(), uni_from_json(t.at(c), m)});
    }
    return out;
  };
  P.p_rel = terms("p_rel", "t", "u");
  P.g_rel = terms("g_rel", "s", "v");
  return P;
}

inline json to_json(const TableRing& R) {
  const std::size_t n = R.size();
  json add = json::array(), mul = json::array();
  for (std::size_t x = 0; x < n; ++x) {
    json ar = json::array(), mr = json::array();
    for (std::size_t y = 0; y < n; ++y) ar.push_back(R.add(x, y)), mr.push_back(R.mul(x, y));
    add.push_back(std::move(ar));
    mul.push_back(std::move(mr));
  }
  return {{"n", n}, {"add", add}, {"mul", mul}, {"zero", R.zero()}, {"one", R.one()}};
}

/// Parses and validates a table ring; axioms are checked before returning.
inline TableRing table_from_json(const json& j, std::size_t bound = 4096) {
  for (const char* k : {"n", "add", "mul", "zero", "one"})
    if (!j.contains(k)) throw FormatError(std::string("table ring is missing \"") + k + "\"");
  const std::size_t n = j.at("n").get<std::size_t>();
  if (n > bound) throw BoundError("table ring order exceeds bound " + std::to_string(bound));
  auto flat = [&](const char* key) {
    const auto& t = j.at(key);
    if (!t.is_array() || t.size() != n) throw FormatError(std::string(key) + " must have n rows");
    std::vector<TableRing::Idx> out;
    out.reserve(n * n);
    for (const auto& row : t) {
      if (!row.is_array() || row.size() != n) throw FormatError(std::string(key) + " rows must have n entries");
      for (const auto& v : row) {
        auto x = v.get<long long>();
        if (x < 0 || static_cast<std::size_t>(x) >= n) throw FormatError(std::string(key) + " entry out of range");
        out.push_back(static_cast<TableRing::Idx>(x));
      }
    }
    return out;
  };
  auto zero = j.at("zero").get<std::size_t>(), one = j.at("one").get<std::size_t>();
  if (zero >= n || one >= n) throw FormatError("zero/one out of range");
  TableRing R(n, flat("add"), flat("mul"), static_cast<TableRing::Idx>(zero), static_cast<TableRing::Idx>(one));
  std::string why;
  if (!check_ring_axioms(R, 64, 200000, &why)) throw MathError("not a commutative ring: " + why);
  return R;
}

inline json to_json(const CertReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(
        {{"name", c.name}, {"pass", c.pass}, {"exhaustive", c.exhaustive}, {"cases", c.cases}, {"detail", c.detail}});
  return {{"pass", rep.pass()}, {"checks", checks}};
}

inline json to_json(const Ideal& I) {
  json j = {{"size", I.size()}, {"members", I.members()}};
  j["generator"] = I.generator ? json(*I.generator) : json(nullptr);
  return j;
}

inline json to_json(const DigitExpansion& e) {
  json a = json::array();
  for (const auto& t : e) a.push_back({{"k", t.exp}, {"w", to_json(t.poly)}});
  return a;
}

inline json to_json(const Lemma21Stats& s) {
  return {{"p", s.p}, {"r", s.r}, {"s", s.s}, {"t", s.t}, {"inequalities_hold", s.inequalities_hold()}};
}

inline json to_json(const CatalogEntry& e) {
  json params = json::object();
  for (const auto& [k, v] : e.params) params[k] = to_json(v);
  return {{"case", e.label},
          {"params", params},
          {"p", e.p},
          {"r", e.r},
          {"order", e.order},
          {"char", e.characteristic},
          {"nontrivial_ideals", e.nontrivial_ideals},
          {"p_valuation", e.p_valuation},
          {"certified", e.certified},
          {"iso_class", e.iso_class},
          {"presentation", to_json(e.presentation)}};
}

inline std::string poly_compact(const UniPoly& f) {
  if (f.coeffs().empty()) return "[0]";
  std::string s = "[";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) s += (i ? " " : "") + std::to_string(f.coeff(i));
  return s + "]";
}

inline std::string catalog_csv(const std::vector<CatalogEntry>& rows) {
  std::ostringstream os;
  os << "case,params,order,char,nontrivial_ideals,iso_class\n";
  for (const auto& e : rows) {
    std::string params;
    for (const auto& [k, v] : e.params) params += (params.empty() ? "" : ";") + k + "=" + poly_compact(v);
    os << e.label << "," << params << "," << e.order << "," << e.characteristic << "," << e.nontrivial_ideals << ","
       << e.iso_class << "\n";
  }
  return os.str();
}

inline json to_json(const SquareWitness& w, const FieldRep& K2) {
  return {{"tau_index", w.tau}, {"tau_x", to_json(K2, w.tau_x)}, {"v2", to_json(K2, w.v2)}};
}

/// Reads inline JSON (argument starting with '{') or a file path.
inline json read_input(const std::string& arg) {
  std::string text;
  if (!arg.empty() && arg.front() == '{') {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw FormatError("cannot open " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace chainring::json
