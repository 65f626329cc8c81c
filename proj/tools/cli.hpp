#pragma once

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chainring/catalog.hpp"
#include "chainring/certify.hpp"
#include "chainring/ideals.hpp"
#include "chainring/iso.hpp"
#include "chainring/json_io.hpp"
#include "chainring/selftest.hpp"
#include "chainring/structure.hpp"

namespace chainring::cli {

using nlohmann::json;
namespace jio = chainring::json;

enum ExitCode : int { kOk = 0, kMath = 1, kUsage = 2 };

struct Bounds {
  u64 table = 4096;   // largest ring turned into tables
  u64 ideals = 4096;  // largest ring whose ideal lattice is enumerated
  u64 iso = 729;      // largest ring handed to the isomorphism oracle
  u64 samples = 100000;
};

namespace detail {

inline u64 env_or(const char* name, u64 fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  unsigned long long x = std::strtoull(v, &end, 10);
  if (*end) throw CLI::ValidationError(std::string(name) + " must be a nonnegative integer");
  return x;
}

/// A parsed input: a presentation, a table ring, or a quadratic instance {p, g, u, c?}.
struct Input {
  std::optional<Presentation> presentation;
  std::optional<TableRing> table;
  struct Quadratic {
    u64 p;
    UniPoly g, u;
    std::optional<UniPoly> c;
  };
  std::optional<Quadratic> quadratic;
};

inline Input parse_input(const std::string& arg, const Bounds& b) {
  json j = jio::read_input(arg);
  if (!j.is_object()) throw jio::FormatError("input must be a JSON object");
  Input in;
  if (j.contains("add")) {
    in.table = jio::table_from_json(j, std::min<u64>(b.table, TableRing::kMaxOrder));
  } else if (j.contains("u") && !j.contains("r")) {
    for (const char* k : {"p", "g"})
      if (!j.contains(k)) throw jio::FormatError(std::string("quadratic instance is missing \"") + k + "\"");
    u64 p = j.at("p").get<u64>();
    if (!is_prime(p)) throw MathError("p is not prime");
    Modulus m(p, 2);
    Input::Quadratic q{p, jio::uni_from_json(j.at("g"), m), jio::uni_from_json(j.at("u"), m), std::nullopt};
    if (j.contains("c")) q.c = jio::uni_from_json(j.at("c"), m);
    in.presentation = quadratic_presentation(q.p, q.g, q.u, q.c);
    in.quadratic = q;
  } else {
    in.presentation = jio::presentation_from_json(j);
  }
  return in;
}

inline TableRing table_of(const Input& in, const Bounds& b) {
  if (in.table) return *in.table;
  return to_table(*QuotientRing::make(*in.presentation), std::min<u64>(b.table, TableRing::kMaxOrder));
}

/// Element names: normal forms for presentations, indices for tables.
inline std::vector<std::string> element_names(const Input& in, std::size_t n) {
  std::vector<std::string> out(n);
  if (in.presentation) {
    auto R = QuotientRing::make(*in.presentation);
    for (std::size_t i = 0; i < n; ++i) out[i] = R->to_string(R->from_index(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) out[i] = "e" + std::to_string(i);
  }
  return out;
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

/// Emits json, or a text rendering, or csv where the command supports it.
class Emitter {
 public:
  Emitter(std::ostream& out, std::string format) : out_(out), format_(std::move(format)) {}
  const std::string& format() const { return format_; }
  void emit(const json& j, const std::string& text, const std::string& csv = {}) {
    if (format_ == "json") {
      out_ << j.dump(2) << "\n";
    } else if (format_ == "text") {
      out_ << text;
    } else {
      if (csv.empty()) throw CLI::ValidationError("--format csv is only supported by catalog and ring elements");
      out_ << csv;
    }
  }

 private:
  std::ostream& out_;
  std::string format_;
};

}  // namespace detail

/// Runs the command line given as args (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite chain rings: presentations, tables, ideals, structure and isomorphism", "chainring"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  Bounds b;
  u64 table_bound = 0, ideal_bound = 0, iso_bound = 0, samples = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--table-bound", table_bound, "Largest ring order turned into tables [env CHAINRING_TABLE_BOUND]");
  app.add_option("--ideal-bound", ideal_bound, "Largest ring whose ideals are enumerated [env CHAINRING_IDEAL_BOUND]");
  app.add_option("--iso-bound", iso_bound, "Largest ring handed to the isomorphism oracle [env CHAINRING_ISO_BOUND]");
  app.add_option("--samples", samples, "Random samples for non-exhaustive certification [env CHAINRING_SAMPLES]");

  auto* ring = app.add_subcommand("ring", "Inspect one ring");
  ring->require_subcommand(1);
  ring->fallthrough();
  std::string input, input2;
  auto one_input = [&](CLI::App* c) { c->add_option("input", input, "Ring JSON (file path or inline)")->required(); };
  auto* c_new = ring->add_subcommand("new", "Validate and certify a presentation");
  auto* c_elems = ring->add_subcommand("elements", "List elements");
  auto* c_ideals = ring->add_subcommand("ideals", "Ideal lattice and chain report");
  auto* c_pir = ring->add_subcommand("check-pir", "Locality and principal ideal check");
  auto* c_stats = ring->add_subcommand("stats", "Characteristic p^r, nilpotency index s, |R| = p^t");
  auto* c_coeff = ring->add_subcommand("coeff-field", "Coefficient field of a prime-characteristic local ring");
  auto* c_canon = ring->add_subcommand("canon", "Canonical isomorphism F_q[T]/(T^s) -> R");
  auto* c_present = ring->add_subcommand("present", "Recover a presentation");
  auto* c_iso = ring->add_subcommand("iso", "Isomorphism of two rings: criterion and oracle");
  for (auto* c : {c_new, c_elems, c_ideals, c_pir, c_stats, c_coeff, c_canon, c_present, c_iso}) one_input(c);
  c_iso->add_option("other", input2, "Second ring JSON")->required();

  auto* c_cat = app.add_subcommand("catalog", "Family members with a given number of nontrivial ideals");
  u64 cat_p = 2;
  unsigned cat_d = 1, cat_c = 1;
  u64 max_per_case = 0;
  bool dedup = false;
  c_cat->add_option("--p", cat_p, "Residue characteristic")->required();
  c_cat->add_option("--d", cat_d, "Residue degree")->default_val(1);
  c_cat->add_option("--ideals", cat_c, "Number of nontrivial ideals (1..3)")->required();
  c_cat->add_option("--max-per-case", max_per_case, "Members per family (0 = all)");
  c_cat->add_flag("--dedup", dedup, "Group members into isomorphism classes");

  auto* c_self = app.add_subcommand("selftest", "Run the invariant suite");
  bool quick = false;
  unsigned threads = 0;
  c_self->add_flag("--quick", quick, "Smaller presentation sweep (s <= 2, |R| <= 256)");
  c_self->add_option("--threads", threads, "Worker threads (default: hardware concurrency)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    b.table = table_bound ? table_bound : detail::env_or("CHAINRING_TABLE_BOUND", b.table);
    b.ideals = ideal_bound ? ideal_bound : detail::env_or("CHAINRING_IDEAL_BOUND", b.ideals);
    b.iso = iso_bound ? iso_bound : detail::env_or("CHAINRING_ISO_BOUND", b.iso);
    b.samples = samples ? samples : detail::env_or("CHAINRING_SAMPLES", b.samples);
    detail::Emitter em(out, format);
    const u64 table_cap = std::min<u64>(b.table, TableRing::kMaxOrder);

    if (c_new->parsed()) {
      auto in = detail::parse_input(input, b);
      if (!in.presentation) throw MathError("ring new expects a presentation");
      auto R = QuotientRing::make(*in.presentation);
      CertifyOptions co;
      co.samples = b.samples;
      auto rep = certify(R, co);
      json j = {{"presentation", jio::to_json(*in.presentation)},
                {"order", R->order() ? json(*R->order()) : json(nullptr)},
                {"characteristic", checked_pow(R->p(), R->r())},
                {"certificate", jio::to_json(rep)}};
      std::ostringstream t;
      t << "order " << (R->order() ? std::to_string(*R->order()) : std::string("> 2^64")) << ", characteristic "
        << checked_pow(R->p(), R->r()) << "\n";
      for (const auto& c : rep.checks)
        t << (c.pass ? "pass " : "FAIL ") << c.name << (c.exhaustive ? " (exhaustive, " : " (sampled, ") << c.cases
          << " cases)" << (c.pass ? "" : ": " + c.detail) << "\n";
      em.emit(j, t.str());
      return rep.pass() ? kOk : kMath;
    }

    if (c_elems->parsed()) {
      auto in = detail::parse_input(input, b);
      std::size_t n;
      if (in.presentation) {
        n = QuotientRing::make(*in.presentation)->order_checked(table_cap);
      } else {
        n = in.table->size();
      }
      auto names = detail::element_names(in, n);
      json a = json::array();
      std::string text, csv = "index,element\n";
      for (std::size_t i = 0; i < n; ++i) {
        a.push_back({{"index", i}, {"element", names[i]}});
        text += std::to_string(i) + "  " + names[i] + "\n";
        csv += std::to_string(i) + "," + names[i] + "\n";
      }
      em.emit({{"order", n}, {"elements", a}}, text, csv);
      return kOk;
    }

    if (c_ideals->parsed()) {
      auto in = detail::parse_input(input, b);
      TableRing T = detail::table_of(in, b);
      auto ideals = all_ideals(T, b.ideals);
      auto names = detail::element_names(in, T.size());
      std::size_t nontrivial = count_nontrivial(T, ideals);
      bool chain = true;
      for (std::size_t i = 1; i < ideals.size(); ++i) chain = chain && ideals[i - 1].subset_of(ideals[i]);
      std::vector<std::string> labels;
      json a = json::array();
      for (auto& I : ideals) {
        bool principal = find_generator(T, I);
        std::string label = I.size() == 1 ? "0"
                            : I.size() == T.size() ? "R"
                            : principal ? "(" + names[*I.generator] + ")"
                                        : "non-principal";
        labels.push_back(label);
        json j = jio::to_json(I);
        j["label"] = label;
        j["principal"] = principal;
        a.push_back(j);
      }
      std::string lattice = detail::join(labels, chain ? " ⊂ " : ", ");
      json j = {{"order", T.size()}, {"nontrivial", nontrivial}, {"chain", chain}, {"lattice", lattice}, {"ideals", a}};
      em.emit(j, lattice + "\n" + std::to_string(nontrivial) + " nontrivial ideal" + (nontrivial == 1 ? "" : "s") +
                     (chain ? ", totally ordered" : ", not a chain") + "\n");
      return kOk;
    }

    if (c_pir->parsed()) {
      auto in = detail::parse_input(input, b);
      TableRing T = detail::table_of(in, b);
      auto loc = is_local(T);
      json j = {{"order", T.size()}, {"local", loc.local}};
      std::string text = std::string("local: ") + (loc.local ? "yes" : "no") + "\n";
      bool pir = is_pir(T, b.ideals);
      j["pir"] = pir;
      text += std::string("principal ideal ring: ") + (pir ? "yes" : "no") + "\n";
      if (loc.local) {
        auto names = detail::element_names(in, T.size());
        Ideal m = loc.maximal;
        unsigned sigma = nilpotency_index(T, m);
        j["nilpotency_index"] = sigma;
        text += "nilpotency index of m: " + std::to_string(sigma) + "\n";
        if (find_generator(T, m) && m.generator) {
          j["maximal_generator"] = names[*m.generator];
          text += "m = (" + names[*m.generator] + ")\n";
        } else {
          j["maximal_generator"] = nullptr;
        }
        j["chain_ring"] = pir;
      }
      em.emit(j, text);
      return kOk;
    }

    if (c_stats->parsed()) {
      auto in = detail::parse_input(input, b);
      TableRing T = detail::table_of(in, b);
      auto st = lemma21_stats(T);
      std::ostringstream t;
      t << "p = " << st.p << ", char = p^" << st.r << ", nilpotency index = " << st.s << ", |R| = p^" << st.t
        << ", r <= s <= t: " << (st.inequalities_hold() ? "holds" : "FAILS") << "\n";
      em.emit(jio::to_json(st), t.str());
      return st.inequalities_hold() ? kOk : kMath;
    }

    if (c_coeff->parsed()) {
      auto in = detail::parse_input(input, b);
      TableRing T = detail::table_of(in, b);
      auto A = coefficient_field(T);
      auto names = detail::element_names(in, T.size());
      std::vector<std::string> members;
      for (auto x : A.members) members.push_back(names[x]);
      json j = {{"q", A.members.size()},    {"beta", names[A.beta]}, {"beta_order", A.order},
                {"t", A.t},                 {"members", members},    {"binomial_identity", A.binomial_identity}};
      em.emit(j, "A = {" + detail::join(members, ", ") + "}, |A| = " + std::to_string(A.members.size()) +
                     ", beta = " + names[A.beta] + " of order " + std::to_string(A.order) + "\n");
      return kOk;
    }

    if (c_canon->parsed()) {
      auto in = detail::parse_input(input, b);
      TableRing T = detail::table_of(in, b);
      auto ci = char_p_canonical_iso(T);
      auto names = detail::element_names(in, T.size());
      json img = json::array();
      std::string text = "F_" + std::to_string(ci.field.size()) + "[T]/(T^" + std::to_string(ci.sigma) +
                         ") -> R, T -> " + names[ci.alpha] + ", X -> " + names[ci.field_root] + "\n";
      for (std::size_t i = 0; i < ci.image.size(); ++i) img.push_back(names[ci.image[i]]);
      json j = {{"field", jio::to_json(ci.field)}, {"sigma", ci.sigma},        {"alpha", names[ci.alpha]},
                {"field_root", names[ci.field_root]}, {"image", img}};
      em.emit(j, text);
      return kOk;
    }

    if (c_present->parsed()) {
      auto in = detail::parse_input(input, b);
      TableRing T = detail::table_of(in, b);
      auto rec = recover_presentation(T);
      auto names = detail::element_names(in, T.size());
      json j = {{"presentation", jio::to_json(rec.presentation)},
                {"alpha", names[rec.alpha]},
                {"beta", names[rec.beta]}};
      std::string verified = "not checked (order above --iso-bound)";
      if (T.size() <= b.iso) {
        TableRing T2 = to_table(*QuotientRing::make(rec.presentation), table_cap);
        bool ok = brute_force_iso(T2, T, IsoOptions{static_cast<std::size_t>(b.iso), true}).has_value();
        j["isomorphic_to_input"] = ok;
        verified = ok ? "isomorphic to the input" : "NOT isomorphic to the input";
        if (!ok) {
          em.emit(j, verified + "\n");
          return kMath;
        }
      } else {
        j["isomorphic_to_input"] = nullptr;
      }
      em.emit(j, jio::to_json(rec.presentation).dump() + "\nalpha = " + names[rec.alpha] + ", beta = " +
                     names[rec.beta] + "; " + verified + "\n");
      return kOk;
    }

    if (c_iso->parsed()) {
      auto a = detail::parse_input(input, b), c = detail::parse_input(input2, b);
      json j;
      std::optional<bool> criterion;
      std::string crit_text = "no criterion applies";
      if (a.quadratic && c.quadratic && a.quadratic->p == c.quadratic->p &&
          a.quadratic->c.has_value() == c.quadratic->c.has_value()) {
        const auto &qa = *a.quadratic, &qc = *c.quadratic;
        if (!qa.c) {
          auto v = prop44_test(Prop44Instance{qa.p, qa.g, qc.g, qa.u, qc.u});
          json cj = {{"test", "prop44"}, {"necessary", v.necessary}};
          if (!v.necessary) {
            criterion = false;
          } else if (qa.g.mod_p() == qc.g.mod_p()) {
            auto map = prop44_construct(qa.p, qa.g, qa.u, qc.u);
            cj["w1"] = jio::to_json(map.w1);
            criterion = true;
          }
          j["criterion"] = cj;
        } else {
          auto v = prop45_test(Prop45Instance{qa.p, qa.g, qc.g, qa.u, qc.u, *qa.c, *qc.c});
          json cj = {{"test", "prop45"}, {"necessary", v.necessary}};
          if (v.sufficient) cj["sufficient"] = *v.sufficient;
          if (!v.necessary) criterion = false;
          else if (v.sufficient.value_or(false)) criterion = true;
          j["criterion"] = cj;
        }
        crit_text = criterion ? (*criterion ? "isomorphic" : "non-isomorphic") : "undecided";
      }
      TableRing A = detail::table_of(a, b), C = detail::table_of(c, b);
      std::optional<bool> oracle;
      if (A.size() != C.size()) {
        oracle = false;
      } else if (A.size() <= b.iso) {
        oracle = brute_force_iso(A, C, IsoOptions{static_cast<std::size_t>(b.iso), true}).has_value();
      }
      std::optional<bool> verdict = oracle ? oracle : criterion;
      bool agree = !(oracle && criterion) || *oracle == *criterion;
      j["oracle"] = oracle ? json(*oracle) : json(nullptr);
      j["criterion_verdict"] = criterion ? json(*criterion) : json(nullptr);
      j["agree"] = agree;
      std::string word = verdict ? (*verdict ? "isomorphic" : "non-isomorphic") : "undecided";
      j["verdict"] = word;
      std::string text = word + " (criterion: " + crit_text + "; oracle: " +
                         (oracle ? (*oracle ? "isomorphic" : "non-isomorphic") : std::string("not run")) + ")" +
                         (oracle && criterion ? (agree ? ", criterion and oracle agree" : ", DISAGREE") : "") + "\n";
      em.emit(j, text);
      return agree ? kOk : kMath;
    }

    if (c_cat->parsed()) {
      CatalogOptions co;
      co.ring_bound = b.table;
      co.max_per_case = max_per_case;
      co.dedup = dedup;
      co.iso_bound = b.iso;
      auto rows = catalog(cat_p, cat_d, cat_c, co);
      json a = json::array();
      std::ostringstream t;
      for (const auto& e : rows) {
        a.push_back(jio::to_json(e));
        std::string params;
        for (const auto& [k, v] : e.params) params += (params.empty() ? "" : " ") + k + "=" + jio::poly_compact(v);
        t << std::left << std::setw(5) << e.label << " |R|=" << e.order << " char=" << e.characteristic
          << " ideals=" << e.nontrivial_ideals << (dedup ? " class=" + std::to_string(e.iso_class) : std::string())
          << "  " << params << "\n";
      }
      em.emit(a, t.str(), jio::catalog_csv(rows));
      return kOk;
    }

    if (c_self->parsed()) {
      selftest::SweepOptions so;
      if (threads) so.threads = threads;
      if (quick) so.s_max = 2, so.ring_bound = 256;
      auto results = selftest::run_all(so);
      json a = json::array();
      std::ostringstream t;
      bool all = true;
      for (const auto& c : results) {
        all = all && c.pass;
        a.push_back({{"criterion", c.id},
                     {"name", c.name},
                     {"pass", c.pass},
                     {"cases", c.cases},
                     {"failures", c.failures},
                     {"detail", c.detail}});
        t << (c.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << c.cases << " cases, "
          << c.failures << " failures" << (c.detail.empty() ? "" : "; " + c.detail) << "\n";
      }
      em.emit({{"pass", all}, {"criteria", a}}, t.str());
      return all ? kOk : kMath;
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const jio::FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundError& e) {
    err << "error: bound exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const MathError& e) {
    err << "rejected: " << e.what() << "\n";
    return kMath;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kMath;
  }
  return kUsage;
}

}  // namespace chainring::cli
