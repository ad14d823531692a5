#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "pcompact/acceptance.hpp"
#include "pcompact/adams.hpp"
#include "pcompact/catalog.hpp"
#include "pcompact/error.hpp"
#include "pcompact/integrality.hpp"
#include "pcompact/invariants.hpp"
#include "pcompact/parallel.hpp"
#include "pcompact/polynomial.hpp"
#include "pcompact/serialize.hpp"
#include "pcompact/v1pi.hpp"

namespace pcompact::cli {

namespace {

using nlohmann::json;

enum class Format { kJson, kTable };

struct Common {
  std::string group = "29";
  std::string format = "json";
  Format fmt() const { return format == "table" ? Format::kTable : Format::kJson; }
};

void add_common(CLI::App* sub, Common& c, bool with_group = true) {
  if (with_group) sub->add_option("-g,--group", c.group, "29, 31 or 34 (G/X prefix allowed)")->capture_default_str();
  sub->add_option("--format", c.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
}

json valuation_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

// ---- invariants ------------------------------------------------------------

struct InvariantsArgs {
  Common c;
  int degree = 0;
  std::vector<std::string> checks;
};

int cmd_invariants(const InvariantsArgs& a, std::ostream& out) {
  const GroupId id = parse_group(a.c.group);
  const auto& gd = group_data(id);
  const auto fam = build_invariants(id);
  json j;
  j["group"] = group_name(id);
  j["prime"] = gd.prime;
  j["degrees"] = gd.degrees;
  j["polynomials"] = json::array();
  for (const auto& [d, f] : fam.polys) {
    if (a.degree && d != a.degree) continue;
    j["polynomials"].push_back({{"degree", d}, {"terms", f.size()}, {"poly", sympoly_to_json(f)}});
  }
  if (a.degree && j["polynomials"].empty())
    throw NotFound(group_name(id) + " has no generator in degree " + std::to_string(a.degree));
  bool ok = true;
  json checks = json::object();
  for (const auto& c : a.checks) {
    if (c == "invariance") {
      json r = json::array();
      for (const auto& [d, f] : fam.polys) {
        if (a.degree && d != a.degree) continue;
        if (id == GroupId::G34 && !a.degree && d > 12) continue;
        for (const auto& name : id == GroupId::G34 ? gd.special : std::vector<std::string>{}) {
          const bool inv = is_invariant(f, gd.generator(name));
          ok = ok && inv;
          r.push_back({{"degree", d}, {"generator", name}, {"invariant", inv}});
        }
        if (id != GroupId::G34)
          for (const auto& m : gd.generators) {
            const bool inv = is_invariant(f, m.matrix);
            ok = ok && inv;
            r.push_back({{"degree", d}, {"generator", m.name}, {"invariant", inv}});
          }
      }
      checks["invariance"] = r;
    } else if (c == "indecomposable") {
      json r = json::array();
      for (int d : gd.degrees) {
        if (d == gd.degrees.front() || (a.degree && d != a.degree)) continue;
        const auto v = indecomposable_mod_p(fam, d);
        r.push_back({{"degree", d}, {"decomposable_mod_p", v.decomposable}, {"products", v.products.size()}});
      }
      checks["indecomposable"] = r;
    } else if (c == "powersum") {
      if (id != GroupId::G34) throw Error("power-sum check applies to G34");
      PowerSumOptions raw;
      raw.normalize = false;
      const bool p3 = power_sum(3, raw).is_zero(), p4 = power_sum(4, raw).is_zero();
      const bool p6 = power_sum(6) == fam.at(6);
      ok = ok && p3 && p4 && p6;
      checks["powersum"] = {{"p3_zero", p3}, {"p4_zero", p4}, {"p6_equals_f6", p6}};
    } else if (c == "lattice") {
      if (id != GroupId::G34) throw Error("lattice check applies to G34");
      const auto rep = verify_lattice(lattice_vectors(), gd);
      ok = ok && rep.ok();
      json bullets = json::array();
      for (const auto& b : rep.bullets)
        bullets.push_back({{"image", b.description}, {"as_printed", b.as_printed}, {"ok", b.ok}});
      json gens = json::array();
      for (const auto& g : rep.generators) gens.push_back({{"generator", g.generator}, {"closed", g.closed}});
      checks["lattice"] = {{"count", rep.count}, {"norm_two", rep.all_norm_two}, {"generators", gens},
                           {"images", bullets}, {"ok", rep.ok()}};
    } else if (c == "f36") {
      if (id != GroupId::G34) throw Error("f36 decomposition applies to G34");
      const auto d = decompose_f36(fam);
      json q = json::array();
      for (const auto& x : d.q) q.push_back(to_string(x));
      ok = ok && d.residual_zero && d.all_seven_adic_units;
      checks["f36"] = {{"equations", d.equations}, {"rank", d.rank}, {"q", q},
                       {"residual_zero", d.residual_zero}, {"seven_adic_units", d.all_seven_adic_units}};
    } else if (c == "h42") {
      if (id != GroupId::G34) throw Error("h42 check applies to G34");
      const SymPoly h = divisibility_check_h42(fam);
      const auto v = decompose_mod_p(fam, h, 42, {6, 12, 18, 24, 30}, 7);
      ok = ok && !v.decomposable;
      checks["h42"] = {{"terms", h.size()}, {"seven_integral", h.denominator_lcm() % 7 != 0},
                       {"decomposable_mod_7", v.decomposable}};
    }
  }
  if (!a.checks.empty()) j["checks"] = checks;
  if (a.c.fmt() == Format::kJson) {
    out << j.dump(2) << "\n";
  } else {
    out << group_name(id) << " at p = " << gd.prime << "\n";
    for (const auto& [d, f] : fam.polys) {
      if (a.degree && d != a.degree) continue;
      out << "f" << d << " = " << f.to_string() << "\n";
    }
    if (!a.checks.empty()) out << "checks: " << checks.dump() << "\n";
  }
  return ok ? 0 : 1;
}

// ---- integrality -----------------------------------------------------------

struct IntegralityArgs {
  Common c;
  int line = 0;
  bool verify = false;
  bool derive = false;
  bool linear_only = false;
};

json combination_terms(const IntegralCombination& c) {
  json t = json::array();
  for (const auto& [m, q] : c.terms) t.push_back({{"monomial", fmonomial_to_string(m)}, {"coeff", to_string(q)}});
  return t;
}

int cmd_integrality(const IntegralityArgs& a, std::ostream& out) {
  const GroupId id = parse_group(a.c.group);
  const auto gs = group_setting(id);
  std::vector<int> bases;
  for (const auto& c : listed_combinations(id))
    if (!a.line || c.base_degree == a.line) bases.push_back(c.base_degree);
  if (bases.empty()) throw NotFound(group_name(id) + " has no listed line F" + std::to_string(a.line));
  const bool derive = a.derive && !a.verify;
  json j{{"group", group_name(id)}, {"prime", gs.prime}, {"cap", gs.cap}, {"mode", derive ? "derive" : "verify"}};
  j["lines"] = json::array();
  bool ok = true;
  std::ostringstream table;
  for (int base : bases) {
    if (derive) {
      const auto d = derive_combination(id, base, a.linear_only);
      ok = ok && d.ok;
      json steps = json::array();
      for (const auto& s : d.steps) {
        json cands = json::array(), res = json::array();
        for (const auto& m : s.candidates) cands.push_back(fmonomial_to_string(m));
        for (const auto& r : s.residues) res.push_back(r.get_str());
        steps.push_back({{"grading", s.grading}, {"k", s.k}, {"modulus", s.modulus.get_str()}, {"needed", s.needed},
                         {"solvable", s.solvable}, {"candidates", cands}, {"residues", res}});
      }
      j["lines"].push_back({{"base", base}, {"ok", d.ok}, {"terms", combination_terms(d.combination)}, {"steps", steps}});
      table << "F" << base << (d.ok ? "  integral through " + std::to_string(gs.cap) : "  FAILED") << "\n";
      for (const auto& [m, q] : d.combination.terms)
        table << "    " << pad(fmonomial_to_string(m), 16) << to_string(q) << "\n";
    } else {
      const auto c = listed_combination(id, base);
      const auto ledger = verify_combination(c);
      ok = ok && ledger.pass();
      json entries = json::array();
      for (const auto& e : ledger.entries)
        entries.push_back({{"grading", e.grading}, {"t", e.t}, {"modulus", e.modulus.get_str()},
                           {"coordinates", e.coordinates}, {"min_valuation", valuation_json(e.min_valuation)},
                           {"pass", e.pass}});
      j["lines"].push_back({{"base", base}, {"pass", ledger.pass()}, {"verified_through", ledger.verified_through()},
                            {"well_formed", c.well_formed(gs.prime)}, {"entries", entries}});
      table << "F" << base << "  " << (ledger.pass() ? "pass" : "FAIL") << "  through " << ledger.verified_through()
            << "\n";
      for (const auto& e : ledger.entries)
        table << "    grading " << pad(std::to_string(e.grading), 4) << " mod " << pad(e.modulus.get_str(), 10)
              << pad(std::to_string(e.coordinates) + " coords", 12) << (e.pass ? "ok" : "FAIL") << "\n";
    }
  }
  if (a.c.fmt() == Format::kJson) out << j.dump(2) << "\n";
  else out << table.str();
  return ok ? 0 : 1;
}

// ---- adams -----------------------------------------------------------------

struct AdamsArgs {
  Common c;
  long k = 0;
  bool symbolic = false;
  bool basis = false;
};

int cmd_adams(const AdamsArgs& a, std::ostream& out) {
  const GroupId id = parse_group(a.c.group);
  const AdamsMatrix m = adams_matrix(id);
  json j{{"group", group_name(id)}, {"basis", m.basis}};
  std::vector<std::vector<std::string>> cells;
  if (a.basis) {
    const RationalMatrix p = change_of_basis(id);
    for (std::size_t r = 0; r < p.rows(); ++r) {
      cells.emplace_back();
      for (std::size_t c = 0; c < p.cols(); ++c) cells.back().push_back(to_string(p(r, c)));
    }
    j["kind"] = "change_of_basis";
  } else if (a.symbolic || a.k == 0) {
    for (std::size_t r = 0; r < m.entries.rows(); ++r) {
      cells.emplace_back();
      for (std::size_t c = 0; c < m.entries.cols(); ++c) {
        const auto& e = m.entries(r, c);
        cells.back().push_back(e.is_zero() ? "0" : e.to_string());
      }
    }
    j["kind"] = "symbolic";
  } else {
    const RationalMatrix v = m.evaluate(Integer(a.k));
    for (std::size_t r = 0; r < v.rows(); ++r) {
      cells.emplace_back();
      for (std::size_t c = 0; c < v.cols(); ++c) cells.back().push_back(to_string(v(r, c)));
    }
    j["kind"] = "evaluated";
    j["k"] = a.k;
  }
  j["matrix"] = cells;
  if (a.c.fmt() == Format::kJson) {
    out << j.dump(2) << "\n";
    return 0;
  }
  std::vector<std::size_t> w(cells.empty() ? 0 : cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], row[c].size());
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "  " : "") << pad(row[c], w[c]);
    out << "\n";
  }
  return 0;
}

// ---- v1pi ------------------------------------------------------------------

struct V1Args {
  Common c;
  std::string t;
  std::string method = "both";
  bool closed_form = false;
  bool residuals = false;
  bool odd = false;
  std::string bspace;
  unsigned long p = 0;
  int guard = 20;
};

std::vector<int> parse_dims(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

int cmd_v1pi(const V1Args& a, std::ostream& out) {
  const bool table = a.c.fmt() == Format::kTable;
  if (!a.bspace.empty()) {
    if (a.t.empty() || a.p == 0) throw CLI::ValidationError("--bspace needs --p and --t");
    const auto dims = parse_dims(a.bspace);
    const auto g = bspace_group(dims, a.p, Integer(a.t));
    if (table) out << "B(" << a.bspace << ") at p=" << a.p << ", t=" << a.t << ": " << g.to_string() << "\n";
    else
      out << json{{"space", "B(" + a.bspace + ")"}, {"p", a.p}, {"t", a.t}, {"group", g.to_string()},
                  {"exponent", g.exponent}, {"method", {"closed-form"}}}
                 .dump(2)
          << "\n";
    return 0;
  }
  const GroupId id = parse_group(a.c.group);
  const auto s = v1_setting(id);
  const Arrangement arr = a.odd ? Arrangement::kOdd : Arrangement::kEven;
  if (a.closed_form) {
    const ClosedForm cf = closed_form(id);
    const auto cmp = compare_closed_form(cf, listed_closed_form(id));
    if (table) {
      out << cf.render();
      if (!cmp.ok()) {
        out << "differs from the listed closed form:\n";
        for (const auto& m : cmp.mismatches) out << "  " << m << "\n";
      }
    } else {
      json rows = json::array();
      for (const auto& [g, cond] : cf.rows()) rows.push_back({{"group", g}, {"condition", cond}});
      json classes = json::array();
      for (const auto& c : cf.classes) {
        json e{{"residue", c.residue}};
        switch (c.kind) {
          case ClassForm::kZero: e["kind"] = "zero"; break;
          case ClassForm::kConstant: e["kind"] = "constant"; e["exponent"] = c.constant; break;
          case ClassForm::kPeak:
            e["kind"] = "peak";
            e["cap"] = c.cap;
            e["base"] = c.base;
            e["t_star"] = c.t_star.get_str();
            e["t_star_modulus"] = c.t_star_modulus.get_str();
            e["a"] = c.a.get_str();
            e["b"] = c.b;
            break;
        }
        classes.push_back(e);
      }
      out << json{{"group", group_name(id)}, {"p", s.p}, {"period", s.period}, {"rows", rows},
                  {"classes", classes}, {"matches_stated", cmp.ok()}, {"mismatches", cmp.mismatches}}
                 .dump(2)
          << "\n";
    }
    return 0;
  }
  if (a.residuals) {
    const auto& res = reduce_to_residuals(id, arr);
    json classes = json::array();
    for (const auto& [x0, cr] : res.classes) {
      json polys = json::array(), piv = json::array();
      for (const auto& p : cr.polynomials()) polys.push_back(p.to_string());
      for (const auto& pr : cr.transcript) piv.push_back({pr.original_row, pr.original_col});
      classes.push_back({{"x_mod_p", x0}, {"pivots", piv}, {"remaining_columns", cr.remaining.cols()},
                         {"polynomials", polys}});
      if (table) {
        out << "x = " << x0 << " mod " << s.p << ": " << cr.transcript.size() << " pivots, "
            << cr.remaining.cols() << " column(s) left\n";
        for (const auto& p : cr.polynomials()) out << "    " << p.to_string() << "\n";
      }
    }
    if (!table)
      out << json{{"group", group_name(id)}, {"arrangement", a.odd ? "odd" : "even"}, {"classes", classes}}.dump(2)
          << "\n";
    return 0;
  }
  if (a.t.empty()) throw CLI::ValidationError("v1pi needs --t, --closed-form or --residuals");
  const Integer t(a.t);
  std::vector<V1Group> results;
  bool agree = true;
  if (a.method == "snf" || a.method == "both") {
    if (!t.fits_slong_p()) throw BudgetExceeded("t too large for the SNF oracle; use --method residual");
    results.push_back(snf_group(id, t.get_si(), arr));
  }
  if (a.method == "residual" || a.method == "both") {
    if (arr == Arrangement::kOdd) throw Error("the residual method uses the even presentation");
    results.push_back(exponent_at(id, t, a.guard));
  }
  if (a.method == "closed-form") {
    V1Group g;
    g.t = t;
    g.p = s.p;
    g.exponent = closed_form(id).predict(t);
    g.methods = {Method::kClosedForm};
    results.push_back(g);
  }
  for (const auto& r : results) agree = agree && r.exponent == results.front().exponent && r.cyclic;
  json methods = json::array();
  for (const auto& r : results)
    for (auto m : r.methods) methods.push_back(method_name(m));
  const V1Group& g = results.front();
  if (table) {
    out << group_name(id) << " t=" << a.t << ": " << g.to_string();
    if (results.size() > 1) out << (agree ? "  (methods agree)" : "  (METHODS DISAGREE)");
    out << "\n";
  } else {
    json j{{"group_id", group_name(id)}, {"t", t.fits_slong_p() ? json(t.get_si()) : json(t.get_str())},
           {"group", g.to_string()}, {"exponent", g.exponent}, {"method", methods}, {"agree", agree},
           {"degree", a.odd ? "2t-1" : "2t"}};
    out << j.dump(2) << "\n";
  }
  return agree ? 0 : 1;
}

// ---- catalog ---------------------------------------------------------------

struct CatalogArgs {
  Common c;
  std::string case_label;
  unsigned long prime = 0;
  bool list = false;
};

json entry_json(const HomotopyTypeEntry& e) {
  json f = json::array();
  for (const auto& x : e.factors) f.push_back(x.text);
  json j{{"case", e.case_label}, {"prime", e.prime}, {"space", e.space}, {"factors", f},
         {"degrees", e.degrees}, {"source", e.source}, {"degree_bookkeeping", degree_bookkeeping_holds(e)}};
  if (e.printed != e.space) j["printed"] = e.printed;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

int cmd_catalog(const CatalogArgs& a, std::ostream& out) {
  const bool table = a.c.fmt() == Format::kTable;
  if (a.list) {
    json rows = json::array();
    for (const auto& e : table_rows()) {
      rows.push_back(entry_json(e));
      if (table) out << pad(e.case_label, 4) << pad(std::to_string(e.prime), 4) << e.space << "\n";
    }
    if (!table) out << json{{"rows", rows}}.dump(2) << "\n";
    return 0;
  }
  if (a.case_label.empty() || a.prime == 0) throw CLI::ValidationError("catalog needs --case and --prime, or --list");
  const auto e = lookup(a.case_label, a.prime);
  if (table) {
    out << e.case_label << " at p=" << e.prime << ": " << e.space << "\n";
    if (!e.note.empty()) out << "  note: " << e.note << " (tabulated as " << e.printed << ")\n";
    if (!e.source.empty()) out << "  source: " << e.source << "\n";
  } else {
    out << entry_json(e).dump(2) << "\n";
  }
  return 0;
}

// ---- verify-all ------------------------------------------------------------

struct VerifyArgs {
  Common c;
  int tier = 1;
  std::vector<int> only;
  bool quiet = false;
};

int cmd_verify_all(const VerifyArgs& a, std::ostream& out) {
  AcceptanceOptions opts;
  opts.max_tier = a.tier;
  opts.only.insert(a.only.begin(), a.only.end());
  const bool table = a.c.fmt() == Format::kTable;
  if (table) opts.on_result = [&](const CriterionResult& r) { out << format_result(r, !a.quiet) << std::flush; };
  const auto results = run_acceptance(opts);
  bool ok = true;
  json crit = json::array();
  for (const auto& r : results) {
    if (!r.skipped) ok = ok && r.pass;
    json lines = json::array();
    for (const auto& l : r.lines) lines.push_back({{"check", l.label}, {"pass", l.pass}, {"detail", l.detail}});
    json e{{"number", r.number}, {"title", r.title}, {"tier", r.tier},
           {"status", r.skipped ? "skip" : r.pass ? "pass" : "fail"}, {"checks", lines}};
    if (!r.error.empty()) e["error"] = r.error;
    crit.push_back(e);
  }
  if (!table) out << json{{"tier", a.tier}, {"pass", ok}, {"criteria", crit}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const NotFound*>(&e)) return "not-found";
  if (dynamic_cast<const BudgetExceeded*>(&e)) return "budget-exceeded";
  if (dynamic_cast<const PrecisionExhausted*>(&e)) return "precision-exhausted";
  if (dynamic_cast<const VerificationFailure*>(&e)) return "verification-failure";
  if (dynamic_cast<const ParseError*>(&e)) return "parse-error";
  if (dynamic_cast<const NoSolution*>(&e)) return "no-solution";
  return "error";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for the 5- and 7-compact groups X29, X31, X34", "pcompact"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (default: PCOMPACT_THREADS or hardware)");

  InvariantsArgs inv;
  auto* s_inv = app.add_subcommand("invariants", "invariant polynomials and their checks");
  add_common(s_inv, inv.c);
  s_inv->add_option("--degree", inv.degree, "only this degree");
  s_inv->add_option("--check", inv.checks, "invariance, indecomposable, powersum, lattice, f36, h42")
      ->check(CLI::IsMember({"invariance", "indecomposable", "powersum", "lattice", "f36", "h42"}));

  IntegralityArgs integ;
  auto* s_int = app.add_subcommand("integrality", "verify or derive the integral K-theory combinations");
  add_common(s_int, integ.c);
  s_int->add_option("--line", integ.line, "base degree of one line (default: all)");
  s_int->add_flag("--verify", integ.verify, "check the listed lines (default)");
  s_int->add_flag("--derive", integ.derive, "re-derive the lines by successive correction");
  s_int->add_flag("--linear-only", integ.linear_only, "with --derive: correct using single F terms only");

  AdamsArgs ad;
  auto* s_ad = app.add_subcommand("adams", "Adams operations on QK^1");
  add_common(s_ad, ad.c);
  s_ad->add_option("--k", ad.k, "evaluate psi^k at this k");
  s_ad->add_flag("--symbolic", ad.symbolic, "entries as combinations of powers of k (default without --k)");
  s_ad->add_flag("--basis", ad.basis, "print the change-of-basis matrix instead");

  V1Args v1;
  auto* s_v1 = app.add_subcommand("v1pi", "v1-periodic homotopy groups");
  add_common(s_v1, v1.c);
  s_v1->add_option("--t", v1.t, "degree parameter t (any size for the residual method)");
  s_v1->add_option("--method", v1.method, "snf, residual, closed-form or both")
      ->check(CLI::IsMember({"snf", "residual", "closed-form", "both"}))
      ->capture_default_str();
  s_v1->add_flag("--closed-form", v1.closed_form, "derive the closed form over all residue classes");
  s_v1->add_flag("--residuals", v1.residuals, "print the residual polynomials per class of x mod p");
  s_v1->add_flag("--odd", v1.odd, "use the odd presentation (pi_{2t-1})");
  s_v1->add_option("--bspace", v1.bspace, "B-space cell dimensions, e.g. 11,35,59,83");
  s_v1->add_option("--p", v1.p, "prime for --bspace");
  s_v1->add_option("--guard", v1.guard, "extra p-adic digits for the residual method")->capture_default_str();

  CatalogArgs cat;
  auto* s_cat = app.add_subcommand("catalog", "homotopy types by case and prime");
  add_common(s_cat, cat.c, false);
  s_cat->add_option("--case", cat.case_label, "Shephard-Todd number or X(m,r,n)");
  s_cat->add_option("--prime", cat.prime, "prime");
  s_cat->add_flag("--list", cat.list, "all non-modular table rows");

  VerifyArgs ver;
  auto* s_ver = app.add_subcommand("verify-all", "run the acceptance criteria");
  add_common(s_ver, ver.c, false);
  ver.c.format = "table";
  s_ver->add_option("--tier", ver.tier, "1: seconds, 2: minutes, 3: stress")
      ->check(CLI::Range(1, 3))
      ->capture_default_str();
  s_ver->add_option("--only", ver.only, "criterion numbers")->delimiter(',');
  s_ver->add_flag("-q,--quiet", ver.quiet, "omit per-check lines");

  std::vector<std::string> argv_store{"pcompact"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  if (threads) setenv("PCOMPACT_THREADS", std::to_string(threads).c_str(), 1);

  try {
    if (s_inv->parsed()) return cmd_invariants(inv, out);
    if (s_int->parsed()) return cmd_integrality(integ, out);
    if (s_ad->parsed()) return cmd_adams(ad, out);
    if (s_v1->parsed()) return cmd_v1pi(v1, out);
    if (s_cat->parsed()) return cmd_catalog(cat, out);
    if (s_ver->parsed()) return cmd_verify_all(ver, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: bad argument (" << e.what() << ")\n";
    return 2;
  } catch (const std::exception& e) {
    out << json{{"error", e.what()}, {"kind", error_kind(e)}}.dump(2) << "\n";
    return 1;
  }
  return 2;
}

}  // namespace pcompact::cli
