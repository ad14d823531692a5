#include "pcompact/integrality.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "pcompact/data.hpp"
#include "pcompact/error.hpp"
#include "pcompact/modular_system.hpp"
#include "pcompact/parallel.hpp"

namespace pcompact {

std::string fmonomial_to_string(const FMonomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    out += "F" + std::to_string(m[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "1" : out;
}

FMonomial parse_fmonomial(std::string_view text) {
  FMonomial m;
  std::size_t i = 0;
  auto read_int = [&]() {
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (start == i) throw ParseError("bad F-monomial '" + std::string(text) + "'");
    return std::stoi(std::string(text.substr(start, i - start)));
  };
  while (i < text.size()) {
    if (text[i] != 'F') throw ParseError("bad F-monomial '" + std::string(text) + "'");
    ++i;
    int d = read_int();
    int e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      e = read_int();
    }
    for (int k = 0; k < e; ++k) m.push_back(d);
  }
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

int fmonomial_degree(const FMonomial& m) {
  int d = 0;
  for (int x : m) d += x;
  return d;
}

namespace {

// Total degree first, then larger factors first.
bool term_before(const FMonomial& a, const FMonomial& b) {
  int da = fmonomial_degree(a);
  int db = fmonomial_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), std::greater<>());
}

int p_power_exponent(const Integer& den, unsigned long p) {
  Integer d = den;
  int e = 0;
  while (d % p == 0) {
    d /= p;
    ++e;
  }
  return d == 1 ? e : -1;
}

// Largest k with p^k in a denominator, over the coefficients.
int denominator_exponent(const SymPoly& f, unsigned long p) {
  int k = 0;
  for (const auto& [e, c] : f.terms()) {
    auto v = valuation(c, p);
    if (!v.is_infinite() && v.value() < 0) k = std::max(k, static_cast<int>(-v.value()));
  }
  return k;
}

}  // namespace

Rational IntegralCombination::coeff(const FMonomial& m) const {
  for (const auto& [mono, c] : terms)
    if (mono == m) return c;
  return 0;
}

void IntegralCombination::set(const FMonomial& m, const Rational& c) {
  for (auto& [mono, coef] : terms)
    if (mono == m) {
      coef = c;
      return;
    }
  auto pos = std::find_if(terms.begin(), terms.end(), [&](const auto& t) { return term_before(m, t.first); });
  terms.insert(pos, {m, c});
}

IntegralCombination IntegralCombination::truncated_below(int grading) const {
  IntegralCombination out = *this;
  out.terms.clear();
  for (const auto& t : terms)
    if (fmonomial_degree(t.first) < grading) out.terms.push_back(t);
  out.verified_through = -1;
  return out;
}

bool IntegralCombination::well_formed(unsigned long p) const {
  if (coeff({base_degree}) != 1) return false;
  return std::all_of(terms.begin(), terms.end(),
                     [&](const auto& t) { return p_power_exponent(t.second.get_den(), p) >= 0; });
}

namespace {

const nlohmann::json& group_entry(GroupId id) {
  for (const auto& g : data_json("combinations.json").at("groups"))
    if (parse_group(g.at("group").get<std::string>()) == id) return g;
  throw NotFound("combinations.json has no entry for " + group_name(id));
}

}  // namespace

GroupSetting group_setting(GroupId id) {
  const auto& g = group_entry(id);
  unsigned long p = group_data(id).prime;
  return {p, g.at("cap").get<int>(), static_cast<int>(p - 1), g.at("adams_degrees").get<std::vector<int>>()};
}

std::vector<IntegralCombination> listed_combinations(GroupId id) {
  std::vector<IntegralCombination> out;
  for (const auto& line : group_entry(id).at("lines")) {
    IntegralCombination c;
    c.group = id;
    c.base_degree = line.at("base").get<int>();
    for (const auto& t : line.at("terms")) {
      auto factors = t.at("factors").get<FMonomial>();
      std::sort(factors.begin(), factors.end(), std::greater<>());
      c.set(factors, parse_rational(t.at("coeff").get<std::string>()));
    }
    out.push_back(std::move(c));
  }
  return out;
}

IntegralCombination listed_combination(GroupId id, int base_degree) {
  for (auto& c : listed_combinations(id))
    if (c.base_degree == base_degree) return c;
  throw NotFound(group_name(id) + " has no listed combination with base F" + std::to_string(base_degree));
}

std::map<int, Integer> listed_row_scale(GroupId id) {
  std::map<int, Integer> out;
  const auto& g = group_entry(id);
  if (g.contains("row_scale"))
    for (const auto& [k, v] : g.at("row_scale").items()) out.emplace(std::stoi(k), Integer(v.get<long>()));
  return out;
}

// ---- expansions ----------------------------------------------------------

FExpander::FExpander(GroupId id)
    : FExpander(id, SubstitutionTail::typical_log(group_data(id).prime, group_setting(id).cap)) {}

FExpander::FExpander(GroupId id, SubstitutionTail tail)
    : group_(id), setting_(group_setting(id)), family_(build_invariants(id)), tail_(std::move(tail)) {}

FExpander& FExpander::shared(GroupId id) {
  static std::array<std::unique_ptr<FExpander>, 3> all;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto& slot = all[static_cast<std::size_t>(id)];
  if (!slot) slot = std::make_unique<FExpander>(id);
  return *slot;
}

GradedSeries FExpander::series(const FMonomial& m) {
  if (m.empty()) throw Error("empty F-monomial");
  if (fmonomial_degree(m) > setting_.cap)
    throw BudgetExceeded(fmonomial_to_string(m) + " has degree beyond the cap " + std::to_string(setting_.cap));
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(m);
    if (it != cache_.end()) return *it->second;
  }
  GradedSeries value;
  if (m.size() == 1) {
    value = substitute_series(family_.at(m[0]), tail_, setting_.cap);
  } else {
    FMonomial rest(m.begin() + 1, m.end());
    value = series(rest) * series({m[0]});
  }
  std::lock_guard lock(mu_);
  auto [it, inserted] = cache_.emplace(m, std::make_shared<const GradedSeries>(std::move(value)));
  return *it->second;
}

SymPoly FExpander::component(const FMonomial& m, int grading) {
  if (grading > setting_.cap)
    throw BudgetExceeded("grading " + std::to_string(grading) + " is beyond the cap " + std::to_string(setting_.cap));
  if (grading < fmonomial_degree(m)) return SymPoly(group_data(group_).nvars);
  return series(m).component(grading);
}

SymPoly FExpander::component(const IntegralCombination& c, int grading) {
  SymPoly out(group_data(group_).nvars);
  for (const auto& [m, coef] : c.terms) {
    if (fmonomial_degree(m) > grading || sgn(coef) == 0) continue;
    out += component(m, grading) * coef;
  }
  return out;
}

SymPoly expand_F_monomial(GroupId id, const FMonomial& m, int grading) {
  return FExpander::shared(id).component(m, grading);
}

std::vector<FMonomial> candidate_monomials(GroupId id, int grading, bool linear_only) {
  if (linear_only) {
    const auto& fam = FExpander::shared(id).family();
    if (fam.polys.count(grading)) return {{grading}};
    return {};
  }
  return degree_monomials(grading, group_setting(id).adams_degrees);
}

// ---- solving -------------------------------------------------------------

namespace {

struct System {
  IntegerMatrix a;
  std::vector<Integer> rhs;
};

// Rows are the partitions met in v or any candidate; rhs = p^k v.
System build_system(FExpander& ex, const SymPoly& v, const std::vector<FMonomial>& candidates, int grading,
                    const Integer& modulus) {
  std::vector<SymPoly> cols;
  std::map<Partition, std::size_t> rows;
  for (const auto& [e, c] : v.terms()) rows.emplace(e, 0);
  for (const auto& m : candidates) {
    cols.push_back(ex.component(m, grading));
    for (const auto& [e, c] : cols.back().terms()) rows.emplace(e, 0);
  }
  std::size_t r = 0;
  for (auto& [e, idx] : rows) idx = r++;
  System s{IntegerMatrix(rows.size(), cols.size()), std::vector<Integer>(rows.size(), Integer(0))};
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [e, c] : cols[j].terms()) s.a(rows.at(e), j) = to_residue(c, modulus);
  for (const auto& [e, c] : v.terms()) s.rhs[rows.at(e)] = to_residue(c * Rational(modulus), modulus);
  return s;
}

}  // namespace

IntegralizationStep solve_integralization(const IntegralCombination& current, int grading,
                                          const std::vector<FMonomial>& candidates) {
  auto& ex = FExpander::shared(current.group);
  const unsigned long p = ex.setting().prime;
  for (const auto& m : candidates)
    if (fmonomial_degree(m) != grading)
      throw Error("candidate " + fmonomial_to_string(m) + " does not have degree " + std::to_string(grading));

  IntegralizationStep step;
  step.grading = grading;
  step.candidates = candidates;
  step.updated = current;
  const SymPoly v = ex.component(current, grading);
  step.k = denominator_exponent(v, p);
  step.modulus = ipow(p, static_cast<unsigned long>(step.k));
  if (step.k == 0) {
    step.solvable = true;
    return step;
  }
  step.needed = true;
  auto sys = build_system(ex, v, candidates, grading, step.modulus);
  step.equations = sys.a.rows();
  auto sol = solve_mod_prime_power(sys.a, sys.rhs, p, step.k);
  if (!sol.solvable) return step;
  step.residues = sol.x;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (sgn(sol.x[i]) == 0) continue;
    Rational c(-sol.x[i], step.modulus);
    c.canonicalize();
    step.updated.set(candidates[i], step.updated.coeff(candidates[i]) + c);
  }
  step.solvable = denominator_exponent(ex.component(step.updated, grading), p) == 0;
  return step;
}

Derivation derive_combination(GroupId id, int base_degree, bool linear_only) {
  auto setting = group_setting(id);
  Derivation d;
  d.combination.group = id;
  d.combination.base_degree = base_degree;
  d.combination.set({base_degree}, 1);
  d.ok = true;
  for (int g = base_degree + setting.step; g <= setting.cap; g += setting.step) {
    auto step = solve_integralization(d.combination, g, candidate_monomials(id, g, linear_only));
    if (!step.solvable) {
      d.ok = false;
      d.steps.push_back(std::move(step));
      break;
    }
    d.combination = step.updated;
    d.combination.verified_through = g;
    d.steps.push_back(std::move(step));
  }
  if (d.ok) d.combination.verified_through = setting.cap;
  return d;
}

ListedSolutionCheck check_listed_solution(const IntegralCombination& listed, int grading) {
  auto& ex = FExpander::shared(listed.group);
  const unsigned long p = ex.setting().prime;
  ListedSolutionCheck out;
  out.grading = grading;
  out.candidates = candidate_monomials(listed.group, grading, listed.group == GroupId::G34);
  for (const auto& [m, c] : listed.terms)
    if (fmonomial_degree(m) == grading && std::find(out.candidates.begin(), out.candidates.end(), m) == out.candidates.end())
      out.candidates.push_back(m);
  const SymPoly v = ex.component(listed.truncated_below(grading), grading);
  out.k = denominator_exponent(v, p);
  for (const auto& m : out.candidates) {
    auto val = valuation(listed.coeff(m), p);
    if (!val.is_infinite() && val.value() < 0) out.k = std::max(out.k, static_cast<int>(-val.value()));
  }
  const Integer modulus = ipow(p, static_cast<unsigned long>(out.k));
  for (const auto& m : out.candidates) out.residues.push_back(to_residue(-listed.coeff(m) * Rational(modulus), modulus));
  if (out.k == 0) {
    out.solves = true;
    return out;
  }
  auto sys = build_system(ex, v, out.candidates, grading, modulus);
  out.solves = is_solution(sys.a, out.residues, sys.rhs, modulus);
  return out;
}

// ---- ledger --------------------------------------------------------------

bool CongruenceLedger::pass() const {
  return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const LedgerEntry& e) { return e.pass; });
}

int CongruenceLedger::verified_through() const {
  int through = -1;
  for (const auto& e : entries) {
    if (!e.pass) break;
    through = e.grading;
  }
  return through;
}

CongruenceLedger verify_combination(const IntegralCombination& c) {
  auto& ex = FExpander::shared(c.group);
  const auto& s = ex.setting();
  CongruenceLedger ledger{c.group, c.base_degree, {}};
  std::vector<int> gradings;
  for (int g = c.base_degree; g <= s.cap; g += s.step) gradings.push_back(g);
  ledger.entries.resize(gradings.size());
  parallel_for(gradings.size(), [&](std::size_t i) {
    LedgerEntry& e = ledger.entries[i];
    e.grading = gradings[i];
    e.t = (e.grading - c.base_degree) / s.step;
    e.modulus = ipow(s.prime, static_cast<unsigned long>(e.t));
    const SymPoly v = ex.component(c, e.grading);
    e.coordinates = v.terms().size();
    e.pass = true;
    for (const auto& [part, coef] : v.terms()) {
      e.min_valuation = min(e.min_valuation, valuation(coef, s.prime));
      Rational scaled = coef * Rational(e.modulus);
      if (!is_p_integral(scaled, s.prime) || !is_p_integral(coef, s.prime)) {
        e.pass = false;
        continue;
      }
      e.residues.emplace(part, to_residue(scaled, e.modulus));
    }
  });
  return ledger;
}

PictureComparison compare_pictures(const IntegralCombination& c, int grading) {
  auto& typical = FExpander::shared(c.group);
  const auto& s = typical.setting();
  FExpander shifted(c.group, SubstitutionTail::unit_shift(s.prime));
  PictureComparison out;
  out.grading = grading;
  const int t = (grading - c.base_degree) / s.step;
  const Integer modulus = ipow(s.prime, static_cast<unsigned long>(t));

  const SymPoly v = typical.component(c, grading);
  out.typical_integral = denominator_exponent(v, s.prime) == 0;

  SymPoly n(v.nvars());
  for (const auto& [m, coef] : c.terms) {
    int deg = fmonomial_degree(m);
    if (deg > grading) continue;
    Rational w = coef * Rational(ipow(s.prime, static_cast<unsigned long>((deg - c.base_degree) / s.step)));
    n += shifted.component(m, grading) * w;
  }
  out.congruence_zero = true;
  for (const auto& [e, x] : n.terms())
    if (valuation(x, s.prime) < Valuation::finite(t)) out.congruence_zero = false;
  SymPoly scaled = v * Rational(modulus);
  out.coordinates_match = scaled.terms() == n.terms();
  return out;
}

F36Transfer verify_f36_transfer() {
  auto& ex = FExpander::shared(GroupId::G34);
  const auto& fam = ex.family();
  const auto dec = decompose_f36(fam);
  const int cap = ex.setting().cap;
  const ProductLimits limits{cap, 4};
  const auto tail = SubstitutionTail::typical_log(7, cap);

  std::map<int, SymPoly> series;
  for (int d : {6, 12, 18, 24, 30, 36})
    series.emplace(d, substitute_series(fam.at(d), tail, cap).poly().restrict_length(4));

  SymPoly rhs(6);
  for (std::size_t i = 0; i < dec.products.size(); ++i) {
    const auto& prod = dec.products[i];
    SymPoly acc = series.at(prod[0]);
    for (std::size_t j = 1; j < prod.size(); ++j) acc = multiply(acc, series.at(prod[j]), limits);
    rhs += acc * dec.q[i];
  }
  F36Transfer out;
  out.matches = true;
  std::set<Partition> coords;
  for (int g = 36; g <= cap; g += 6) {
    out.gradings.push_back(g);
    SymPoly l = series.at(36).component(g);
    SymPoly r = rhs.component(g);
    for (const auto& [e, c] : l.terms()) coords.insert(e);
    for (const auto& [e, c] : r.terms()) coords.insert(e);
    if (!(l.terms() == r.terms())) out.matches = false;
  }
  out.coordinates = coords.size();
  return out;
}

}  // namespace pcompact
