#include "pcompact/v1pi.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <set>

#include "pcompact/adams.hpp"
#include "pcompact/data.hpp"
#include "pcompact/error.hpp"
#include "pcompact/integrality.hpp"

namespace pcompact {

bool generates_units_mod_p2(unsigned long r, unsigned long p) {
  const unsigned long m = p * p;
  const unsigned long order = p * (p - 1);
  if (r % p == 0) return false;
  unsigned long x = 1;
  for (unsigned long k = 1; k <= order; ++k) {
    x = (x * r) % m;
    if (x == 1) return k == order;
  }
  return false;
}

V1Setting v1_setting(GroupId id) {
  const auto gs = group_setting(id);
  const unsigned long p = gs.prime;
  const unsigned long r = p == 5 ? 2 : 3;
  if (!generates_units_mod_p2(r, p))
    throw VerificationFailure(std::to_string(r) + " does not generate the units mod " + std::to_string(p * p));
  const int cap = *std::max_element(gs.adams_degrees.begin(), gs.adams_degrees.end());
  return {id, p, r, gs.adams_degrees.size(), cap, static_cast<long>(p * (p - 1))};
}

namespace {

// Multiply a row of rationals by the lcm of its denominators.
Integer row_lcm(const std::vector<Rational>& row, unsigned long p) {
  Integer l = 1;
  for (const auto& c : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  if (l % p == 0) throw VerificationFailure("presentation row has a denominator divisible by p");
  return l;
}

}  // namespace

PolyMatrix presentation_matrix(GroupId id, Arrangement arrangement) {
  const auto s = v1_setting(id);
  const AdamsMatrix psi = adams_matrix(id);
  RationalMatrix top = psi.evaluate(s.p);
  RationalMatrix bottom = psi.evaluate(s.r);
  if (arrangement == Arrangement::kEven) {
    top = top.transpose();
    bottom = bottom.transpose();
  }
  const std::size_t n = s.n;
  PolyMatrix m(2 * n, n);
  auto fill = [&](const RationalMatrix& block, std::size_t offset, bool subtract_x) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = block(i, j);
      const Integer l = row_lcm(row, s.p);
      for (std::size_t j = 0; j < n; ++j) {
        Rational scaled = row[j] * Rational(l);
        IntPoly e(Integer(scaled.get_num()));
        if (subtract_x && i == j) e -= IntPoly::x() * l;
        m(offset + i, j) = e;
      }
    }
  };
  fill(top, 0, false);
  fill(bottom, n, true);
  return m;
}

IntegerMatrix presentation_matrix_at(GroupId id, long t, Arrangement arrangement) {
  const auto s = v1_setting(id);
  if (t < 1) throw Error("t must be positive");
  if (static_cast<double>(t) * std::log2(static_cast<double>(s.r)) > 1e6)
    throw BudgetExceeded("x = " + std::to_string(s.r) + "^" + std::to_string(t) +
                         " exceeds the big-integer budget; use the residual method");
  const Integer x = ipow(s.r, static_cast<unsigned long>(t));
  const PolyMatrix sym = presentation_matrix(id, arrangement);
  IntegerMatrix m(sym.rows(), sym.cols());
  for (std::size_t i = 0; i < sym.rows(); ++i)
    for (std::size_t j = 0; j < sym.cols(); ++j) m(i, j) = sym(i, j).evaluate(x);
  return m;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::kSnf: return "snf";
    case Method::kResidual: return "residual";
    case Method::kClosedForm: return "closed-form";
  }
  return "?";
}

std::string V1Group::to_string() const {
  if (!cyclic) {
    std::string s;
    for (int e : summands) s += (s.empty() ? "" : " + ") + ("Z/" + std::to_string(p) + "^" + std::to_string(e));
    return s;
  }
  if (exponent == 0) return "0";
  return "Z/" + std::to_string(p) + "^" + std::to_string(exponent);
}

V1Group snf_group(GroupId id, long t, Arrangement arrangement) {
  const auto s = v1_setting(id);
  const PPart part = snf_cokernel_ppart(presentation_matrix_at(id, t, arrangement), s.p);
  if (part.free_rank > 0) throw VerificationFailure("presentation has a free summand at t = " + std::to_string(t));
  V1Group g;
  g.t = t;
  g.p = s.p;
  g.exponent = part.exponent();
  g.cyclic = part.cyclic();
  if (!g.cyclic) g.summands = part.exponents;
  g.methods = {Method::kSnf};
  return g;
}

// ---- residual reduction ----------------------------------------------------

RatFuncMatrix to_ratfunc(const PolyMatrix& m) {
  RatFuncMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = RatFunc(m(i, j));
  return out;
}

std::vector<IntPoly> ClassReduction::polynomials() const {
  std::vector<IntPoly> out;
  for (const auto& r : residuals) out.push_back(r.numerator_poly());
  return out;
}

namespace {

struct Reducer {
  RatFuncMatrix m;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::vector<PivotRecord> transcript;

  explicit Reducer(const RatFuncMatrix& start) : m(start) {
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(i);
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(j);
  }

  void pivot(std::size_t r, std::size_t c) {
    if (r >= m.rows() || c >= m.cols()) throw Error("pivot position outside the matrix");
    const RatFunc a = m(r, c);
    if (a.is_zero()) throw Error("pivot on a zero entry");
    transcript.push_back({r, c, rows[r], cols[c], a.to_string()});
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const RatFunc f = m(i, c) / a;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j == c || m(r, j).is_zero()) continue;
        m(i, j) -= f * m(r, j);
      }
    }
    RatFuncMatrix next(m.rows() - 1, m.cols() - 1);
    for (std::size_t i = 0, ii = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, jj = 0; j < m.cols(); ++j) {
        if (j == c) continue;
        next(ii, jj++) = m(i, j);
      }
      ++ii;
    }
    m = std::move(next);
    rows.erase(rows.begin() + static_cast<long>(r));
    cols.erase(cols.begin() + static_cast<long>(c));
  }

  ClassReduction finish(long x_class) {
    ClassReduction out;
    out.x_class = x_class;
    out.transcript = std::move(transcript);
    out.remaining = m;
    if (m.cols() == 1)
      for (std::size_t i = 0; i < m.rows(); ++i) out.residuals.push_back(m(i, 0));
    return out;
  }
};

}  // namespace

ClassReduction reduce_class(const RatFuncMatrix& start, long x_class, unsigned long p) {
  Reducer red(start);
  const Integer x0 = x_class;
  while (true) {
    bool found = false;
    for (std::size_t i = 0; i < red.m.rows() && !found; ++i)
      for (std::size_t j = 0; j < red.m.cols() && !found; ++j)
        if (red.m(i, j).unit_on_class(x0, p)) {
          red.pivot(i, j);
          found = true;
        }
    if (!found || red.m.cols() == 0) break;
  }
  return red.finish(x_class);
}

ClassReduction replay_pivots(const RatFuncMatrix& start, const std::vector<std::pair<std::size_t, std::size_t>>& positions) {
  Reducer red(start);
  for (const auto& [r, c] : positions) red.pivot(r, c);
  return red.finish(-1);
}

const ResidualPolynomials& reduce_to_residuals(GroupId id, Arrangement arrangement) {
  static std::mutex mu;
  static std::map<std::pair<GroupId, Arrangement>, std::unique_ptr<ResidualPolynomials>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{id, arrangement}];
  if (!slot) {
    const auto s = v1_setting(id);
    auto res = std::make_unique<ResidualPolynomials>();
    res->group = id;
    res->arrangement = arrangement;
    const RatFuncMatrix m = to_ratfunc(presentation_matrix(id, arrangement));
    for (long x0 = 1; x0 < static_cast<long>(s.p); ++x0) res->classes.emplace(x0, reduce_class(m, x0, s.p));
    slot = std::move(res);
  }
  return *slot;
}

V1Group exponent_at(GroupId id, const Integer& t, int guard) {
  if (sgn(t) <= 0) throw Error("t must be positive");
  const auto s = v1_setting(id);
  const auto& res = reduce_to_residuals(id);
  int n = s.precision_cap + guard;
  for (int attempt = 0; attempt < 6; ++attempt, n *= 2) {
    const Integer mod = ipow(s.p, static_cast<unsigned long>(n));
    const Integer x = pow_mod(Integer(s.r), t, mod);
    const long x0 = mod_floor(x, Integer(s.p)).get_si();
    const ClassReduction& cr = res.classes.at(x0);
    V1Group g;
    g.t = t;
    g.p = s.p;
    g.methods = {Method::kResidual};
    if (cr.remaining.cols() == 0) return g;
    if (cr.single_column()) {
      std::optional<long> best;
      bool exhausted = false;
      for (const auto& r : cr.residuals) {
        if (r.is_zero()) continue;
        auto v = r.valuation_at(x, s.p, n);
        if (!v) {
          exhausted = true;
          continue;
        }
        if (!best || *v < *best) best = v;
      }
      // A smaller finite valuation elsewhere already settles the minimum.
      if (best && (!exhausted || *best < n)) {
        g.exponent = static_cast<int>(*best);
        return g;
      }
      continue;
    }
    IntegerMatrix ev(cr.remaining.rows(), cr.remaining.cols());
    for (std::size_t i = 0; i < ev.rows(); ++i)
      for (std::size_t j = 0; j < ev.cols(); ++j) {
        const RatFunc& f = cr.remaining(i, j);
        if (f.is_zero()) continue;
        Integer dv = f.den().evaluate_mod(x, mod);
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), mod.get_mpz_t()) == 0)
          throw VerificationFailure("residual denominator is not a unit");
        ev(i, j) = mod_floor(to_residue(f.scalar(), mod) * f.num().evaluate_mod(x, mod) * inv, mod);
      }
    PPart part = local_cokernel_ppart(ev, s.p, n);
    if (std::find(part.exponents.begin(), part.exponents.end(), n) != part.exponents.end()) continue;
    g.exponent = part.exponent();
    g.cyclic = part.cyclic();
    if (!g.cyclic) g.summands = part.exponents;
    return g;
  }
  throw PrecisionExhausted("exponent_at: residual values vanish to every tried precision");
}

// ---- closed forms ----------------------------------------------------------

int ClassForm::predict(const Integer& t, unsigned long p) const {
  switch (kind) {
    case kZero: return 0;
    case kConstant: return constant;
    case kPeak: {
      Integer d = t - t_star;
      if (sgn(d) == 0) return cap;
      return static_cast<int>(std::min<long>(cap, base + valuation(d, p).value()));
    }
  }
  return 0;
}

ClassForm find_peak(GroupId id, long residue) {
  const auto s = v1_setting(id);
  ClassForm f;
  f.residue = mod_floor(Integer(residue), Integer(s.period)).get_si();
  auto e = [&](const Integer& t) { return exponent_at(id, t).exponent; };
  Integer modulus = s.period;
  Integer centre = f.residue == 0 ? Integer(s.period) : Integer(f.residue);
  std::optional<int> base;
  for (int k = 1; k <= s.precision_cap + 2; ++k) {
    PeakStage stage{modulus, centre, {}};
    for (unsigned long j = 0; j < s.p; ++j) stage.values.push_back(e(centre + modulus * j));
    const int hi = *std::max_element(stage.values.begin(), stage.values.end());
    const int lo = *std::min_element(stage.values.begin(), stage.values.end());
    f.stages.push_back(stage);
    if (hi == lo) {
      if (k == 1) {
        f.kind = hi == 0 ? ClassForm::kZero : ClassForm::kConstant;
        f.constant = hi;
        return f;
      }
      f.kind = ClassForm::kPeak;
      f.cap = hi;
      f.base = *base;
      f.t_star_modulus = modulus;
      f.t_star = mod_floor(centre, modulus);
      Integer d = mod_floor(f.t_star - f.residue, modulus);
      f.b = sgn(d) == 0 ? 0 : static_cast<int>(valuation(d, s.p).value());
      f.a = d / ipow(s.p, static_cast<unsigned long>(f.b));
      return f;
    }
    if (std::count(stage.values.begin(), stage.values.end(), hi) != 1)
      throw VerificationFailure("find_peak: several lifts share the top value in class " + std::to_string(residue));
    if (!base) base = lo - k;
    if (lo - k != *base)
      throw VerificationFailure("find_peak: valuation profile is not base + k in class " + std::to_string(residue));
    centre += modulus * static_cast<unsigned long>(std::find(stage.values.begin(), stage.values.end(), hi) -
                                                    stage.values.begin());
    modulus *= s.p;
  }
  throw VerificationFailure("find_peak: no cap reached in class " + std::to_string(residue));
}

int ClosedForm::predict(const Integer& t) const {
  long c = mod_floor(t, Integer(period)).get_si();
  return classes.at(static_cast<std::size_t>(c)).predict(t, p);
}

ClosedForm closed_form(GroupId id) {
  const auto s = v1_setting(id);
  ClosedForm cf{id, s.p, s.period, {}};
  for (long c = 0; c < s.period; ++c) cf.classes.push_back(find_peak(id, c));
  return cf;
}

std::vector<std::pair<std::string, std::string>> ClosedForm::rows() const {
  std::vector<std::pair<std::string, std::string>> out;
  const std::string ps = std::to_string(p);
  std::set<long> nonzero;
  for (const auto& c : classes)
    if (c.kind != ClassForm::kZero) nonzero.insert(c.residue);
  if (nonzero.empty()) {
    out.emplace_back("0", "all t");
    return out;
  }
  // Smallest modulus m with nonzero = {t == a mod m}.
  for (long m = 1; m <= period; ++m) {
    if (period % m != 0) continue;
    const long a = *nonzero.begin() % m;
    bool match = true;
    for (long c = 0; c < period && match; ++c) match = (c % m == a) == (nonzero.count(c) > 0);
    if (match) {
      if (static_cast<long>(nonzero.size()) != period)
        out.emplace_back("0", "t != " + std::to_string(a) + " mod " + std::to_string(m));
      break;
    }
  }
  std::map<int, std::vector<long>> constants;
  for (const auto& c : classes)
    if (c.kind == ClassForm::kConstant) constants[c.constant].push_back(c.residue);
  for (const auto& [e, cs] : constants) {
    std::string list;
    for (long c : cs) list += (list.empty() ? "" : ",") + std::to_string(c);
    out.emplace_back("Z/" + ps + "^" + std::to_string(e), "t == " + list + " mod " + std::to_string(period));
  }
  for (const auto& c : classes) {
    if (c.kind != ClassForm::kPeak) continue;
    std::string shift = std::to_string(c.residue);
    if (sgn(c.a) != 0) shift += "-" + c.a.get_str() + "*" + ps + "^" + std::to_string(c.b);
    out.emplace_back("Z/" + ps + "^min(" + std::to_string(c.cap) + "," + std::to_string(c.base) + "+nu" + ps + "(t-" +
                         shift + "))",
                     "t == " + std::to_string(c.residue) + " mod " + std::to_string(period));
  }
  return out;
}

std::string ClosedForm::render() const {
  std::size_t width = 0;
  auto r = rows();
  for (const auto& [g, cond] : r) width = std::max(width, g.size());
  std::string out;
  for (const auto& [g, cond] : r) out += g + std::string(width - g.size() + 4, ' ') + cond + "\n";
  return out;
}

ListedClosedForm listed_closed_form(GroupId id) {
  for (const auto& g : data_json("closed_forms.json").at("groups")) {
    if (parse_group(g.at("group").get<std::string>()) != id) continue;
    ListedClosedForm l{id,
                       g.at("period").get<long>(),
                       g.at("nonzero").at("modulus").get<long>(),
                       g.at("nonzero").at("residue").get<long>(),
                       g.at("constant").at("classes").get<std::vector<long>>(),
                       g.at("constant").at("exponent").get<int>(),
                       {}};
    for (const auto& pk : g.at("peaks"))
      l.peaks.push_back({pk.at("class").get<long>(), pk.at("cap").get<int>(), pk.at("base").get<int>(),
                         Integer(pk.at("a").get<long>()), pk.at("b").get<int>()});
    return l;
  }
  throw NotFound("closed_forms.json has no entry for " + group_name(id));
}

ClosedFormComparison compare_closed_form(const ClosedForm& computed, const ListedClosedForm& listed) {
  ClosedFormComparison out;
  const long period = computed.period;
  auto at = [&](long c) -> const ClassForm& {
    return computed.classes.at(static_cast<std::size_t>(((c % period) + period) % period));
  };
  out.zero_classes_match = true;
  for (long c = 0; c < period; ++c) {
    bool listed_nonzero = c % listed.nonzero_modulus == listed.nonzero_residue % listed.nonzero_modulus;
    if (listed_nonzero != (at(c).kind != ClassForm::kZero)) {
      out.zero_classes_match = false;
      out.mismatches.push_back("class " + std::to_string(c) + ": listed " + (listed_nonzero ? "nonzero" : "zero"));
    }
  }
  std::set<long> computed_constants, listed_constants;
  for (const auto& c : computed.classes)
    if (c.kind == ClassForm::kConstant && c.constant == listed.constant_exponent) computed_constants.insert(c.residue);
  for (long c : listed.constant_classes) listed_constants.insert(((c % period) + period) % period);
  out.constant_classes_match = computed_constants == listed_constants;
  if (!out.constant_classes_match) {
    std::string cs;
    for (long c : computed_constants) cs += (cs.empty() ? "" : ",") + std::to_string(c);
    out.mismatches.push_back("constant classes: computed {" + cs + "}");
  }
  std::set<long> listed_peaks;
  for (const auto& pk : listed.peaks) {
    const long c = ((pk.residue % period) + period) % period;
    listed_peaks.insert(c);
    const ClassForm& f = at(pk.residue);
    const std::string tag = "class " + std::to_string(pk.residue) + " mod " + std::to_string(period);
    if (c != pk.residue) out.mismatches.push_back(tag + ": listed class is not reduced (it is " + std::to_string(c) + ")");
    if (f.kind != ClassForm::kPeak) {
      out.mismatches.push_back(tag + ": listed as a peak, computed " +
                               (f.kind == ClassForm::kZero ? std::string("zero") : "constant " + std::to_string(f.constant)));
      continue;
    }
    if (f.cap != pk.cap)
      out.mismatches.push_back(tag + ": cap listed " + std::to_string(pk.cap) + ", computed " + std::to_string(f.cap));
    if (f.base != pk.base)
      out.mismatches.push_back(tag + ": base listed " + std::to_string(pk.base) + ", computed " + std::to_string(f.base));
    Integer listed_t = Integer(pk.residue) + pk.a * ipow(computed.p, static_cast<unsigned long>(pk.b));
    if (mod_floor(listed_t - f.t_star, f.t_star_modulus) != 0)
      out.mismatches.push_back(tag + ": t* listed " + std::to_string(pk.residue) + "+" + pk.a.get_str() + "*" +
                               std::to_string(computed.p) + "^" + std::to_string(pk.b) + ", computed " +
                               std::to_string(f.residue) + "+" + f.a.get_str() + "*" + std::to_string(computed.p) + "^" +
                               std::to_string(f.b) + " mod " + f.t_star_modulus.get_str());
  }
  for (const auto& c : computed.classes)
    if (c.kind == ClassForm::kPeak && !listed_peaks.count(c.residue))
      out.mismatches.push_back("class " + std::to_string(c.residue) + ": computed peak (cap " + std::to_string(c.cap) +
                               ") is not listed");
  return out;
}

CyclicityReport verify_cyclic_odd(GroupId id) {
  const auto& res = reduce_to_residuals(id, Arrangement::kOdd);
  CyclicityReport r;
  r.n = v1_setting(id).n;
  bool any = false;
  for (const auto& [x0, cr] : res.classes) {
    r.pivots_by_class[x0] = cr.transcript.size();
    if (cr.remaining.cols() == 0) continue;
    r.min_pivots = any ? std::min(r.min_pivots, cr.transcript.size()) : cr.transcript.size();
    any = true;
  }
  if (!any) r.min_pivots = r.n;
  return r;
}

bool orders_equal(GroupId id, long t) {
  const auto s = v1_setting(id);
  const PPart even = snf_cokernel_ppart(presentation_matrix_at(id, t, Arrangement::kEven), s.p);
  const PPart odd = snf_cokernel_ppart(presentation_matrix_at(id, t, Arrangement::kOdd), s.p);
  return even.free_rank == 0 && odd.free_rank == 0 && even.order_exponent() == odd.order_exponent();
}

std::vector<BSpaceFormula> bspace_formulas() {
  std::vector<BSpaceFormula> out;
  for (const auto& b : data_json("closed_forms.json").at("bspaces"))
    out.push_back({b.at("dims").get<std::vector<int>>(), b.at("prime").get<unsigned long>(), b.at("modulus").get<long>(),
                   b.at("residue").get<long>(), b.at("offset").get<int>(), b.at("gammas").get<std::vector<int>>()});
  return out;
}

V1Group bspace_group(const std::vector<int>& dims, unsigned long p, const Integer& t) {
  for (const auto& f : bspace_formulas()) {
    if (f.dims != dims || f.prime != p) continue;
    V1Group g;
    g.t = t;
    g.p = p;
    g.methods = {Method::kClosedForm};
    if (mod_floor(t, Integer(f.modulus)) != f.residue) return g;
    for (int gamma : f.gammas) {
      Integer d = t - gamma;
      int value = sgn(d) == 0 ? gamma
                              : static_cast<int>(std::min<long>(gamma, f.offset + valuation(d, p).value()));
      g.exponent = std::max(g.exponent, value);
    }
    return g;
  }
  std::string ds;
  for (int d : dims) ds += (ds.empty() ? "" : ",") + std::to_string(d);
  throw NotFound("no v1-periodic formula for B(" + ds + ") at p = " + std::to_string(p) +
                 "; see the catalog for sphere and two-cell cases");
}

}  // namespace pcompact
