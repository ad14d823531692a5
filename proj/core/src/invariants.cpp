#include "pcompact/invariants.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "pcompact/data.hpp"
#include "pcompact/error.hpp"
#include "pcompact/modular_system.hpp"
#include "pcompact/serialize.hpp"

namespace pcompact {

std::string group_name(GroupId g) {
  switch (g) {
    case GroupId::G29: return "G29";
    case GroupId::G31: return "G31";
    case GroupId::G34: return "G34";
  }
  return "?";
}

GroupId parse_group(std::string_view text) {
  std::string s(text);
  if (!s.empty() && (s[0] == 'G' || s[0] == 'X' || s[0] == 'g' || s[0] == 'x')) s.erase(0, 1);
  if (s == "29") return GroupId::G29;
  if (s == "31") return GroupId::G31;
  if (s == "34") return GroupId::G34;
  throw NotFound("unknown group '" + std::string(text) + "' (expected 29, 31 or 34)");
}

const CycMatrix& ReflectionGroupData::generator(std::string_view name) const {
  for (const auto& g : generators)
    if (g.name == name) return g.matrix;
  throw NotFound("group " + group_name(id) + " has no generator '" + std::string(name) + "'");
}

namespace {

ReflectionGroupData load_group(GroupId id) {
  const auto& doc = data_json("groups.json");
  for (const auto& g : doc.at("groups")) {
    if (g.at("id").get<std::string>() != group_name(id)) continue;
    ReflectionGroupData d{id, g.at("prime").get<unsigned long>(), g.at("nvars").get<int>(),
                          g.at("degrees").get<std::vector<int>>(), {}, {}};
    for (const auto& m : g.at("generators"))
      d.generators.push_back({m.at("name").get<std::string>(), cyc_matrix_from_json(m.at("matrix"))});
    if (g.contains("special_generators")) {
      d.special = g.at("special_generators").get<std::vector<std::string>>();
    } else {
      for (const auto& m : d.generators) d.special.push_back(m.name);
    }
    return d;
  }
  throw NotFound("groups.json has no entry for " + group_name(id));
}

}  // namespace

const ReflectionGroupData& group_data(GroupId id) {
  static const std::array<ReflectionGroupData, 3> all{load_group(GroupId::G29), load_group(GroupId::G31),
                                                       load_group(GroupId::G34)};
  return all[static_cast<std::size_t>(id)];
}

const SymPoly& InvariantFamily::at(int degree) const {
  auto it = polys.find(degree);
  if (it == polys.end())
    throw NotFound(group_name(group) + " has no invariant of degree " + std::to_string(degree));
  return it->second;
}

std::vector<Partition> partitions_of(int n, int max_len) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int largest) {
    if (left == 0) {
      out.push_back(Partition::from_parts(cur));
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int part = std::min(left, largest); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> degree_monomials(int total, const std::vector<int>& degrees) {
  std::vector<int> ds = degrees;
  std::sort(ds.begin(), ds.end(), std::greater<>());
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, std::size_t)> rec = [&](int left, std::size_t from) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < ds.size(); ++i) {
      if (ds[i] > left) continue;
      cur.push_back(ds[i]);
      rec(left - ds[i], i);
      cur.pop_back();
    }
  };
  rec(total, 0);
  return out;
}

SymPoly g34_invariant(int k) {
  if (k < 1 || k > 7) throw Error("g34_invariant: degree 6k needs 1 <= k <= 7");
  const int n = 6 * k;
  SymPoly f(6);
  const Integer p27 = ipow(27UL, static_cast<unsigned long>(k - 1));
  const int sign_k = (k % 2 == 0) ? 1 : -1;
  f.add_term(Partition{n}, Rational(1 + sign_k * p27 * 5));
  for (int s = 1; s <= k; ++s) {
    const int sign = ((k + s) % 2 == 0) ? 1 : -1;
    f.add_term(Partition{n - 3 * s, 3 * s},
               Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(3 * s)) *
                        (1 + sign * p27)));
  }
  for (const auto& e : partitions_of(n, 6)) {
    const int r = e.length();
    if (r < 3) continue;
    bool ok = true;
    for (int i = 0; i < r && ok; ++i) {
      if ((e[i] - e[0]) % 3 != 0) ok = false;
      if (r < 6 && e[i] % 3 != 0) ok = false;
    }
    if (!ok) continue;
    auto parts = e.parts();
    f.add_term(e, Rational(multinomial(parts)));
  }
  return f;
}

InvariantFamily build_invariants(GroupId id) {
  InvariantFamily fam{id, {}};
  if (id == GroupId::G34) {
    for (int k = 1; k <= 7; ++k) fam.polys.emplace(6 * k, g34_invariant(k));
    return fam;
  }
  const auto& doc = data_json("invariants.json");
  std::map<int, SymPoly> g29;
  std::map<int, SymPoly> g31_extra;
  for (const auto& entry : doc.at("polynomials")) {
    auto g = parse_group(entry.at("group").get<std::string>());
    int degree = entry.at("degree").get<int>();
    SymPoly f = sympoly_from_json(entry.at("poly"));
    (g == GroupId::G29 ? g29 : g31_extra).emplace(degree, std::move(f));
  }
  if (id == GroupId::G29) {
    fam.polys = std::move(g29);
  } else {
    for (int d : {8, 12, 20}) fam.polys.emplace(d, g29.at(d));
    for (auto& [d, f] : g31_extra) fam.polys.emplace(d, f);
  }
  for (const auto& [d, f] : fam.polys)
    if (!f.is_homogeneous(d)) throw VerificationFailure("invariant of degree " + std::to_string(d) + " is not homogeneous");
  return fam;
}

SymPoly power_sum(int m, const PowerSumOptions& opts) {
  if (m < 1) throw Error("power_sum: m must be positive");
  if (m > opts.max_m)
    throw BudgetExceeded("power_sum: m = " + std::to_string(m) + " exceeds the budget m <= " +
                         std::to_string(opts.max_m));
  const auto set = lattice_vectors();
  const auto parts = partitions_of(m, 6);
  // Only sorted exponent vectors are needed: the result is symmetric.
  std::vector<CycRational> acc(parts.size(), CycRational(Field::Qw, 0, 0));
  std::vector<std::vector<CycRational>> pw(6, std::vector<CycRational>(static_cast<std::size_t>(m + 1)));
  for (const auto& v : set.vectors) {
    for (std::size_t i = 0; i < 6; ++i) {
      pw[i][0] = CycRational(Field::Qw, 1, 0);
      for (int e = 1; e <= m; ++e) pw[i][static_cast<std::size_t>(e)] = pw[i][static_cast<std::size_t>(e - 1)] * v[i];
    }
    for (std::size_t t = 0; t < parts.size(); ++t) {
      auto exps = parts[t].padded(6);
      CycRational term = pw[0][static_cast<std::size_t>(exps[0])];
      for (std::size_t i = 1; i < 6; ++i) term *= pw[i][static_cast<std::size_t>(exps[i])];
      acc[t] += term;
    }
  }
  Rational scale = 1;
  if (opts.normalize && m % 6 == 0) {
    int k = m / 6;
    scale = Rational(ipow(Integer(-27), static_cast<unsigned long>(k)), Integer(486));
    scale.canonicalize();
  }
  SymPoly out(6);
  for (std::size_t t = 0; t < parts.size(); ++t) {
    if (!acc[t].is_rational())
      throw VerificationFailure("power_sum: coefficient of m" + parts[t].to_string() + " is not rational");
    auto exps = parts[t].parts();
    out.add_term(parts[t], acc[t].as_rational() * Rational(multinomial(exps)) * scale);
  }
  return out;
}

// ---- indecomposability ---------------------------------------------------

namespace {

class ProductBuilder {
 public:
  ProductBuilder(const InvariantFamily& fam, ProductLimits limits) : fam_(fam), limits_(limits) {}

  const SymPoly& get(const std::vector<int>& degrees) {
    auto it = cache_.find(degrees);
    if (it != cache_.end()) return it->second;
    SymPoly value;
    if (degrees.size() == 1) {
      value = limited(fam_.at(degrees[0]));
    } else {
      std::vector<int> rest(degrees.begin() + 1, degrees.end());
      value = multiply(get(rest), limited(fam_.at(degrees[0])), limits_);
    }
    return cache_.emplace(degrees, std::move(value)).first->second;
  }

 private:
  SymPoly limited(const SymPoly& f) const {
    return limits_.max_length >= 0 ? f.restrict_length(limits_.max_length) : f;
  }

  const InvariantFamily& fam_;
  ProductLimits limits_;
  std::map<std::vector<int>, SymPoly> cache_;
};

}  // namespace

DecompositionVerdict decompose_mod_p(const InvariantFamily& family, const SymPoly& target,
                                     int target_degree, const std::vector<int>& lower_degrees,
                                     unsigned long p) {
  DecompositionVerdict verdict;
  verdict.products = degree_monomials(target_degree, lower_degrees);
  ProductBuilder builder(family, {});
  std::vector<const SymPoly*> cols;
  std::map<Partition, std::size_t> row_of;
  for (const auto& [e, c] : target.terms()) row_of.emplace(e, 0);
  for (const auto& prod : verdict.products) {
    cols.push_back(&builder.get(prod));
    for (const auto& [e, c] : cols.back()->terms()) row_of.emplace(e, 0);
  }
  std::size_t r = 0;
  for (auto& [e, idx] : row_of) idx = r++;
  verdict.equations = row_of.size();

  IntegerMatrix a(row_of.size(), cols.size());
  std::vector<Integer> b(row_of.size(), Integer(0));
  const Integer mod = p;
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [e, c] : cols[j]->terms()) a(row_of.at(e), j) = to_residue(c, mod);
  for (const auto& [e, c] : target.terms()) b[row_of.at(e)] = to_residue(c, mod);
  auto sol = solve_mod_prime_power(a, b, p, 1);
  verdict.decomposable = sol.solvable;
  if (sol.solvable) verdict.witness = sol.x;
  return verdict;
}

DecompositionVerdict indecomposable_mod_p(const InvariantFamily& family, int target_degree) {
  const auto& g = group_data(family.group);
  std::vector<int> lower;
  for (int d : g.degrees)
    if (d < target_degree) lower.push_back(d);
  return decompose_mod_p(family, family.at(target_degree), target_degree, lower, g.prime);
}

SymPoly divisibility_check_h42() { return divisibility_check_h42(build_invariants(GroupId::G34)); }

SymPoly divisibility_check_h42(const InvariantFamily& g34) {
  SymPoly diff = g34.at(42) - power(g34.at(6), 7);
  for (const auto& [e, c] : diff.terms())
    if (valuation(c, 7) < Valuation::finite(1))
      throw VerificationFailure("f42 - f6^7: coefficient of m" + e.to_string() + " = " + to_string(c) +
                                " is not divisible by 7");
  diff *= Rational(1, 7);
  if (!diff.is_homogeneous(42)) throw VerificationFailure("h42 is not homogeneous of degree 42");
  return diff;
}

// ---- f_36 ----------------------------------------------------------------

F36Decomposition decompose_f36() { return decompose_f36(build_invariants(GroupId::G34)); }

F36Decomposition decompose_f36(const InvariantFamily& g34) {
  F36Decomposition out;
  out.products = {{30, 6}, {24, 12}, {18, 18}, {24, 6, 6}, {18, 12, 6},
                  {12, 12, 12}, {18, 6, 6, 6}, {12, 12, 6, 6}, {12, 6, 6, 6, 6}, {6, 6, 6, 6, 6, 6}};
  ProductBuilder builder(g34, {36, 4});

  std::vector<Partition> coords;
  for (const auto& e : partitions_of(36, 4)) {
    bool all3 = true;
    for (int i = 0; i < e.length(); ++i) all3 = all3 && e[i] % 3 == 0;
    if (all3) coords.push_back(e);
  }
  if (coords.size() != 34)
    throw VerificationFailure("expected 34 length <= 4 coordinates, found " + std::to_string(coords.size()));
  std::map<Partition, std::size_t> row_of;
  for (std::size_t i = 0; i < coords.size(); ++i) row_of.emplace(coords[i], i);

  const std::size_t m = coords.size();
  const std::size_t n = out.products.size();
  RationalMatrix a(m, n + 1);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [e, c] : builder.get(out.products[j]).terms()) {
      auto it = row_of.find(e);
      if (it == row_of.end()) throw VerificationFailure("product has a coordinate outside the 34: m" + e.to_string());
      a(it->second, j) = c;
    }
  const SymPoly f36 = g34.at(36).restrict_length(4);
  for (const auto& [e, c] : f36.terms()) a(row_of.at(e), n) = c;
  out.equations = m;

  // Row reduction of the augmented system over Q.
  RationalMatrix w = a;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && sgn(w(piv, col)) == 0) ++piv;
    if (piv == m) continue;
    for (std::size_t c = 0; c <= n; ++c) std::swap(w(piv, c), w(row, c));
    Rational inv = 1 / w(row, col);
    for (std::size_t c = 0; c <= n; ++c) w(row, c) *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || sgn(w(r, col)) == 0) continue;
      Rational f = w(r, col);
      for (std::size_t c = 0; c <= n; ++c) w(r, c) -= f * w(row, c);
    }
    pivot_col.push_back(col);
    ++row;
  }
  out.rank = pivot_col.size();
  for (std::size_t r = out.rank; r < m; ++r)
    if (sgn(w(r, n)) != 0) throw NoSolution("f36 system is inconsistent");
  if (out.rank != n) throw NoSolution("f36 system is underdetermined (rank " + std::to_string(out.rank) + ")");
  out.q.assign(n, Rational(0));
  for (std::size_t r = 0; r < out.rank; ++r) out.q[pivot_col[r]] = w(r, n);

  out.residual_zero = true;
  for (std::size_t r = 0; r < m; ++r) {
    Rational acc = -a(r, n);
    for (std::size_t j = 0; j < n; ++j) acc += a(r, j) * out.q[j];
    if (sgn(acc) != 0) out.residual_zero = false;
  }
  out.all_seven_adic_units = std::all_of(out.q.begin(), out.q.end(), [](const Rational& q) { return is_p_unit(q, 7); });
  return out;
}

}  // namespace pcompact
