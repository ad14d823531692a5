#include <algorithm>
#include <set>

#include "pcompact/data.hpp"
#include "pcompact/error.hpp"
#include "pcompact/invariants.hpp"
#include "pcompact/serialize.hpp"

namespace pcompact {

namespace {

std::vector<Rational> key_of(const LatticeVector& v) {
  std::vector<Rational> k;
  k.reserve(12);
  for (const auto& x : v) {
    k.push_back(x.a());
    k.push_back(x.b());
  }
  return k;
}

CycRational w(long k) { return CycRational::omega_pow(k); }
CycRational zero() { return CycRational(Field::Qw, 0, 0); }

// 1/sqrt(-3) written as (1 + 2w)/(-3).
CycRational scaled_unit() { return CycRational::sqrt_minus3() * CycRational(Field::Qw, Rational(-1, 3), 0); }

LatticeVector scaled(const std::array<long, 6>& a, int sign) {
  LatticeVector v;
  const CycRational s = scaled_unit() * CycRational(Field::Qw, sign, 0);
  for (std::size_t i = 0; i < 6; ++i) v[i] = s * w(a[i]);
  return v;
}

bool is_short_type(const LatticeVector& v) {
  return std::count_if(v.begin(), v.end(), [](const CycRational& x) { return x.is_zero(); }) == 4;
}

}  // namespace

std::optional<std::size_t> LatticeVectorSet::find(const LatticeVector& v) const {
  auto it = lookup_.find(key_of(v));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

void LatticeVectorSet::index() {
  lookup_.clear();
  for (std::size_t i = 0; i < vectors.size(); ++i) lookup_.emplace(key_of(vectors[i]), i);
}

LatticeVectorSet lattice_vectors() {
  LatticeVectorSet set;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      if (i == j) continue;
      for (long a = 0; a < 3; ++a)
        for (long b = 0; b < 3; ++b) {
          LatticeVector v;
          v.fill(zero());
          v[i] = w(a);
          v[j] = -w(b);
          set.vectors.push_back(v);
        }
    }
  for (int sign : {1, -1})
    for (int code = 0; code < 729; ++code) {
      std::array<long, 6> a{};
      int c = code;
      long sum = 0;
      for (std::size_t i = 0; i < 6; ++i) {
        a[i] = c % 3;
        c /= 3;
        sum += a[i];
      }
      if (sum % 3 != 0) continue;
      set.vectors.push_back(scaled(a, sign));
    }
  set.index();
  return set;
}

LatticeVectorSet shipped_lattice() {
  const auto& doc = data_json("g34_lattice.json");
  LatticeVectorSet set;
  for (const auto& row : doc.at("vectors")) {
    if (row.size() != 6) throw ParseError("lattice vector without 6 entries");
    LatticeVector v;
    for (std::size_t i = 0; i < 6; ++i) {
      auto text = row[i].get<std::string>();
      auto colon = text.find(':');
      if (colon == std::string::npos) throw ParseError("bad lattice entry '" + text + "'");
      v[i] = CycRational(Field::Qw, parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1)));
    }
    set.vectors.push_back(v);
  }
  if (set.vectors.size() != doc.at("count").get<std::size_t>()) throw ParseError("lattice count mismatch");
  set.index();
  return set;
}

LatticeVector apply(const CycMatrix& m, const LatticeVector& v) {
  if (m.rows() != 6 || m.cols() != 6) throw DimensionMismatch("lattice action needs a 6x6 matrix");
  LatticeVector out;
  for (std::size_t i = 0; i < 6; ++i) {
    CycRational acc = zero();
    for (std::size_t j = 0; j < 6; ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Rational hermitian_norm(const LatticeVector& v) {
  Rational n = 0;
  for (const auto& x : v) n += x.norm();
  return n;
}

bool LatticeReport::ok() const {
  if (count != 756 || !no_duplicates || !all_norm_two || !sum_condition) return false;
  if (short_type != 270 || scaled_type != 486) return false;
  for (const auto& g : generators)
    if (!g.closed) return false;
  for (const auto& b : bullets)
    if (!b.as_printed && !b.ok) return false;
  return true;
}

LatticeReport verify_lattice(const LatticeVectorSet& set, const ReflectionGroupData& group) {
  LatticeReport r;
  r.count = set.vectors.size();
  std::set<std::vector<Rational>> seen;
  for (const auto& v : set.vectors) seen.insert(key_of(v));
  r.no_duplicates = seen.size() == set.vectors.size();
  r.all_norm_two = std::all_of(set.vectors.begin(), set.vectors.end(),
                               [](const LatticeVector& v) { return hermitian_norm(v) == 2; });

  // For the scaled type, v/s = (+-w^a1, ..., +-w^a6); the product of the
  // entries is w^(sum a_i) since the sign enters to the sixth power.
  r.sum_condition = true;
  const CycRational s_inv = scaled_unit().inverse();
  for (const auto& v : set.vectors) {
    if (is_short_type(v)) {
      ++r.short_type;
      continue;
    }
    ++r.scaled_type;
    CycRational prod(Field::Qw, 1, 0);
    for (const auto& x : v) prod *= x * s_inv;
    if (!(prod == CycRational(Field::Qw, 1, 0))) r.sum_condition = false;
  }

  for (const auto& g : group.generators) {
    GeneratorPermutation perm{g.name, true, {}, {}};
    perm.permutation.reserve(set.vectors.size());
    for (std::size_t i = 0; i < set.vectors.size(); ++i) {
      auto idx = set.find(pcompact::apply(g.matrix, set.vectors[i]));
      if (idx) {
        perm.permutation.push_back(*idx);
      } else {
        perm.closed = false;
        perm.missing.push_back(i);
        perm.permutation.push_back(set.vectors.size());
      }
    }
    r.generators.push_back(std::move(perm));
  }

  if (group.id == GroupId::G34) {
    const auto& refl = group.generator("sum_reflection");
    auto check = [&](std::string description, LatticeVector src, LatticeVector expected, bool printed) {
      LatticeImageCheck c{std::move(description), src, expected, pcompact::apply(refl, src), set.contains(src), printed, false};
      c.ok = c.source_in_set && c.actual == c.expected;
      r.bullets.push_back(std::move(c));
    };
    LatticeVector printed_src;
    printed_src.fill(zero());
    printed_src[0] = w(1);
    printed_src[1] = w(2);
    LatticeVector fixed_src = printed_src;
    fixed_src[1] = -w(2);
    check("(w, w^2, 0, 0, 0, 0) as printed", printed_src, scaled({2, 1, 0, 0, 0, 0}, 1), true);
    check("(w, -w^2, 0, 0, 0, 0)", fixed_src, scaled({2, 1, 0, 0, 0, 0}, 1), false);
    check("s(1,1,1,1,1,1)", scaled({0, 0, 0, 0, 0, 0}, 1), scaled({0, 0, 0, 0, 0, 0}, -1), false);
    check("s(1,1,1,w,w,w)", scaled({0, 0, 0, 1, 1, 1}, 1), scaled({1, 1, 1, 0, 0, 0}, -1), false);
    check("s(1,1,w,w,w^2,w^2)", scaled({0, 0, 1, 1, 2, 2}, 1), scaled({0, 0, 1, 1, 2, 2}, 1), false);
  }
  return r;
}

}  // namespace pcompact
