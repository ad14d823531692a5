#include "pcompact/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "pcompact/error.hpp"

namespace pcompact {

MonomialKey make_key(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars)) throw DimensionMismatch("too many variables");
  MonomialKey k = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 255) throw Error("exponent out of range");
    k |= MonomialKey(exponents[i]) << (8 * i);
  }
  return k;
}

int key_exponent(MonomialKey key, int var) { return static_cast<int>((key >> (8 * var)) & 0xFF); }

std::vector<int> key_exponents(MonomialKey key, int nvars) {
  std::vector<int> e(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) e[static_cast<std::size_t>(i)] = key_exponent(key, i);
  return e;
}

void Polynomial::add_term(MonomialKey key, const CycRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CycRational Polynomial::coeff(std::span<const int> exponents) const {
  auto it = terms_.find(make_key(exponents));
  return it == terms_.end() ? CycRational(0) : it->second;
}

Polynomial full_expand(const SymPoly& f, std::size_t budget) {
  const int n = f.nvars();
  std::size_t produced = 0;
  Polynomial out(n);
  for (const auto& [e, c] : f.terms()) {
    Integer orbit = e.orbit_size(n);
    if (orbit > Integer(static_cast<unsigned long>(budget - std::min(budget, produced))))
      throw BudgetExceeded("full_expand: monomial budget " + std::to_string(budget) +
                           " exceeded at grading " + std::to_string(e.grading()));
    produced += orbit.get_ui();
    std::vector<int> exps = e.padded(n);
    std::sort(exps.begin(), exps.end());
    do {
      out.add_term(make_key(exps), CycRational(c));
    } while (std::next_permutation(exps.begin(), exps.end()));
  }
  return out;
}

namespace {

// Element of Z[i] or Z[w] (or Z) used while denominators are factored out.
struct CycInteger {
  Integer a;
  Integer b;
};

void cyc_mul_into(Field field, const CycInteger& x, const CycInteger& y, CycInteger& out) {
  if (field == Field::Q) {
    out.a = x.a * y.a;
    out.b = 0;
    return;
  }
  Integer ac = x.a * y.a;
  Integer bd = x.b * y.b;
  Integer cross = x.a * y.b + x.b * y.a;
  out.a = ac - bd;
  out.b = field == Field::Qi ? Integer(cross) : Integer(cross - bd);
}

bool is_zero(const CycInteger& x) { return sgn(x.a) == 0 && sgn(x.b) == 0; }

// Elementary substitution. kAdd: x_r -> x_r + c x_j; kScale: x_r -> c x_r;
// kSwap: x_r <-> x_j.
struct ElementaryOp {
  enum Kind { kAdd, kScale, kSwap } kind;
  int r;
  int j;
  CycRational c;
};

// Ops O_1..O_m with M = O_1 O_2 ... O_m, from Gauss-Jordan row reduction.
std::vector<ElementaryOp> factor_matrix(const CycMatrix& m) {
  const int n = static_cast<int>(m.rows());
  CycMatrix a = m;
  std::vector<ElementaryOp> ops;
  auto at = [&](int i, int j) -> CycRational& {
    return a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  };
  for (int j = 0; j < n; ++j) {
    int piv = j;
    while (piv < n && at(piv, j).is_zero()) ++piv;
    if (piv == n) throw Error("substitute_linear: singular matrix");
    if (piv != j) {
      for (int c = 0; c < n; ++c) std::swap(at(piv, c), at(j, c));
      ops.push_back({ElementaryOp::kSwap, piv, j, CycRational(1)});
    }
    CycRational d = at(j, j);
    if (!(d == CycRational(1))) {
      CycRational s = d.inverse();
      for (int c = 0; c < n; ++c) at(j, c) *= s;
      ops.push_back({ElementaryOp::kScale, j, j, d});  // inverse of scaling by s
    }
    for (int r = 0; r < n; ++r) {
      if (r == j || at(r, j).is_zero()) continue;
      CycRational f = at(r, j);
      for (int c = 0; c < n; ++c) at(r, c) -= f * at(j, c);
      ops.push_back({ElementaryOp::kAdd, r, j, f});  // inverse of subtracting f * row j
    }
  }
  return ops;
}

using IntPolyMap = std::unordered_map<MonomialKey, CycInteger>;

void split(const CycRational& c, CycInteger& u, Integer& v) {
  v = c.a().get_den();
  mpz_lcm(v.get_mpz_t(), v.get_mpz_t(), c.b().get_den_mpz_t());
  u.a = Integer(c.a() * v);
  u.b = Integer(c.b() * v);
}

class LinearSubstituter {
 public:
  LinearSubstituter(Field field, int nvars) : field_(field), nvars_(nvars) {}

  void load(const SymPoly& f) {
    denom_ = f.denominator_lcm();
    const Polynomial expanded = full_expand(f);
    for (const auto& [key, c] : expanded.terms()) {
      CycInteger x{Integer(c.a() * denom_), Integer(0)};
      poly_.emplace(key, std::move(x));
    }
  }

  void apply(const ElementaryOp& op) {
    switch (op.kind) {
      case ElementaryOp::kSwap: swap(op.r, op.j); break;
      case ElementaryOp::kScale: scale(op.r, op.c); break;
      case ElementaryOp::kAdd: add(op.r, op.j, op.c); break;
    }
  }

  Polynomial result() const {
    Polynomial out(nvars_);
    for (const auto& [key, x] : poly_) {
      if (is_zero(x)) continue;
      Rational a(x.a, denom_);
      Rational b(x.b, denom_);
      a.canonicalize();
      b.canonicalize();
      out.add_term(key, field_ == Field::Q ? CycRational(a) : CycRational(field_, a, b));
    }
    return out;
  }

 private:
  int max_exponent(int var) const {
    int m = 0;
    for (const auto& [key, x] : poly_) m = std::max(m, key_exponent(key, var));
    return m;
  }

  std::vector<CycInteger> powers(const CycInteger& u, int upto) const {
    std::vector<CycInteger> p(static_cast<std::size_t>(upto + 1));
    p[0] = {1, 0};
    for (int s = 1; s <= upto; ++s) cyc_mul_into(field_, p[static_cast<std::size_t>(s - 1)], u, p[static_cast<std::size_t>(s)]);
    return p;
  }

  static MonomialKey with_exponent(MonomialKey key, int var, int e) {
    key &= ~(MonomialKey(0xFF) << (8 * var));
    return key | (MonomialKey(e) << (8 * var));
  }

  void swap(int r, int j) {
    IntPolyMap next;
    next.reserve(poly_.size());
    for (auto& [key, x] : poly_) {
      int er = key_exponent(key, r);
      int ej = key_exponent(key, j);
      MonomialKey k = with_exponent(with_exponent(key, r, ej), j, er);
      next.emplace(k, std::move(x));
    }
    poly_ = std::move(next);
  }

  void scale(int r, const CycRational& c) {
    CycInteger u;
    Integer v;
    split(c, u, v);
    const int top = max_exponent(r);
    auto up = powers(u, top);
    std::vector<Integer> vp(static_cast<std::size_t>(top + 1));
    vp[0] = 1;
    for (int s = 1; s <= top; ++s) vp[static_cast<std::size_t>(s)] = vp[static_cast<std::size_t>(s - 1)] * v;
    CycInteger tmp;
    for (auto& [key, x] : poly_) {
      int a = key_exponent(key, r);
      cyc_mul_into(field_, x, up[static_cast<std::size_t>(a)], tmp);
      x.a = tmp.a * vp[static_cast<std::size_t>(top - a)];
      x.b = tmp.b * vp[static_cast<std::size_t>(top - a)];
    }
    denom_ *= vp[static_cast<std::size_t>(top)];
  }

  void add(int r, int j, const CycRational& c) {
    CycInteger u;
    Integer v;
    split(c, u, v);
    const int top = max_exponent(r);
    auto up = powers(u, top);
    std::vector<Integer> vp(static_cast<std::size_t>(top + 1));
    vp[0] = 1;
    for (int s = 1; s <= top; ++s) vp[static_cast<std::size_t>(s)] = vp[static_cast<std::size_t>(s - 1)] * v;
    IntPolyMap next;
    next.reserve(poly_.size() * 2);
    CycInteger tmp;
    for (const auto& [key, x] : poly_) {
      const int a = key_exponent(key, r);
      const int b = key_exponent(key, j);
      for (int s = 0; s <= a; ++s) {
        // x_r^a -> sum_s C(a,s) x_r^{a-s} (u/v)^s x_j^s, all scaled by v^top
        cyc_mul_into(field_, x, up[static_cast<std::size_t>(s)], tmp);
        Integer w = binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(s)) *
                    vp[static_cast<std::size_t>(top - s)];
        MonomialKey k = with_exponent(with_exponent(key, r, a - s), j, b + s);
        CycInteger& dst = next[k];
        dst.a += tmp.a * w;
        dst.b += tmp.b * w;
      }
    }
    poly_ = std::move(next);
    denom_ *= vp[static_cast<std::size_t>(top)];
  }

  Field field_;
  int nvars_;
  Integer denom_ = 1;
  IntPolyMap poly_;
};

}  // namespace

Polynomial substitute_linear(const SymPoly& f, const CycMatrix& m) {
  const int n = f.nvars();
  if (m.rows() != static_cast<std::size_t>(n) || m.cols() != static_cast<std::size_t>(n))
    throw DimensionMismatch("substitute_linear: matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " but the polynomial has " +
                            std::to_string(n) + " variables");
  Field field = Field::Q;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) field = join_fields(field, m(i, j).field());
  LinearSubstituter sub(field, n);
  sub.load(f);
  for (const auto& op : factor_matrix(m)) sub.apply(op);
  return sub.result();
}

bool is_invariant(const SymPoly& f, const CycMatrix& m) {
  return substitute_linear(f, m) == full_expand(f);
}

}  // namespace pcompact
