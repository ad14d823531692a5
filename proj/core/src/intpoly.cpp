#include "pcompact/intpoly.hpp"

#include <algorithm>

#include "pcompact/error.hpp"

namespace pcompact {

IntPoly::IntPoly(long c) : IntPoly(Integer(c)) {}

IntPoly::IntPoly(Integer c) {
  if (sgn(c) != 0) c_.push_back(std::move(c));
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::x() { return IntPoly(std::vector<Integer>{0, 1}); }

void IntPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Integer& IntPoly::leading() const {
  if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
  return c_.back();
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer IntPoly::evaluate_mod(const Integer& x, const Integer& m) const {
  Integer acc = 0;
  const Integer xm = mod_floor(x, m);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod_floor(acc * xm + *it, m);
  return acc;
}

IntPoly IntPoly::taylor_shift(const Integer& a) const {
  // Horner in the ring Z[y]: q <- q*(a + y) + c_i.
  std::vector<Integer> q;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    std::vector<Integer> next(q.size() + 1, Integer(0));
    for (std::size_t j = 0; j < q.size(); ++j) {
      next[j] += q[j] * a;
      next[j + 1] += q[j];
    }
    next[0] += *it;
    q = std::move(next);
  }
  return IntPoly(std::move(q));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive() const {
  if (c_.empty()) return {};
  Integer g = content();
  if (sgn(c_.back()) < 0) g = -g;
  IntPoly out = *this;
  for (auto& c : out.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = c_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = b.degree();
  std::vector<Integer> r = a.coeffs();
  const Integer& lb = b.leading();
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const int dr = static_cast<int>(r.size()) - 1;
    const Integer lr = r.back();
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(dr - db + j)] -= lr * b.coeffs()[static_cast<std::size_t>(j)];
    while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
  }
  return IntPoly(std::move(r));
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive();
  IntPoly y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  if (a.is_zero()) return {};
  const int db = b.degree();
  std::vector<Integer> r = a.coeffs();
  if (static_cast<int>(r.size()) - 1 < db) throw Error("divide_exact: divisor does not divide");
  std::vector<Integer> q(r.size() - static_cast<std::size_t>(db), Integer(0));
  const Integer& lb = b.leading();
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    Integer& top = r[static_cast<std::size_t>(i + db)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw Error("divide_exact: divisor does not divide");
    Integer f = top / lb;
    q[static_cast<std::size_t>(i)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  for (const auto& c : r)
    if (sgn(c) != 0) throw Error("divide_exact: divisor does not divide");
  return IntPoly(std::move(q));
}

// ---- RatFunc -------------------------------------------------------------

RatFunc::RatFunc(Rational c) : c_(std::move(c)), num_(1), den_(1) { c_.canonicalize(); }

RatFunc::RatFunc(const IntPoly& p) : RatFunc(p, IntPoly(1)) {}

RatFunc::RatFunc(const IntPoly& num, const IntPoly& den) { *this = normalize(num, den); }

RatFunc RatFunc::normalize(const IntPoly& n, const IntPoly& d) {
  if (d.is_zero()) throw Error("rational function with zero denominator");
  RatFunc out;
  if (n.is_zero()) return out;
  IntPoly g = gcd(n, d);
  IntPoly nn = g.degree() > 0 ? divide_exact(n, g) : n;
  IntPoly dd = g.degree() > 0 ? divide_exact(d, g) : d;
  Integer cn = nn.content();
  Integer cd = dd.content();
  if (sgn(nn.leading()) < 0) cn = -cn;
  if (sgn(dd.leading()) < 0) cd = -cd;
  out.c_ = Rational(cn, cd);
  out.c_.canonicalize();
  out.num_ = nn.primitive();
  out.den_ = dd.primitive();
  return out;
}

IntPoly RatFunc::numerator_poly() const { return num_ * Integer(c_.get_num()); }
IntPoly RatFunc::denominator_poly() const { return den_ * Integer(c_.get_den()); }

std::optional<long> RatFunc::valuation_at(const Integer& x_mod, unsigned long p, int n) const {
  if (is_zero()) return std::nullopt;
  const Integer m = ipow(p, static_cast<unsigned long>(n));
  Integer nv = num_.evaluate_mod(x_mod, m);
  Integer dv = den_.evaluate_mod(x_mod, m);
  if (sgn(nv) == 0 || sgn(dv) == 0) return std::nullopt;
  return valuation(c_, p).value() + valuation(nv, p).value() - valuation(dv, p).value();
}

bool RatFunc::unit_on_class(const Integer& x0, unsigned long p) const {
  if (is_zero() || !is_p_unit(c_, p)) return false;
  const Integer m = p;
  return sgn(num_.evaluate_mod(x0, m)) != 0 && sgn(den_.evaluate_mod(x0, m)) != 0;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const Integer a1 = c_.get_num(), a2 = c_.get_den(), b1 = o.c_.get_num(), b2 = o.c_.get_den();
  if (den_ == o.den_) {
    *this = normalize(num_ * Integer(a1 * b2) + o.num_ * Integer(b1 * a2), den_ * Integer(a2 * b2));
  } else {
    *this = normalize(num_ * o.den_ * Integer(a1 * b2) + o.num_ * den_ * Integer(b1 * a2),
                      den_ * o.den_ * Integer(a2 * b2));
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  RatFunc neg = o;
  neg.c_ = -neg.c_;
  return *this += neg;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  Rational c = c_ * o.c_;
  RatFunc r = normalize(num_ * o.num_, den_ * o.den_);
  r.c_ *= c;
  return *this = r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw Error("rational function division by zero");
  RatFunc inv;
  inv.c_ = 1 / o.c_;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  return *this *= inv;
}

std::string RatFunc::to_string() const {
  std::string top = numerator_poly().to_string();
  IntPoly bottom = denominator_poly();
  if (bottom == IntPoly(1)) return top;
  return "(" + top + ")/(" + bottom.to_string() + ")";
}

}  // namespace pcompact

namespace pcompact {

std::vector<std::optional<long>> taylor_valuations(const IntPoly& f, const Integer& a, unsigned long p, int n,
                                                   int max_degree) {
  const Integer mod = ipow(p, static_cast<unsigned long>(n));
  const IntPoly shifted = f.taylor_shift(mod_floor(a, mod));
  std::vector<std::optional<long>> out;
  for (int j = 0; j <= max_degree; ++j) {
    const Integer c = mod_floor(shifted.coeff(j), mod);
    if (sgn(c) == 0) out.push_back(std::nullopt);
    else out.push_back(valuation(c, p).value());
  }
  return out;
}

}  // namespace pcompact
