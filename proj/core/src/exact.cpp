#include "pcompact/exact.hpp"

#include <ostream>
#include <sstream>

#include "pcompact/error.hpp"

namespace pcompact {

long Valuation::value() const {
  if (infinite_) throw Error("value() of an infinite valuation");
  return value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return Valuation::infinity();
  return Valuation::finite(a.value_ + b.value_);
}

Valuation operator-(const Valuation& a, long shift) {
  if (a.infinite_) return a;
  return Valuation::finite(a.value_ - shift);
}

std::string Valuation::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

Valuation valuation(const Integer& x, unsigned long p) {
  if (sgn(x) == 0) return Valuation::infinity();
  Integer q = x;
  Integer pp = p;
  long v = static_cast<long>(mpz_remove(q.get_mpz_t(), q.get_mpz_t(), pp.get_mpz_t()));
  return Valuation::finite(v);
}

Valuation valuation(const Rational& x, unsigned long p) {
  if (sgn(x) == 0) return Valuation::infinity();
  return Valuation::finite(valuation(x.get_num(), p).value() - valuation(x.get_den(), p).value());
}

Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

bool is_p_integral(const Rational& x, unsigned long p) {
  return mpz_divisible_ui_p(x.get_den_mpz_t(), p) == 0;
}

bool is_p_unit(const Rational& x, unsigned long p) {
  return sgn(x) != 0 && is_p_integral(x, p) && mpz_divisible_ui_p(x.get_num_mpz_t(), p) == 0;
}

Integer pow_mod(const Integer& base, const Integer& exponent, const Integer& modulus) {
  if (sgn(exponent) < 0) throw Error("pow_mod: negative exponent");
  if (modulus < 1) throw Error("pow_mod: modulus must be positive");
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer ipow(unsigned long base, unsigned long exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

Integer mod_floor(const Integer& x, const Integer& modulus) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

Integer to_residue(const Rational& x, const Integer& modulus) {
  Integer inv;
  Integer den = x.get_den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    if (modulus == 1) return 0;
    throw Error("to_residue: denominator of " + to_string(x) + " is not invertible mod " +
                modulus.get_str());
  }
  return mod_floor(x.get_num() * inv, modulus);
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer multinomial(std::span<const int> parts) {
  Integer r = 1;
  unsigned long total = 0;
  for (int e : parts) {
    if (e < 0) throw Error("multinomial: negative part");
    total += static_cast<unsigned long>(e);
    r *= binomial(total, static_cast<unsigned long>(e));
  }
  return r;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && (t.front() == ' ' || t.front() == '+')) t.erase(t.begin());
    while (!t.empty() && t.back() == ' ') t.pop_back();
  };
  trim(s);
  if (s.empty()) throw ParseError("empty rational");
  Rational r;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      r = Rational(Integer(s), 1);
    } else {
      Integer num(s.substr(0, slash));
      Integer den(s.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + s + "'");
      r = Rational(num, den);
      r.canonicalize();
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + s + "'");
  }
  return r;
}

Rational fractional_part(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rational(fl);
}

std::string_view field_name(Field f) {
  switch (f) {
    case Field::Q: return "Q";
    case Field::Qi: return "Qi";
    case Field::Qw: return "Qw";
  }
  return "?";
}

Field parse_field(std::string_view name) {
  if (name == "Q") return Field::Q;
  if (name == "Qi") return Field::Qi;
  if (name == "Qw") return Field::Qw;
  throw ParseError("unknown field '" + std::string(name) + "'");
}

Field join_fields(Field x, Field y) {
  if (x == y || y == Field::Q) return x;
  if (x == Field::Q) return y;
  throw FieldMismatch("cannot combine Q(i) and Q(w) elements");
}

CycRational::CycRational(long a) : a_(a) {}

CycRational::CycRational(Rational a) : a_(std::move(a)) {}

CycRational::CycRational(Field field, Rational a, Rational b)
    : field_(field), a_(std::move(a)), b_(std::move(b)) {
  if (field_ == Field::Q && sgn(b_) != 0) throw FieldMismatch("nonzero b in a Q element");
}

CycRational CycRational::i() { return {Field::Qi, 0, 1}; }

CycRational CycRational::omega() { return {Field::Qw, 0, 1}; }

CycRational CycRational::omega_pow(long k) {
  switch (((k % 3) + 3) % 3) {
    case 0: return {Field::Qw, 1, 0};
    case 1: return {Field::Qw, 0, 1};
    default: return {Field::Qw, -1, -1};
  }
}

CycRational CycRational::sqrt_minus3() { return {Field::Qw, 1, 2}; }

const Rational& CycRational::as_rational() const {
  if (!is_rational()) throw Error("element " + to_string() + " is not rational");
  return a_;
}

CycRational CycRational::conj() const {
  switch (field_) {
    case Field::Q: return *this;
    case Field::Qi: return {Field::Qi, a_, -b_};
    case Field::Qw: return {Field::Qw, a_ - b_, -b_};
  }
  return *this;
}

Rational CycRational::norm() const {
  switch (field_) {
    case Field::Q: return a_ * a_;
    case Field::Qi: return a_ * a_ + b_ * b_;
    case Field::Qw: return a_ * a_ - a_ * b_ + b_ * b_;
  }
  return 0;
}

CycRational CycRational::inverse() const {
  if (is_zero()) throw Error("division by zero");
  CycRational c = conj();
  Rational n = norm();
  c.a_ /= n;
  c.b_ /= n;
  return c;
}

CycRational& CycRational::operator+=(const CycRational& o) {
  field_ = join_fields(field_, o.field_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

CycRational& CycRational::operator-=(const CycRational& o) {
  field_ = join_fields(field_, o.field_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

CycRational& CycRational::operator*=(const CycRational& o) {
  field_ = join_fields(field_, o.field_);
  if (field_ == Field::Q) {
    a_ *= o.a_;
    return *this;
  }
  Rational ac = a_ * o.a_;
  Rational bd = b_ * o.b_;
  Rational cross = a_ * o.b_ + b_ * o.a_;
  if (field_ == Field::Qi) {
    a_ = ac - bd;
    b_ = cross;
  } else {
    // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, w^2 = -1 - w
    a_ = ac - bd;
    b_ = cross - bd;
  }
  return *this;
}

CycRational& CycRational::operator/=(const CycRational& o) { return *this *= o.inverse(); }

CycRational CycRational::operator-() const {
  CycRational r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

bool operator==(const CycRational& x, const CycRational& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  if (sgn(x.b_) == 0) return true;
  return x.field_ == y.field_;
}

std::string CycRational::to_string() const {
  if (field_ == Field::Q || sgn(b_) == 0) return pcompact::to_string(a_);
  std::ostringstream os;
  const char* unit = field_ == Field::Qi ? "i" : "w";
  if (sgn(a_) != 0) os << pcompact::to_string(a_) << (sgn(b_) > 0 ? "+" : "");
  os << pcompact::to_string(b_) << "*" << unit;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycRational& x) { return os << x.to_string(); }

CycRational cyc_mul(const CycRational& x, const CycRational& y) { return x * y; }

}  // namespace pcompact
