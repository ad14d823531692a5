#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcompact/exact.hpp"

namespace pcompact {

// Dense polynomial in Z[x], coefficients lowest degree first, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c);  // NOLINT(google-explicit-constructor)
  IntPoly(Integer c);  // NOLINT(google-explicit-constructor)
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly x();

  const std::vector<Integer>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Integer& leading() const;
  Integer coeff(int i) const;

  Integer evaluate(const Integer& x) const;
  // Value mod m, in [0, m).
  Integer evaluate_mod(const Integer& x, const Integer& m) const;
  // Coefficients of p(a + y) in y.
  IntPoly taylor_shift(const Integer& a) const;

  Integer content() const;  // non-negative
  // Divided by its content, leading coefficient made positive.
  IntPoly primitive() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  IntPoly operator-() const;
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  // "x^4 - 526472*x^3 + ..." highest degree first.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Primitive gcd with positive leading coefficient (gcd(0, 0) = 0).
IntPoly gcd(const IntPoly& a, const IntPoly& b);
// Exact quotient in Z[x]; throws unless b divides a.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

// nu_p of the coefficients of f(a + y) for y^0..y^max_degree, computed mod p^n;
// nullopt when a coefficient vanishes mod p^n. Only a mod p^n matters.
std::vector<std::optional<long>> taylor_valuations(const IntPoly& f, const Integer& a, unsigned long p, int n,
                                                   int max_degree);

// c * num / den with num, den primitive, positive leading coefficients and
// coprime. Zero is c = 0, num = den = 1.
class RatFunc {
 public:
  RatFunc() : c_(0), num_(1), den_(1) {}
  RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Rational c);  // NOLINT(google-explicit-constructor)
  RatFunc(const IntPoly& p);  // NOLINT(google-explicit-constructor)
  RatFunc(const IntPoly& num, const IntPoly& den);

  const Rational& scalar() const { return c_; }
  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return sgn(c_) == 0; }

  // numerator(c) * num: the integer polynomial a cancelled fraction shows on top.
  IntPoly numerator_poly() const;
  IntPoly denominator_poly() const;

  // p-adic valuation of the value at x, given x mod p^n. Returns nullopt
  // when the numerator vanishes mod p^n (precision exhausted).
  std::optional<long> valuation_at(const Integer& x_mod, unsigned long p, int n) const;
  // Unit at every x congruent to x0 mod p.
  bool unit_on_class(const Integer& x0, unsigned long p) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.c_ == b.c_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  static RatFunc normalize(const IntPoly& n, const IntPoly& d);
  Rational c_;
  IntPoly num_;
  IntPoly den_;
};

}  // namespace pcompact
