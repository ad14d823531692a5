#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace pcompact {

using Integer = mpz_class;
using Rational = mpq_class;

// p-adic valuation; infinity is its own state, never a large integer.
class Valuation {
 public:
  constexpr Valuation() = default;
  static constexpr Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }
  static constexpr Valuation finite(long value) {
    Valuation v;
    v.value_ = value;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  // Only meaningful when finite.
  long value() const;

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend Valuation operator-(const Valuation& a, long shift);

  std::string to_string() const;

 private:
  bool infinite_ = false;
  long value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

Valuation valuation(const Integer& x, unsigned long p);
Valuation valuation(const Rational& x, unsigned long p);
Valuation min(const Valuation& a, const Valuation& b);

bool is_p_integral(const Rational& x, unsigned long p);
bool is_p_unit(const Rational& x, unsigned long p);

// base^exponent mod modulus, exponent >= 0, modulus >= 1. Result in [0, modulus).
Integer pow_mod(const Integer& base, const Integer& exponent, const Integer& modulus);
Integer ipow(const Integer& base, unsigned long exponent);
Integer ipow(unsigned long base, unsigned long exponent);

// Image of a p-integral rational in Z/modulus, modulus a power of p.
Integer to_residue(const Rational& x, const Integer& modulus);
Integer mod_floor(const Integer& x, const Integer& modulus);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Integer multinomial(std::span<const int> parts);

// "num/den" with den omitted when 1.
std::string to_string(const Rational& x);
Rational parse_rational(std::string_view text);

// Fractional part in [0, 1).
Rational fractional_part(const Rational& x);

enum class Field : std::uint8_t { Q, Qi, Qw };

std::string_view field_name(Field f);
Field parse_field(std::string_view name);

// a + b*i in Q(i), a + b*w in Q(w) with w^2 = -1 - w, or a in Q.
class CycRational {
 public:
  CycRational() = default;
  CycRational(long a);  // NOLINT(google-explicit-constructor)
  CycRational(Rational a);  // NOLINT(google-explicit-constructor)
  CycRational(Field field, Rational a, Rational b);

  static CycRational i();
  static CycRational omega();
  // w^k for any integer k, reduced to the basis {1, w}.
  static CycRational omega_pow(long k);
  // 1 + 2w, whose square is -3.
  static CycRational sqrt_minus3();

  Field field() const { return field_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  // Throws unless b == 0.
  const Rational& as_rational() const;

  CycRational conj() const;
  // x * conj(x), always rational.
  Rational norm() const;
  CycRational inverse() const;

  CycRational& operator+=(const CycRational& o);
  CycRational& operator-=(const CycRational& o);
  CycRational& operator*=(const CycRational& o);
  CycRational& operator/=(const CycRational& o);

  friend CycRational operator+(CycRational x, const CycRational& y) { return x += y; }
  friend CycRational operator-(CycRational x, const CycRational& y) { return x -= y; }
  friend CycRational operator*(CycRational x, const CycRational& y) { return x *= y; }
  friend CycRational operator/(CycRational x, const CycRational& y) { return x /= y; }
  CycRational operator-() const;

  // Equality compares values; a rational equals itself in any field.
  friend bool operator==(const CycRational& x, const CycRational& y);

  std::string to_string() const;

 private:
  Field field_ = Field::Q;
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const CycRational& x);

// Field of a binary operation: Q promotes, Qi and Qw never mix.
Field join_fields(Field x, Field y);

CycRational cyc_mul(const CycRational& x, const CycRational& y);

}  // namespace pcompact
