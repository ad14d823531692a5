#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcompact/exact.hpp"

namespace pcompact {

inline constexpr int kMaxVars = 8;

// Non-increasing positive parts, at most kMaxVars of them.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  // Sorts and drops zeros; throws on negative parts or too many parts.
  static Partition from_parts(std::span<const int> parts);

  int length() const { return len_; }
  int grading() const;
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  std::vector<int> parts() const;
  bool empty() const { return len_ == 0; }

  // Parts packed 8 bits each; injective.
  std::uint64_t pack() const;

  // Exponent vector of length nvars (parts then zeros).
  std::vector<int> padded(int nvars) const;

  // Number of distinct monomials in the orbit when there are nvars variables.
  Integer orbit_size(int nvars) const;

  // Product of factorials of the multiplicities of equal parts.
  Integer repetend_factor() const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) = default;
  // Grading first, then length, then parts lexicographically (larger first).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::array<std::uint8_t, kMaxVars> parts_{};
  std::uint8_t len_ = 0;
};

// Sparse symmetric polynomial in the monomial-symmetric basis.
class SymPoly {
 public:
  using Terms = std::map<Partition, Rational>;

  SymPoly() = default;
  explicit SymPoly(int nvars);
  SymPoly(int nvars, std::initializer_list<std::pair<Partition, Rational>> terms);

  static SymPoly monomial(int nvars, const Partition& e, const Rational& coeff = 1);
  static SymPoly one(int nvars) { return monomial(nvars, Partition{}); }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Coefficient of m_e (zero when absent).
  Rational coeff(const Partition& e) const;
  // Adds to the coefficient of m_e, erasing it if it cancels.
  void add_term(const Partition& e, const Rational& c);

  // Component of the given grading / gradings <= cap / length <= max_len.
  SymPoly component(int grading) const;
  SymPoly truncate(int cap) const;
  SymPoly restrict_length(int max_len) const;

  bool is_homogeneous(int degree) const;
  int max_grading() const;

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const Rational& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const Rational& c) { return a *= c; }
  friend SymPoly operator*(const Rational& c, SymPoly a) { return a *= c; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly& a, const SymPoly& b) = default;

  // Least common multiple of the coefficient denominators.
  Integer denominator_lcm() const;

  std::string to_string() const;

 private:
  void check_fits(const Partition& e) const;

  int nvars_ = 0;
  Terms terms_;
};

// Optional truncations for products.
struct ProductLimits {
  int max_grading = -1;  // < 0: unlimited
  int max_length = -1;   // < 0: unlimited
};

// m_a * m_b as a list of (m_c, integer coefficient), cached process-wide.
const std::vector<std::pair<Partition, Integer>>& m_product_terms(const Partition& a,
                                                                   const Partition& b, int nvars);
SymPoly m_product(const Partition& a, const Partition& b, int nvars);
SymPoly multiply(const SymPoly& f, const SymPoly& g, const ProductLimits& limits = {});
SymPoly power(const SymPoly& f, int exponent, const ProductLimits& limits = {});

// Truncated series: terms of grading > cap are unknown and never stored.
class GradedSeries {
 public:
  GradedSeries() = default;
  GradedSeries(SymPoly poly, int cap);

  int cap() const { return cap_; }
  const SymPoly& poly() const { return poly_; }
  SymPoly component(int grading) const { return poly_.component(grading); }

  GradedSeries& operator+=(const GradedSeries& o);
  GradedSeries& operator*=(const Rational& c);
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  GradedSeries pow(int exponent) const;

 private:
  SymPoly poly_;
  int cap_ = 0;
};

// x -> x + sum_q c_q x^q applied to every variable.
class SubstitutionTail {
 public:
  SubstitutionTail() = default;
  explicit SubstitutionTail(std::vector<std::pair<int, Rational>> terms);

  // x + x^p/p + x^{p^2}/p^2 + ..., keeping powers <= max_power.
  static SubstitutionTail typical_log(unsigned long p, int max_power);
  // x + x^p, the integral picture used for the congruence statements.
  static SubstitutionTail unit_shift(unsigned long p);

  const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  // gcd of the grading increments q - 1.
  int step() const;

  // Coefficients of u^0..u^max_n in (1 + sum c_q u^{q-1})^e.
  std::vector<Rational> power_series(int e, int max_n) const;

 private:
  std::vector<std::pair<int, Rational>> terms_;
};

// Grading-g component of m_e(x_1 + tail, ..., x_l + tail). Unreachable
// gradings give the zero polynomial.
SymPoly padic_log_substitute(const Partition& e, const SubstitutionTail& tail, int grading,
                             int nvars);
// The tail conventionally used at prime p: x + x^5/5 (+ x^25/25) at p = 5,
// x + x^7 at p = 7.
SymPoly padic_log_substitute(const Partition& e, unsigned long p, int grading, int nvars);

// f(x + tail) in all gradings <= cap.
GradedSeries substitute_series(const SymPoly& f, const SubstitutionTail& tail, int cap);

}  // namespace pcompact
