#pragma once

#include <map>
#include <string>
#include <vector>

#include "pcompact/exact.hpp"
#include "pcompact/invariants.hpp"
#include "pcompact/matrix.hpp"

namespace pcompact {

// sum_d a_d k^d, a function of the integer k.
class KPowerCombo {
 public:
  KPowerCombo() = default;
  KPowerCombo(long c);  // NOLINT(google-explicit-constructor): constant term
  static KPowerCombo monomial(int power, Rational coeff);

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational evaluate(const Integer& k) const;
  // Formal division by k: every power drops by one.
  KPowerCombo divided_by_k() const;

  KPowerCombo& operator+=(const KPowerCombo& o);
  KPowerCombo& operator-=(const KPowerCombo& o);
  KPowerCombo& operator*=(const KPowerCombo& o);
  KPowerCombo& operator*=(const Rational& c);
  friend KPowerCombo operator+(KPowerCombo a, const KPowerCombo& b) { return a += b; }
  friend KPowerCombo operator-(KPowerCombo a, const KPowerCombo& b) { return a -= b; }
  friend KPowerCombo operator*(KPowerCombo a, const KPowerCombo& b) { return a *= b; }
  friend KPowerCombo operator*(KPowerCombo a, const Rational& c) { return a *= c; }
  friend bool operator==(const KPowerCombo& a, const KPowerCombo& b) { return a.terms_ == b.terms_; }

  // "1/5*k^3 - 1/5*k^7"
  std::string to_string() const;

 private:
  void add(int power, const Rational& c);
  std::map<int, Rational> terms_;
};

using KPowerMatrix = Matrix<KPowerCombo>;

struct AdamsMatrix {
  GroupId group = GroupId::G29;
  // Dimensions of the generators z_i (Adams degree minus one).
  std::vector<int> basis;
  KPowerMatrix entries;

  RationalMatrix evaluate(const Integer& k) const;
  bool lower_triangular() const;
};

// Unit lower-triangular: entry (i, j) is the coefficient of F_{d_i} in the
// combination with base F_{d_j}; scaled rows are multiplied by their factor
// and reduced mod 1 off the diagonal.
RationalMatrix change_of_basis(GroupId id);

// P^{-1} diag(k^d) P, acting on K^{-1}. The operation on K^1 is this
// divided by k (Bott periodicity shifts every power down by one).
KPowerMatrix undivided_adams(GroupId id);
AdamsMatrix adams_matrix(GroupId id);

// How the undivided matrix becomes the K^1 operation.
std::string bott_shift_note();

// psi^j psi^k == psi^{jk} on evaluated matrices.
bool composition_holds(const AdamsMatrix& m, long j, long k);
// Every entry of evaluate(k) is p-integral.
bool p_integral_at(const AdamsMatrix& m, long k);
// P psi^k P^{-1} == diag(k^{d-1}), symbolically.
bool reconstruction_holds(GroupId id);

}  // namespace pcompact
