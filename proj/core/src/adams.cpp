#include "pcompact/adams.hpp"

#include "pcompact/integrality.hpp"

namespace pcompact {

KPowerCombo::KPowerCombo(long c) {
  if (c != 0) terms_.emplace(0, Rational(c));
}

KPowerCombo KPowerCombo::monomial(int power, Rational coeff) {
  KPowerCombo out;
  out.add(power, coeff);
  return out;
}

void KPowerCombo::add(int power, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(power, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Rational KPowerCombo::evaluate(const Integer& k) const {
  Rational acc = 0;
  for (const auto& [d, c] : terms_) {
    if (d >= 0) {
      acc += c * Rational(ipow(k, static_cast<unsigned long>(d)));
    } else {
      Rational inv(Integer(1), ipow(k, static_cast<unsigned long>(-d)));
      inv.canonicalize();
      acc += c * inv;
    }
  }
  return acc;
}

KPowerCombo KPowerCombo::divided_by_k() const {
  KPowerCombo out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(d - 1, c);
  return out;
}

KPowerCombo& KPowerCombo::operator+=(const KPowerCombo& o) {
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

KPowerCombo& KPowerCombo::operator-=(const KPowerCombo& o) {
  for (const auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

KPowerCombo& KPowerCombo::operator*=(const KPowerCombo& o) {
  KPowerCombo out;
  for (const auto& [d1, c1] : terms_)
    for (const auto& [d2, c2] : o.terms_) out.add(d1 + d2, c1 * c2);
  return *this = out;
}

KPowerCombo& KPowerCombo::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, x] : terms_) x *= c;
  return *this;
}

std::string KPowerCombo::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string power = d == 0 ? "" : (d == 1 ? "k" : "k^" + std::to_string(d));
    if (power.empty()) {
      out += pcompact::to_string(mag);
    } else if (mag == 1) {
      out += power;
    } else {
      out += pcompact::to_string(mag) + "*" + power;
    }
  }
  return out;
}

RationalMatrix AdamsMatrix::evaluate(const Integer& k) const {
  RationalMatrix out(entries.rows(), entries.cols());
  for (std::size_t i = 0; i < entries.rows(); ++i)
    for (std::size_t j = 0; j < entries.cols(); ++j) out(i, j) = entries(i, j).evaluate(k);
  return out;
}

bool AdamsMatrix::lower_triangular() const {
  for (std::size_t i = 0; i < entries.rows(); ++i)
    for (std::size_t j = i + 1; j < entries.cols(); ++j)
      if (!entries(i, j).is_zero()) return false;
  return true;
}

RationalMatrix change_of_basis(GroupId id) {
  const auto setting = group_setting(id);
  const auto& degrees = setting.adams_degrees;
  const auto scale = listed_row_scale(id);
  const std::size_t n = degrees.size();
  RationalMatrix p = RationalMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto line = listed_combination(id, degrees[j]);
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational c = line.coeff({degrees[i]});
      auto it = scale.find(degrees[i]);
      if (it != scale.end()) c = fractional_part(c * Rational(it->second));
      p(i, j) = c;
    }
  }
  return p;
}

KPowerMatrix undivided_adams(GroupId id) {
  const auto& degrees = group_setting(id).adams_degrees;
  const RationalMatrix p = change_of_basis(id);
  const RationalMatrix pinv = inverse(p);
  const std::size_t n = degrees.size();
  KPowerMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Rational c = pinv(i, l) * p(l, j);
        if (sgn(c) != 0) out(i, j) += KPowerCombo::monomial(degrees[l], c);
      }
  return out;
}

AdamsMatrix adams_matrix(GroupId id) {
  const auto& degrees = group_setting(id).adams_degrees;
  AdamsMatrix m;
  m.group = id;
  for (int d : degrees) m.basis.push_back(d - 1);
  KPowerMatrix u = undivided_adams(id);
  m.entries = KPowerMatrix(u.rows(), u.cols());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) m.entries(i, j) = u(i, j).divided_by_k();
  return m;
}

std::string bott_shift_note() {
  return "psi^k on K^1 is (P^-1 diag(k^d) P)/k: psi^k on K^1 corresponds to psi^k/k on K^-1, "
         "so every power of k drops by one";
}

bool composition_holds(const AdamsMatrix& m, long j, long k) {
  return m.evaluate(j) * m.evaluate(k) == m.evaluate(Integer(j) * k);
}

bool p_integral_at(const AdamsMatrix& m, long k) {
  const unsigned long p = group_data(m.group).prime;
  const RationalMatrix e = m.evaluate(k);
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j)
      if (!is_p_integral(e(i, j), p)) return false;
  return true;
}

bool reconstruction_holds(GroupId id) {
  const AdamsMatrix m = adams_matrix(id);
  const RationalMatrix p = change_of_basis(id);
  const RationalMatrix pinv = inverse(p);
  const std::size_t n = p.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      KPowerCombo acc;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          Rational c = p(i, a) * pinv(b, j);
          if (sgn(c) != 0) acc += m.entries(a, b) * c;
        }
      KPowerCombo expected = i == j ? KPowerCombo::monomial(m.basis[i], 1) : KPowerCombo();
      if (!(acc == expected)) return false;
    }
  return true;
}

}  // namespace pcompact
