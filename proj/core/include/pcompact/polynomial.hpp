#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pcompact/exact.hpp"
#include "pcompact/matrix.hpp"
#include "pcompact/sympoly.hpp"

namespace pcompact {

// Exponent vector packed 8 bits per variable.
using MonomialKey = std::uint64_t;

MonomialKey make_key(std::span<const int> exponents);
int key_exponent(MonomialKey key, int var);
std::vector<int> key_exponents(MonomialKey key, int nvars);

// Polynomial in the ordinary monomial basis; no symmetry assumed.
class Polynomial {
 public:
  using Terms = std::map<MonomialKey, CycRational>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  void add_term(MonomialKey key, const CycRational& c);
  CycRational coeff(std::span<const int> exponents) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  int nvars_ = 0;
  Terms terms_;
};

inline constexpr std::size_t kDefaultExpandBudget = 5'000'000;

// Literal sum over orbit monomials. Throws BudgetExceeded, naming the
// offending grading, if more than `budget` monomials would be produced.
Polynomial full_expand(const SymPoly& f, std::size_t budget = kDefaultExpandBudget);

// f(Mx) with x a column vector. M is factored into elementary substitutions
// so no power of a dense linear form is ever expanded.
Polynomial substitute_linear(const SymPoly& f, const CycMatrix& m);

// f(Mx) == f(x)
bool is_invariant(const SymPoly& f, const CycMatrix& m);

}  // namespace pcompact
