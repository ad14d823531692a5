#pragma once

#include <vector>

#include "pcompact/exact.hpp"
#include "pcompact/matrix.hpp"

namespace pcompact {

struct ModularSolution {
  bool solvable = false;
  Integer modulus;
  // Particular solution in least non-negative residues (free parameters 0).
  std::vector<Integer> x;
  // Exponents of the Smith diagonal p^{e_i}, pivot order.
  std::vector<int> smith_exponents;
  int rank = 0;
};

// Solve A x == b (mod p^k) through a Smith form over Z/p^k. Pivots have
// minimal valuation; ties go to the lowest column, then the lowest row.
ModularSolution solve_mod_prime_power(const IntegerMatrix& a, const std::vector<Integer>& b,
                                      unsigned long p, int k);

bool is_solution(const IntegerMatrix& a, const std::vector<Integer>& x,
                 const std::vector<Integer>& b, const Integer& modulus);

}  // namespace pcompact
