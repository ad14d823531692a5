#pragma once

#include <vector>

#include "pcompact/exact.hpp"
#include "pcompact/matrix.hpp"

namespace pcompact {

// p-part of the cokernel Z^cols / (row space), as exponents of its cyclic
// summands (zeros dropped) plus the rank of the free part.
struct PPart {
  std::vector<int> exponents;
  std::size_t free_rank = 0;

  bool trivial() const { return exponents.empty() && free_rank == 0; }
  bool cyclic() const { return free_rank == 0 && exponents.size() <= 1; }
  // Exponent of the largest summand; 0 when trivial.
  int exponent() const;
  // log_p of the order (finite part).
  int order_exponent() const;
};

// Diagonal of a diagonalization by unimodular row and column operations
// (not reduced to the divisibility chain; enough for p-parts).
std::vector<Integer> smith_diagonal(IntegerMatrix m);

PPart snf_cokernel_ppart(const IntegerMatrix& m, unsigned long p);

// Same over Z/p^n: entries are taken mod p^n and a summand of exponent n
// means "at least n". Used once the matrix has been evaluated mod p^n.
PPart local_cokernel_ppart(const IntegerMatrix& m, unsigned long p, int n);

}  // namespace pcompact
