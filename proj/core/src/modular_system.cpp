#include "pcompact/modular_system.hpp"

#include <utility>

#include "pcompact/error.hpp"

namespace pcompact {

namespace {

long val_mod(const Integer& x, unsigned long p, int k) {
  if (sgn(x) == 0) return k;
  long v = valuation(x, p).value();
  return v < k ? v : k;
}

}  // namespace

ModularSolution solve_mod_prime_power(const IntegerMatrix& a_in, const std::vector<Integer>& b_in,
                                      unsigned long p, int k) {
  if (k < 1) throw Error("solve_mod_prime_power: k must be >= 1");
  const std::size_t m = a_in.rows();
  const std::size_t n = a_in.cols();
  if (b_in.size() != m) throw DimensionMismatch("right-hand side length differs from row count");
  ModularSolution sol;
  sol.modulus = ipow(p, static_cast<unsigned long>(k));
  const Integer& mod = sol.modulus;

  IntegerMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = mod_floor(a_in(i, j), mod);
  std::vector<Integer> b(m);
  for (std::size_t i = 0; i < m; ++i) b[i] = mod_floor(b_in[i], mod);
  IntegerMatrix v = IntegerMatrix::identity(n);

  std::size_t s = 0;
  for (; s < std::min(m, n); ++s) {
    long best = k;
    std::size_t pi = 0;
    std::size_t pj = 0;
    for (std::size_t j = s; j < n; ++j)
      for (std::size_t i = s; i < m; ++i) {
        long vij = val_mod(a(i, j), p, k);
        if (vij < best) {
          best = vij;
          pi = i;
          pj = j;
        }
      }
    if (best >= k) break;
    if (pi != s) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pi, j), a(s, j));
      std::swap(b[pi], b[s]);
    }
    if (pj != s) {
      for (std::size_t i = 0; i < m; ++i) std::swap(a(i, pj), a(i, s));
      for (std::size_t i = 0; i < n; ++i) std::swap(v(i, pj), v(i, s));
    }
    const Integer pv = ipow(p, static_cast<unsigned long>(best));
    Integer unit = a(s, s) / pv;
    Integer uinv;
    mpz_invert(uinv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a(s, j) = mod_floor(a(s, j) * uinv, mod);
    b[s] = mod_floor(b[s] * uinv, mod);
    for (std::size_t i = s + 1; i < m; ++i) {
      if (sgn(a(i, s)) == 0) continue;
      Integer f = a(i, s) / pv;
      for (std::size_t j = s; j < n; ++j) a(i, j) = mod_floor(a(i, j) - f * a(s, j), mod);
      b[i] = mod_floor(b[i] - f * b[s], mod);
    }
    for (std::size_t j = s + 1; j < n; ++j) {
      if (sgn(a(s, j)) == 0) continue;
      Integer f = a(s, j) / pv;
      for (std::size_t i = 0; i < m; ++i) a(i, j) = mod_floor(a(i, j) - f * a(i, s), mod);
      for (std::size_t i = 0; i < n; ++i) v(i, j) = mod_floor(v(i, j) - f * v(i, s), mod);
    }
    sol.smith_exponents.push_back(static_cast<int>(best));
  }
  sol.rank = static_cast<int>(s);

  std::vector<Integer> y(n, Integer(0));
  sol.solvable = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (i < s) {
      int e = sol.smith_exponents[i];
      if (val_mod(b[i], p, k) < e) {
        sol.solvable = false;
        break;
      }
      Integer reduced_mod = ipow(p, static_cast<unsigned long>(k - e));
      y[i] = mod_floor(b[i] / ipow(p, static_cast<unsigned long>(e)), reduced_mod);
    } else if (sgn(b[i]) != 0) {
      sol.solvable = false;
      break;
    }
  }
  if (!sol.solvable) return sol;
  sol.x.assign(n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += v(i, j) * y[j];
    sol.x[i] = mod_floor(acc, mod);
  }
  return sol;
}

bool is_solution(const IntegerMatrix& a, const std::vector<Integer>& x, const std::vector<Integer>& b,
                 const Integer& modulus) {
  if (x.size() != a.cols() || b.size() != a.rows()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer acc = -b[i];
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    if (sgn(mod_floor(acc, modulus)) != 0) return false;
  }
  return true;
}

}  // namespace pcompact
