#include "pcompact/snf.hpp"

#include <algorithm>

namespace pcompact {

int PPart::exponent() const {
  return exponents.empty() ? 0 : *std::max_element(exponents.begin(), exponents.end());
}

int PPart::order_exponent() const {
  int s = 0;
  for (int e : exponents) s += e;
  return s;
}

std::vector<Integer> smith_diagonal(IntegerMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Integer> diag;
  for (std::size_t s = 0; s < std::min(rows, cols); ++s) {
    while (true) {
      // Smallest nonzero entry in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = s; i < rows; ++i)
        for (std::size_t j = s; j < cols; ++j)
          if (sgn(m(i, j)) != 0 && (pi == rows || mpz_cmpabs(m(i, j).get_mpz_t(), m(pi, pj).get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == rows) {
        diag.resize(std::min(rows, cols), Integer(0));
        return diag;
      }
      if (pi != s)
        for (std::size_t j = 0; j < cols; ++j) std::swap(m(pi, j), m(s, j));
      if (pj != s)
        for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, pj), m(i, s));
      const Integer piv = m(s, s);
      bool clean = true;
      for (std::size_t i = s + 1; i < rows; ++i) {
        if (sgn(m(i, s)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, s).get_mpz_t(), piv.get_mpz_t());
        for (std::size_t j = s; j < cols; ++j) m(i, j) -= q * m(s, j);
        if (sgn(m(i, s)) != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        if (sgn(m(s, j)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(s, j).get_mpz_t(), piv.get_mpz_t());
        for (std::size_t i = s; i < rows; ++i) m(i, j) -= q * m(i, s);
        if (sgn(m(s, j)) != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs(m(s, s)));
  }
  return diag;
}

PPart snf_cokernel_ppart(const IntegerMatrix& m, unsigned long p) {
  PPart out;
  auto diag = smith_diagonal(m);
  for (const auto& d : diag) {
    if (sgn(d) == 0) {
      ++out.free_rank;
      continue;
    }
    long v = valuation(d, p).value();
    if (v > 0) out.exponents.push_back(static_cast<int>(v));
  }
  if (m.cols() > diag.size()) out.free_rank += m.cols() - diag.size();
  std::sort(out.exponents.begin(), out.exponents.end());
  return out;
}

PPart local_cokernel_ppart(const IntegerMatrix& in, unsigned long p, int n) {
  const Integer mod = ipow(p, static_cast<unsigned long>(n));
  IntegerMatrix m(in.rows(), in.cols());
  for (std::size_t i = 0; i < in.rows(); ++i)
    for (std::size_t j = 0; j < in.cols(); ++j) m(i, j) = mod_floor(in(i, j), mod);
  std::vector<bool> row_used(m.rows(), false), col_used(m.cols(), false);
  PPart out;
  for (std::size_t step = 0; step < m.cols(); ++step) {
    long best = n;
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (col_used[j] || sgn(m(i, j)) == 0) continue;
        long v = valuation(m(i, j), p).value();
        if (!found || v < best) {
          best = v;
          bi = i;
          bj = j;
          found = true;
        }
      }
    }
    if (!found) {
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!col_used[j]) out.exponents.push_back(n);
      break;
    }
    const Integer pv = ipow(p, static_cast<unsigned long>(best));
    Integer unit = m(bi, bj) / pv;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == bi || row_used[i] || sgn(m(i, bj)) == 0) continue;
      Integer f = mod_floor((m(i, bj) / pv) * inv, mod);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = mod_floor(m(i, j) - f * m(bi, j), mod);
    }
    row_used[bi] = true;
    col_used[bj] = true;
    if (best > 0) out.exponents.push_back(static_cast<int>(best));
  }
  std::sort(out.exponents.begin(), out.exponents.end());
  return out;
}

}  // namespace pcompact
