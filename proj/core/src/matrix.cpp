#include "pcompact/matrix.hpp"

namespace pcompact {

namespace {

template <class T>
bool is_zero_entry(const T& x) {
  if constexpr (std::is_same_v<T, CycRational>) return x.is_zero();
  else return sgn(x) == 0;
}

template <class T>
Matrix<T> gauss_jordan_inverse(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("inverse of a non-square matrix");
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t piv = j;
    while (piv < n && is_zero_entry(a(piv, j))) ++piv;
    if (piv == n) throw Error("singular matrix");
    if (piv != j)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(piv, c), a(j, c));
        std::swap(inv(piv, c), inv(j, c));
      }
    T d = T(1) / a(j, j);
    for (std::size_t c = 0; c < n; ++c) {
      a(j, c) *= d;
      inv(j, c) *= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == j || is_zero_entry(a(r, j))) continue;
      T f = a(r, j);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(j, c);
        inv(r, c) -= f * inv(j, c);
      }
    }
  }
  return inv;
}

}  // namespace

RationalMatrix inverse(const RationalMatrix& m) { return gauss_jordan_inverse(m); }

CycMatrix inverse(const CycMatrix& m) { return gauss_jordan_inverse(m); }

}  // namespace pcompact
