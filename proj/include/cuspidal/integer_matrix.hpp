#pragma once
// Dense arbitrary-precision integer matrices: just enough linear algebra for
// tensor products, matrix-vector images, and Smith normal form.

#include <cstddef>
#include <vector>

#include "cuspidal/arith.hpp"

namespace cuspidal {

struct IntegerMatrix {
  int rows = 0, cols = 0;
  std::vector<Integer> a;  // row-major

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c)
      : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Integer& at(int i, int j) {
    return a[static_cast<std::size_t>(i) * cols + j];
  }
  const Integer& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }

  static IntegerMatrix identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  friend bool operator==(const IntegerMatrix& x, const IntegerMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

inline IntegerMatrix multiply(const IntegerMatrix& A, const IntegerMatrix& B) {
  if (A.cols != B.rows) throw usage_error("multiply: dimension mismatch");
  IntegerMatrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Integer& s = A.at(i, k);
      if (s == 0) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += s * B.at(k, j);
    }
  return C;
}

inline std::vector<Integer> matvec(const IntegerMatrix& A,
                                   const std::vector<Integer>& v) {
  if (A.cols != static_cast<int>(v.size()))
    throw usage_error("matvec: dimension mismatch");
  std::vector<Integer> out(A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) out[i] += A.at(i, j) * v[j];
  return out;
}

// Kronecker product with the A-index most significant, matching the
// exponent-lex divisor order used to index lattice bases.
inline IntegerMatrix tensor(const IntegerMatrix& A, const IntegerMatrix& B) {
  IntegerMatrix C(A.rows * B.rows, A.cols * B.cols);
  for (int ia = 0; ia < A.rows; ++ia)
    for (int ja = 0; ja < A.cols; ++ja) {
      const Integer& s = A.at(ia, ja);
      if (s == 0) continue;
      for (int ib = 0; ib < B.rows; ++ib)
        for (int jb = 0; jb < B.cols; ++jb)
          C.at(ia * B.rows + ib, ja * B.cols + jb) = s * B.at(ib, jb);
    }
  return C;
}

}  // namespace cuspidal
