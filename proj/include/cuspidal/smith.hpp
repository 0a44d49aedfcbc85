#pragma once
// Smith normal form over the integers with the unimodular transforms tracked:
// U * M * V = S, S diagonal with d1 | d2 | ... >= 0.

#include <algorithm>
#include <utility>

#include "cuspidal/integer_matrix.hpp"

namespace cuspidal {

struct SmithResult {
  IntegerMatrix U, S, V;
};

inline SmithResult smith_normal_form(IntegerMatrix M) {
  const int m = M.rows, n = M.cols;
  SmithResult res{IntegerMatrix::identity(m), std::move(M),
                  IntegerMatrix::identity(n)};
  IntegerMatrix& S = res.S;
  IntegerMatrix& U = res.U;
  IntegerMatrix& V = res.V;

  auto row_sub = [&](int dst, int src, const Integer& q) {
    for (int j = 0; j < n; ++j) S.at(dst, j) -= q * S.at(src, j);
    for (int j = 0; j < m; ++j) U.at(dst, j) -= q * U.at(src, j);
  };
  auto col_sub = [&](int dst, int src, const Integer& q) {
    for (int i = 0; i < m; ++i) S.at(i, dst) -= q * S.at(i, src);
    for (int i = 0; i < n; ++i) V.at(i, dst) -= q * V.at(i, src);
  };
  auto row_swap = [&](int x, int y) {
    if (x == y) return;
    for (int j = 0; j < n; ++j) std::swap(S.at(x, j), S.at(y, j));
    for (int j = 0; j < m; ++j) std::swap(U.at(x, j), U.at(y, j));
  };
  auto col_swap = [&](int x, int y) {
    if (x == y) return;
    for (int i = 0; i < m; ++i) std::swap(S.at(i, x), S.at(i, y));
    for (int i = 0; i < n; ++i) std::swap(V.at(i, x), V.at(i, y));
  };
  auto trunc_div = [](const Integer& x, const Integer& y) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return q;
  };

  for (int t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // smallest-magnitude nonzero pivot from the trailing block
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j) {
          if (S.at(i, j) == 0) continue;
          if (pi < 0 || mpz_cmpabs(S.at(i, j).get_mpz_t(),
                                   S.at(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;  // trailing block is zero; diagonal ends here
      row_swap(t, pi);
      col_swap(t, pj);

      // chip row/column t down; any nonzero remainder is a smaller pivot
      bool dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (S.at(i, t) == 0) continue;
        row_sub(i, t, trunc_div(S.at(i, t), S.at(t, t)));
        dirty |= (S.at(i, t) != 0);
      }
      for (int j = t + 1; j < n; ++j) {
        if (S.at(t, j) == 0) continue;
        col_sub(j, t, trunc_div(S.at(t, j), S.at(t, t)));
        dirty |= (S.at(t, j) != 0);
      }
      if (dirty) continue;

      // pivot must divide the whole trailing block to keep the chain
      int bi = -1;
      for (int i = t + 1; i < m && bi < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (S.at(i, j) % S.at(t, t) != 0) {
            bi = i;
            break;
          }
      if (bi < 0) break;
      row_sub(t, bi, Integer(-1));  // pull the offending row in and redo
    }
    if (S.at(t, t) < 0) {
      for (int j = 0; j < n; ++j) S.at(t, j) = -S.at(t, j);
      for (int j = 0; j < m; ++j) U.at(t, j) = -U.at(t, j);
    }
  }
  return res;
}

inline std::vector<Integer> elementary_divisors(const IntegerMatrix& M) {
  const SmithResult snf = smith_normal_form(M);
  std::vector<Integer> out;
  for (int k = 0; k < std::min(M.rows, M.cols); ++k)
    out.push_back(snf.S.at(k, k));
  return out;
}

}  // namespace cuspidal
