#pragma once
// The pushforward to level N/ell written as an integer matrix on the free
// module spanned by the cusp classes, its restriction to the degree-zero
// sublattice, and the elementary divisors of that restriction.

#include <cstdint>
#include <vector>

#include "cuspidal/cuspidal_divisor.hpp"
#include "cuspidal/integer_matrix.hpp"
#include "cuspidal/smith.hpp"

namespace cuspidal {

// Columns indexed by divisors of N, rows by divisors of N/ell, both in
// canonical order; column d holds the image of the class basis vector at d.
inline IntegerMatrix beta_matrix(const FactoredInteger& N, std::int64_t ell) {
  if (!is_prime(ell) || N.value % ell != 0)
    throw usage_error("beta_matrix: ell must be a prime dividing N");
  const FactoredInteger M = factorize(N.value / ell);
  const auto cols = divisors(N);
  IntegerMatrix B(static_cast<int>(divisor_count(M)),
                  static_cast<int>(cols.size()));
  for (int j = 0; j < B.cols; ++j) {
    const CuspidalDivisor image =
        beta_pushforward(build_Pd_divisor(N, cols[static_cast<std::size_t>(j)]), ell);
    for (int i = 0; i < B.rows; ++i)
      B.at(i, j) = image.coeffs[static_cast<std::size_t>(i)];
  }
  return B;
}

// Restriction of beta_matrix to degree zero on both sides. In the basis
// { e_d - deg(P_d) e_1 : d != 1 } of each degree-zero sublattice the matrix
// is beta_matrix with its first row and first column removed, because the
// map preserves degree and sends e_1 to e_1.
inline IntegerMatrix beta_degree0_matrix(const FactoredInteger& N,
                                         std::int64_t ell) {
  const IntegerMatrix B = beta_matrix(N, ell);
  IntegerMatrix R(B.rows - 1, B.cols - 1);
  for (int i = 1; i < B.rows; ++i)
    for (int j = 1; j < B.cols; ++j) R.at(i - 1, j - 1) = B.at(i, j);
  return R;
}

// Elementary divisors > 1 of the degree-zero restriction; the cokernel is a
// direct sum of cyclic groups of these orders. Every nontrivial divisor of
// this map equals ell, and there are none at all unless ell^4 | N; both
// facts are enforced here as internal checks.
inline std::vector<Integer> beta_cokernel_degree0(const FactoredInteger& N,
                                                  std::int64_t ell) {
  const IntegerMatrix R = beta_degree0_matrix(N, ell);
  const auto diag = elementary_divisors(R);
  int nonzero = 0;
  std::vector<Integer> out;
  for (const auto& dk : diag) {
    if (dk != 0) ++nonzero;
    if (dk > 1) out.push_back(dk);
  }
  if (nonzero != R.rows)
    throw internal_error("beta cokernel is not finite");
  for (const auto& dk : out)
    if (dk != ell) throw internal_error("unexpected elementary divisor");
  if (!out.empty() && valuation(N.value, ell) <= 3)
    throw internal_error("unexpected cokernel at low exponent");
  return out;
}

}  // namespace cuspidal
