#pragma once
// Two independent routes to the order of the class of C0 in the cuspidal
// group: a closed-form product, and a matrix path through the gcd of the
// image under the level matrix built as a tensor of prime-power blocks.

#include <algorithm>
#include <cstdint>

#include "cuspidal/cuspidal_divisor.hpp"
#include "cuspidal/integer_matrix.hpp"

namespace cuspidal {

// (r+1) x (r+1) block for the prime power l^r, with m(f) = min(f, r-f):
//   corners        l
//   inner diagonal l^{m(j)-1} (l^2+1)
//   |i-j| = 1      -l^{m(j)}   (exponent taken from the column index)
//   elsewhere      0
inline IntegerMatrix upsilon_matrix(std::int64_t ell, int r) {
  if (!is_prime(ell)) throw usage_error("upsilon_matrix: ell must be prime");
  if (r < 1) throw usage_error("upsilon_matrix: exponent must be >= 1");
  const Integer l(static_cast<long>(ell));
  auto m = [r](int f) { return std::min(f, r - f); };
  IntegerMatrix A(r + 1, r + 1);
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= r; ++j) {
      if (i == j && (i == 0 || i == r))
        A.at(i, j) = l;
      else if (i == j)
        A.at(i, j) = integer_pow(ell, m(j) - 1) * (l * l + 1);
      else if (i - j == 1 || j - i == 1)
        A.at(i, j) = -integer_pow(ell, m(j));
    }
  return A;
}

inline IntegerMatrix upsilon_N(const FactoredInteger& N) {
  IntegerMatrix A = IntegerMatrix::identity(1);
  for (const auto& pp : N.factors)
    A = tensor(A, upsilon_matrix(pp.prime, pp.exponent));
  return A;
}

inline Integer gcd_of_image(const FactoredInteger& N,
                            const CuspidalDivisor& D) {
  if (D.N.value != N.value)
    throw usage_error("gcd_of_image: divisor level mismatch");
  if (is_zero(D)) throw domain_error("gcd_of_image: zero divisor");
  Integer g = 0;
  for (const auto& x : matvec(upsilon_N(N), D.coeffs)) g = gcd(g, x);
  return g;
}

// prod over primes of l^{r-1}(l^2 - 1)
inline Integer kappa(const FactoredInteger& N) {
  Integer k = 1;
  for (const auto& pp : N.factors) {
    const Integer l(static_cast<long>(pp.prime));
    k *= integer_pow(pp.prime, pp.exponent - 1) * (l * l - 1);
  }
  return k;
}

// parity factor of C0: 2 exactly when N is prime or a power of 2
inline int h_of_C0(const FactoredInteger& N) {
  if (N.prime_count() == 1 &&
      (N.factors[0].exponent == 1 || N.factors[0].prime == 2))
    return 2;
  return 1;
}

// numerator( h/24 * prod (l_i + eps_i) * prod l_j^{r_j-2}(l_j^2 - 1) )
inline Integer order_closed_form(const FactoredInteger& N,
                                 const SignVector& eps) {
  require_admissible(N, eps);
  Rational x = rational(h_of_C0(N), 24);
  int sp = 0;
  for (const auto& pp : N.factors) {
    const Integer l(static_cast<long>(pp.prime));
    if (pp.exponent == 1)
      x *= l + eps[sp++];
    else
      x *= integer_pow(pp.prime, pp.exponent - 2) * (l * l - 1);
  }
  return numerator_of(x);
}

// numerator( kappa(N) * h / (24 * gcd of the image of C0) )
inline Integer order_matrix_path(const FactoredInteger& N,
                                 const SignVector& eps) {
  const CuspidalDivisor C0 = build_C0(N, eps);
  const Integer g = gcd_of_image(N, C0);
  return numerator_of(rational(kappa(N) * h_of_C0(N), Integer(24) * g));
}

}  // namespace cuspidal
