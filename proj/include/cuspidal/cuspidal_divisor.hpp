#pragma once
// The integer lattice on the divisors of N (one basis vector (P_d) per cusp
// level), the distinguished degree-0 divisor C0 attached to a sign vector,
// and the Atkin-Lehner / degeneracy-pushforward actions on it.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "cuspidal/arith.hpp"

namespace cuspidal {

// one sign per exponent-1 prime of N, aligned with those primes ascending
using SignVector = std::vector<int>;

struct CuspidalDivisor {
  FactoredInteger N;
  std::vector<Integer> coeffs;  // indexed by the canonical divisor order
};

inline std::int64_t divisor_count(const FactoredInteger& N) {
  std::int64_t s = 1;
  for (const auto& f : N.factors) s *= f.exponent + 1;
  return s;
}

// mixed-radix strides of the exponent-vector index (last prime fastest)
inline std::vector<std::int64_t> divisor_index_strides(
    const FactoredInteger& N) {
  const int u = N.prime_count();
  std::vector<std::int64_t> stride(u, 1);
  for (int k = u - 2; k >= 0; --k)
    stride[k] = stride[k + 1] * (N.factors[k + 1].exponent + 1);
  return stride;
}

inline std::int64_t index_of_divisor(const FactoredInteger& N,
                                     std::int64_t d) {
  if (d < 1 || N.value % d != 0)
    throw domain_error("index_of_divisor: not a divisor of N");
  const auto stride = divisor_index_strides(N);
  std::int64_t idx = 0;
  for (int k = 0; k < N.prime_count(); ++k)
    idx += stride[k] * valuation(d, N.factors[k].prime);
  return idx;
}

inline void require_sign_vector(const FactoredInteger& N,
                                const SignVector& eps) {
  if (static_cast<int>(eps.size()) != N.squarefree_prime_count())
    throw usage_error(
        "sign vector length must equal the number of exponent-1 primes of N");
  for (int s : eps)
    if (s != 1 && s != -1)
      throw usage_error("sign vector entries must be +1 or -1");
}

inline bool is_all_plus(const SignVector& eps) {
  for (int s : eps)
    if (s != 1) return false;
  return true;
}

inline bool admissible(const FactoredInteger& N, const SignVector& eps) {
  if (static_cast<int>(eps.size()) != N.squarefree_prime_count()) return false;
  for (int s : eps)
    if (s != 1 && s != -1) return false;
  return !(N.is_squarefree() && is_all_plus(eps));
}

inline void require_admissible(const FactoredInteger& N,
                               const SignVector& eps) {
  require_sign_vector(N, eps);
  if (N.is_squarefree() && is_all_plus(eps)) throw all_plus_squarefree_error();
}

inline CuspidalDivisor zero_divisor(const FactoredInteger& N) {
  return {N, std::vector<Integer>(divisor_count(N), Integer(0))};
}

inline CuspidalDivisor build_Pd_divisor(const FactoredInteger& N,
                                        std::int64_t d) {
  auto D = zero_divisor(N);
  D.coeffs[index_of_divisor(N, d)] = 1;
  return D;
}

// degree weight of (P_d): the number of cusps of level d
inline std::int64_t degree_of_Pd(const FactoredInteger& N, std::int64_t d) {
  return euler_phi(std::gcd(d, N.value / d));
}

inline Integer degree(const CuspidalDivisor& D) {
  const auto divs = divisors(D.N);
  Integer deg = 0;
  for (std::size_t i = 0; i < divs.size(); ++i)
    deg += D.coeffs[i] * degree_of_Pd(D.N, divs[i]);
  return deg;
}

// C_d = deg(P_d)*(P_1) - (P_d), the basic degree-0 divisors (d > 1)
inline CuspidalDivisor build_Cd(const FactoredInteger& N, std::int64_t d) {
  if (d <= 1) throw domain_error("build_Cd: need a divisor d > 1");
  auto D = zero_divisor(N);
  D.coeffs[0] = degree_of_Pd(N, d);
  D.coeffs[index_of_divisor(N, d)] = -1;
  return D;
}

// C0 as a tensor over the prime-power factors, ascending prime order:
//   exponent-1 prime l with sign s : (1, s)
//   higher prime power l^r         : (l-1, -1, 0, ..., 0)
inline CuspidalDivisor build_C0(const FactoredInteger& N,
                                const SignVector& eps) {
  require_admissible(N, eps);
  std::vector<Integer> acc{Integer(1)};
  int sp = 0;
  for (const auto& pp : N.factors) {
    std::vector<Integer> w(pp.exponent + 1, Integer(0));
    if (pp.exponent == 1) {
      w[0] = 1;
      w[1] = eps[sp++];
    } else {
      w[0] = pp.prime - 1;
      w[1] = -1;
    }
    std::vector<Integer> next(acc.size() * w.size());
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (std::size_t b = 0; b < w.size(); ++b)
        next[a * w.size() + b] = acc[a] * w[b];
    acc = std::move(next);
  }
  return {N, std::move(acc)};
}

// closed form of the C0 coefficient at d: zero beyond squarefree divisors,
// multiplicative over the primes of N on squarefree ones
inline Integer c0_coefficient(const FactoredInteger& N, const SignVector& eps,
                              std::int64_t d) {
  require_admissible(N, eps);
  if (d < 1 || N.value % d != 0)
    throw domain_error("c0_coefficient: not a divisor of N");
  Integer acc = 1;
  int sp = 0;
  for (const auto& pp : N.factors) {
    const int fd = valuation(d, pp.prime);
    if (fd >= 2) return Integer(0);
    if (pp.exponent == 1) {
      const int s = eps[sp++];
      if (fd == 1) acc *= s;
    } else {
      acc *= (fd == 1) ? Integer(-1) : Integer(pp.prime - 1);
    }
  }
  return acc;
}

// Atkin-Lehner action for a prime exactly dividing N: swap the l-exponent
// 0 <-> 1 of every basis index
inline CuspidalDivisor atkin_lehner(const CuspidalDivisor& D,
                                    std::int64_t ell) {
  const FactoredInteger& N = D.N;
  int k = -1;
  for (int i = 0; i < N.prime_count(); ++i)
    if (N.factors[i].prime == ell) k = i;
  if (k < 0) throw domain_error("atkin_lehner: prime does not divide N");
  if (N.factors[k].exponent != 1)
    throw domain_error(
        "atkin_lehner: implemented only for primes exactly dividing N");
  const auto stride = divisor_index_strides(N);
  auto out = zero_divisor(N);
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(D.coeffs.size());
       ++idx) {
    const int e = static_cast<int>((idx / stride[k]) % 2);
    const std::int64_t partner = e == 0 ? idx + stride[k] : idx - stride[k];
    out.coeffs[partner] = D.coeffs[idx];
  }
  return out;
}

// Pushforward along the degree-l covering X0(N) -> X0(M), M = N/l, on the
// divisor lattices. Writing a divisor of N as d*l^g with l coprime to d and
// r = val_l(M), the basis images are:
//   g = 0            -> e(M)_d
//   g = 1            -> (l-1)*e(M)_d   (just e(M)_d when r = 0)
//   g >= 2, f = g-1  -> l*e(M)_{d*l^f} if 0 < f < r/2, else e(M)_{d*l^f}
inline CuspidalDivisor beta_pushforward(const CuspidalDivisor& D,
                                        std::int64_t ell) {
  const FactoredInteger& N = D.N;
  if (!is_prime(ell) || N.value % ell != 0)
    throw domain_error("beta_pushforward: need a prime dividing N");
  const FactoredInteger M = factorize(N.value / ell);
  const int r = M.exponent_of(ell);
  auto out = zero_divisor(M);
  const auto divs = divisors(N);
  for (std::size_t i = 0; i < divs.size(); ++i) {
    if (D.coeffs[i] == 0) continue;
    const int g = valuation(divs[i], ell);
    std::int64_t core = divs[i];
    for (int j = 0; j < g; ++j) core /= ell;
    std::int64_t target = core;
    Integer scale = 1;
    if (g == 1) {
      if (r >= 1) scale = ell - 1;
    } else if (g >= 2) {
      const int f = g - 1;
      for (int j = 0; j < f; ++j) target *= ell;
      if (2 * f < r) scale = ell;
    }
    out.coeffs[index_of_divisor(M, target)] += scale * D.coeffs[i];
  }
  return out;
}

inline bool is_zero(const CuspidalDivisor& D) {
  for (const auto& c : D.coeffs)
    if (c != 0) return false;
  return true;
}

inline bool operator==(const CuspidalDivisor& A, const CuspidalDivisor& B) {
  return A.N.value == B.N.value && A.coeffs == B.coeffs;
}

inline CuspidalDivisor operator+(CuspidalDivisor A, const CuspidalDivisor& B) {
  if (A.N.value != B.N.value)
    throw usage_error("divisor arithmetic: mismatched levels");
  for (std::size_t i = 0; i < A.coeffs.size(); ++i) A.coeffs[i] += B.coeffs[i];
  return A;
}

inline CuspidalDivisor operator-(CuspidalDivisor A, const CuspidalDivisor& B) {
  if (A.N.value != B.N.value)
    throw usage_error("divisor arithmetic: mismatched levels");
  for (std::size_t i = 0; i < A.coeffs.size(); ++i) A.coeffs[i] -= B.coeffs[i];
  return A;
}

inline CuspidalDivisor operator*(const Integer& c, CuspidalDivisor D) {
  for (auto& x : D.coeffs) x *= c;
  return D;
}

}  // namespace cuspidal
