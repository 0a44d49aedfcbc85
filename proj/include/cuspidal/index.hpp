#pragma once
// The rational prenumerator attached to (N, eps), its numerator in the
// squarefree and non-squarefree regimes, the p-exponent summed over all sign
// vectors, and the per-prime report combining orders with those exponents.

#include <cstdint>
#include <string>
#include <vector>

#include "cuspidal/arith.hpp"
#include "cuspidal/cuspidal_divisor.hpp"
#include "cuspidal/order.hpp"

namespace cuspidal {

// (1/24) * prod over exponent-1 primes (l_i + eps_i)
//        * prod over higher powers    l_j^{r_j - 2} (l_j^2 - 1)
// Defined for every sign vector, the all-plus one included.
inline Rational index_prenumerator(const FactoredInteger& N,
                                   const SignVector& eps) {
  require_sign_vector(N, eps);
  Rational x = rational(1, 24);
  int sp = 0;
  for (const auto& pp : N.factors) {
    const Integer l(static_cast<long>(pp.prime));
    if (pp.exponent == 1)
      x *= l + eps[sp++];
    else
      x *= integer_pow(pp.prime, pp.exponent - 2) * (l * l - 1);
  }
  return x;
}

// Numerator of the prenumerator, reduced; the squarefree regime
inline Integer n_eps(const FactoredInteger& N, const SignVector& eps) {
  if (!N.is_squarefree())
    throw domain_error("n_eps: defined for squarefree N only");
  return numerator_of(index_prenumerator(N, eps));
}

// Numerator of the prenumerator, reduced; the non-squarefree regime
inline Integer n0_eps(const FactoredInteger& N, const SignVector& eps) {
  if (N.is_squarefree())
    throw domain_error("n0_eps: defined for non-squarefree N only");
  return numerator_of(index_prenumerator(N, eps));
}

// All 2^t sign vectors, all-minus first, all-plus last; the first prime's
// sign is the most significant bit of the enumeration.
inline std::vector<SignVector> all_sign_vectors(int t) {
  if (t < 0) throw usage_error("all_sign_vectors: negative length");
  std::vector<SignVector> out;
  const std::int64_t total = std::int64_t(1) << t;
  for (std::int64_t k = 0; k < total; ++k) {
    SignVector eps(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
      eps[static_cast<std::size_t>(i)] = (k >> (t - 1 - i)) & 1 ? 1 : -1;
    out.push_back(std::move(eps));
  }
  return out;
}

// Exponent e with p^e = the p-part of the product of n_eps over sign vectors
// (squarefree N, odd prime p). The all-plus vector is included by default;
// pass include_all_plus = false to sum over the 2^t - 1 admissible ones only.
inline int squarefree_class_number_p(const FactoredInteger& N, std::int64_t p,
                                     bool include_all_plus = true) {
  if (!N.is_squarefree())
    throw domain_error(
        "squarefree_class_number_p: defined for squarefree N only");
  if (p == 2 || !is_prime(p))
    throw domain_error("squarefree_class_number_p: p must be an odd prime");
  int e = 0;
  for (const auto& eps : all_sign_vectors(N.squarefree_prime_count())) {
    if (!include_all_plus && is_all_plus(eps)) continue;
    const Integer n = n_eps(N, eps);
    if (n != 0) e += static_cast<int>(valuation(n, p));
  }
  return e;
}

struct IndexReportRow {
  SignVector eps;
  Integer index_value;      // numerator of the prenumerator for this eps
  int val_p = 0;            // p-adic valuation of index_value
  bool order_defined = false;
  Integer order;            // closed-form order when defined
};

struct IndexReport {
  std::int64_t N = 1;
  std::int64_t p = 0;
  bool applicable = false;
  std::string reason;       // empty when applicable
  bool include_all_plus = true;
  std::vector<IndexReportRow> rows;
  bool exponent_defined = false;
  int p_exponent = 0;       // set in the squarefree regime only
};

// Per-prime report: requires an odd prime p; applicable only when p^2 does
// not divide N and, for p = 3 with 3 | N, some prime divisor of N is -1 mod 3.
inline IndexReport index_report(const FactoredInteger& N, std::int64_t p,
                                bool include_all_plus = true) {
  if (p == 2 || !is_prime(p))
    throw domain_error(
        "index_report: p must be an odd prime (p = 2 is out of scope)");
  IndexReport rep;
  rep.N = N.value;
  rep.p = p;
  rep.include_all_plus = include_all_plus;

  rep.applicable = true;
  if (N.exponent_of(p) >= 2) {
    rep.applicable = false;
    rep.reason = "p^2 divides N";
  } else if (p == 3 && N.value % 3 == 0) {
    bool has_minus_one = false;
    for (const auto& pp : N.factors)
      if (pp.prime % 3 == 2) has_minus_one = true;
    if (!has_minus_one) {
      rep.applicable = false;
      rep.reason =
          "3 divides N and no prime divisor of N is congruent to -1 mod 3";
    }
  }

  for (const auto& eps : all_sign_vectors(N.squarefree_prime_count())) {
    IndexReportRow row;
    row.eps = eps;
    row.index_value = numerator_of(index_prenumerator(N, eps));
    row.val_p = row.index_value == 0
                    ? 0
                    : static_cast<int>(valuation(row.index_value, p));
    row.order_defined = admissible(N, eps);
    if (row.order_defined) row.order = order_closed_form(N, eps);
    rep.rows.push_back(std::move(row));
  }

  if (N.is_squarefree()) {
    rep.exponent_defined = true;
    rep.p_exponent = squarefree_class_number_p(N, p, include_all_plus);
  }
  return rep;
}

}  // namespace cuspidal
