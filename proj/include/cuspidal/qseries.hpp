#pragma once
// Exact q-expansions with rational coefficients. Every coefficient a(n) is
// stored as 24*a(n), an integer for the whole family handled here, so all
// arithmetic stays in mpz. a(0) is the only coefficient that is ever a
// proper fraction, and its denominator always divides 24.

#include <cstdint>
#include <vector>

#include "cuspidal/arith.hpp"
#include "cuspidal/cuspidal_divisor.hpp"

namespace cuspidal {

struct ExactSeries {
  int truncation = 0;            // coefficients known for n = 0..truncation
  std::vector<Integer> coeffs24; // coeffs24[n] == 24 * a(n)

  Rational a(int n) const {
    if (n < 0 || n > truncation)
      throw usage_error("ExactSeries: coefficient index out of range");
    return rational(coeffs24[static_cast<std::size_t>(n)], Integer(24));
  }
};

// a(0) = -1/24, a(n) = sigma_1(n) for n >= 1
inline ExactSeries series_K(int truncation) {
  if (truncation < 1) throw usage_error("series_K: truncation must be >= 1");
  ExactSeries f;
  f.truncation = truncation;
  f.coeffs24.assign(static_cast<std::size_t>(truncation) + 1, 0);
  f.coeffs24[0] = -1;
  for (int n = 1; n <= truncation; ++n)
    f.coeffs24[static_cast<std::size_t>(n)] = Integer(24) * sigma1(n);
  return f;
}

// a(n) -> a(n/ell) when ell | n, else 0; truncation unchanged
inline ExactSeries v_scale(std::int64_t ell, const ExactSeries& f) {
  if (ell < 1) throw usage_error("v_scale: scale must be >= 1");
  ExactSeries out;
  out.truncation = f.truncation;
  out.coeffs24.assign(f.coeffs24.size(), 0);
  for (std::int64_t n = 0; n * ell <= f.truncation; ++n)
    out.coeffs24[static_cast<std::size_t>(n * ell)] =
        f.coeffs24[static_cast<std::size_t>(n)];
  return out;
}

// f + sign * ell * V_ell f
inline ExactSeries raise_pm(std::int64_t ell, int sign, const ExactSeries& f) {
  if (!is_prime(ell)) throw usage_error("raise_pm: ell must be prime");
  if (sign != 1 && sign != -1) throw usage_error("raise_pm: sign must be +-1");
  const ExactSeries v = v_scale(ell, f);
  ExactSeries out;
  out.truncation = f.truncation;
  out.coeffs24.resize(f.coeffs24.size());
  const Integer c = Integer(static_cast<long>(ell)) * sign;
  for (std::size_t n = 0; n < out.coeffs24.size(); ++n)
    out.coeffs24[n] = f.coeffs24[n] + c * v.coeffs24[n];
  return out;
}

// f - (ell+1) V_ell f + ell V_{ell^2} f
inline ExactSeries raise_zero(std::int64_t ell, const ExactSeries& f) {
  if (!is_prime(ell)) throw usage_error("raise_zero: ell must be prime");
  const ExactSeries v1 = v_scale(ell, f);
  const ExactSeries v2 = v_scale(ell * ell, f);
  ExactSeries out;
  out.truncation = f.truncation;
  out.coeffs24.resize(f.coeffs24.size());
  const Integer l(static_cast<long>(ell));
  for (std::size_t n = 0; n < out.coeffs24.size(); ++n)
    out.coeffs24[n] = f.coeffs24[n] - (l + 1) * v1.coeffs24[n] + l * v2.coeffs24[n];
  return out;
}

// Eisenstein series attached to (N, eps): start from K and apply, for each
// prime factor, the +-1 raise at exponent-1 primes and the zero raise at the
// higher-power primes. The raises commute, so the order is immaterial.
inline ExactSeries build_E0(const FactoredInteger& N, const SignVector& eps,
                            int truncation) {
  require_admissible(N, eps);
  ExactSeries f = series_K(truncation);
  int sp = 0;
  for (const auto& pp : N.factors) {
    if (pp.exponent == 1)
      f = raise_pm(pp.prime, eps[sp++], f);
    else
      f = raise_zero(pp.prime, f);
  }
  return f;
}

// (T_q f)(n) = a(qn) + q a(n/q), for q prime not dividing N;
// output truncation floor(T/q)
inline ExactSeries hecke_T(std::int64_t q, const ExactSeries& f,
                           const FactoredInteger& N) {
  if (!is_prime(q)) throw usage_error("hecke_T: q must be prime");
  if (N.value % q == 0)
    throw domain_error("hecke_T: q must not divide the level");
  const int tout = f.truncation / static_cast<int>(q);
  if (tout < 1) throw usage_error("hecke_T: truncation too small");
  ExactSeries out;
  out.truncation = tout;
  out.coeffs24.assign(static_cast<std::size_t>(tout) + 1, 0);
  for (std::int64_t n = 0; n <= tout; ++n) {
    Integer c = f.coeffs24[static_cast<std::size_t>(n * q)];
    if (n % q == 0) c += q * f.coeffs24[static_cast<std::size_t>(n / q)];
    out.coeffs24[static_cast<std::size_t>(n)] = c;
  }
  return out;
}

// (U_ell f)(n) = a(ell n), for ell prime dividing the level;
// output truncation floor(T/ell)
inline ExactSeries hecke_U(std::int64_t ell, const ExactSeries& f,
                           const FactoredInteger& N) {
  if (!is_prime(ell)) throw usage_error("hecke_U: ell must be prime");
  if (N.value % ell != 0)
    throw domain_error("hecke_U: ell must divide the level");
  const int tout = f.truncation / static_cast<int>(ell);
  if (tout < 1) throw usage_error("hecke_U: truncation too small");
  ExactSeries out;
  out.truncation = tout;
  out.coeffs24.assign(static_cast<std::size_t>(tout) + 1, 0);
  for (std::int64_t n = 0; n <= tout; ++n)
    out.coeffs24[static_cast<std::size_t>(n)] =
        f.coeffs24[static_cast<std::size_t>(n * ell)];
  return out;
}

inline bool is_zero(const ExactSeries& f) {
  for (const auto& c : f.coeffs24)
    if (c != 0) return false;
  return true;
}

}  // namespace cuspidal
