#pragma once
// Exact arithmetic foundation: GMP-backed integers/rationals plus the
// elementary arithmetic functions every other module consumes.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cuspidal {

using Integer = mpz_class;
using Rational = mpq_class;

// Error taxonomy, mirrored by the CLI exit codes:
//   usage_error    -> malformed input shape            (exit 2)
//   domain_error   -> mathematically excluded input    (exit 3)
//   internal_error -> a computed invariant failed      (exit 4)
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// The one named domain case: for squarefree N with the all-plus sign vector
// the tensor construction has degree 2^t != 0, so no degree-0 divisor exists.
struct all_plus_squarefree_error : domain_error {
  all_plus_squarefree_error()
      : domain_error("excluded case: N squarefree with all-plus sign vector") {}
};
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;
};

// A factored positive integer. `factors` is ascending by prime. The primes of
// exponent exactly 1 ("squarefree primes") are the ones sign vectors attach
// to; the higher prime powers contribute rigid tensor factors.
struct FactoredInteger {
  std::int64_t value = 1;
  std::vector<PrimePower> factors;

  int prime_count() const { return static_cast<int>(factors.size()); }
  int squarefree_prime_count() const {
    int t = 0;
    for (const auto& f : factors) t += (f.exponent == 1);
    return t;
  }
  bool is_squarefree() const {
    return squarefree_prime_count() == prime_count();
  }
  std::int64_t squarefree_part() const {
    std::int64_t n1 = 1;
    for (const auto& f : factors)
      if (f.exponent == 1) n1 *= f.prime;
    return n1;
  }
  std::int64_t powerful_part() const { return value / squarefree_part(); }
  std::vector<std::int64_t> squarefree_primes() const {
    std::vector<std::int64_t> ps;
    for (const auto& f : factors)
      if (f.exponent == 1) ps.push_back(f.prime);
    return ps;
  }
  int exponent_of(std::int64_t p) const {
    for (const auto& f : factors)
      if (f.prime == p) return f.exponent;
    return 0;
  }
};

inline FactoredInteger factorize(std::int64_t n) {
  if (n < 1) throw usage_error("factorize: n must be >= 1");
  FactoredInteger out;
  out.value = n;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  if (n > 1) out.factors.push_back({n, 1});
  return out;
}

// All sigma0(n) divisors, ordered lexicographically by exponent vector with
// primes ascending (last prime's exponent varies fastest). Every lattice
// module indexes by this order; it turns tensor products over prime powers
// into plain mixed-radix index arithmetic.
inline std::vector<std::int64_t> divisors(const FactoredInteger& n) {
  const int u = n.prime_count();
  std::vector<int> e(u, 0);
  std::vector<std::int64_t> out;
  while (true) {
    std::int64_t d = 1;
    for (int k = 0; k < u; ++k)
      for (int i = 0; i < e[k]; ++i) d *= n.factors[k].prime;
    out.push_back(d);
    int k = u - 1;
    while (k >= 0 && e[k] == n.factors[k].exponent) {
      e[k] = 0;
      --k;
    }
    if (k < 0) break;
    ++e[k];
  }
  return out;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t phi = 1;
  for (const auto& pp : factorize(n).factors) {
    phi *= pp.prime - 1;
    for (int i = 1; i < pp.exponent; ++i) phi *= pp.prime;
  }
  return phi;
}

inline std::int64_t sigma1(std::int64_t n) {
  std::int64_t s = 1;
  for (const auto& pp : factorize(n).factors) {
    std::int64_t geom = 1, q = 1;
    for (int i = 0; i < pp.exponent; ++i) {
      q *= pp.prime;
      geom += q;
    }
    s *= geom;
  }
  return s;
}

inline int valuation(std::int64_t n, std::int64_t p) {
  if (n < 1 || p < 2) throw usage_error("valuation: need n >= 1 and p >= 2");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline long valuation(const Integer& n, std::int64_t p) {
  if (sgn(n) == 0 || p < 2)
    throw usage_error("valuation: need n != 0 and p >= 2");
  Integer reduced, pz(static_cast<long>(p));
  return static_cast<long>(
      mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) return false;
  return true;
}

inline Integer integer_pow(std::int64_t base, int exp) {
  if (exp < 0) throw usage_error("integer_pow: negative exponent");
  Integer out;
  Integer b(static_cast<long>(base));
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

inline Rational rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw usage_error("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational(std::int64_t num, std::int64_t den) {
  return rational(Integer(static_cast<long>(num)),
                  Integer(static_cast<long>(den)));
}

// base^exp as an exact rational; exp may be negative
inline Rational rational_pow(std::int64_t base, int exp) {
  if (base == 0) throw usage_error("rational_pow: zero base");
  if (exp >= 0) return rational(integer_pow(base, exp), Integer(1));
  return rational(Integer(1), integer_pow(base, -exp));
}

// |numerator| of the reduced fraction; the orders and indices downstream are
// group orders, hence positive
inline Integer numerator_of(const Rational& r) {
  Rational q = r;
  q.canonicalize();
  return abs(Integer(q.get_num()));
}

}  // namespace cuspidal
