#pragma once
// Exact residues of the Eisenstein differential at each cusp class, indexed
// by the level d | N of the class. Residues vanish on non-squarefree levels;
// on squarefree levels they are a product over the prime factors of N that
// depends only on whether the prime divides d.

#include <cstdint>
#include <numeric>
#include <vector>

#include "cuspidal/arith.hpp"
#include "cuspidal/cuspidal_divisor.hpp"

namespace cuspidal {

struct ResidueRow {
  std::int64_t level = 1;
  std::int64_t orbit_size = 1;
  Rational residue;
};

struct ResidueTable {
  FactoredInteger N;
  SignVector eps;
  std::vector<ResidueRow> rows;  // one per divisor of N, canonical order
};

inline Rational residue_at(const FactoredInteger& N, const SignVector& eps,
                           std::int64_t d) {
  require_admissible(N, eps);
  if (d < 1 || N.value % d != 0)
    throw usage_error("residue_at: level must divide N");
  Rational acc = rational(1, 24);
  int sp = 0;
  for (const auto& pp : N.factors) {
    const Integer l(static_cast<long>(pp.prime));
    const int fd = valuation(d, pp.prime);
    if (fd >= 2) return rational(0, 1);
    if (pp.exponent == 1) {
      const int s = eps[sp++];
      acc *= Integer(fd == 1 ? s : 1) * (l + s);
    } else {
      acc *= rational_pow(pp.prime, pp.exponent - 3);
      acc *= 1 - l * l;
      if (fd == 0) acc *= 1 - l;
    }
  }
  return acc;
}

inline ResidueTable residues(const FactoredInteger& N, const SignVector& eps) {
  require_admissible(N, eps);
  ResidueTable t;
  t.N = N;
  t.eps = eps;
  for (std::int64_t d : divisors(N)) {
    ResidueRow row;
    row.level = d;
    row.orbit_size = euler_phi(std::gcd(d, N.value / d));
    row.residue = residue_at(N, eps, d);
    t.rows.push_back(row);
  }
  return t;
}

}  // namespace cuspidal
