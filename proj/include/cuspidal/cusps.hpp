#pragma once
// Cusps of X0(N) grouped by level: for each divisor d | N there is one Galois
// orbit of phi(z) cusps, z = gcd(d, N/d), defined over the cyclotomic field
// of conductor z.

#include <cstdint>
#include <numeric>
#include <vector>

#include "cuspidal/arith.hpp"

namespace cuspidal {

struct CuspClass {
  std::int64_t level = 1;        // divisor d of N
  std::int64_t z = 1;            // gcd(d, N/d)
  std::int64_t orbit_size = 1;   // phi(z)
  std::int64_t field_degree = 1; // phi(z); the Galois action is simply transitive
  // smallest x >= 1 in each residue class mod z with gcd(x, d) = 1; always
  // lands in [1, d]
  std::vector<std::int64_t> representatives;
};

inline std::vector<CuspClass> enumerate_cusps(const FactoredInteger& N) {
  std::vector<CuspClass> out;
  for (std::int64_t d : divisors(N)) {
    CuspClass c;
    c.level = d;
    c.z = std::gcd(d, N.value / d);
    c.orbit_size = c.field_degree = euler_phi(c.z);
    for (std::int64_t a = 1; a <= c.z; ++a) {
      if (std::gcd(a, c.z) != 1) continue;
      std::int64_t x = a;
      while (std::gcd(x, d) != 1) x += c.z;
      c.representatives.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline std::int64_t cusp_count(const FactoredInteger& N) {
  std::int64_t total = 0;
  for (std::int64_t d : divisors(N))
    total += euler_phi(std::gcd(d, N.value / d));
  return total;
}

}  // namespace cuspidal
