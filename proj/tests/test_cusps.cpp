// Cusp enumeration checked against an independent classical oracle: cusps as
// reduced fractions p/q (infinity = 1/0), with p1/q1 ~ p2/q2 under the level-N
// congruence group iff s1*q2 == s2*q1 mod gcd(q1*q2, N), where s_i inverts p_i
// mod q_i. The oracle never touches the library's divisor bookkeeping.

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <numeric>
#include <vector>

#include <cuspidal/cusps.hpp>

using namespace cuspidal;

namespace {

struct Fraction {
  std::int64_t p = 1, q = 0;  // reduced, q >= 0; (1,0) is infinity
};

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  // m >= 1, gcd(a, m) = 1; extended Euclid, result in [0, m)
  std::int64_t r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t k = r0 / r1;
    r0 -= k * r1;
    std::swap(r0, r1);
    t0 -= k * t1;
    std::swap(t0, t1);
  }
  return ((t0 % m) + m) % m;
}

bool oracle_equivalent(const Fraction& x, const Fraction& y, std::int64_t N) {
  const std::int64_t g = std::gcd(x.q * y.q, N);
  const std::int64_t sx = x.q == 0 ? 1 : inv_mod(x.p, x.q);
  const std::int64_t sy = y.q == 0 ? 1 : inv_mod(y.p, y.q);
  return ((sx * y.q - sy * x.q) % g + g) % g == 0;
}

std::vector<Fraction> oracle_candidates(std::int64_t N) {
  std::vector<Fraction> out;
  out.push_back({1, 0});
  out.push_back({0, 1});
  for (std::int64_t q = 2; q <= N; ++q)
    for (std::int64_t p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) out.push_back({p, q});
  return out;
}

std::int64_t level_of(const Fraction& f, std::int64_t N) {
  return std::gcd(f.q, N);  // gcd(0, N) = N handles infinity
}

}  // namespace

TEST_CASE("pinned cusp tables") {
  const auto c9 = enumerate_cusps(factorize(9));
  REQUIRE(c9.size() == 3);
  CHECK(c9[0].level == 1);
  CHECK(c9[0].orbit_size == 1);
  CHECK(c9[1].level == 3);
  CHECK(c9[1].z == 3);
  CHECK(c9[1].orbit_size == 2);
  CHECK(c9[1].field_degree == 2);
  CHECK(c9[1].representatives == std::vector<std::int64_t>{1, 2});
  CHECK(c9[2].level == 9);
  CHECK(c9[2].orbit_size == 1);
  CHECK(cusp_count(factorize(9)) == 4);

  CHECK(cusp_count(factorize(11)) == 2);
  CHECK(cusp_count(factorize(1)) == 1);

  const auto c12 = enumerate_cusps(factorize(12));
  REQUIRE(c12.size() == 6);
  for (const auto& c : c12) CHECK(c.orbit_size == 1);
}

TEST_CASE("representatives satisfy their defining congruence conditions") {
  for (std::int64_t n = 1; n <= 400; ++n) {
    const FactoredInteger N = factorize(n);
    for (const auto& c : enumerate_cusps(N)) {
      REQUIRE(n % c.level == 0);
      REQUIRE(c.z == std::gcd(c.level, n / c.level));
      REQUIRE(c.orbit_size == euler_phi(c.z));
      REQUIRE(c.field_degree == c.orbit_size);
      REQUIRE(static_cast<std::int64_t>(c.representatives.size()) ==
              c.orbit_size);
      // one representative per coprime residue class mod z, ascending, each
      // the smallest admissible lift, never exceeding the level
      std::int64_t expect_residue = 1;
      for (std::int64_t x : c.representatives) {
        while (std::gcd(expect_residue, c.z) != 1) ++expect_residue;
        REQUIRE(x % c.z == expect_residue % c.z);
        REQUIRE(x >= 1);
        REQUIRE(x <= c.level);
        REQUIRE(std::gcd(x, c.level) == 1);
        for (std::int64_t y = x - c.z; y >= 1; y -= c.z)
          REQUIRE(std::gcd(y, c.level) != 1);
        ++expect_residue;
      }
    }
  }
}

TEST_CASE("library cusps biject with oracle classes") {
  for (std::int64_t n = 1; n <= 240; ++n) {
    const FactoredInteger N = factorize(n);

    // flatten the library's classes into reduced fractions x/d
    std::vector<Fraction> reps;
    std::vector<std::int64_t> rep_level;
    for (const auto& c : enumerate_cusps(N))
      for (std::int64_t x : c.representatives) {
        REQUIRE(std::gcd(x, c.level) == 1);
        reps.push_back({x, c.level});
        rep_level.push_back(c.level);
      }
    REQUIRE(static_cast<std::int64_t>(reps.size()) == cusp_count(N));

    // the library representatives are pairwise inequivalent
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        REQUIRE_FALSE(oracle_equivalent(reps[i], reps[j], n));

    // and every cusp of the curve is equivalent to exactly one of them
    for (const Fraction& cand : oracle_candidates(n)) {
      int hits = 0;
      std::size_t hit_index = 0;
      for (std::size_t i = 0; i < reps.size(); ++i)
        if (oracle_equivalent(cand, reps[i], n)) {
          ++hits;
          hit_index = i;
        }
      REQUIRE(hits == 1);
      REQUIRE(rep_level[hit_index] == level_of(cand, n));
    }
  }
}

TEST_CASE("cusp count equals the weighted phi sum for larger levels") {
  for (std::int64_t n = 1; n <= 3000; ++n) {
    const FactoredInteger N = factorize(n);
    std::int64_t total = 0;
    for (const auto& c : enumerate_cusps(N)) total += c.orbit_size;
    REQUIRE(total == cusp_count(N));
  }
  // multiplicative count: 2^3 gives 4, 3^2 gives 4, 5 gives 2
  CHECK(cusp_count(factorize(360)) == 32);
}
