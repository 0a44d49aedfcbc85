// Arithmetic foundation: factorization, divisor ordering, multiplicative
// functions, exact rationals. Oracles: classical sieves recomputed here.

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <numeric>
#include <vector>

#include <cuspidal/arith.hpp>

using namespace cuspidal;

namespace {

// independent sieve of phi and sigma_1 up to n (inclusive)
struct Sieve {
  std::vector<std::int64_t> phi, sigma;
  explicit Sieve(std::int64_t n)
      : phi(static_cast<std::size_t>(n) + 1), sigma(phi.size(), 0) {
    for (std::int64_t i = 0; i <= n; ++i) phi[static_cast<std::size_t>(i)] = i;
    for (std::int64_t p = 2; p <= n; ++p) {
      if (phi[static_cast<std::size_t>(p)] != p) continue;  // p not prime
      for (std::int64_t k = p; k <= n; k += p)
        phi[static_cast<std::size_t>(k)] -=
            phi[static_cast<std::size_t>(k)] / p;
    }
    for (std::int64_t d = 1; d <= n; ++d)
      for (std::int64_t k = d; k <= n; k += d)
        sigma[static_cast<std::size_t>(k)] += d;
  }
};

}  // namespace

TEST_CASE("factorization structure on pinned inputs") {
  const auto f = factorize(360);
  REQUIRE(f.value == 360);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0].prime == 2);
  CHECK(f.factors[0].exponent == 3);
  CHECK(f.factors[1].prime == 3);
  CHECK(f.factors[1].exponent == 2);
  CHECK(f.factors[2].prime == 5);
  CHECK(f.factors[2].exponent == 1);
  CHECK(f.squarefree_prime_count() == 1);
  CHECK(f.prime_count() == 3);
  CHECK(f.squarefree_part() == 5);
  CHECK(f.powerful_part() == 72);
  CHECK_FALSE(f.is_squarefree());
  CHECK(f.squarefree_primes() == std::vector<std::int64_t>{5});
  CHECK(f.exponent_of(2) == 3);
  CHECK(f.exponent_of(7) == 0);

  CHECK(factorize(1).factors.empty());
  CHECK(factorize(1).is_squarefree());
  CHECK_THROWS_AS(factorize(0), usage_error);
  CHECK_THROWS_AS(factorize(-5), usage_error);
}

TEST_CASE("factorize round-trips and orders primes ascending") {
  for (std::int64_t n = 1; n <= 100000; ++n) {
    const auto f = factorize(n);
    std::int64_t prod = 1;
    std::int64_t last = 1;
    for (const auto& pp : f.factors) {
      REQUIRE(pp.prime > last);
      REQUIRE(pp.exponent >= 1);
      last = pp.prime;
      for (int i = 0; i < pp.exponent; ++i) prod *= pp.prime;
    }
    REQUIRE(prod == n);
  }
}

TEST_CASE("divisor list is exponent-lex ordered, last prime fastest") {
  CHECK(divisors(factorize(12)) ==
        std::vector<std::int64_t>{1, 3, 2, 6, 4, 12});
  CHECK(divisors(factorize(45)) ==
        std::vector<std::int64_t>{1, 5, 3, 15, 9, 45});
  CHECK(divisors(factorize(1)) == std::vector<std::int64_t>{1});

  for (std::int64_t n : {2, 7, 8, 30, 360, 1024, 9699690, 9979200}) {
    const auto divs = divisors(factorize(n));
    // every entry divides n, no duplicates, count = prod (e_k + 1)
    std::int64_t expect = 1;
    for (const auto& pp : factorize(n).factors) expect *= pp.exponent + 1;
    REQUIRE(static_cast<std::int64_t>(divs.size()) == expect);
    std::vector<std::int64_t> sorted = divs;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    for (std::int64_t d : divs) REQUIRE(n % d == 0);
  }
}

TEST_CASE("phi and sigma match the sieve and their pinned values") {
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(1) == 1);
  CHECK(sigma1(6) == 12);
  CHECK(sigma1(1) == 1);

  const Sieve s(100000);
  for (std::int64_t n = 1; n <= 100000; ++n) {
    REQUIRE(euler_phi(n) == s.phi[static_cast<std::size_t>(n)]);
    REQUIRE(sigma1(n) == s.sigma[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("divisor-sum identity for phi up to one million") {
  // sum over d | n of phi(d) equals n; accumulated by the harmonic double
  // loop over the sieve, touching every (d, multiple) pair once
  const std::int64_t bound = 1000000;
  Sieve s(bound);
  std::vector<std::int64_t> acc(static_cast<std::size_t>(bound) + 1, 0);
  for (std::int64_t d = 1; d <= bound; ++d)
    for (std::int64_t k = d; k <= bound; k += d)
      acc[static_cast<std::size_t>(k)] += s.phi[static_cast<std::size_t>(d)];
  for (std::int64_t n = 1; n <= bound; ++n)
    REQUIRE(acc[static_cast<std::size_t>(n)] == n);
}

TEST_CASE("sigma is multiplicative on coprime pairs") {
  const Sieve s(100000);
  for (std::int64_t a = 2; a <= 300; ++a)
    for (std::int64_t b = a + 1; a * b <= 100000 && b <= 300; ++b) {
      if (std::gcd(a, b) != 1) continue;
      REQUIRE(s.sigma[static_cast<std::size_t>(a * b)] ==
              s.sigma[static_cast<std::size_t>(a)] *
                  s.sigma[static_cast<std::size_t>(b)]);
    }
}

TEST_CASE("valuation on both integer widths") {
  CHECK(valuation(std::int64_t(360), 2) == 3);
  CHECK(valuation(std::int64_t(360), 3) == 2);
  CHECK(valuation(std::int64_t(360), 7) == 0);
  CHECK(valuation(Integer(360), 2) == 3);
  CHECK(valuation(Integer(-24), 2) == 3);
  CHECK_THROWS_AS(valuation(std::int64_t(0), 2), usage_error);
  CHECK_THROWS_AS(valuation(Integer(0), 2), usage_error);
  CHECK_THROWS_AS(valuation(std::int64_t(5), 1), usage_error);
}

TEST_CASE("primality by trial division agrees with factorization") {
  int primes = 0;
  for (std::int64_t n = 0; n <= 10000; ++n) {
    const bool p = is_prime(n);
    if (p) ++primes;
    if (n >= 1)
      REQUIRE(p == (factorize(n).factors.size() == 1 &&
                    factorize(n).factors[0].exponent == 1));
  }
  CHECK(primes == 1229);  // pi(10^4)
}

TEST_CASE("integer and rational powers") {
  CHECK(integer_pow(2, 10) == 1024);
  CHECK(integer_pow(7, 0) == 1);
  CHECK(integer_pow(10, 30) == Integer("1000000000000000000000000000000"));
  CHECK_THROWS_AS(integer_pow(2, -1), usage_error);
  CHECK(rational_pow(3, -2) == rational(1, 9));
  CHECK(rational_pow(3, 0) == rational(1, 1));
  CHECK(rational_pow(2, 5) == rational(32, 1));
}

TEST_CASE("rational construction canonicalizes; numerator extraction") {
  CHECK(rational(20, 24) == rational(5, 6));
  CHECK(numerator_of(rational(20, 24)) == 5);
  CHECK(numerator_of(rational(-8, 72)) == 1);
  CHECK(numerator_of(rational(0, 5)) == 0);
  CHECK(numerator_of(rational(7, 1)) == 7);
  CHECK_THROWS_AS(rational(1, 0), usage_error);

  // reduced-form invariants on a grid
  for (std::int64_t a = -40; a <= 40; ++a)
    for (std::int64_t b = 1; b <= 40; ++b) {
      const Rational q = rational(a, b);
      REQUIRE(gcd(Integer(q.get_num()), Integer(q.get_den())) ==
              (a == 0 ? Integer(q.get_den()) : Integer(1)));
      REQUIRE(q.get_den() > 0);
      REQUIRE(q == rational(2 * a, 2 * b));
    }
}

TEST_CASE("error taxonomy relationships") {
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  const all_plus_squarefree_error e;
  CHECK(std::string(e.what()) ==
        "excluded case: N squarefree with all-plus sign vector");
  CHECK_THROWS_AS(throw all_plus_squarefree_error(), domain_error);
}
