#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "ncluster/arith.hpp"

using namespace ncl;

TEST_CASE("smallest prime factor table") {
  SpfTable small(10);
  CHECK(small.spf(9) == 3);
  CHECK(small.spf(7) == 7);
  CHECK(small.spf(4) == 2);
  SpfTable minimal(2);
  CHECK(minimal.spf(2) == 2);
  SpfTable big(1000000);
  CHECK(big.spf(999983) == 999983);  // prime
  CHECK(big.is_prime(999983));
  CHECK_FALSE(big.is_prime(999981));
}

TEST_CASE("factor") {
  SpfTable table(1000000);
  auto f = factor(576, table);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair<std::uint64_t, unsigned>{2, 6});
  CHECK(f.factors[1] == std::pair<std::uint64_t, unsigned>{3, 2});

  CHECK(factor(1, table).factors.empty());

  // Merged factorization handles values above the table limit when every
  // prime factor is within it.
  auto m1 = factor(3 * 5 * 11 * 13, table);
  auto m2 = factor(17u * 19 * 23 * 31, table);
  auto merged = merge_factorizations(m1, m2);
  CHECK(merged.value == kSieveMod1);
  std::vector<std::pair<std::uint64_t, unsigned>> expect{
      {3, 1}, {5, 1}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {31, 1}};
  CHECK(merged.factors == expect);

  CHECK_THROWS_AS(factor(0, table), std::domain_error);

  // Reconstruction round trip.
  for (std::uint64_t n = 1; n <= 20000; ++n)
    CHECK(factor(n, table).reconstruct() == n);
}

TEST_CASE("perfect square pipeline") {
  CHECK(is_perfect_square(Int(0)) == Int(0));
  CHECK_FALSE(is_perfect_square(Int(6)).has_value());  // 6 mod 4 == 2
  CHECK(is_perfect_square(Int(5116644)) == Int(2262));
  CHECK(is_perfect_square(std::uint64_t(5116644)) == 2262);

  // Smallest non-square whose residues pass the mod-4 and both modular
  // sieves, found by upward search: the exact root stage must reject it.
  std::uint64_t survivor = 0;
  for (std::uint64_t n = 2;; ++n) {
    if (is_perfect_square(n)) continue;
    if (n % 4 != 0 && n % 4 != 1) continue;
    if (!sieve_m1().residue_is_square(n % kSieveMod1)) continue;
    if (!sieve_m2().residue_is_square(n % kSieveMod2)) continue;
    survivor = n;
    break;
  }
  CHECK(survivor > 0);
  CHECK_FALSE(is_perfect_square(Int(survivor)).has_value());

  // Agreement with the exact-root oracle on random values.
  std::mt19937_64 rng(20260826);
  for (int i = 0; i < 100000; ++i) {
    Int n(rng());
    n = n * Int(rng()) % Int("1000000000000000000000000000000");
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    auto got = is_perfect_square(n);
    CHECK(got.has_value() == (rem == 0));
    if (got) CHECK(*got * *got == n);
  }
  // Exact squares are never rejected by the sieves.
  for (int i = 0; i < 10000; ++i) {
    Int r(rng() % 1000000000);
    CHECK(is_perfect_square(Int(r * r)) == r);
  }
}

TEST_CASE("sieve moduli") {
  CHECK(sieve_m1().modulus() == kSieveMod1);
  CHECK(sieve_m2().modulus() == kSieveMod2);
  CHECK(kSieveMod1 ==
        3ull * 5 * 11 * 13 * 17 * 19 * 23 * 31);
  CHECK(kSieveMod2 == 7ull * 29 * 37 * 41 * 43 * 47);
}

TEST_CASE("sum of two squares") {
  SpfTable table(20000);
  auto sq = [&](std::uint64_t k) { return sum_of_two_squares_all(k, factor(k, table)); };

  using P = std::pair<std::uint64_t, std::uint64_t>;
  CHECK(sq(2) == std::vector<P>{{1, 1}});
  CHECK(sq(21).empty());
  CHECK(sq(25) == std::vector<P>{{4, 3}, {5, 0}});

  // Brute-force oracle for every k up to 10^4.
  for (std::uint64_t k = 1; k <= 10000; ++k) {
    std::vector<P> brute;
    for (std::uint64_t m = 0; m * m <= k; ++m) {
      std::uint64_t rest = k - m * m;
      auto n = is_perfect_square(rest);
      if (n && m >= *n) brute.emplace_back(m, *n);
    }
    std::sort(brute.begin(), brute.end());
    CHECK(sq(k) == brute);
  }
}

TEST_CASE("two squares of a prime") {
  CHECK(two_squares_prime(5) == std::pair<std::uint64_t, std::uint64_t>{2, 1});
  CHECK(two_squares_prime(13) == std::pair<std::uint64_t, std::uint64_t>{3, 2});

  {
    std::uint64_t p = 1000249;
    auto [u, v] = two_squares_prime(p);
    CHECK(u * u + v * v == p);
    CHECK(u > v);
    CHECK(v > 0);
    // Uniqueness cross-check by brute force.
    int count = 0;
    for (std::uint64_t w = 1; 2 * w * w < p; ++w)
      if (is_perfect_square(p - w * w)) ++count;
    CHECK(count == 1);
  }

  SpfTable table(100000);
  for (std::uint32_t p = 5; p < 100000; ++p) {
    if (!table.is_prime(p) || p % 4 != 1) continue;
    auto [u, v] = two_squares_prime(p);
    CHECK(u * u + v * v == p);
    CHECK(u > v);
    CHECK(v > 0);
  }

  CHECK_THROWS_AS(two_squares_prime(7), std::domain_error);
}
