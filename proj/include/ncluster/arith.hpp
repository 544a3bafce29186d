// Exact integer primitives: factor tables, perfect-square sieves and
// two-square decompositions. Everything here is deterministic and
// read-only after the tables are built.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ncl {

using Int = mpz_class;
using Rat = mpq_class;

// Moduli for the modular square sieve: products of distinct small primes.
inline constexpr std::uint64_t kSieveMod1 = 493991355ULL;  // 3*5*11*13*17*19*23*31
inline constexpr std::uint64_t kSieveMod2 = 622368971ULL;  // 7*29*37*41*43*47

struct Factorization {
  std::uint64_t value = 1;
  // (prime, exponent), primes strictly increasing, exponents >= 1.
  std::vector<std::pair<std::uint64_t, unsigned>> factors;

  std::uint64_t reconstruct() const;
};

// Smallest-prime-factor table for all 2 <= n <= limit.
class SpfTable {
 public:
  explicit SpfTable(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  std::uint32_t spf(std::uint32_t n) const { return spf_[n]; }
  bool is_prime(std::uint32_t n) const { return n >= 2 && spf_[n] == n; }

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

// Factor n using the table; every prime factor of n must be <= table limit.
Factorization factor(std::uint64_t n, const SpfTable& table);

// Merge factorizations (multiplies the underlying values).
Factorization merge_factorizations(const Factorization& a, const Factorization& b);

// Boolean table of quadratic residues modulo a squarefree modulus.
class SquareSieve {
 public:
  explicit SquareSieve(std::uint64_t modulus);

  std::uint64_t modulus() const { return modulus_; }
  bool residue_is_square(std::uint64_t r) const { return table_[r]; }

 private:
  std::uint64_t modulus_;
  std::vector<bool> table_;
};

// Shared sieves for kSieveMod1/kSieveMod2, built once on first use.
const SquareSieve& sieve_m1();
const SquareSieve& sieve_m2();

// Exact perfect-square test. Pipeline: mod-4 pretest, residue sieve mod m1,
// residue sieve mod m2, then an exact integer square root.
std::optional<Int> is_perfect_square(const Int& n);
std::optional<std::uint64_t> is_perfect_square(std::uint64_t n);

// All (m, n) with m >= n >= 0 and m^2 + n^2 = k, given a factorization of k.
// Empty iff some prime = 3 (mod 4) divides k to an odd power.
std::vector<std::pair<std::uint64_t, std::uint64_t>> sum_of_two_squares_all(
    std::uint64_t k, const Factorization& f);

// Hermite-Serret: the unique (u, v) with u^2 + v^2 = p, u > v > 0,
// for a prime p = 1 (mod 4).
std::pair<std::uint64_t, std::uint64_t> two_squares_prime(std::uint64_t p);

}  // namespace ncl
