#include "ncluster/arith.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ncl {

std::uint64_t Factorization::reconstruct() const {
  std::uint64_t v = 1;
  for (const auto& [p, e] : factors)
    for (unsigned i = 0; i < e; ++i) v *= p;
  return v;
}

SpfTable::SpfTable(std::uint32_t limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("SpfTable: limit must be >= 2");
  // ~4 bytes per entry; refuse tables that would not fit in a sane budget.
  if (limit > 200'000'000u)
    throw std::length_error("SpfTable: limit exceeds memory budget");
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      for (std::uint64_t j = i; j <= limit; j += i)
        if (spf_[j] == 0) spf_[j] = i;
    }
  }
}

Factorization factor(std::uint64_t n, const SpfTable& table) {
  if (n == 0) throw std::domain_error("factor: n must be positive");
  Factorization f;
  f.value = n;
  while (n > 1) {
    if (n > table.limit())
      throw std::domain_error("factor: value exceeds table limit");
    std::uint64_t p = table.spf(static_cast<std::uint32_t>(n));
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  return f;
}

Factorization merge_factorizations(const Factorization& a, const Factorization& b) {
  Factorization f;
  f.value = a.value * b.value;
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j == b.factors.size() ||
        (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
      f.factors.push_back(a.factors[i++]);
    } else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first) {
      f.factors.push_back(b.factors[j++]);
    } else {
      f.factors.emplace_back(a.factors[i].first,
                             a.factors[i].second + b.factors[j].second);
      ++i;
      ++j;
    }
  }
  return f;
}

SquareSieve::SquareSieve(std::uint64_t modulus) : modulus_(modulus) {
  table_.assign(modulus, false);
  // x^2 mod m for x <= m/2 covers all residues.
  for (std::uint64_t x = 0; x <= modulus / 2; ++x)
    table_[(x * x) % modulus] = true;
}

const SquareSieve& sieve_m1() {
  static const SquareSieve s(kSieveMod1);
  return s;
}

const SquareSieve& sieve_m2() {
  static const SquareSieve s(kSieveMod2);
  return s;
}

std::optional<Int> is_perfect_square(const Int& n) {
  if (sgn(n) < 0) return std::nullopt;
  // Cheapest checks first: most tested values are non-squares.
  unsigned long m4 = mpz_fdiv_ui(n.get_mpz_t(), 4);
  if (m4 != 0 && m4 != 1) return std::nullopt;
  if (!sieve_m1().residue_is_square(mpz_fdiv_ui(n.get_mpz_t(), kSieveMod1)))
    return std::nullopt;
  if (!sieve_m2().residue_is_square(mpz_fdiv_ui(n.get_mpz_t(), kSieveMod2)))
    return std::nullopt;
  Int root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return root;
}

std::optional<std::uint64_t> is_perfect_square(std::uint64_t n) {
  if ((n & 3u) > 1u) return std::nullopt;
  if (!sieve_m1().residue_is_square(n % kSieveMod1)) return std::nullopt;
  if (!sieve_m2().residue_is_square(n % kSieveMod2)) return std::nullopt;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return std::nullopt;
  return r;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

struct Gaussian {
  __int128 re, im;
};

Gaussian gmul(const Gaussian& a, const Gaussian& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

std::pair<std::uint64_t, std::uint64_t> canonical_pair(__int128 re, __int128 im) {
  std::uint64_t m = static_cast<std::uint64_t>(re < 0 ? -re : re);
  std::uint64_t n = static_cast<std::uint64_t>(im < 0 ? -im : im);
  if (m < n) std::swap(m, n);
  return {m, n};
}

}  // namespace

std::vector<std::pair<std::uint64_t, std::uint64_t>> sum_of_two_squares_all(
    std::uint64_t k, const Factorization& f) {
  // Split off the square part lambda coming from 2^h and primes = 3 (mod 4).
  std::uint64_t lambda = 1;
  unsigned h2 = 0;  // leftover exponent of 2 in k / lambda^2 (0 or 1)
  std::vector<std::pair<std::uint64_t, unsigned>> p1;  // primes = 1 (mod 4)
  for (const auto& [p, e] : f.factors) {
    if (p == 2) {
      for (unsigned i = 0; i < e / 2; ++i) lambda *= 2;
      h2 = e % 2;
    } else if (p % 4 == 3) {
      if (e % 2 == 1) return {};  // obstruction
      for (unsigned i = 0; i < e / 2; ++i) lambda *= p;
    } else {
      p1.emplace_back(p, e);
    }
  }

  // Combine prime-power solution sets via Gaussian-integer multiplication.
  std::vector<Gaussian> sols = {{1, 0}};
  if (h2 == 1) {
    for (auto& g : sols) g = gmul(g, {1, 1});
  }
  for (const auto& [p, j] : p1) {
    auto [u, v] = two_squares_prime(p);
    Gaussian z{static_cast<__int128>(u), static_cast<__int128>(v)};
    Gaussian zbar{static_cast<__int128>(u), -static_cast<__int128>(v)};
    std::vector<Gaussian> powers(j + 1);
    for (unsigned l = 0; l <= j; ++l) {
      Gaussian g{1, 0};
      for (unsigned t = 0; t < l; ++t) g = gmul(g, z);
      for (unsigned t = l; t < j; ++t) g = gmul(g, zbar);
      powers[l] = g;
    }
    std::vector<Gaussian> next;
    next.reserve(sols.size() * powers.size());
    for (const auto& s : sols)
      for (const auto& g : powers) next.push_back(gmul(s, g));
    sols = std::move(next);
  }

  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& g : sols) {
    auto [m, n] = canonical_pair(g.re, g.im);
    out.emplace(lambda * m, lambda * n);
  }
  return {out.begin(), out.end()};
}

std::pair<std::uint64_t, std::uint64_t> two_squares_prime(std::uint64_t p) {
  if (p % 4 != 1) throw std::domain_error("two_squares_prime: p != 1 (mod 4)");
  if (p == 5) return {2, 1};
  // Deterministic quadratic-nonresidue search via the Euler criterion.
  std::uint64_t w = 2;
  while (powmod(w, (p - 1) / 2, p) != p - 1) ++w;
  std::uint64_t z = powmod(w, (p - 1) / 4, p);  // z^2 = -1 (mod p)
  // Euclidean algorithm on (p, z); the first two remainders below sqrt(p).
  std::uint64_t a = p, b = z;
  auto sq = [](std::uint64_t x) {
    return static_cast<unsigned __int128>(x) * x;
  };
  while (sq(b) >= p) {
    std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  std::uint64_t u = b;
  std::uint64_t v = a % b;
  if (u < v) std::swap(u, v);
  return {u, v};
}

}  // namespace ncl
