#include "ncluster/heron.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ncl {

HeronTriangle::HeronTriangle(Int side1, Int side2, Int side3)
    : a(std::move(side1)), b(std::move(side2)), c(std::move(side3)) {
  if (a < b) swap(a, b);
  if (b < c) swap(b, c);
  if (a < b) swap(a, b);
  if (c <= 0 || b + c <= a)
    throw std::domain_error("HeronTriangle: degenerate side triple");
  auto root = is_perfect_square(radicand(a, b, c));
  if (!root) throw std::domain_error("HeronTriangle: area is not integral");
  area = *root / 4;
  Int g = gcd(gcd(a, b), c);
  primitive = (g == 1);
}

Int radicand(const Int& a, const Int& b, const Int& c) {
  return (a + b + c) * (a + b - c) * (a - b + c) * (-a + b + c);
}

Int characteristic(const Int& a, const Int& b, const Int& c) {
  Int r = radicand(a, b, c);
  if (r <= 0) throw std::domain_error("characteristic: degenerate triple");
  // Strip square factors by trial division; the radicand is a product of
  // four numbers each below a+b+c, so this stays cheap.
  Int k = 1;
  for (Int p = 2; p * p <= r; ++p) {
    if (r % p != 0) continue;
    unsigned e = 0;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (e % 2 == 1) k *= p;
  }
  if (r > 1) k *= r;  // leftover is prime
  return k;
}

std::vector<HeronTriangle> generate_naive(std::uint32_t limit) {
  std::vector<HeronTriangle> out;
  for (std::uint64_t a = 1; a <= limit; ++a) {
    for (std::uint64_t b = (a + 2) / 2; b <= a; ++b) {
      for (std::uint64_t c = a + 1 - b; c <= b; ++c) {
        std::uint64_t r =
            (a + b + c) * (a + b - c) * (a - b + c) * (b + c - a);
        if (r == 0) continue;
        if (is_perfect_square(r)) out.emplace_back(Int(a), Int(b), Int(c));
      }
    }
  }
  return out;
}

namespace {

// Enumerates every divisor k of the factored value together with k's own
// factorization, invoking fn(k, factorization).
void for_each_divisor(
    const Factorization& f,
    const std::function<void(std::uint64_t, const Factorization&)>& fn) {
  Factorization cur;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t idx,
                                                            std::uint64_t val) {
    if (idx == f.factors.size()) {
      cur.value = val;
      fn(val, cur);
      return;
    }
    const auto& [p, e] = f.factors[idx];
    rec(idx + 1, val);
    std::uint64_t pv = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pv *= p;
      cur.factors.emplace_back(p, k);
      rec(idx + 1, val * pv);
      cur.factors.pop_back();
    }
  };
  rec(0, 1);
}

}  // namespace

std::vector<std::uint64_t> third_sides(std::uint64_t b, std::uint64_t c,
                                       const SpfTable& table) {
  if (b < c || c < 1) throw std::domain_error("third_sides: need b >= c >= 1");
  Factorization f2;
  f2.value = 2;
  f2.factors.emplace_back(2, 1);
  Factorization f = merge_factorizations(
      f2, merge_factorizations(factor(b, table), factor(c, table)));
  std::uint64_t twobc = 2 * b * c;
  std::set<std::uint64_t> found;
  for_each_divisor(f, [&](std::uint64_t k, const Factorization& fk) {
    for (auto [m, n] : sum_of_two_squares_all(k, fk)) {
      // cos(alpha) = (m^2 - n^2) / k, so a^2 = b^2 + c^2 - 2bc*(m^2-n^2)/k.
      std::uint64_t diff = m * m - n * n;  // m >= n
      std::uint64_t rhs = (twobc / k) * diff;
      std::uint64_t bc2 = b * b + c * c;
      // cos(alpha) may have either sign: acute and obtuse apex angles both
      // give rational cosines with the same |numerator|.
      for (int sgn = 0; sgn < 2; ++sgn) {
        std::uint64_t a2;
        if (sgn == 0) {
          if (bc2 < rhs) continue;  // a^2 would be negative
          a2 = bc2 - rhs;
        } else {
          if (diff == 0) break;  // +0 and -0 coincide
          a2 = bc2 + rhs;
        }
        auto a = is_perfect_square(a2);
        if (!a) continue;
        if (*a == 0) continue;
        // Strict triangle inequalities (drop degenerate, collinear cases).
        if (*a + c <= b || b + c <= *a) continue;
        found.insert(*a);
      }
    }
  });
  return {found.begin(), found.end()};
}

std::vector<HeronTriangle> generate_primitive(std::uint32_t limit) {
  if (limit < 3) return {};
  SpfTable table(limit);
  // The computed third side may be any of the sorted positions, so no
  // ordering filter here; the set handles triangles reached from several
  // side pairs.
  std::set<HeronTriangle> found;
  for (std::uint64_t b = 1; b <= limit; ++b) {
    for (std::uint64_t c = 1; c <= b; ++c) {
      for (std::uint64_t a : third_sides(b, c, table)) {
        if (a > limit) continue;
        if (std::gcd(a, std::gcd(b, c)) != 1) continue;
        found.emplace(Int(a), Int(b), Int(c));
      }
    }
  }
  return {found.begin(), found.end()};
}

std::array<Rat, 3> brahmagupta(const Int& p, const Int& q, const Int& h,
                               const Int& i, const Int& j) {
  if (i * h <= j * j)
    throw std::domain_error("brahmagupta: need ih > j^2");
  Rat scale(p, q);
  scale.canonicalize();
  Rat a = scale * Rat(h * (i * i + j * j));
  Rat b = scale * Rat(i * (h * h + j * j));
  Rat c = scale * Rat((i + h) * (i * h - j * j));
  return {a, b, c};
}

HeronTriangle primitive_from_rational_sides(const Rat& a, const Rat& b,
                                            const Rat& c) {
  Int l = lcm(lcm(a.get_den(), b.get_den()), c.get_den());
  Int ia = a.get_num() * (l / a.get_den());
  Int ib = b.get_num() * (l / b.get_den());
  Int ic = c.get_num() * (l / c.get_den());
  Int g = gcd(gcd(ia, ib), ic);
  return HeronTriangle(ia / g, ib / g, ic / g);
}

}  // namespace ncl
