// Heronian triangles: generation (naive cubic loop and the divisor-based
// third-side algorithm), areas, characteristics and the Brahmagupta
// parameterization.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "ncluster/arith.hpp"

namespace ncl {

// Integer-sided triangle with integral area, canonical order a >= b >= c.
struct HeronTriangle {
  Int a, b, c;
  Int area;
  bool primitive = false;

  HeronTriangle() = default;
  // Sorts the sides and checks non-degeneracy and squareness of the area.
  HeronTriangle(Int side1, Int side2, Int side3);

  bool isosceles() const { return a == b || b == c; }

  friend bool operator==(const HeronTriangle& l, const HeronTriangle& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c;
  }
  friend bool operator<(const HeronTriangle& l, const HeronTriangle& r) {
    if (l.a != r.a) return l.a < r.a;
    if (l.b != r.b) return l.b < r.b;
    return l.c < r.c;
  }
};

// (a+b+c)(a+b-c)(a-b+c)(-a+b+c) = 16 * area^2. Degenerate triples give <= 0.
Int radicand(const Int& a, const Int& b, const Int& c);

// Squarefree part of the radicand; 1 iff the triangle is Heronian.
// Requires a non-degenerate triple.
Int characteristic(const Int& a, const Int& b, const Int& c);

// All Heronian triangles (primitive and imprimitive) with a <= limit,
// via the cubic loop over canonical triples. Sorted by (a, b, c).
std::vector<HeronTriangle> generate_naive(std::uint32_t limit);

// All third sides a making (a, b, c) a characteristic-1 non-degenerate
// triangle, via divisors k of 2bc and the solutions of m^2 + n^2 = k.
// Requires b >= c >= 1; the table must cover b and c.
std::vector<std::uint64_t> third_sides(std::uint64_t b, std::uint64_t c,
                                       const SpfTable& table);

// All primitive Heronian triangles with a <= limit, via third_sides over
// coprime pairs (b, c). Sorted by (a, b, c).
std::vector<HeronTriangle> generate_primitive(std::uint32_t limit);

// Brahmagupta parameterization: a = (p/q) h (i^2+j^2), b = (p/q) i (h^2+j^2),
// c = (p/q) (i+h) (ih-j^2). Requires ih > j^2.
std::array<Rat, 3> brahmagupta(const Int& p, const Int& q, const Int& h,
                               const Int& i, const Int& j);

// Clears denominators of a rational side triple and divides out the gcd.
HeronTriangle primitive_from_rational_sides(const Rat& a, const Rat& b,
                                            const Rat& c);

}  // namespace ncl
