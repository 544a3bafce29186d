#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "ncluster/heron.hpp"

using namespace ncl;

TEST_CASE("radicand") {
  CHECK(radicand(Int(5), Int(4), Int(3)) == 576);
  CHECK(radicand(Int(6), Int(5), Int(5)) == 2304);
  CHECK(radicand(Int(4), Int(3), Int(2)) == 135);
  CHECK_FALSE(is_perfect_square(Int(135)).has_value());
}

TEST_CASE("characteristic") {
  CHECK(characteristic(Int(5), Int(4), Int(3)) == 1);
  CHECK(characteristic(Int(2), Int(2), Int(2)) == 3);
  CHECK(characteristic(Int(4), Int(3), Int(2)) == 15);
  // Invariance under integer scaling.
  for (int lam = 1; lam <= 6; ++lam) {
    CHECK(characteristic(Int(4 * lam), Int(3 * lam), Int(2 * lam)) == 15);
    CHECK(characteristic(Int(5 * lam), Int(4 * lam), Int(3 * lam)) == 1);
  }
  CHECK_THROWS_AS(characteristic(Int(5), Int(2), Int(2)), std::domain_error);
}

TEST_CASE("triangle construction invariants") {
  HeronTriangle t(Int(3), Int(5), Int(4));  // any input order
  CHECK(t.a == 5);
  CHECK(t.b == 4);
  CHECK(t.c == 3);
  CHECK(t.area == 6);
  CHECK(t.primitive);
  HeronTriangle doubled(Int(10), Int(8), Int(6));
  CHECK(doubled.area == 24);
  CHECK_FALSE(doubled.primitive);
  CHECK_THROWS_AS(HeronTriangle(Int(4), Int(3), Int(2)), std::domain_error);
  CHECK_THROWS_AS(HeronTriangle(Int(7), Int(4), Int(3)), std::domain_error);
}

TEST_CASE("naive generation") {
  auto only = generate_naive(5);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == HeronTriangle(Int(5), Int(4), Int(3)));

  CHECK(generate_naive(2).empty());

  auto s200 = generate_naive(200);
  std::set<HeronTriangle> set200(s200.begin(), s200.end());
  CHECK(set200.count(HeronTriangle(Int(5), Int(4), Int(3))));
  CHECK(set200.count(HeronTriangle(Int(6), Int(5), Int(5))));
  CHECK(set200.count(HeronTriangle(Int(8), Int(5), Int(5))));
  CHECK(set200.count(HeronTriangle(Int(13), Int(12), Int(5))));
  // No duplicates, canonical order, sorted.
  CHECK(set200.size() == s200.size());
  CHECK(std::is_sorted(s200.begin(), s200.end()));
  for (const auto& t : s200) {
    CHECK(t.a >= t.b);
    CHECK(t.b >= t.c);
    CHECK(t.a <= 200);
  }
}

TEST_CASE("third sides") {
  SpfTable table(100);
  auto got = third_sides(4, 3, table);
  CHECK(got == std::vector<std::uint64_t>{5});
  CHECK(third_sides(1, 1, table).empty());
  auto g125 = third_sides(12, 5, table);
  CHECK(std::count(g125.begin(), g125.end(), 13) == 1);
  // Oracle: every returned side has square radicand, no valid side missed.
  for (std::uint64_t b = 1; b <= 30; ++b)
    for (std::uint64_t c = 1; c <= b; ++c) {
      std::vector<std::uint64_t> brute;
      for (std::uint64_t a = b - c + 1; a < b + c; ++a) {
        Int r = radicand(Int(a), Int(b), Int(c));
        if (r > 0 && is_perfect_square(r)) brute.push_back(a);
      }
      auto fast = third_sides(b, c, table);
      std::sort(fast.begin(), fast.end());
      CHECK(fast == brute);
    }
}

TEST_CASE("primitive generation against the naive oracle") {
  auto naive = generate_naive(300);
  std::vector<HeronTriangle> expect;
  for (const auto& t : naive)
    if (t.primitive) expect.push_back(t);
  CHECK(generate_primitive(300) == expect);

  auto only = generate_primitive(5);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == HeronTriangle(Int(5), Int(4), Int(3)));

  auto p13 = generate_primitive(13);
  std::set<HeronTriangle> set13(p13.begin(), p13.end());
  CHECK(set13.count(HeronTriangle(Int(13), Int(12), Int(5))));
  for (const auto& t : p13) {
    CHECK(t.a != 7);
    CHECK(t.a != 11);
  }
}

TEST_CASE("brahmagupta parameterization") {
  auto t = brahmagupta(Int(1), Int(1), Int(2), Int(1), Int(1));
  CHECK(t[0] == Rat(4));
  CHECK(t[1] == Rat(5));
  CHECK(t[2] == Rat(3));
  CHECK_THROWS_AS(brahmagupta(Int(1), Int(1), Int(1), Int(1), Int(1)),
                  std::domain_error);
  auto d = brahmagupta(Int(2), Int(1), Int(2), Int(1), Int(1));
  CHECK(d[0] == Rat(8));
  CHECK(d[1] == Rat(10));
  CHECK(d[2] == Rat(6));
  CHECK(primitive_from_rational_sides(d[0], d[1], d[2]) ==
        HeronTriangle(Int(5), Int(4), Int(3)));
  // Normalized outputs always have characteristic 1.
  for (int h = 1; h <= 4; ++h)
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        if (i * h <= j * j) continue;
        auto s = brahmagupta(Int(3), Int(7), Int(h), Int(i), Int(j));
        HeronTriangle prim = primitive_from_rational_sides(s[0], s[1], s[2]);
        CHECK(characteristic(prim.a, prim.b, prim.c) == 1);
      }
}
