#pragma once

// Heuristics for picking promising triangle subsets before a search:
// diameter, prime-divisor scores, sub-triangle frequency, ellipse keys.

#include <array>
#include <map>
#include <vector>

#include "ncluster/cluster.hpp"
#include "ncluster/heron.hpp"

namespace ncl {

enum class ScoreMethod { kNegDiameter, kScore1, kScore2 };

struct ScoredTriangle {
  HeronTriangle t;
  double score;
  ScoreMethod method;
};

// Number of distinct prime divisors.
int omega(const Int& n);

// Negative longest side; prefers small triangles.
double score_neg_diameter(const HeronTriangle& t);

// Sum over the sides of omega(side) / log(log(side)).
double score1(const HeronTriangle& t);

// Sum over the sides of omega(side) / log(side).
double score2(const HeronTriangle& t);

std::vector<ScoredTriangle> score_triangles(
    const std::vector<HeronTriangle>& L, ScoreMethod method);

// Multiplicities of primitive sub-triangles across a cluster list.
std::map<HeronTriangle, std::size_t> frequency_rank(
    const std::vector<Cluster>& clusters);

// The three reduced ellipse ratios (b+c)/a, (a+c)/b, (a+b)/c.
std::array<Rat, 3> ellipse_keys(const HeronTriangle& t);

// Top m by score, descending; ties broken by ascending side triple.
std::vector<HeronTriangle> select_top(std::vector<ScoredTriangle> scored,
                                      std::size_t m);

}  // namespace ncl
