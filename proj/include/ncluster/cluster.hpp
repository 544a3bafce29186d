// The Cluster type: primitive normalization, canonical forms, similarity
// and full verification of the cluster conditions.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncluster/geometry.hpp"
#include "ncluster/heron.hpp"

namespace ncl {

// Lexicographically maximal distance vector over all point permutations.
using CanonicalKey = std::vector<Int>;

// n-point integral point set stored as its integer distance matrix.
struct Cluster {
  int n = 0;
  std::vector<Int> dist;  // n x n, symmetric, zero diagonal
  bool primitive = false;

  Cluster() = default;
  Cluster(int n_, std::vector<Int> dist_);

  const Int& d(int i, int j) const { return dist[i * n + j]; }
  SquaredDistanceMatrix squared() const {
    return SquaredDistanceMatrix::from_distances(dist, n);
  }
  // Coordinates over the common denominator 2*d(0,1).
  std::vector<DenPoint> coords() const;
  std::vector<RatPoint> rational_coords() const;
};

// Multiply a rational matrix by the lcm of the denominators, divide by the
// gcd of the results. Returns the integer matrix and the factor `scale`
// such that input = scale * output entrywise.
std::pair<std::vector<Int>, Rat> normalize_primitive(
    const std::vector<Rat>& dist, int n);

Cluster cluster_from_rational_distances(const std::vector<Rat>& dist, int n);
Cluster cluster_from_points(const std::vector<RatPoint>& pts);

Int diameter(const Cluster& c);

// The n! definition: maximize the column-appended upper-triangle vector.
CanonicalKey canonical_form(const Cluster& c);

// True iff one cluster is a rational scaling of a relabeling of the other.
// Sorted-distance-multiset pretest, then canonical keys after cross-scaling.
bool is_similar(const Cluster& c1, const Cluster& c2);

struct VerifyReport {
  bool distances_integral = false;
  bool realizable = false;
  bool no_collinear_triple = false;
  bool no_concircular_quadruple = false;
  bool characteristic_one = false;

  bool ok() const {
    return distances_integral && realizable && no_collinear_triple &&
           no_concircular_quadruple && characteristic_one;
  }
};

VerifyReport verify_cluster(const Cluster& c);
VerifyReport verify_cluster_points(const std::vector<RatPoint>& pts);

// All C(n,3) sub-triangles, normalized to primitive canonical order.
// Throws if some triple is not Heronian.
std::vector<HeronTriangle> sub_triangles(const Cluster& c);

// Same, deduplicated, with multiplicities.
std::vector<std::pair<HeronTriangle, int>> sub_triangles_with_multiplicity(
    const Cluster& c);

}  // namespace ncl
