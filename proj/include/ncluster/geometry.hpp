// Exact rational plane geometry: coordinate computation from distances,
// rational-distance testing, collinearity/concircularity predicates,
// Cayley-Menger realizability and circle inversion.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ncluster/arith.hpp"

namespace ncl {

struct RatPoint {
  Rat x, y;

  friend bool operator==(const RatPoint& a, const RatPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const RatPoint& a, const RatPoint& b) {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return cmp(a.y, b.y) < 0;
  }
};

// Point (x/den, y/den); all points of one coordinate set share den = 2d.
struct DenPoint {
  Int x, y, den;

  RatPoint to_rational() const;
};

// Symmetric matrix of squared distances, zero diagonal.
class SquaredDistanceMatrix {
 public:
  explicit SquaredDistanceMatrix(int n);
  // Squares the entries of a plain distance matrix.
  static SquaredDistanceMatrix from_distances(const std::vector<Int>& dist,
                                              int n);

  int size() const { return n_; }
  const Int& at(int i, int j) const { return sq_[i * n_ + j]; }
  void set(int i, int j, const Int& v);

 private:
  int n_;
  std::vector<Int> sq_;
};

// Coordinates of a Heronian triangle: P1 = (0,0), P2 = (a,0),
// P3 = (t1/(2a), t2/(2a)) with t1 = b^2 - c^2 + a^2, t2 = sqrt(4a^2b^2 - t1^2).
struct TriangleCoords {
  DenPoint p1, p2, p3;  // den = 2a
  Int t1, t2;
};
TriangleCoords triangle_coords(const Int& a, const Int& b, const Int& c);

// Coordinates for the rotated side roles (b, c, a) and (c, a, b), reusing
// t1 and t2 of triangle_coords(a, b, c) without new square roots.
// rotation = 1 gives (b, c, a) over 2b, rotation = 2 gives (c, a, b) over 2c.
std::array<DenPoint, 3> triangle_coords_rotated(const Int& a, const Int& b,
                                                const Int& c,
                                                const TriangleCoords& tc,
                                                int rotation);

// Coordinates for a full distance matrix over the common denominator 2d,
// d = d_{12}. Throws std::domain_error if some placement root is not
// integral or no y-sign matches the distance to the third point.
std::vector<DenPoint> cluster_coords(const SquaredDistanceMatrix& D);

// Exact distance when it is rational, empty otherwise. The radicand is
// screened by the modular square sieves before the exact root.
std::optional<Rat> rational_distance(const RatPoint& p, const RatPoint& q);

// sqrt of a nonnegative rational when the result is rational.
std::optional<Rat> rational_sqrt(const Rat& v);

bool collinear(const RatPoint& p, const RatPoint& q, const RatPoint& r);

// True iff all four points lie on one circle (4x4 bordered determinant).
bool concircular(const RatPoint& p1, const RatPoint& p2, const RatPoint& p3,
                 const RatPoint& p4);

// Determinant of the Cayley-Menger matrix of the chosen subset (size >= 2).
Int cayley_menger_det(const SquaredDistanceMatrix& D,
                      const std::vector<int>& subset);

// Menger's criterion for realizability in the plane (m = 2).
bool realizable_in_plane(const SquaredDistanceMatrix& D);

// Circle inversion through the chosen point: every other point (x, y),
// translated so the center is at the origin, maps to
// (x/(x^2+y^2), y/(x^2+y^2)). Points must be pairwise distinct.
std::vector<RatPoint> circle_invert(const std::vector<RatPoint>& points,
                                    int center_index);

}  // namespace ncl
