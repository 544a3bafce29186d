#include "ncluster/geometry.hpp"

#include <functional>
#include <stdexcept>

namespace ncl {

RatPoint DenPoint::to_rational() const {
  Rat rx(x, den), ry(y, den);
  rx.canonicalize();
  ry.canonicalize();
  return {rx, ry};
}

SquaredDistanceMatrix::SquaredDistanceMatrix(int n) : n_(n) {
  if (n < 2) throw std::domain_error("SquaredDistanceMatrix: need n >= 2");
  sq_.assign(static_cast<std::size_t>(n) * n, Int(0));
}

SquaredDistanceMatrix SquaredDistanceMatrix::from_distances(
    const std::vector<Int>& dist, int n) {
  SquaredDistanceMatrix D(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) D.sq_[i * n + j] = dist[i * n + j] * dist[i * n + j];
  return D;
}

void SquaredDistanceMatrix::set(int i, int j, const Int& v) {
  sq_[i * n_ + j] = v;
  sq_[j * n_ + i] = v;
}

TriangleCoords triangle_coords(const Int& a, const Int& b, const Int& c) {
  Int t1 = b * b - c * c + a * a;
  auto t2 = is_perfect_square(4 * a * a * b * b - t1 * t1);
  if (!t2 || *t2 == 0)
    throw std::domain_error("triangle_coords: triple is not Heronian");
  Int den = 2 * a;
  TriangleCoords tc;
  tc.t1 = t1;
  tc.t2 = *t2;
  tc.p1 = {Int(0), Int(0), den};
  tc.p2 = {2 * a * a, Int(0), den};
  tc.p3 = {t1, *t2, den};
  return tc;
}

std::array<DenPoint, 3> triangle_coords_rotated(const Int& a, const Int& b,
                                                const Int& c,
                                                const TriangleCoords& tc,
                                                int rotation) {
  if (rotation == 0) return {tc.p1, tc.p2, tc.p3};
  if (rotation == 1) {
    Int den = 2 * b;
    return {DenPoint{Int(0), Int(0), den}, DenPoint{2 * b * b, Int(0), den},
            DenPoint{2 * b * b - tc.t1, tc.t2, den}};
  }
  if (rotation == 2) {
    Int den = 2 * c;
    return {DenPoint{Int(0), Int(0), den}, DenPoint{2 * c * c, Int(0), den},
            DenPoint{2 * a * a - tc.t1, tc.t2, den}};
  }
  throw std::domain_error("triangle_coords_rotated: rotation must be 0..2");
}

std::vector<DenPoint> cluster_coords(const SquaredDistanceMatrix& D) {
  int n = D.size();
  auto d = is_perfect_square(D.at(0, 1));
  if (!d || *d == 0)
    throw std::domain_error("cluster_coords: d_{12} is not integral");
  Int den = 2 * *d;
  std::vector<DenPoint> pts(n);
  pts[0] = {Int(0), Int(0), den};
  pts[1] = {den * *d, Int(0), den};
  Int dsq = D.at(0, 1);
  for (int k = 2; k < n; ++k) {
    Int t1 = D.at(0, k) - D.at(1, k) + dsq;
    auto t2 = is_perfect_square(4 * D.at(0, k) * dsq - t1 * t1);
    if (!t2)
      throw std::domain_error("cluster_coords: placement root not integral");
    pts[k] = {t1, *t2, den};
    if (k >= 3) {
      // Resolve the y sign against the distance to the third point.
      auto sqd = [&](const DenPoint& p, const DenPoint& q) -> Int {
        Int dx = p.x - q.x, dy = p.y - q.y;
        return dx * dx + dy * dy;
      };
      Int want = D.at(2, k) * den * den;
      if (sqd(pts[k], pts[2]) != want) {
        pts[k].y = -pts[k].y;
        if (sqd(pts[k], pts[2]) != want)
          throw std::domain_error("cluster_coords: inconsistent distances");
      }
    }
  }
  return pts;
}

std::optional<Rat> rational_sqrt(const Rat& v) {
  if (sgn(v) < 0) return std::nullopt;
  auto num = is_perfect_square(Int(v.get_num()));
  if (!num) return std::nullopt;
  auto den = is_perfect_square(Int(v.get_den()));
  if (!den) return std::nullopt;
  Rat r(*num, *den);
  r.canonicalize();
  return r;
}

std::optional<Rat> rational_distance(const RatPoint& p, const RatPoint& q) {
  Rat dx = p.x - q.x;
  Rat dy = p.y - q.y;
  return rational_sqrt(dx * dx + dy * dy);
}

bool collinear(const RatPoint& p, const RatPoint& q, const RatPoint& r) {
  return (q.x - p.x) * (r.y - p.y) == (q.y - p.y) * (r.x - p.x);
}

bool concircular(const RatPoint& p1, const RatPoint& p2, const RatPoint& p3,
                 const RatPoint& p4) {
  // | x^2+y^2  x  y  1 | = 0 over the four points.
  const RatPoint* ps[4] = {&p1, &p2, &p3, &p4};
  Rat m[4][4];
  for (int i = 0; i < 4; ++i) {
    m[i][0] = ps[i]->x * ps[i]->x + ps[i]->y * ps[i]->y;
    m[i][1] = ps[i]->x;
    m[i][2] = ps[i]->y;
    m[i][3] = 1;
  }
  // Expand along the last column after eliminating it by row subtraction.
  for (int i = 1; i < 4; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] -= m[0][j];
  Rat det = m[1][0] * (m[2][1] * m[3][2] - m[2][2] * m[3][1]) -
            m[1][1] * (m[2][0] * m[3][2] - m[2][2] * m[3][0]) +
            m[1][2] * (m[2][0] * m[3][1] - m[2][1] * m[3][0]);
  return det == 0;
}

namespace {

// Fraction-free Bareiss determinant of an integer matrix.
Int int_determinant(std::vector<Int> m, int n) {
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k * n + k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i * n + k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Int(0);
      for (int j = 0; j < n; ++j) swap(m[k * n + j], m[swap_row * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        m[i * n + j] =
            (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
      }
    prev = m[k * n + k];
  }
  return sign > 0 ? m[(n - 1) * n + (n - 1)] : -m[(n - 1) * n + (n - 1)];
}

}  // namespace

Int cayley_menger_det(const SquaredDistanceMatrix& D,
                      const std::vector<int>& subset) {
  int r = static_cast<int>(subset.size());
  if (r < 2) throw std::domain_error("cayley_menger_det: subset too small");
  int n = r + 1;
  std::vector<Int> m(static_cast<std::size_t>(n) * n, Int(0));
  for (int j = 1; j < n; ++j) {
    m[j] = 1;
    m[j * n] = 1;
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      m[(i + 1) * n + (j + 1)] = D.at(subset[i], subset[j]);
  return int_determinant(std::move(m), n);
}

bool realizable_in_plane(const SquaredDistanceMatrix& D) {
  int n = D.size();
  std::vector<int> subset;
  // All subsets of size r: sign condition for r <= 3, zero for r >= 4.
  std::vector<int> stack;
  std::function<bool(int)> rec = [&](int start) -> bool {
    int r = static_cast<int>(stack.size());
    if (r >= 2) {
      Int cmd = cayley_menger_det(D, stack);
      if (r <= 3) {
        if ((r % 2 == 0 ? cmd : -cmd) < 0) return false;
      } else {
        if (cmd != 0) return false;
      }
    }
    for (int i = start; i < n; ++i) {
      stack.push_back(i);
      if (!rec(i + 1)) return false;
      stack.pop_back();
    }
    return true;
  };
  return rec(0);
}

std::vector<RatPoint> circle_invert(const std::vector<RatPoint>& points,
                                    int center_index) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw std::domain_error("circle_invert: coincident points");
  const RatPoint& c = points[center_index];
  std::vector<RatPoint> out;
  out.reserve(points.size() - 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(i) == center_index) continue;
    Rat x = points[i].x - c.x;
    Rat y = points[i].y - c.y;
    Rat norm = x * x + y * y;
    out.push_back({x / norm, y / norm});
  }
  return out;
}

}  // namespace ncl
