#include "ncluster/cluster.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ncl {

Cluster::Cluster(int n_, std::vector<Int> dist_) : n(n_), dist(std::move(dist_)) {
  if (n < 3 || dist.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("Cluster: bad matrix shape");
  Int g(0);
  for (int i = 0; i < n; ++i) {
    if (dist[i * n + i] != 0)
      throw std::invalid_argument("Cluster: nonzero diagonal");
    for (int j = i + 1; j < n; ++j) {
      if (dist[i * n + j] != dist[j * n + i])
        throw std::invalid_argument("Cluster: matrix not symmetric");
      if (dist[i * n + j] <= 0)
        throw std::invalid_argument("Cluster: nonpositive distance");
      g = gcd(g, dist[i * n + j]);
    }
  }
  primitive = (g == 1);
}

std::vector<DenPoint> Cluster::coords() const {
  return cluster_coords(squared());
}

std::vector<RatPoint> Cluster::rational_coords() const {
  auto dp = coords();
  std::vector<RatPoint> out;
  out.reserve(dp.size());
  for (const auto& p : dp) out.push_back(p.to_rational());
  return out;
}

std::pair<std::vector<Int>, Rat> normalize_primitive(
    const std::vector<Rat>& dist, int n) {
  Int l(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      l = lcm(l, Int(dist[i * n + j].get_den()));
  std::vector<Int> out(static_cast<std::size_t>(n) * n, Int(0));
  Int g(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rat& r = dist[i * n + j];
      out[i * n + j] = Int(r.get_num()) * (l / Int(r.get_den()));
      g = gcd(g, out[i * n + j]);
    }
  if (g == 0) throw std::domain_error("normalize_primitive: empty matrix");
  for (auto& v : out) v /= g;
  Rat scale(g, l);
  scale.canonicalize();
  return {std::move(out), scale};
}

Cluster cluster_from_rational_distances(const std::vector<Rat>& dist, int n) {
  auto [m, scale] = normalize_primitive(dist, n);
  (void)scale;
  return Cluster(n, std::move(m));
}

Cluster cluster_from_points(const std::vector<RatPoint>& pts) {
  int n = static_cast<int>(pts.size());
  std::vector<Rat> dist(static_cast<std::size_t>(n) * n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto d = rational_distance(pts[i], pts[j]);
      if (!d)
        throw std::domain_error("cluster_from_points: irrational distance");
      dist[i * n + j] = dist[j * n + i] = *d;
    }
  return cluster_from_rational_distances(dist, n);
}

Int diameter(const Cluster& c) {
  Int m(0);
  for (const auto& v : c.dist) m = std::max(m, v);
  return m;
}

CanonicalKey canonical_form(const Cluster& c) {
  int n = c.n;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalKey best;
  CanonicalKey cur;
  cur.reserve(n * (n - 1) / 2);
  do {
    cur.clear();
    // Upper-right triangle, columns appended.
    bool worse = false;
    for (int j = 1; j < n && !worse; ++j)
      for (int i = 0; i < j; ++i) {
        cur.push_back(c.d(perm[i], perm[j]));
        std::size_t k = cur.size() - 1;
        if (!best.empty()) {
          int cc = cmp(cur[k], best[k]);
          if (cc < 0) {
            worse = true;
            break;
          }
          if (cc > 0) {
            // Strictly better so far; finish without further compares.
            for (int j2 = j; j2 < n; ++j2)
              for (int i2 = (j2 == j ? i + 1 : 0); i2 < j2; ++i2)
                cur.push_back(c.d(perm[i2], perm[j2]));
            best = cur;
            worse = true;  // done with this permutation
            break;
          }
        }
      }
    if (best.empty()) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

std::vector<Int> sorted_distances(const Cluster& c) {
  std::vector<Int> v;
  for (int i = 0; i < c.n; ++i)
    for (int j = i + 1; j < c.n; ++j) v.push_back(c.d(i, j));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

bool is_similar(const Cluster& c1, const Cluster& c2) {
  if (c1.n != c2.n) return false;
  Int diam1 = diameter(c1), diam2 = diameter(c2);
  Int g = gcd(diam1, diam2);
  Int f1 = diam2 / g, f2 = diam1 / g;
  auto s1 = sorted_distances(c1);
  auto s2 = sorted_distances(c2);
  for (auto& v : s1) v *= f1;
  for (auto& v : s2) v *= f2;
  if (s1 != s2) return false;
  Cluster a = c1, b = c2;
  for (auto& v : a.dist) v *= f1;
  for (auto& v : b.dist) v *= f2;
  return canonical_form(a) == canonical_form(b);
}

VerifyReport verify_cluster(const Cluster& c) {
  VerifyReport rep;
  rep.distances_integral = true;  // Cluster stores integers by construction
  int n = c.n;
  SquaredDistanceMatrix D = c.squared();
  rep.realizable = realizable_in_plane(D);

  rep.no_collinear_triple = true;
  for (int i = 0; i < n && rep.no_collinear_triple; ++i)
    for (int j = i + 1; j < n && rep.no_collinear_triple; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Int &x = c.d(i, j), &y = c.d(i, k), &z = c.d(j, k);
        if (x + y == z || x + z == y || y + z == x) {
          rep.no_collinear_triple = false;
          break;
        }
      }

  rep.no_concircular_quadruple = true;
  for (int i = 0; i < n && rep.no_concircular_quadruple; ++i)
    for (int j = i + 1; j < n && rep.no_concircular_quadruple; ++j)
      for (int k = j + 1; k < n && rep.no_concircular_quadruple; ++k)
        for (int l = k + 1; l < n; ++l) {
          // Ptolemy equality for the convex ordering: the largest of the
          // three pairings equals the sum of the other two.
          Int e1 = c.d(i, j) * c.d(k, l);
          Int e2 = c.d(i, k) * c.d(j, l);
          Int e3 = c.d(i, l) * c.d(j, k);
          Int mx = std::max(e1, std::max(e2, e3));
          if (2 * mx == e1 + e2 + e3) {
            rep.no_concircular_quadruple = false;
            break;
          }
        }

  rep.characteristic_one = true;
  for (int i = 0; i < n && rep.characteristic_one; ++i)
    for (int j = i + 1; j < n && rep.characteristic_one; ++j)
      for (int k = j + 1; k < n; ++k) {
        Int r = radicand(c.d(i, j), c.d(i, k), c.d(j, k));
        if (r <= 0 || !is_perfect_square(r)) {
          rep.characteristic_one = false;
          break;
        }
      }
  return rep;
}

VerifyReport verify_cluster_points(const std::vector<RatPoint>& pts) {
  int n = static_cast<int>(pts.size());
  std::vector<Rat> dist(static_cast<std::size_t>(n) * n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto d = rational_distance(pts[i], pts[j]);
      if (!d) {
        VerifyReport rep;
        rep.distances_integral = false;
        return rep;
      }
      dist[i * n + j] = dist[j * n + i] = *d;
    }
  return verify_cluster(cluster_from_rational_distances(dist, n));
}

std::vector<HeronTriangle> sub_triangles(const Cluster& c) {
  std::vector<HeronTriangle> out;
  for (int i = 0; i < c.n; ++i)
    for (int j = i + 1; j < c.n; ++j)
      for (int k = j + 1; k < c.n; ++k) {
        Int a = c.d(i, j), b = c.d(i, k), d = c.d(j, k);
        Int g = gcd(gcd(a, b), d);
        out.emplace_back(a / g, b / g, d / g);
      }
  return out;
}

std::vector<std::pair<HeronTriangle, int>> sub_triangles_with_multiplicity(
    const Cluster& c) {
  std::map<HeronTriangle, int> counts;
  for (const auto& t : sub_triangles(c)) ++counts[t];
  return {counts.begin(), counts.end()};
}

}  // namespace ncl
