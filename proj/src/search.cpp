#include "ncluster/search.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <set>
#include <thread>

namespace ncl {

void SearchStats::merge(const SearchStats& other) {
  for (const auto& [k, s] : other.levels) {
    LevelStats& t = levels[k];
    t.attempts += s.attempts;
    t.rejected_distance += s.rejected_distance;
    t.rejected_concircular += s.rejected_concircular;
    t.rejected_collinear += s.rejected_collinear;
    t.successful += s.successful;
    t.longest_list = std::max(t.longest_list, s.longest_list);
  }
}

void SearchStats::print(std::ostream& os) const {
  os << "level combinations distance% concircularity% collinearity% "
        "successful% intersectable\n";
  for (const auto& [k, s] : levels) {
    auto pct = [&](std::uint64_t v) {
      if (s.attempts == 0) return 0.0;
      return 100.0 * static_cast<double>(v) / static_cast<double>(s.attempts);
    };
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "%5d %12llu %9.2f %15.2f %13.2f %11.2f %13llu\n", k,
                  static_cast<unsigned long long>(s.attempts),
                  pct(s.rejected_distance), pct(s.rejected_concircular),
                  pct(s.rejected_collinear), pct(s.successful),
                  static_cast<unsigned long long>(s.longest_list));
    os << buf;
  }
}

std::vector<HeronTriangle> strip_isosceles(
    const std::vector<HeronTriangle>& L) {
  std::vector<HeronTriangle> out;
  out.reserve(L.size());
  for (const auto& t : L)
    if (!t.isosceles()) out.push_back(t);
  return out;
}

namespace {

using PartKey = std::vector<Int>;

void append_normalized(PartKey& key, std::vector<Rat> coeffs) {
  Int l(1);
  for (const auto& r : coeffs) l = lcm(l, Int(r.get_den()));
  std::vector<Int> ints;
  Int g(0);
  for (const auto& r : coeffs) {
    ints.push_back(Int(r.get_num()) * (l / Int(r.get_den())));
    g = gcd(g, ints.back());
  }
  if (g != 0)
    for (auto& v : ints) v /= g;
  for (const auto& v : ints)
    if (v != 0) {
      if (v < 0)
        for (auto& w : ints) w = -w;
      break;
    }
  for (auto& v : ints) key.push_back(std::move(v));
}

// Line through two distinct points as a normalized integer triple.
PartKey line_key(const RatPoint& p, const RatPoint& q) {
  Rat A = q.y - p.y;
  Rat B = p.x - q.x;
  Rat C = -(A * p.x + B * p.y);
  PartKey key{Int(0)};
  append_normalized(key, {A, B, C});
  return key;
}

// Circle through three non-collinear points: x^2+y^2 + Dx + Ey + F = 0.
PartKey circle_key(const RatPoint& p, const RatPoint& q, const RatPoint& r) {
  // Two-row linear system after subtracting the equations pairwise.
  Rat a1 = p.x - q.x, b1 = p.y - q.y;
  Rat c1 = (q.x * q.x + q.y * q.y) - (p.x * p.x + p.y * p.y);
  Rat a2 = p.x - r.x, b2 = p.y - r.y;
  Rat c2 = (r.x * r.x + r.y * r.y) - (p.x * p.x + p.y * p.y);
  Rat det = a1 * b2 - a2 * b1;
  Rat D = (c1 * b2 - c2 * b1) / det;
  Rat E = (a1 * c2 - a2 * c1) / det;
  Rat F = -(p.x * p.x + p.y * p.y + D * p.x + E * p.y);
  PartKey key{Int(1)};
  for (const Rat& v : {D, E, F}) {
    key.push_back(Int(v.get_num()));
    key.push_back(Int(v.get_den()));
  }
  return key;
}

struct Candidate {
  RatPoint p;
  std::array<Rat, 3> dist_to_base;
};

constexpr std::uint8_t kOk = 0;
constexpr std::uint8_t kRejDistance = 1;
constexpr std::uint8_t kRejConcircular = 2;
constexpr std::uint8_t kRejCollinear = 3;

struct BaseContext {
  std::array<RatPoint, 3> B;
  std::array<Rat, 3> base_side;  // d(B0,B1), d(B0,B2), d(B1,B2)
};

// Emits base + selected candidates into the catalog as a primitive cluster.
void emit_cluster(const BaseContext& ctx, const std::vector<Candidate>& cands,
                  const std::vector<int>& K,
                  const std::map<std::pair<int, int>, Rat>& pair_dist,
                  Catalog& cat) {
  int n = 3 + static_cast<int>(K.size());
  std::vector<Rat> dist(static_cast<std::size_t>(n) * n, Rat(0));
  auto set = [&](int i, int j, const Rat& v) {
    dist[i * n + j] = dist[j * n + i] = v;
  };
  set(0, 1, ctx.base_side[0]);
  set(0, 2, ctx.base_side[1]);
  set(1, 2, ctx.base_side[2]);
  for (std::size_t s = 0; s < K.size(); ++s) {
    const Candidate& c = cands[K[s]];
    for (int v = 0; v < 3; ++v) set(v, 3 + static_cast<int>(s), c.dist_to_base[v]);
    for (std::size_t t = 0; t < s; ++t)
      set(3 + static_cast<int>(t), 3 + static_cast<int>(s),
          pair_dist.at({K[t], K[s]}));
  }
  cat.insert(cluster_from_rational_distances(dist, n));
}

void extend_base(const std::vector<HeronTriangle>& L, std::size_t base_idx,
                 const ExtendOptions& opts, Catalog& cat, SearchStats& stats) {
  const HeronTriangle& base = L[base_idx];
  TriangleCoords tc = triangle_coords(base.a, base.b, base.c);
  BaseContext ctx;
  ctx.B = {tc.p1.to_rational(), tc.p2.to_rational(), tc.p3.to_rational()};
  ctx.base_side = {Rat(base.a), Rat(base.b), Rat(base.c)};

  static constexpr int kEdges[6][2] = {{0, 1}, {1, 0}, {0, 2},
                                       {2, 0}, {1, 2}, {2, 1}};
  // Edge lengths by unordered pair: (0,1)->a, (0,2)->b, (1,2)->c.
  auto edge_len = [&](int u, int v) -> const Rat& {
    int s = u + v;
    return ctx.base_side[s == 1 ? 0 : (s == 2 ? 1 : 2)];
  };

  LevelStats& lvl3 = stats.levels[3];
  std::vector<Candidate> cands;
  std::map<std::pair<Rat, Rat>, int> seen;

  for (std::size_t j = base_idx; j < L.size(); ++j) {
    const Int sides[3] = {L[j].a, L[j].b, L[j].c};
    // Per glued-side data, reused over edges and signs.
    Int t1g[3], t2g[3];
    for (int g = 0; g < 3; ++g) {
      const Int& sg = sides[g];
      const Int& s1 = sides[(g + 1) % 3];
      const Int& s2 = sides[(g + 2) % 3];
      t1g[g] = sg * sg + s1 * s1 - s2 * s2;
      auto root = is_perfect_square(4 * s1 * s1 * sg * sg - t1g[g] * t1g[g]);
      t2g[g] = *root;  // integral: (sg, s1, s2) is Heronian
    }
    for (const auto& e : kEdges) {
      int u = e[0], v = e[1], w = 3 - u - v;
      const Rat& elen = edge_len(u, v);
      Rat dirx = ctx.B[v].x - ctx.B[u].x;
      Rat diry = ctx.B[v].y - ctx.B[u].y;
      for (int g = 0; g < 3; ++g) {
        const Int& sg = sides[g];
        const Int& s1 = sides[(g + 1) % 3];
        const Int& s2 = sides[(g + 2) % 3];
        Rat along(t1g[g], 2 * sg * sg);
        Rat across(t2g[g], 2 * sg * sg);
        along.canonicalize();
        across.canonicalize();
        Rat px0 = ctx.B[u].x + along * dirx;
        Rat py0 = ctx.B[u].y + along * diry;
        Rat ox = -across * diry;
        Rat oy = across * dirx;
        Rat du = elen * Rat(s1) / Rat(sg);
        Rat dv = elen * Rat(s2) / Rat(sg);
        for (int sign = 0; sign < 2; ++sign) {
          ++lvl3.attempts;
          RatPoint p{sign == 0 ? Rat(px0 + ox) : Rat(px0 - ox),
                     sign == 0 ? Rat(py0 + oy) : Rat(py0 - oy)};
          auto dw = rational_distance(p, ctx.B[w]);
          if (!dw) {
            ++lvl3.rejected_distance;
            continue;
          }
          if (concircular(ctx.B[0], ctx.B[1], ctx.B[2], p)) {
            ++lvl3.rejected_concircular;
            continue;
          }
          if (collinear(p, ctx.B[0], ctx.B[1]) ||
              collinear(p, ctx.B[0], ctx.B[2]) ||
              collinear(p, ctx.B[1], ctx.B[2])) {
            ++lvl3.rejected_collinear;
            continue;
          }
          ++lvl3.successful;
          if (seen.emplace(std::make_pair(p.x, p.y),
                           static_cast<int>(cands.size()))
                  .second) {
            Candidate c;
            c.p = p;
            c.dist_to_base[u] = du;
            c.dist_to_base[v] = dv;
            c.dist_to_base[w] = *dw;
            cands.push_back(std::move(c));
          }
        }
      }
    }
  }

  int m = static_cast<int>(cands.size());
  lvl3.longest_list = std::max<std::uint64_t>(lvl3.longest_list, m);
  if (opts.min_emit <= 4)
    for (int x = 0; x < m; ++x)
      emit_cluster(ctx, cands, {x}, {}, cat);
  if (m < 2) return;

  // Pair compatibility with rejection reasons; level 4.
  std::vector<std::uint8_t> reason(static_cast<std::size_t>(m) * m, kOk);
  if (opts.partition) {
    std::map<PartKey, std::vector<int>> groups;
    for (int x = 0; x < m; ++x) {
      for (int u = 0; u < 3; ++u)
        groups[line_key(cands[x].p, ctx.B[u])].push_back(x);
      for (int u = 0; u < 3; ++u)
        for (int v = u + 1; v < 3; ++v)
          groups[circle_key(cands[x].p, ctx.B[u], ctx.B[v])].push_back(x);
    }
    for (const auto& [key, members] : groups) {
      if (members.size() < 2) continue;
      std::uint8_t r = (key[0] == 0) ? kRejCollinear : kRejConcircular;
      for (std::size_t s = 0; s < members.size(); ++s)
        for (std::size_t t = s + 1; t < members.size(); ++t) {
          reason[members[s] * m + members[t]] = r;
          reason[members[t] * m + members[s]] = r;
        }
    }
  }

  LevelStats& lvl4 = stats.levels[4];
  std::map<std::pair<int, int>, Rat> pair_dist;
  std::vector<std::uint64_t> degree(m, 0);
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      ++lvl4.attempts;
      std::uint8_t& r = reason[x * m + y];
      if (r != kOk) {  // partition pre-rejection
        (r == kRejCollinear ? lvl4.rejected_collinear
                            : lvl4.rejected_concircular)++;
        continue;
      }
      auto d = rational_distance(cands[x].p, cands[y].p);
      if (!d) {
        r = kRejDistance;
        reason[y * m + x] = r;
        ++lvl4.rejected_distance;
        continue;
      }
      bool circ = false;
      for (int u = 0; u < 3 && !circ; ++u)
        for (int v = u + 1; v < 3; ++v)
          if (concircular(cands[x].p, cands[y].p, ctx.B[u], ctx.B[v])) {
            circ = true;
            break;
          }
      if (circ) {
        r = kRejConcircular;
        reason[y * m + x] = r;
        ++lvl4.rejected_concircular;
        continue;
      }
      bool col = false;
      for (int u = 0; u < 3; ++u)
        if (collinear(cands[x].p, cands[y].p, ctx.B[u])) {
          col = true;
          break;
        }
      if (col) {
        r = kRejCollinear;
        reason[y * m + x] = r;
        ++lvl4.rejected_collinear;
        continue;
      }
      ++lvl4.successful;
      ++degree[x];
      ++degree[y];
      pair_dist.emplace(std::make_pair(x, y), *d);
      if (opts.min_emit <= 5) emit_cluster(ctx, cands, {x, y}, pair_dist, cat);
    }
  }
  for (int x = 0; x < m; ++x)
    lvl4.longest_list = std::max(lvl4.longest_list, degree[x]);

  // Incremental k-set growth; every subset of an accepted set was accepted.
  std::vector<int> K;
  std::function<void()> grow = [&]() {
    int t = static_cast<int>(K.size());
    int level = 3 + t;
    std::uint64_t children = 0;
    for (int q = K.back() + 1; q < m; ++q) {
      if (t >= 2) ++stats.levels[level].attempts;
      std::uint8_t fail = kOk;
      for (int k : K)
        if (reason[k * m + q] != kOk) {
          fail = reason[k * m + q];
          break;
        }
      if (fail == kOk) {
        // Fresh concircularity checks involving q and two or three set
        // members (pairs with base vertices were settled at level 4).
        for (std::size_t s = 0; s < K.size() && fail == kOk; ++s)
          for (std::size_t r2 = s + 1; r2 < K.size() && fail == kOk; ++r2) {
            for (int u = 0; u < 3; ++u)
              if (concircular(cands[q].p, cands[K[s]].p, cands[K[r2]].p,
                              ctx.B[u])) {
                fail = kRejConcircular;
                break;
              }
            for (std::size_t r3 = r2 + 1;
                 r3 < K.size() && fail == kOk; ++r3)
              if (concircular(cands[q].p, cands[K[s]].p, cands[K[r2]].p,
                              cands[K[r3]].p))
                fail = kRejConcircular;
          }
        if (fail == kOk)
          for (std::size_t s = 0; s < K.size() && fail == kOk; ++s)
            for (std::size_t r2 = s + 1; r2 < K.size(); ++r2)
              if (collinear(cands[q].p, cands[K[s]].p, cands[K[r2]].p)) {
                fail = kRejCollinear;
                break;
              }
      }
      if (fail != kOk) {
        if (t >= 2) {
          LevelStats& ls = stats.levels[level];
          if (fail == kRejDistance) ++ls.rejected_distance;
          else if (fail == kRejConcircular) ++ls.rejected_concircular;
          else ++ls.rejected_collinear;
        }
        continue;
      }
      if (t >= 2) ++stats.levels[level].successful;
      ++children;
      K.push_back(q);
      if (3 + static_cast<int>(K.size()) >= opts.min_emit)
        emit_cluster(ctx, cands, K, pair_dist, cat);
      grow();
      K.pop_back();
    }
    if (t >= 2) {
      LevelStats& ls = stats.levels[level];
      ls.longest_list = std::max(ls.longest_list, children);
    }
  };
  for (int x = 0; x < m; ++x) {
    if (degree[x] == 0) continue;
    K.assign(1, x);
    grow();
  }
}

}  // namespace

std::vector<std::vector<int>> partition_fourth_points(
    const std::array<RatPoint, 3>& base, const std::vector<RatPoint>& P) {
  std::map<PartKey, std::vector<int>> groups;
  for (int x = 0; x < static_cast<int>(P.size()); ++x) {
    for (int u = 0; u < 3; ++u) groups[line_key(P[x], base[u])].push_back(x);
    for (int u = 0; u < 3; ++u)
      for (int v = u + 1; v < 3; ++v)
        groups[circle_key(P[x], base[u], base[v])].push_back(x);
  }
  std::vector<std::vector<int>> out;
  for (auto& [key, members] : groups)
    if (members.size() >= 2) out.push_back(std::move(members));
  return out;
}

SearchResult triangle_extension(const std::vector<HeronTriangle>& L,
                                const ExtendOptions& opts) {
  std::vector<HeronTriangle> input =
      opts.strip_isosceles ? strip_isosceles(L) : L;
  int threads = std::max(1, opts.threads);
  std::vector<Catalog> cats(threads);
  std::vector<SearchStats> stats(threads);
  auto work = [&](int w) {
    for (std::size_t i = w; i < input.size(); i += threads)
      extend_base(input, i, opts, cats[w], stats[w]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  SearchResult res;
  for (int w = 0; w < threads; ++w) {
    res.catalog.merge(cats[w]);
    res.stats.merge(stats[w]);
  }
  return res;
}

namespace {

// Places points from a rational squared-distance matrix: first point at the
// origin, second on the positive x-axis, later y-signs resolved against the
// third point. Throws if some coordinate would be irrational.
std::vector<RatPoint> place_points(const std::vector<Rat>& sq, int n) {
  auto d01 = rational_sqrt(sq[0 * n + 1]);
  if (!d01 || *d01 == 0)
    throw std::domain_error("place_points: bad first edge");
  std::vector<RatPoint> pts(n);
  pts[0] = {Rat(0), Rat(0)};
  pts[1] = {*d01, Rat(0)};
  for (int k = 2; k < n; ++k) {
    Rat x = (sq[0 * n + k] - sq[1 * n + k] + sq[0 * n + 1]) / (2 * *d01);
    auto y = rational_sqrt(sq[0 * n + k] - x * x);
    if (!y) throw std::domain_error("place_points: irrational coordinate");
    pts[k] = {x, *y};
    if (k >= 3) {
      Rat dx = pts[k].x - pts[2].x, dy = pts[k].y - pts[2].y;
      if (dx * dx + dy * dy != sq[2 * n + k]) {
        pts[k].y = -pts[k].y;
        dy = pts[k].y - pts[2].y;
        if (dx * dx + dy * dy != sq[2 * n + k])
          throw std::domain_error("place_points: inconsistent distances");
      }
    }
  }
  return pts;
}

// Grows cluster subsets of an arbitrary rational point set; emits every
// subset of size >= min_emit satisfying the (relaxed) cluster conditions.
void enumerate_point_clusters(const std::vector<RatPoint>& pts, int min_emit,
                              Catalog& cat, SearchStats& stats) {
  int m = static_cast<int>(pts.size());
  if (m == 0) return;
  std::vector<std::uint8_t> pair_ok(static_cast<std::size_t>(m) * m, 1);
  std::map<std::pair<int, int>, Rat> pair_dist;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto d = rational_distance(pts[i], pts[j]);
      if (d && *d != 0) {
        pair_dist.emplace(std::make_pair(i, j), *d);
      } else {
        pair_ok[i * m + j] = pair_ok[j * m + i] = 0;
      }
    }
  std::vector<int> K;
  std::function<void()> grow = [&]() {
    int t = static_cast<int>(K.size());
    std::uint64_t children = 0;
    for (int q = (K.empty() ? 0 : K.back() + 1); q < m; ++q) {
      bool count = t >= 3;
      if (count) ++stats.levels[t].attempts;
      std::uint8_t fail = kOk;
      for (int k : K)
        if (!pair_ok[k * m + q]) {
          fail = kRejDistance;
          break;
        }
      if (fail == kOk)
        for (std::size_t s = 0; s < K.size() && fail == kOk; ++s)
          for (std::size_t r2 = s + 1; r2 < K.size() && fail == kOk; ++r2)
            for (std::size_t r3 = r2 + 1; r3 < K.size(); ++r3)
              if (concircular(pts[q], pts[K[s]], pts[K[r2]], pts[K[r3]])) {
                fail = kRejConcircular;
                break;
              }
      if (fail == kOk)
        for (std::size_t s = 0; s < K.size() && fail == kOk; ++s)
          for (std::size_t r2 = s + 1; r2 < K.size(); ++r2)
            if (collinear(pts[q], pts[K[s]], pts[K[r2]])) {
              fail = kRejCollinear;
              break;
            }
      if (fail != kOk) {
        if (count) {
          LevelStats& ls = stats.levels[t];
          if (fail == kRejDistance) ++ls.rejected_distance;
          else if (fail == kRejConcircular) ++ls.rejected_concircular;
          else ++ls.rejected_collinear;
        }
        continue;
      }
      if (count) ++stats.levels[t].successful;
      ++children;
      K.push_back(q);
      if (static_cast<int>(K.size()) >= min_emit && K.size() >= 3) {
        int n = static_cast<int>(K.size());
        std::vector<Rat> dist(static_cast<std::size_t>(n) * n, Rat(0));
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            dist[i * n + j] = dist[j * n + i] =
                pair_dist.at({std::min(K[i], K[j]), std::max(K[i], K[j])});
        cat.insert(cluster_from_rational_distances(dist, n));
      }
      grow();
      K.pop_back();
    }
    if (t >= 3) {
      LevelStats& ls = stats.levels[t];
      ls.longest_list = std::max(ls.longest_list, children);
    }
  };
  grow();
}

std::vector<int> largest_subcluster(const Cluster& l, int c) {
  // Subset of size c with maximal internal diameter; ties broken by the
  // lexicographically smallest index tuple.
  std::vector<int> best;
  Int best_diam(-1);
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == c) {
      Int diam(0);
      for (std::size_t i = 0; i < cur.size(); ++i)
        for (std::size_t j = i + 1; j < cur.size(); ++j)
          diam = std::max(diam, l.d(cur[i], cur[j]));
      if (diam > best_diam) {
        best_diam = diam;
        best = cur;
      }
      return;
    }
    for (int i = start; i < l.n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return best;
}

Int subset_diameter(const Cluster& l, const std::vector<int>& idx) {
  Int diam(0);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      diam = std::max(diam, l.d(idx[i], idx[j]));
  return diam;
}

// Scaled squared-distance matrix of the cluster with the given point order.
std::vector<Rat> ordered_scaled_squares(const Cluster& l,
                                        const std::vector<int>& order,
                                        const Rat& f) {
  int n = l.n;
  Rat f2 = f * f;
  std::vector<Rat> sq(static_cast<std::size_t>(n) * n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Rat d(l.d(order[i], order[j]));
      sq[i * n + j] = f2 * d * d;
    }
  return sq;
}

}  // namespace

SearchResult combine_lists(const std::vector<Cluster>& L1,
                           const std::vector<Cluster>& L2,
                           const CombineConfig& cfg) {
  if (cfg.c < 2) throw std::invalid_argument("combine_lists: need c >= 2");
  int min_emit = cfg.min_output > 0 ? cfg.min_output : std::max(cfg.n1, cfg.n2);
  SearchResult res;
  for (const Cluster& l1 : L1) {
    if (l1.n != cfg.n1 || cfg.c >= l1.n) continue;
    std::vector<std::vector<int>> c1_choices;
    if (cfg.all_subclusters) {
      // All c-subsets, deduplicated by their sorted distance multiset.
      std::set<std::vector<Int>> seen;
      std::vector<int> cur;
      std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == cfg.c) {
          std::vector<Int> sig;
          for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j)
              sig.push_back(l1.d(cur[i], cur[j]));
          std::sort(sig.begin(), sig.end());
          if (seen.insert(sig).second) c1_choices.push_back(cur);
          return;
        }
        for (int i = start; i < l1.n; ++i) {
          cur.push_back(i);
          rec(i + 1);
          cur.pop_back();
        }
      };
      rec(0);
    } else {
      c1_choices.push_back(largest_subcluster(l1, cfg.c));
    }
    for (const auto& C1 : c1_choices) {
      Int diam1 = subset_diameter(l1, C1);
      // Sorted scaled pretest signature of C1, reused across l2.
      for (const Cluster& l2 : L2) {
        if (l2.n != cfg.n2 || cfg.c > l2.n) continue;
        // All ordered c-tuples of l2 whose scaled distances match C1.
        std::vector<int> tup(cfg.c);
        std::vector<bool> used(l2.n, false);
        std::function<void(int)> match = [&](int pos) {
          if (pos == cfg.c) {
            Int diam2 = subset_diameter(l2, tup);
            Int g = gcd(diam1, diam2);
            Rat f1(diam2, g), f2(diam1, g);
            f1.canonicalize();
            f2.canonicalize();
            for (int i = 0; i < cfg.c; ++i)
              for (int j = i + 1; j < cfg.c; ++j)
                if (f1 * Rat(l1.d(C1[i], C1[j])) != f2 * Rat(l2.d(tup[i], tup[j])))
                  return;
            // Merge coordinates: anchors first, then the remaining points.
            std::vector<int> ord1 = C1, ord2 = tup;
            for (int i = 0; i < l1.n; ++i)
              if (std::find(C1.begin(), C1.end(), i) == C1.end())
                ord1.push_back(i);
            for (int i = 0; i < l2.n; ++i)
              if (std::find(tup.begin(), tup.end(), i) == tup.end())
                ord2.push_back(i);
            std::vector<RatPoint> pts1, pts2;
            try {
              pts1 = place_points(ordered_scaled_squares(l1, ord1, f1), l1.n);
              pts2 = place_points(ordered_scaled_squares(l2, ord2, f2), l2.n);
            } catch (const std::domain_error&) {
              return;  // characteristic mismatch between the two lists
            }
            int joins = (cfg.c == 2) ? 2 : 1;
            for (int join = 0; join < joins; ++join) {
              std::vector<RatPoint> merged = pts1;
              std::set<RatPoint> have(pts1.begin(), pts1.end());
              for (int k = cfg.c; k < l2.n; ++k) {
                RatPoint p = pts2[k];
                if (join == 1) p.y = -p.y;
                if (have.insert(p).second) merged.push_back(p);
              }
              enumerate_point_clusters(merged, min_emit, res.catalog,
                                       res.stats);
            }
            return;
          }
          for (int i = 0; i < l2.n; ++i) {
            if (used[i]) continue;
            used[i] = true;
            tup[pos] = i;
            match(pos + 1);
            used[i] = false;
          }
        };
        match(0);
      }
    }
  }
  return res;
}

namespace {

// Ordered (dist-to-first, dist-to-second) apex data for every way of
// gluing a triangle onto an edge of the given length.
struct GlueIndex {
  std::map<Int, std::vector<std::pair<Int, Int>>> by_len;

  void add(const std::array<Int, 3>& sides) {
    for (int g = 0; g < 3; ++g) {
      const Int& s = sides[g];
      const Int& s1 = sides[(g + 1) % 3];
      const Int& s2 = sides[(g + 2) % 3];
      by_len[s].emplace_back(s1, s2);
      by_len[s].emplace_back(s2, s1);
    }
  }
  void finalize() {
    for (auto& [k, v] : by_len) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }
};

bool collinear_int(const DenPoint& p, const DenPoint& q, const DenPoint& r) {
  return (q.x - p.x) * (r.y - p.y) == (q.y - p.y) * (r.x - p.x);
}

bool concircular_int(const DenPoint& a, const DenPoint& b, const DenPoint& c,
                     const DenPoint& d) {
  const DenPoint* ps[4] = {&a, &b, &c, &d};
  Int m[4][4];
  for (int i = 0; i < 4; ++i) {
    m[i][0] = ps[i]->x * ps[i]->x + ps[i]->y * ps[i]->y;
    m[i][1] = ps[i]->x;
    m[i][2] = ps[i]->y;
    m[i][3] = 1;
  }
  for (int i = 1; i < 4; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] -= m[0][j];
  Int det = m[1][0] * (m[2][1] * m[3][2] - m[2][2] * m[3][1]) -
            m[1][1] * (m[2][0] * m[3][2] - m[2][2] * m[3][0]) +
            m[1][2] * (m[2][0] * m[3][1] - m[2][1] * m[3][0]);
  return det == 0;
}

}  // namespace

Catalog exhaustive_clusters(std::uint32_t max_diameter, int n_target,
                            std::size_t level_object_cap) {
  if (n_target < 3)
    throw std::invalid_argument("exhaustive_clusters: n_target >= 3");
  Int D(max_diameter);
  auto prim = generate_primitive(max_diameter);
  std::vector<std::array<Int, 3>> tris;
  for (const auto& t : prim)
    for (Int lam(1); lam * t.a <= D; ++lam)
      tris.push_back({lam * t.a, lam * t.b, lam * t.c});
  std::sort(tris.begin(), tris.end());

  GlueIndex glue;
  for (const auto& t : tris) glue.add(t);
  glue.finalize();

  Catalog result;
  std::vector<Cluster> level;
  for (const auto& t : tris) {
    std::vector<Int> m(9, Int(0));
    m[0 * 3 + 1] = m[1 * 3 + 0] = t[0];
    m[0 * 3 + 2] = m[2 * 3 + 0] = t[1];
    m[1 * 3 + 2] = m[2 * 3 + 1] = t[2];
    level.emplace_back(3, std::move(m));
  }
  for (const auto& c : level) result.insert(c);

  for (int k = 3; k < n_target; ++k) {
    std::vector<Cluster> next;
    std::set<CanonicalKey> seen;  // congruence classes at true scale
    for (const Cluster& C : level) {
      std::vector<DenPoint> pts = cluster_coords(C.squared());
      const Int& den = pts[0].den;
      Int d01 = C.d(0, 1);
      auto it = glue.by_len.find(d01);
      if (it == glue.by_len.end()) continue;
      for (const auto& [s1, s2] : it->second) {
        Int t1 = d01 * d01 + s1 * s1 - s2 * s2;
        auto t2 = is_perfect_square(4 * s1 * s1 * d01 * d01 - t1 * t1);
        for (int sign = 0; sign < 2; ++sign) {
          DenPoint p{t1, sign == 0 ? *t2 : -*t2, den};
          bool ok = true;
          for (const auto& q : pts)
            if (q.x == p.x && q.y == p.y) {
              ok = false;
              break;
            }
          if (!ok) continue;
          std::vector<Int> new_dist(C.n + 1);
          new_dist[0] = s1;
          new_dist[1] = s2;
          for (int i = 2; i < C.n && ok; ++i) {
            Int dx = p.x - pts[i].x, dy = p.y - pts[i].y;
            auto r = is_perfect_square(dx * dx + dy * dy);
            if (!r || *r % den != 0) {
              ok = false;
              break;
            }
            new_dist[i] = *r / den;
            if (new_dist[i] > D) ok = false;
          }
          if (!ok) continue;
          for (int i = 0; i < C.n && ok; ++i)
            for (int j = i + 1; j < C.n; ++j)
              if (collinear_int(p, pts[i], pts[j])) {
                ok = false;
                break;
              }
          if (!ok) continue;
          for (int i = 0; i < C.n && ok; ++i)
            for (int j = i + 1; j < C.n && ok; ++j)
              for (int l = j + 1; l < C.n; ++l)
                if (concircular_int(p, pts[i], pts[j], pts[l])) {
                  ok = false;
                  break;
                }
          if (!ok) continue;
          int n = C.n + 1;
          std::vector<Int> mat(static_cast<std::size_t>(n) * n, Int(0));
          for (int i = 0; i < C.n; ++i)
            for (int j = 0; j < C.n; ++j) mat[i * n + j] = C.d(i, j);
          for (int i = 0; i < C.n; ++i)
            mat[i * n + C.n] = mat[C.n * n + i] = new_dist[i];
          Cluster nc(n, std::move(mat));
          CanonicalKey key = canonical_form(nc);
          if (seen.insert(key).second) {
            next.push_back(std::move(nc));
            if (next.size() > level_object_cap)
              throw PartialResultError(
                  "exhaustive_clusters: level object cap exceeded", result);
          }
        }
      }
    }
    level = std::move(next);
    for (const auto& c : level) result.insert(c);
  }
  return result;
}

std::pair<Catalog, IterationTrace> iterate_extension(
    const std::vector<Cluster>& seeds, const ExtendOptions& opts,
    int max_rounds) {
  IterationTrace trace;
  std::set<HeronTriangle> tris;
  for (const auto& s : seeds)
    for (const auto& t : sub_triangles(s)) tris.insert(t);
  trace.triangle_counts.push_back(tris.size());
  Catalog cat;
  while (!tris.empty() && trace.rounds < max_rounds) {
    std::vector<HeronTriangle> input(tris.begin(), tris.end());
    SearchResult res = triangle_extension(input, opts);
    ++trace.rounds;
    cat = std::move(res.catalog);
    std::set<HeronTriangle> found;
    for (const auto& c : cat.sorted_clusters())
      for (const auto& t : sub_triangles(c)) found.insert(t);
    trace.triangle_counts.push_back(found.size());
    if (found == tris) break;
    tris = std::move(found);
  }
  return {std::move(cat), trace};
}

}  // namespace ncl
