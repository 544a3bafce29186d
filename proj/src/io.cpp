#include "ncluster/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ncl {

namespace {

// Next non-comment, non-empty line; false at end of stream.
bool next_data_line(std::istream& is, std::string& line) {
  while (std::getline(is, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' ||
                             line.back() == '\t'))
      line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

}  // namespace

void write_triangles(std::ostream& os, const std::vector<HeronTriangle>& ts) {
  os << "# Heronian triangles: a b c with a >= b >= c, sorted by (a, b, c)\n";
  for (const auto& t : ts)
    os << t.a.get_str() << ' ' << t.b.get_str() << ' ' << t.c.get_str() << '\n';
}

std::vector<HeronTriangle> read_triangles(std::istream& is) {
  std::vector<HeronTriangle> out;
  std::string line;
  while (next_data_line(is, line)) {
    std::istringstream ls(line);
    std::string a, b, c;
    if (!(ls >> a >> b >> c)) throw FormatError("triangle line: " + line);
    std::string extra;
    if (ls >> extra) throw FormatError("trailing tokens: " + line);
    try {
      out.emplace_back(Int(a), Int(b), Int(c));
    } catch (const std::invalid_argument&) {
      throw FormatError("bad integer in triangle line: " + line);
    }
  }
  return out;
}

void write_triangles_file(const std::string& path,
                          const std::vector<HeronTriangle>& ts) {
  std::ofstream os(path);
  if (!os) throw FormatError("cannot open for writing: " + path);
  write_triangles(os, ts);
}

std::vector<HeronTriangle> read_triangles_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw FormatError("cannot open: " + path);
  return read_triangles(is);
}

void write_clusters(std::ostream& os, const std::vector<Cluster>& cs) {
  os << "# clusters: \"n <points> diameter <d>\" then upper-triangle rows\n";
  for (const auto& c : cs) {
    os << "n " << c.n << " diameter " << diameter(c).get_str() << '\n';
    for (int i = 0; i < c.n - 1; ++i) {
      for (int j = i + 1; j < c.n; ++j)
        os << c.d(i, j).get_str() << (j + 1 < c.n ? " " : "");
      os << '\n';
    }
    os << '\n';
  }
}

std::vector<Cluster> read_clusters(std::istream& is) {
  std::vector<Cluster> out;
  std::string line;
  while (next_data_line(is, line)) {
    std::istringstream hs(line);
    std::string kw1, kw2, diam;
    int n = 0;
    if (!(hs >> kw1 >> n >> kw2 >> diam) || kw1 != "n" || kw2 != "diameter")
      throw FormatError("bad cluster header: " + line);
    if (n < 3) throw FormatError("cluster point count must be >= 3");
    if (!next_data_line(is, line)) throw FormatError("truncated cluster block");
    std::vector<Int> dist(static_cast<std::size_t>(n) * n, Int(0));
    if (line.rfind("coords", 0) == 0) {
      std::istringstream cs(line);
      std::string kw, den_s;
      if (!(cs >> kw >> den_s)) throw FormatError("bad coords line: " + line);
      Int den(den_s);
      std::vector<RatPoint> pts;
      for (int i = 0; i < n; ++i) {
        if (!next_data_line(is, line))
          throw FormatError("truncated coords block");
        std::istringstream ps(line);
        std::string xs, ys;
        if (!(ps >> xs >> ys)) throw FormatError("bad point line: " + line);
        Rat x(Int(xs), den), y(Int(ys), den);
        x.canonicalize();
        y.canonicalize();
        pts.push_back({x, y});
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          auto d = rational_distance(pts[i], pts[j]);
          if (!d || d->get_den() != 1)
            throw FormatError("coords block has a non-integral distance");
          dist[i * n + j] = dist[j * n + i] = Int(d->get_num());
        }
    } else {
      for (int i = 0; i < n - 1; ++i) {
        if (i > 0 && !next_data_line(is, line))
          throw FormatError("truncated cluster block");
        std::istringstream rs(line);
        std::string tok;
        for (int j = i + 1; j < n; ++j) {
          if (!(rs >> tok)) throw FormatError("short distance row: " + line);
          try {
            dist[i * n + j] = dist[j * n + i] = Int(tok);
          } catch (const std::invalid_argument&) {
            throw FormatError("bad integer in distance row: " + line);
          }
        }
        if (rs >> tok) throw FormatError("long distance row: " + line);
      }
    }
    try {
      out.emplace_back(n, std::move(dist));
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("invalid cluster matrix: ") + e.what());
    }
  }
  return out;
}

void write_clusters_file(const std::string& path,
                         const std::vector<Cluster>& cs) {
  std::ofstream os(path);
  if (!os) throw FormatError("cannot open for writing: " + path);
  write_clusters(os, cs);
}

std::vector<Cluster> read_clusters_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw FormatError("cannot open: " + path);
  return read_clusters(is);
}

bool Catalog::insert(const Cluster& c) {
  Cluster prim = c;
  if (!prim.primitive) {
    Int g(0);
    for (const auto& v : prim.dist) g = gcd(g, v);
    for (auto& v : prim.dist) v /= g;
    prim.primitive = true;
  }
  CanonicalKey key = canonical_form(prim);
  // Store the canonical representative so the catalog contents do not depend
  // on which congruent copy was inserted first.
  int n = prim.n;
  std::vector<Int> canon(static_cast<std::size_t>(n) * n, Int(0));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      canon[i * n + j] = key[k];
      canon[j * n + i] = key[k];
      ++k;
    }
  Cluster rep(n, std::move(canon));
  rep.primitive = true;
  auto [it, fresh] = entries_.emplace(std::move(key), std::move(rep));
  (void)it;
  return fresh;
}

bool Catalog::contains_key(const CanonicalKey& key) const {
  return entries_.count(key) > 0;
}

void Catalog::merge(const Catalog& other) {
  for (const auto& [k, v] : other.entries_) entries_.emplace(k, v);
}

std::size_t Catalog::count_size(int n) const {
  std::size_t cnt = 0;
  for (const auto& [k, v] : entries_)
    if (v.n == n) ++cnt;
  return cnt;
}

std::vector<Cluster> Catalog::sorted_clusters() const {
  std::vector<std::pair<const CanonicalKey*, const Cluster*>> items;
  for (const auto& [k, v] : entries_) items.emplace_back(&k, &v);
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second->n != b.second->n) return a.second->n < b.second->n;
    Int da = diameter(*a.second), db = diameter(*b.second);
    if (da != db) return da < db;
    return *a.first < *b.first;
  });
  std::vector<Cluster> out;
  out.reserve(items.size());
  for (const auto& [k, v] : items) out.push_back(*v);
  return out;
}

}  // namespace ncl
