// Text interchange formats: triangle lists, cluster files and catalogs.
#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ncluster/cluster.hpp"

namespace ncl {

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Triangle list: one "a b c" per line (a >= b >= c), sorted by (a, b, c);
// '#' starts a comment.
void write_triangles(std::ostream& os, const std::vector<HeronTriangle>& ts);
std::vector<HeronTriangle> read_triangles(std::istream& is);
void write_triangles_file(const std::string& path,
                          const std::vector<HeronTriangle>& ts);
std::vector<HeronTriangle> read_triangles_file(const std::string& path);

// Cluster file: blank-line separated blocks. Each block starts with
// "n <point-count> diameter <d>" followed by either the n-1 upper-triangle
// distance rows or "coords <denominator>" plus n integer pairs.
void write_clusters(std::ostream& os, const std::vector<Cluster>& cs);
std::vector<Cluster> read_clusters(std::istream& is);
void write_clusters_file(const std::string& path,
                         const std::vector<Cluster>& cs);
std::vector<Cluster> read_clusters_file(const std::string& path);

// Deduplicated set of non-similar primitive clusters keyed by canonical form.
class Catalog {
 public:
  // Normalizes to the primitive form; returns true if the entry is new.
  bool insert(const Cluster& c);
  bool contains_key(const CanonicalKey& key) const;
  void merge(const Catalog& other);

  std::size_t size() const { return entries_.size(); }
  std::size_t count_size(int n) const;

  // Sorted by (n, diameter, canonical key).
  std::vector<Cluster> sorted_clusters() const;

 private:
  std::map<CanonicalKey, Cluster> entries_;
};

}  // namespace ncl
