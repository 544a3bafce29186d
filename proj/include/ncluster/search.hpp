// Cluster construction: exhaustive orderly generation up to a diameter,
// list combination with rescaling, and triangle extension, plus the
// partitioning/stripping/iteration speedups and per-level statistics.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>

#include "ncluster/io.hpp"

namespace ncl {

struct LevelStats {
  std::uint64_t attempts = 0;
  std::uint64_t rejected_distance = 0;
  std::uint64_t rejected_concircular = 0;
  std::uint64_t rejected_collinear = 0;
  std::uint64_t successful = 0;
  std::uint64_t longest_list = 0;
};

// Per-level counters: level k accounts for attempts to build a (k+1)-point
// object from two k-point objects sharing k-1 points.
struct SearchStats {
  std::map<int, LevelStats> levels;

  void merge(const SearchStats& other);
  void print(std::ostream& os) const;
};

struct SearchResult {
  Catalog catalog;
  SearchStats stats;
};

struct ExtendOptions {
  bool strip_isosceles = false;
  bool partition = false;
  int threads = 1;
  int min_emit = 6;  // smallest cluster size stored in the catalog
};

// Algorithm "triangle extensions": for each base triangle collect all
// fourth points from edge-joins with later triangles, then grow point sets
// incrementally. L must be sorted and deduplicated.
SearchResult triangle_extension(const std::vector<HeronTriangle>& L,
                                const ExtendOptions& opts = {});

// Removes triangles with two equal sides.
std::vector<HeronTriangle> strip_isosceles(const std::vector<HeronTriangle>& L);

/// Groups of fourth points that cannot jointly extend the base: candidates
// sharing a line through one base vertex or a circle through two of them.
// Only groups with at least two members are returned.
std::vector<std::vector<int>> partition_fourth_points(
    const std::array<RatPoint, 3>& base, const std::vector<RatPoint>& P);

struct CombineConfig {
  int n1 = 3;
  int n2 = 3;
  int c = 2;
  bool all_subclusters = false;  // loop over all c-subclusters of l1
  int min_output = 0;            // 0 -> max(n1, n2)
};

// General combine framework: rescale pairs (l1, l2) onto a common
// c-subcluster, merge coordinates, and enumerate cluster subsets.
SearchResult combine_lists(const std::vector<Cluster>& L1,
                           const std::vector<Cluster>& L2,
                           const CombineConfig& cfg);

// Thrown when a level outgrows the configured object budget; carries the
// catalog of all fully completed levels.
struct PartialResultError : std::runtime_error {
  PartialResultError(std::string msg, Catalog done)
      : std::runtime_error(std::move(msg)), completed(std::move(done)) {}
  Catalog completed;
};

// Complete catalog of non-similar k-clusters, 3 <= k <= n_target, with
// diameter at most max_diameter. Levels are built by extending each object
// with every Heronian triangle glued to its first edge.
Catalog exhaustive_clusters(std::uint32_t max_diameter, int n_target,
                            std::size_t level_object_cap = 50'000'000);

struct IterationTrace {
  // Size of the triangle set fed into each round (first entry = seed set).
  std::vector<std::size_t> triangle_counts;
  int rounds = 0;
};

// Repeats triangle_extension on the sub-triangles of the found clusters
// until the triangle set stabilizes. Returns the fixed-point catalog.
std::pair<Catalog, IterationTrace> iterate_extension(
    const std::vector<Cluster>& seeds, const ExtendOptions& opts = {},
    int max_rounds = 32);

}  // namespace ncl
