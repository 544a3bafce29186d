// Shared fixtures for the test binaries.
#pragma once

#include <cstdint>
#include <vector>

#include "ncluster/cluster.hpp"

namespace testsupport {

using ncl::Cluster;
using ncl::Int;

// Distance matrix of the smallest known 7-point integral point set in
// general position (primitive form, diameter 2262000).
inline Cluster minimal_seven_cluster() {
  static const long m[7][7] = {
      {0, 2262000, 1839760, 1691976, 1685125, 1411488, 1380400},
      {2262000, 0, 1025440, 1022424, 602875, 959088, 1229600},
      {1839760, 1025440, 0, 1541176, 670085, 548912, 1531200},
      {1691976, 1022424, 1541176, 0, 879749, 1076712, 321784},
      {1685125, 602875, 670085, 879749, 0, 367237, 923525},
      {1411488, 959088, 548912, 1076712, 367237, 0, 1008272},
      {1380400, 1229600, 1531200, 321784, 923525, 1008272, 0}};
  std::vector<Int> dist(49);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) dist[i * 7 + j] = Int(m[i][j]);
  return Cluster(7, std::move(dist));
}

// Integer coordinates of the historically first such 7-point set (a
// 145-fold scaling of the minimal one).
inline std::vector<ncl::RatPoint> scaled_seven_cluster_points() {
  static const long c[7][2] = {{0, 0},
                                    {327990000, 0},
                                    {238776720, 118951040},
                                    {222246024, -103907232},
                                    {243360000, 21896875},
                                    {198368352, 50379264},
                                    {176610000, -94192000}};
  std::vector<ncl::RatPoint> pts;
  for (auto& p : c)
    pts.push_back({ncl::Rat(p[0]),
                   ncl::Rat(p[1])});
  return pts;
}

inline Cluster triangle_cluster(long a, long b, long c) {
  std::vector<Int> m(9, Int(0));
  m[0 * 3 + 1] = m[1 * 3 + 0] = a;
  m[0 * 3 + 2] = m[2 * 3 + 0] = b;
  m[1 * 3 + 2] = m[2 * 3 + 1] = c;
  return Cluster(3, std::move(m));
}

}  // namespace testsupport
