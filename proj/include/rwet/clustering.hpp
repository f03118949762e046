#pragma once

#include <vector>

#include "rwet/geometry.hpp"

namespace rwet {

// A group of EH indices charged from one anchor.
struct Cluster {
  std::vector<int> members;
  bool is_outlier_singleton = false;
};

struct DbscanResult {
  std::vector<Cluster> clusters;
  std::vector<int> outliers;
};

// Classic DBSCAN over 2D points. The eps-neighborhood of a point includes
// the point itself, so min_pts = 2 means "at least one other point within
// eps". Deterministic: points are visited and expanded in index order.
inline DbscanResult dbscan(const std::vector<Position2D>& points, double eps, int min_pts) {
  const int n = static_cast<int>(points.size());
  const double eps2 = eps * eps;
  DbscanResult result;
  if (n == 0) return result;

  constexpr int kUnvisited = -1;
  constexpr int kNoise = -2;
  std::vector<int> label(n, kUnvisited);

  auto neighbors_of = [&](int i) {
    std::vector<int> nb;
    for (int j = 0; j < n; ++j)
      if ((points[i] - points[j]).norm2() <= eps2) nb.push_back(j);
    return nb;
  };

  int cluster_id = 0;
  for (int i = 0; i < n; ++i) {
    if (label[i] != kUnvisited) continue;
    std::vector<int> nb = neighbors_of(i);
    if (static_cast<int>(nb.size()) < min_pts) {
      label[i] = kNoise;
      continue;
    }
    label[i] = cluster_id;
    // Expand the cluster breadth-first over density-reachable points.
    std::vector<int> queue = nb;
    for (size_t q = 0; q < queue.size(); ++q) {
      int j = queue[q];
      if (label[j] == kNoise) label[j] = cluster_id;  // border point
      if (label[j] != kUnvisited) continue;
      label[j] = cluster_id;
      std::vector<int> nbj = neighbors_of(j);
      if (static_cast<int>(nbj.size()) >= min_pts)
        queue.insert(queue.end(), nbj.begin(), nbj.end());
    }
    ++cluster_id;
  }

  result.clusters.resize(cluster_id);
  for (int i = 0; i < n; ++i) {
    if (label[i] >= 0)
      result.clusters[label[i]].members.push_back(i);
    else
      result.outliers.push_back(i);
  }
  return result;
}

}  // namespace rwet
