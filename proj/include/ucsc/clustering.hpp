#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ucsc/dataset.hpp"

namespace ucsc {

inline constexpr double kDefaultAffinityCap = 1e12;

/// K cluster centers of d coordinates each, stored row-major.
struct CentroidSet {
  std::vector<double> centers;  // k * dims
  std::size_t k = 0;
  std::size_t dims = 0;

  const double* center(std::size_t i) const { return centers.data() + i * dims; }
  double* center(std::size_t i) { return centers.data() + i * dims; }
};

/// Dense partition: one cluster index per point plus per-cluster sizes.
struct Assignment {
  std::vector<int> cluster_of;
  std::vector<std::size_t> counts;

  bool has_empty_cluster() const {
    for (std::size_t c : counts)
      if (c == 0) return true;
    return false;
  }
};

/// Result of scoring one candidate solution: mean-updated centers, the
/// partition they were scored on, the spread metric J and its affinity.
struct EvaluatedSolution {
  CentroidSet centroids;
  Assignment assignment;
  double j_value = 0.0;
  double affinity = 0.0;
  bool has_empty_cluster = false;
};

/// Mean-updated centers plus which clusters had no members. Empty clusters'
/// centers are NaN sentinels the caller must replace before use.
struct CentroidUpdate {
  CentroidSet centroids;
  std::vector<char> is_empty;
};

/// Final result of a clustering run, for either algorithm.
struct ClusteringSolution {
  CentroidSet centroids;
  Assignment assignment;
  double j_value = 0.0;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;  // generations for the immune algorithm
};

/// Nearest-center assignment under Euclidean distance; ties go to the lowest
/// cluster index. Throws on dimension mismatch.
Assignment assign_points(const DataSet& data, const CentroidSet& centroids);

/// Arithmetic mean of each cluster's members; empty clusters get NaN
/// sentinels and are flagged in the mask.
CentroidUpdate compute_centroids(const DataSet& data, const Assignment& assignment,
                                 std::size_t k);

/// Within-cluster spread J: the sum over points of the plain (not squared)
/// Euclidean distance to the assigned center.
double clustering_metric(const DataSet& data, const Assignment& assignment,
                         const CentroidSet& centroids);

/// 1/J, zero when any cluster is empty; a perfect J = 0 gets the cap so it
/// still ranks first.
double affinity_from_j(double j_value, bool has_empty_cluster,
                       double zero_j_cap = kDefaultAffinityCap);

/// Scores encoded centers: assign points to them, replace each non-empty
/// cluster's center with its members' mean (empty clusters keep the encoded
/// center), then compute J and affinity against the updated centers under
/// the same partition.
EvaluatedSolution evaluate_antibody(const DataSet& data, const CentroidSet& centers,
                                    double zero_j_cap = kDefaultAffinityCap);

double squared_distance(const double* a, const double* b, std::size_t dims);

}  // namespace ucsc
