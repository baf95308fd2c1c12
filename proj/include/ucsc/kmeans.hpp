#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ucsc/clustering.hpp"
#include "ucsc/dataset.hpp"

namespace ucsc {

struct KMeansConfig {
  enum class Init { kForgy, kUniformInBounds };

  std::size_t k = 1;
  std::size_t max_iterations = 1000;
  std::uint64_t seed = 0;
  Init init = Init::kForgy;

  void validate() const;
};

/// Squared-error state after each full assign+update iteration; reseeded
/// marks iterations where an empty cluster was re-seeded (the monotonicity
/// guarantee does not span those).
struct KMeansIterationRecord {
  double sse;
  bool reseeded;
};

struct KMeansResult {
  ClusteringSolution solution;
  std::vector<KMeansIterationRecord> iterations;
};

/// Lloyd's algorithm. Forgy initialization picks k distinct data points;
/// iteration alternates nearest-center assignment and mean updates until the
/// assignment repeats or max_iterations is hit. Empty clusters are re-seeded
/// with a uniformly chosen data point. The reported J is the plain-distance
/// spread metric, computed on the final (assignment, means) pair.
KMeansResult run_kmeans(const DataSet& data, const KMeansConfig& config);

}  // namespace ucsc
