#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ucsc/clustering.hpp"
#include "ucsc/dataset.hpp"

namespace ucsc {

/// Co-occurrence counts between predicted clusters and true classes,
/// row-major (k_pred rows, k_true columns).
struct ContingencyTable {
  std::vector<std::size_t> counts;
  std::size_t k_pred = 0;
  std::size_t k_true = 0;

  std::size_t at(std::size_t pred, std::size_t truth) const {
    return counts[pred * k_true + truth];
  }
};

ContingencyTable make_contingency(const std::vector<int>& predicted,
                                  const std::vector<int>& truth, std::size_t k_pred,
                                  std::size_t k_true);

/// Fraction of points correctly classified under the best one-to-one
/// cluster-to-class matching (maximum-weight assignment on the contingency
/// table). Cluster and class counts must both equal k.
double classification_accuracy(const std::vector<int>& predicted,
                               const std::vector<int>& truth, std::size_t k);

struct RunRecord {
  double j;
  double accuracy;
  std::uint64_t seed;
  std::size_t iterations;
};

/// Aggregate over repeated runs of one algorithm on one dataset.
struct RunStats {
  std::vector<RunRecord> records;
  double best_j = 0.0;            // minimum J over runs
  double best_accuracy = 0.0;     // maximum accuracy over runs
  double accuracy_at_best_j = 0.0;
  double best_j_percent = 0.0;    // share of runs with J <= best_j*(1+tol), in percent
  std::size_t runs = 0;
  std::uint64_t master_seed = 0;
  double j_tolerance = 0.0;
};

using ClusteringAlgorithm =
    std::function<ClusteringSolution(const DataSet&, std::uint64_t seed)>;

inline constexpr double kDefaultJTolerance = 1e-4;

/// Executes `runs` independent runs with per-run seeds
/// derive_run_seed(master_seed, run_index) and aggregates them.
RunStats multi_run(const ClusteringAlgorithm& algorithm, const LabeledDataSet& data,
                   std::size_t runs, std::uint64_t master_seed,
                   double j_tolerance = kDefaultJTolerance);

struct ResultRow {
  std::string dataset;
  std::string algorithm;
  RunStats stats;
};

/// Aligned summary tables (accuracy and J/percent), rows ordered by
/// (dataset, algorithm).
void render_results_table(const std::vector<ResultRow>& rows, std::ostream& out);

/// Machine-readable report: '#'-prefixed configuration lines, then a header
/// row "dataset,algorithm,best_j,best_j_percent,best_accuracy,runs,master_seed".
void write_results_csv(const std::vector<ResultRow>& rows, const std::string& path,
                       const std::vector<std::string>& config_lines = {});

}  // namespace ucsc
