#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ucsc/dataset.hpp"
#include "ucsc/evaluation.hpp"
#include "ucsc/kmeans.hpp"
#include "ucsc/ucsc.hpp"

namespace ucsc {

enum class AlgoSelection { kUcsc, kKmeans, kBoth };

/// Where an experiment's data comes from: a built-in generator name
/// (dataset1, dataset2, dataset3) or a delimited file plus its schema.
struct DatasetSource {
  std::string spec;  // generator name or file path
  ColumnSchema schema = ColumnSchema::trailing_label();
};

/// Fully resolved experiment: one dataset source, the algorithm selection,
/// both algorithms' parameter blocks, and the run/seed/output plumbing.
struct ExperimentConfig {
  DatasetSource source;
  AlgoSelection algo = AlgoSelection::kBoth;
  UcscConfig ucsc;
  KMeansConfig kmeans;
  std::size_t k = 0;  // 0: use the dataset's true class count
  std::size_t runs = 100;
  std::uint64_t master_seed = 0;
  double j_tolerance = kDefaultJTolerance;
  std::string out_csv;  // empty: stdout tables only

  void validate() const;
};

bool is_builtin_dataset(const std::string& name);
GaussianMixtureSpec builtin_dataset_spec(const std::string& name);

/// Loads a file source or deterministically generates a built-in one
/// (generator seed derived from the experiment's master seed).
LabeledDataSet resolve_dataset(const DatasetSource& source, std::uint64_t master_seed);

/// `generate`: write a built-in dataset to a delimited file; prints N, d and
/// the class count.
void cmd_generate(const std::string& spec_name, std::uint64_t seed,
                  const std::string& out_path, std::ostream& out);

/// `run`: multi-run experiment for the selected algorithm(s); aligned tables
/// on `out`, optional CSV with the full effective configuration embedded.
void cmd_run(const ExperimentConfig& config, std::ostream& out);

/// `reproduce`: both algorithms on the three built-in mixtures plus the Iris
/// and Breast Cancer files from data_dir, 100 runs each with the standard
/// parameters, reported side by side with the bundled reference values.
void cmd_reproduce(const std::string& data_dir, std::uint64_t master_seed,
                   const std::string& out_dir, std::ostream& out);

}  // namespace ucsc
