#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ucsc {

/// N points in d-dimensional real feature space, stored row-major.
struct DataSet {
  std::vector<double> values;  // n_points * dims, row-major
  std::size_t n_points = 0;
  std::size_t dims = 0;

  const double* point(std::size_t j) const { return values.data() + j * dims; }
  double* point(std::size_t j) { return values.data() + j * dims; }

  /// Throws std::invalid_argument unless N >= 1, d >= 1 and every coordinate
  /// is finite.
  void validate() const;
};

/// DataSet plus ground-truth class indices in [0, k_true).
struct LabeledDataSet {
  DataSet data;
  std::vector<int> labels;
  int k_true = 0;

  void validate() const;
};

/// Per-dimension feature limits plus the global range rho used by the
/// mutation operator: rho = max over all features and dimensions minus the
/// matching global minimum.
struct DataBounds {
  std::vector<double> lower;
  std::vector<double> upper;
  double rho = 0.0;
};

struct GaussianComponent {
  std::vector<double> mean;
  std::vector<double> variance;  // diagonal covariance entries
  std::size_t count = 0;
};

struct GaussianMixtureSpec {
  std::vector<GaussianComponent> components;

  std::size_t dims() const;
  std::size_t total_count() const;
  void validate() const;
};

enum class MissingValuePolicy { kReject, kDropRows, kImputeMedian };

/// Column layout of a delimited text file (comma- or whitespace-separated).
struct ColumnSchema {
  std::vector<int> feature_columns;  // empty: every non-dropped, non-label column
  int label_column = -1;             // -1: last column
  std::vector<int> drop_columns;     // ignored entirely (e.g. sample ids)
  std::string missing_marker = "?";
  MissingValuePolicy missing = MissingValuePolicy::kReject;

  /// Generic layout: all columns but the last are features.
  static ColumnSchema trailing_label();
  /// Iris: 4 numeric features, class name in column 4.
  static ColumnSchema iris();
  /// Breast Cancer: id column dropped, 9 features, class code in column 10,
  /// "?" marks missing values, imputed with the column median by default.
  static ColumnSchema breast_cancer();
};

/// Samples the mixture component by component (independent per-dimension
/// normals; covariances are diagonal). Labels are component indices;
/// identical seeds give bit-identical datasets.
LabeledDataSet generate_gaussian_mixture(const GaussianMixtureSpec& spec, std::uint64_t seed);

/// Parses a delimited text file per the schema. Label strings map to
/// contiguous indices in first-appearance order. Parse errors name the
/// offending row and column (1-based, as in the file).
LabeledDataSet load_delimited(const std::string& path, const ColumnSchema& schema);

/// Writes rows of comma-separated features with a trailing integer label
/// column; round-trips through load_delimited with the trailing_label schema.
void save_delimited(const LabeledDataSet& data, const std::string& path);

/// Per-dimension min/max plus the global range rho. Throws on an empty set.
DataBounds compute_bounds(const DataSet& data);

/// Built-in synthetic benchmark mixtures (two overlapping classes, a 3x3
/// grid of nine classes, and three classes in 3-D).
GaussianMixtureSpec dataset1_spec();
GaussianMixtureSpec dataset2_spec();
GaussianMixtureSpec dataset3_spec();

}  // namespace ucsc
