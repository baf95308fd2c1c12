#include "ucsc/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ucsc/rng.hpp"

namespace ucsc {

void DataSet::validate() const {
  if (n_points < 1 || dims < 1)
    throw std::invalid_argument("DataSet: need at least one point and one dimension");
  if (values.size() != n_points * dims)
    throw std::invalid_argument("DataSet: value buffer does not match n_points*dims");
  for (double v : values)
    if (!std::isfinite(v))
      throw std::invalid_argument("DataSet: non-finite coordinate");
}

void LabeledDataSet::validate() const {
  data.validate();
  if (labels.size() != data.n_points)
    throw std::invalid_argument("LabeledDataSet: label count does not match point count");
  if (k_true < 1) throw std::invalid_argument("LabeledDataSet: k_true must be positive");
  std::vector<char> seen(static_cast<std::size_t>(k_true), 0);
  for (int l : labels) {
    if (l < 0 || l >= k_true)
      throw std::invalid_argument("LabeledDataSet: label out of range");
    seen[static_cast<std::size_t>(l)] = 1;
  }
  for (char s : seen)
    if (!s) throw std::invalid_argument("LabeledDataSet: some class has no points");
}

std::size_t GaussianMixtureSpec::dims() const {
  return components.empty() ? 0 : components.front().mean.size();
}

std::size_t GaussianMixtureSpec::total_count() const {
  std::size_t t = 0;
  for (const auto& c : components) t += c.count;
  return t;
}

void GaussianMixtureSpec::validate() const {
  if (components.empty())
    throw std::invalid_argument("GaussianMixtureSpec: no components");
  const std::size_t d = components.front().mean.size();
  if (d == 0) throw std::invalid_argument("GaussianMixtureSpec: zero-dimensional mean");
  for (const auto& c : components) {
    if (c.mean.size() != d || c.variance.size() != d)
      throw std::invalid_argument("GaussianMixtureSpec: inconsistent dimensions");
    if (c.count < 1)
      throw std::invalid_argument("GaussianMixtureSpec: component count must be >= 1");
    for (double v : c.variance)
      if (!(v > 0.0))
        throw std::invalid_argument("GaussianMixtureSpec: variance must be positive");
    for (double m : c.mean)
      if (!std::isfinite(m))
        throw std::invalid_argument("GaussianMixtureSpec: non-finite mean");
  }
}

LabeledDataSet generate_gaussian_mixture(const GaussianMixtureSpec& spec, std::uint64_t seed) {
  spec.validate();
  const std::size_t d = spec.dims();
  LabeledDataSet out;
  out.data.dims = d;
  out.data.n_points = spec.total_count();
  out.data.values.reserve(out.data.n_points * d);
  out.labels.reserve(out.data.n_points);
  out.k_true = static_cast<int>(spec.components.size());

  Rng rng(seed);
  std::vector<double> sd(d);
  for (std::size_t ci = 0; ci < spec.components.size(); ++ci) {
    const auto& comp = spec.components[ci];
    for (std::size_t i = 0; i < d; ++i) sd[i] = std::sqrt(comp.variance[i]);
    for (std::size_t p = 0; p < comp.count; ++p) {
      for (std::size_t i = 0; i < d; ++i)
        out.data.values.push_back(comp.mean[i] + sd[i] * rng.gaussian());
      out.labels.push_back(static_cast<int>(ci));
    }
  }
  out.validate();
  return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : line) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\r') {
      if (!cur.empty()) {
        tokens.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  return tokens;
}

bool parse_double(const std::string& tok, double& out) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end == begin + tok.size() && std::isfinite(out);
}

[[noreturn]] void parse_fail(const std::string& path, std::size_t row, int col,
                             const std::string& what) {
  std::ostringstream os;
  os << path << ": row " << row;
  if (col >= 0) os << ", column " << (col + 1);
  os << ": " << what;
  throw std::runtime_error(os.str());
}

double median_of(std::vector<double> v) {
  const std::size_t n = v.size();
  auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(v.begin(), mid, v.end());
  double hi = *mid;
  if (n % 2 == 1) return hi;
  double lo = *std::max_element(v.begin(), mid);
  return 0.5 * (lo + hi);
}

}  // namespace

ColumnSchema ColumnSchema::trailing_label() { return ColumnSchema{}; }

ColumnSchema ColumnSchema::iris() {
  ColumnSchema s;
  s.feature_columns = {0, 1, 2, 3};
  s.label_column = 4;
  return s;
}

ColumnSchema ColumnSchema::breast_cancer() {
  ColumnSchema s;
  s.drop_columns = {0};
  s.feature_columns = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  s.label_column = 10;
  s.missing = MissingValuePolicy::kImputeMedian;
  return s;
}

LabeledDataSet load_delimited(const std::string& path, const ColumnSchema& schema) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");

  struct Row {
    std::size_t file_row;
    std::vector<double> features;   // NaN where missing
    std::vector<char> missing;
    std::string label;
  };

  std::vector<int> feature_cols = schema.feature_columns;
  int label_col = schema.label_column;
  int expected_cols = -1;
  std::vector<Row> rows;
  std::string line;
  std::size_t file_row = 0;

  while (std::getline(in, line)) {
    ++file_row;
    const std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;  // blank line

    if (expected_cols < 0) {
      expected_cols = static_cast<int>(tok.size());
      if (label_col < 0) label_col = expected_cols - 1;
      if (label_col >= expected_cols)
        parse_fail(path, file_row, label_col, "label column beyond row width");
      if (feature_cols.empty()) {
        for (int c = 0; c < expected_cols; ++c) {
          if (c == label_col) continue;
          if (std::find(schema.drop_columns.begin(), schema.drop_columns.end(), c) !=
              schema.drop_columns.end())
            continue;
          feature_cols.push_back(c);
        }
      }
      if (feature_cols.empty())
        parse_fail(path, file_row, -1, "schema selects no feature columns");
    }
    if (static_cast<int>(tok.size()) != expected_cols)
      parse_fail(path, file_row, -1,
                 "expected " + std::to_string(expected_cols) + " columns, got " +
                     std::to_string(tok.size()));

    Row row;
    row.file_row = file_row;
    row.features.resize(feature_cols.size());
    row.missing.assign(feature_cols.size(), 0);
    for (std::size_t f = 0; f < feature_cols.size(); ++f) {
      const int c = feature_cols[f];
      if (c >= expected_cols) parse_fail(path, file_row, c, "feature column beyond row width");
      const std::string& cell = tok[static_cast<std::size_t>(c)];
      if (cell == schema.missing_marker) {
        if (schema.missing == MissingValuePolicy::kReject)
          parse_fail(path, file_row, c, "missing value (policy reject)");
        row.missing[f] = 1;
        row.features[f] = std::numeric_limits<double>::quiet_NaN();
      } else if (!parse_double(cell, row.features[f])) {
        parse_fail(path, file_row, c, "'" + cell + "' is not numeric");
      }
    }
    const std::string& lab = tok[static_cast<std::size_t>(label_col)];
    if (lab == schema.missing_marker) parse_fail(path, file_row, label_col, "missing label");
    row.label = lab;

    if (schema.missing == MissingValuePolicy::kDropRows &&
        std::find(row.missing.begin(), row.missing.end(), 1) != row.missing.end())
      continue;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error(path + ": no data rows");

  if (schema.missing == MissingValuePolicy::kImputeMedian) {
    for (std::size_t f = 0; f < rows.front().features.size(); ++f) {
      std::vector<double> present;
      for (const Row& r : rows)
        if (!r.missing[f]) present.push_back(r.features[f]);
      if (present.empty())
        throw std::runtime_error(path + ": feature column " + std::to_string(f + 1) +
                                 " has no non-missing values to impute from");
      if (present.size() == rows.size()) continue;
      const double med = median_of(std::move(present));
      for (Row& r : rows)
        if (r.missing[f]) r.features[f] = med;
    }
  }

  LabeledDataSet out;
  out.data.dims = rows.front().features.size();
  out.data.n_points = rows.size();
  out.data.values.reserve(rows.size() * out.data.dims);
  out.labels.reserve(rows.size());
  std::vector<std::string> label_names;  // first-appearance order
  for (const Row& r : rows) {
    out.data.values.insert(out.data.values.end(), r.features.begin(), r.features.end());
    auto it = std::find(label_names.begin(), label_names.end(), r.label);
    if (it == label_names.end()) {
      label_names.push_back(r.label);
      it = label_names.end() - 1;
    }
    out.labels.push_back(static_cast<int>(it - label_names.begin()));
  }
  out.k_true = static_cast<int>(label_names.size());
  out.validate();
  return out;
}

void save_delimited(const LabeledDataSet& data, const std::string& path) {
  data.validate();
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  char buf[40];
  for (std::size_t j = 0; j < data.data.n_points; ++j) {
    const double* p = data.data.point(j);
    for (std::size_t i = 0; i < data.data.dims; ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", p[i]);
      out << buf << ',';
    }
    out << data.labels[j] << '\n';
  }
  if (!out) throw std::runtime_error(path + ": write failed");
}

DataBounds compute_bounds(const DataSet& data) {
  data.validate();
  DataBounds b;
  b.lower.assign(data.dims, std::numeric_limits<double>::infinity());
  b.upper.assign(data.dims, -std::numeric_limits<double>::infinity());
  for (std::size_t j = 0; j < data.n_points; ++j) {
    const double* p = data.point(j);
    for (std::size_t i = 0; i < data.dims; ++i) {
      b.lower[i] = std::min(b.lower[i], p[i]);
      b.upper[i] = std::max(b.upper[i], p[i]);
    }
  }
  b.rho = *std::max_element(b.upper.begin(), b.upper.end()) -
          *std::min_element(b.lower.begin(), b.lower.end());
  return b;
}

GaussianMixtureSpec dataset1_spec() {
  GaussianMixtureSpec s;
  s.components = {
      {{0.10, 0.1}, {0.11, 0.1}, 100},
      {{0.35, 0.1}, {0.11, 0.1}, 100},
  };
  return s;
}

GaussianMixtureSpec dataset2_spec() {
  GaussianMixtureSpec s;
  for (double x : {0.1, 0.5, 0.9})
    for (double y : {0.1, 0.5, 0.9})
      s.components.push_back({{x, y}, {0.08, 0.08}, 25});
  return s;
}

GaussianMixtureSpec dataset3_spec() {
  GaussianMixtureSpec s;
  s.components = {
      {{1.0, 1.0, 1.0}, {0.3, 0.3, 0.3}, 50},
      {{2.0, 2.5, 2.5}, {0.3, 0.3, 0.3}, 50},
      {{2.0, 3.0, 3.0}, {0.3, 0.3, 0.3}, 50},
  };
  return s;
}

}  // namespace ucsc
