#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"
#include "ucsc/dataset.hpp"

using namespace ucsc;
namespace fs = std::filesystem;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p);
  out << content;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("compute_bounds basics") {
  const DataSet d = testutil::make_dataset({{0, 1}, {2, 3}});
  const DataBounds b = compute_bounds(d);
  CHECK(b.lower == std::vector<double>{0, 1});
  CHECK(b.upper == std::vector<double>{2, 3});
  CHECK(b.rho == doctest::Approx(3.0));

  const DataBounds single = compute_bounds(testutil::make_dataset({{5, 5}}));
  CHECK(single.lower == single.upper);
  CHECK(single.rho == 0.0);

  DataSet empty;
  CHECK_THROWS_AS(compute_bounds(empty), std::invalid_argument);
}

TEST_CASE("bounds soundness on random data") {
  Rng rng(11);
  for (int c = 0; c < 100; ++c) {
    const DataSet d = testutil::random_dataset(rng, 1 + rng.index(40), 1 + rng.index(4));
    const DataBounds b = compute_bounds(d);
    for (std::size_t j = 0; j < d.n_points; ++j)
      for (std::size_t i = 0; i < d.dims; ++i) {
        CHECK(b.lower[i] <= d.point(j)[i]);
        CHECK(d.point(j)[i] <= b.upper[i]);
      }
  }
}

TEST_CASE("gaussian mixture: built-in two-class set") {
  const LabeledDataSet ds = generate_gaussian_mixture(dataset1_spec(), 99);
  CHECK(ds.data.n_points == 200);
  CHECK(ds.data.dims == 2);
  CHECK(ds.k_true == 2);
  int per_class[2] = {0, 0};
  for (int l : ds.labels) ++per_class[l];
  CHECK(per_class[0] == 100);
  CHECK(per_class[1] == 100);
}

TEST_CASE("gaussian mixture: near-degenerate variance concentrates at the mean") {
  GaussianMixtureSpec spec;
  spec.components = {{{3.0, 3.0}, {1e-12, 1e-12}, 5}};
  const LabeledDataSet ds = generate_gaussian_mixture(spec, 4);
  for (std::size_t j = 0; j < ds.data.n_points; ++j) {
    CHECK(std::fabs(ds.data.point(j)[0] - 3.0) < 1e-4);
    CHECK(std::fabs(ds.data.point(j)[1] - 3.0) < 1e-4);
  }
}

TEST_CASE("gaussian mixture: component sample means within the standard-error bound") {
  // 4 * sqrt(var / count) per dimension
  const GaussianMixtureSpec spec = dataset2_spec();
  const LabeledDataSet ds = generate_gaussian_mixture(spec, 2024);
  const double bound = 4.0 * std::sqrt(0.08 / 25.0);
  std::size_t offset = 0;
  for (std::size_t ci = 0; ci < spec.components.size(); ++ci) {
    const auto& comp = spec.components[ci];
    double mean[2] = {0, 0};
    for (std::size_t p = 0; p < comp.count; ++p)
      for (std::size_t i = 0; i < 2; ++i) mean[i] += ds.data.point(offset + p)[i];
    for (std::size_t i = 0; i < 2; ++i) {
      mean[i] /= static_cast<double>(comp.count);
      CHECK(std::fabs(mean[i] - comp.mean[i]) < bound);
    }
    offset += comp.count;
  }
}

TEST_CASE("gaussian mixture: determinism and validation") {
  const LabeledDataSet a = generate_gaussian_mixture(dataset3_spec(), 7);
  const LabeledDataSet b = generate_gaussian_mixture(dataset3_spec(), 7);
  CHECK(a.data.values == b.data.values);  // bit-identical
  const LabeledDataSet c = generate_gaussian_mixture(dataset3_spec(), 8);
  CHECK(a.data.values != c.data.values);

  GaussianMixtureSpec bad = dataset1_spec();
  bad.components[0].count = 0;
  CHECK_THROWS_AS(generate_gaussian_mixture(bad, 1), std::invalid_argument);
  bad = dataset1_spec();
  bad.components[1].variance[0] = 0.0;
  CHECK_THROWS_AS(generate_gaussian_mixture(bad, 1), std::invalid_argument);
}

TEST_CASE("save/load round trip is exact and deterministic") {
  const LabeledDataSet ds = generate_gaussian_mixture(dataset3_spec(), 5);
  const std::string p1 = write_temp("ucsc_rt1.csv", "");
  const std::string p2 = write_temp("ucsc_rt2.csv", "");
  save_delimited(ds, p1);
  save_delimited(ds, p2);
  CHECK(slurp(p1) == slurp(p2));  // byte-for-byte reproducible

  const LabeledDataSet back = load_delimited(p1, ColumnSchema::trailing_label());
  CHECK(back.data.values == ds.data.values);  // %.17g round-trips doubles
  CHECK(back.labels == ds.labels);
  CHECK(back.k_true == ds.k_true);
}

TEST_CASE("iris file loads with the expected shape") {
  const std::string path = testutil::data_dir() + "/iris.data";
  const LabeledDataSet iris = load_delimited(path, ColumnSchema::iris());
  CHECK(iris.data.n_points == 150);
  CHECK(iris.data.dims == 4);
  CHECK(iris.k_true == 3);
  int per_class[3] = {0, 0, 0};
  for (int l : iris.labels) ++per_class[l];
  for (int c = 0; c < 3; ++c) CHECK(per_class[c] == 50);

  // global feature range, pinned as a regression constant
  const DataBounds b = compute_bounds(iris.data);
  CHECK(std::fabs(b.rho - 7.8) < 1e-12);
}

TEST_CASE("breast cancer file loads with the expected shape (when present)") {
  const std::string path = testutil::data_dir() + "/breast-cancer-wisconsin.data";
  if (!fs::exists(path)) {
    MESSAGE("skipped: ", path,
            " not present; see data/README.md for how to obtain it");
    return;
  }
  const LabeledDataSet bc = load_delimited(path, ColumnSchema::breast_cancer());
  CHECK(bc.data.n_points == 699);
  CHECK(bc.data.dims == 9);
  CHECK(bc.k_true == 2);
  int per_class[2] = {0, 0};
  for (int l : bc.labels) ++per_class[l];
  CHECK(std::max(per_class[0], per_class[1]) == 458);
  CHECK(std::min(per_class[0], per_class[1]) == 241);
}

TEST_CASE("parse errors name the row and column") {
  const std::string bad_cell = write_temp("ucsc_bad_cell.csv", "1,2,a\n3,abc,b\n");
  try {
    load_delimited(bad_cell, ColumnSchema::trailing_label());
    FAIL("expected parse error");
  } catch (const std::runtime_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("row 2") != std::string::npos);
    CHECK(msg.find("column 2") != std::string::npos);
    CHECK(msg.find("abc") != std::string::npos);
  }

  const std::string ragged = write_temp("ucsc_ragged.csv", "1,2,a\n3,4,5,b\n");
  try {
    load_delimited(ragged, ColumnSchema::trailing_label());
    FAIL("expected parse error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
  }

  CHECK_THROWS(load_delimited("/no/such/file.csv", ColumnSchema::trailing_label()));

  const std::string empty = write_temp("ucsc_empty.csv", "\n\n");
  CHECK_THROWS(load_delimited(empty, ColumnSchema::trailing_label()));
}

TEST_CASE("missing-value policies") {
  const std::string content = "1,10,x\n2,?,x\n3,30,y\n4,40,y\n";
  ColumnSchema reject = ColumnSchema::trailing_label();
  reject.missing = MissingValuePolicy::kReject;
  const std::string path = write_temp("ucsc_missing.csv", content);
  try {
    load_delimited(path, reject);
    FAIL("expected rejection");
  } catch (const std::runtime_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("row 2") != std::string::npos);
    CHECK(msg.find("column 2") != std::string::npos);
  }

  ColumnSchema drop = reject;
  drop.missing = MissingValuePolicy::kDropRows;
  const LabeledDataSet dropped = load_delimited(path, drop);
  CHECK(dropped.data.n_points == 3);

  ColumnSchema impute = reject;
  impute.missing = MissingValuePolicy::kImputeMedian;
  const LabeledDataSet imputed = load_delimited(path, impute);
  CHECK(imputed.data.n_points == 4);
  CHECK(imputed.data.point(1)[1] == doctest::Approx(30.0));  // median of {10,30,40}
  // imputation leaves complete rows untouched
  CHECK(imputed.data.point(0)[0] == 1.0);
  CHECK(imputed.data.point(0)[1] == 10.0);
  CHECK(imputed.data.point(2)[1] == 30.0);
  CHECK(imputed.data.point(3)[1] == 40.0);

  // label mapping is first-appearance order and contiguous
  CHECK(imputed.labels == std::vector<int>{0, 0, 1, 1});
  CHECK(imputed.k_true == 2);
}

TEST_CASE("whitespace-delimited input parses too") {
  const std::string path = write_temp("ucsc_ws.csv", "1 2 a\n3\t4 b\n");
  const LabeledDataSet ds = load_delimited(path, ColumnSchema::trailing_label());
  CHECK(ds.data.n_points == 2);
  CHECK(ds.data.dims == 2);
  CHECK(ds.k_true == 2);
}
