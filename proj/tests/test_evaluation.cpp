#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"
#include "ucsc/evaluation.hpp"
#include "ucsc/kmeans.hpp"

using namespace ucsc;

namespace {

// Accuracy by explicit enumeration of all k! cluster-to-class bijections.
double brute_force_accuracy(const std::vector<int>& pred, const std::vector<int>& truth,
                            std::size_t k) {
  std::vector<int> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = static_cast<int>(i);
  std::size_t best = 0;
  do {
    std::size_t correct = 0;
    for (std::size_t j = 0; j < pred.size(); ++j)
      if (perm[static_cast<std::size_t>(pred[j])] == truth[j]) ++correct;
    best = std::max(best, correct);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(best) / static_cast<double>(pred.size());
}

}  // namespace

TEST_CASE("classification_accuracy examples") {
  CHECK(classification_accuracy({0, 1, 2, 0}, {0, 1, 2, 0}, 3) == 1.0);
  // a relabeling of a perfect clustering is still perfect
  CHECK(classification_accuracy({2, 0, 1, 2}, {0, 1, 2, 0}, 3) == 1.0);
  CHECK(classification_accuracy({0, 1, 1, 1}, {0, 0, 1, 1}, 2) == 0.75);
  CHECK_THROWS_AS(classification_accuracy({0, 1}, {0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(classification_accuracy({}, {}, 2), std::invalid_argument);
}

TEST_CASE("matching equals brute force over permutations for k <= 4") {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = 2 + rng.index(3);
    const std::size_t n = k + rng.index(30);
    std::vector<int> pred(n), truth(n);
    for (std::size_t j = 0; j < n; ++j) {
      pred[j] = static_cast<int>(rng.index(k));
      truth[j] = static_cast<int>(rng.index(k));
    }
    const double fast = classification_accuracy(pred, truth, k);
    const double slow = brute_force_accuracy(pred, truth, k);
    CHECK(fast == doctest::Approx(slow).epsilon(1e-12));
    CHECK(fast >= 0.0);
    CHECK(fast <= 1.0);
  }
}

TEST_CASE("accuracy is 1 exactly when a permutation reproduces the truth") {
  Rng rng(27);
  for (int t = 0; t < 50; ++t) {
    const std::size_t k = 2 + rng.index(3);
    const std::size_t n = k + rng.index(20);
    std::vector<int> truth(n);
    for (std::size_t c = 0; c < k; ++c) truth[c] = static_cast<int>(c);  // all classes occur
    for (std::size_t j = k; j < n; ++j) truth[j] = static_cast<int>(rng.index(k));

    std::vector<int> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = static_cast<int>(i);
    for (std::size_t i = k; i > 1; --i) std::swap(perm[i - 1], perm[rng.index(i)]);
    std::vector<int> pred(n);
    for (std::size_t j = 0; j < n; ++j) pred[j] = perm[static_cast<std::size_t>(truth[j])];
    CHECK(classification_accuracy(pred, truth, k) == 1.0);

    // flip one point: no longer perfect
    if (n > k) {
      pred[n - 1] = (pred[n - 1] + 1) % static_cast<int>(k);
      CHECK(classification_accuracy(pred, truth, k) < 1.0);
    }
  }
}

TEST_CASE("contingency table counts co-occurrences") {
  const ContingencyTable t = make_contingency({0, 0, 1, 1}, {0, 1, 1, 1}, 2, 2);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(0, 1) == 1);
  CHECK(t.at(1, 0) == 0);
  CHECK(t.at(1, 1) == 2);
}

TEST_CASE("multi_run aggregates J statistics") {
  LabeledDataSet data;
  data.data = testutil::make_dataset({{0.0}, {1.0}});
  data.labels = {0, 1};
  data.k_true = 2;

  // canned algorithm: J cycles 5, 5, 6 by invocation order
  int call = 0;
  const ClusteringAlgorithm canned = [&call](const DataSet& d, std::uint64_t seed) {
    ClusteringSolution s;
    s.centroids.k = 2;
    s.centroids.dims = 1;
    s.centroids.centers = {0.0, 1.0};
    s.assignment.cluster_of = {0, 1};
    s.assignment.counts = {1, 1};
    s.j_value = (call++ % 3 == 2) ? 6.0 : 5.0;
    s.seed = seed;
    s.iterations = 1;
    (void)d;
    return s;
  };

  const RunStats stats = multi_run(canned, data, 3, 123, 1e-4);
  CHECK(stats.best_j == 5.0);
  CHECK(stats.best_j_percent == doctest::Approx(100.0 * 2.0 / 3.0));
  CHECK(stats.records.size() == 3);
  CHECK(stats.records[0].seed == derive_run_seed(123, 0));
  CHECK(stats.records[2].seed == derive_run_seed(123, 2));
  CHECK(stats.best_accuracy == 1.0);

  call = 0;
  const RunStats again = multi_run(canned, data, 3, 123, 1e-4);
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(again.records[r].j == stats.records[r].j);
    CHECK(again.records[r].seed == stats.records[r].seed);
  }

  // all runs identical: percent is 100
  const ClusteringAlgorithm constant = [](const DataSet& d, std::uint64_t seed) {
    ClusteringSolution s;
    s.centroids.k = 1;
    s.centroids.dims = 1;
    s.centroids.centers = {0.5};
    s.assignment.cluster_of = {0, 0};
    s.assignment.counts = {2};
    s.j_value = 1.0;
    s.seed = seed;
    (void)d;
    return s;
  };
  CHECK(multi_run(constant, data, 5, 1).best_j_percent == 100.0);

  CHECK_THROWS_AS(multi_run(constant, data, 0, 1), std::invalid_argument);
}

TEST_CASE("multi_run on a real algorithm is reproducible and recountable") {
  const LabeledDataSet data = generate_gaussian_mixture(dataset3_spec(), 31);
  KMeansConfig cfg;
  cfg.k = 3;
  const ClusteringAlgorithm algo = [cfg](const DataSet& d, std::uint64_t seed) mutable {
    cfg.seed = seed;
    return run_kmeans(d, cfg).solution;
  };
  const RunStats a = multi_run(algo, data, 20, 7);
  const RunStats b = multi_run(algo, data, 20, 7);
  for (std::size_t r = 0; r < a.records.size(); ++r) {
    CHECK(a.records[r].j == b.records[r].j);
    CHECK(a.records[r].accuracy == b.records[r].accuracy);
  }

  // independent recount of the percentage
  std::size_t hits = 0;
  for (const RunRecord& rec : a.records)
    if (rec.j <= a.best_j * (1.0 + a.j_tolerance)) ++hits;
  CHECK(a.best_j_percent == doctest::Approx(100.0 * hits / 20.0));
  CHECK(a.best_j_percent > 0.0);
}

TEST_CASE("report rendering") {
  std::ostringstream empty_table;
  render_results_table({}, empty_table);
  CHECK(empty_table.str().find("dataset") != std::string::npos);
  CHECK(empty_table.str().find('\n') == empty_table.str().size() - 1);  // header only

  RunStats s;
  s.best_j = 12.5;
  s.best_accuracy = 0.9;
  s.accuracy_at_best_j = 0.88;
  s.best_j_percent = 75.0;
  s.runs = 4;
  const std::vector<ResultRow> rows = {{"zeta", "ucsc", s}, {"zeta", "kmeans", s},
                                       {"alpha", "ucsc", s}};
  std::ostringstream table;
  render_results_table(rows, table);
  const std::string text = table.str();
  CHECK(text.find("alpha") < text.find("zeta"));
  // within the zeta dataset, algorithms sort alphabetically
  CHECK(text.find("kmeans") < text.rfind("ucsc"));
  CHECK(text.find("kmeans") > text.find("alpha"));

  const std::string csv_path =
      (std::filesystem::temp_directory_path() / "ucsc_report.csv").string();
  write_results_csv(rows, csv_path, {"seed=5", "runs=4"});
  std::ifstream in(csv_path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "# seed=5");
  std::getline(in, line);
  CHECK(line == "# runs=4");
  std::getline(in, line);
  CHECK(line == "dataset,algorithm,best_j,best_j_percent,best_accuracy,runs,master_seed");
  std::getline(in, line);
  CHECK(line.substr(0, 6) == "alpha,");
}
