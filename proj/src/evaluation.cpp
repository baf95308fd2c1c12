#include "ucsc/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "ucsc/rng.hpp"

namespace ucsc {

ContingencyTable make_contingency(const std::vector<int>& predicted,
                                  const std::vector<int>& truth, std::size_t k_pred,
                                  std::size_t k_true) {
  if (predicted.size() != truth.size())
    throw std::invalid_argument("contingency: prediction/truth length mismatch");
  ContingencyTable t;
  t.k_pred = k_pred;
  t.k_true = k_true;
  t.counts.assign(k_pred * k_true, 0);
  for (std::size_t j = 0; j < predicted.size(); ++j) {
    const int p = predicted[j], g = truth[j];
    if (p < 0 || static_cast<std::size_t>(p) >= k_pred)
      throw std::invalid_argument("contingency: predicted index out of range");
    if (g < 0 || static_cast<std::size_t>(g) >= k_true)
      throw std::invalid_argument("contingency: truth index out of range");
    ++t.counts[static_cast<std::size_t>(p) * k_true + static_cast<std::size_t>(g)];
  }
  return t;
}

namespace {

// Maximum-weight perfect matching on an n x n score matrix via the n^3
// shortest-augmenting-path algorithm with potentials, run on negated scores.
std::size_t max_assignment_score(const std::vector<std::size_t>& score, std::size_t n) {
  const double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cost =
            -static_cast<double>(score[(i0 - 1) * n + (j - 1)]) - u[i0] - v[j];
        if (cost < minv[j]) {
          minv[j] = cost;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::size_t total = 0;
  for (std::size_t j = 1; j <= n; ++j)
    if (match[j] != 0) total += score[(match[j] - 1) * n + (j - 1)];
  return total;
}

double matching_accuracy(const ContingencyTable& t, std::size_t n_points) {
  const std::size_t n = std::max(t.k_pred, t.k_true);
  std::vector<std::size_t> square(n * n, 0);  // zero-padded when counts differ
  for (std::size_t p = 0; p < t.k_pred; ++p)
    for (std::size_t g = 0; g < t.k_true; ++g) square[p * n + g] = t.at(p, g);
  return static_cast<double>(max_assignment_score(square, n)) /
         static_cast<double>(n_points);
}

}  // namespace

double classification_accuracy(const std::vector<int>& predicted,
                               const std::vector<int>& truth, std::size_t k) {
  if (predicted.size() != truth.size())
    throw std::invalid_argument("classification_accuracy: length mismatch");
  if (predicted.empty())
    throw std::invalid_argument("classification_accuracy: empty input");
  return matching_accuracy(make_contingency(predicted, truth, k, k), predicted.size());
}

RunStats multi_run(const ClusteringAlgorithm& algorithm, const LabeledDataSet& data,
                   std::size_t runs, std::uint64_t master_seed, double j_tolerance) {
  if (runs < 1) throw std::invalid_argument("multi_run: runs must be >= 1");
  data.validate();

  RunStats stats;
  stats.runs = runs;
  stats.master_seed = master_seed;
  stats.j_tolerance = j_tolerance;
  stats.records.reserve(runs);

  for (std::size_t r = 0; r < runs; ++r) {
    const std::uint64_t seed = derive_run_seed(master_seed, r);
    const ClusteringSolution sol = algorithm(data.data, seed);
    const ContingencyTable t =
        make_contingency(sol.assignment.cluster_of, data.labels, sol.centroids.k,
                         static_cast<std::size_t>(data.k_true));
    stats.records.push_back(
        {sol.j_value, matching_accuracy(t, data.data.n_points), seed, sol.iterations});
  }

  stats.best_j = std::numeric_limits<double>::infinity();
  for (const RunRecord& rec : stats.records) {
    if (rec.j < stats.best_j) {
      stats.best_j = rec.j;
      stats.accuracy_at_best_j = rec.accuracy;
    }
    stats.best_accuracy = std::max(stats.best_accuracy, rec.accuracy);
  }
  std::size_t hits = 0;
  for (const RunRecord& rec : stats.records)
    if (rec.j <= stats.best_j * (1.0 + j_tolerance)) ++hits;
  stats.best_j_percent = 100.0 * static_cast<double>(hits) / static_cast<double>(runs);
  return stats;
}

namespace {

std::vector<const ResultRow*> sorted_rows(const std::vector<ResultRow>& rows) {
  std::vector<const ResultRow*> out;
  out.reserve(rows.size());
  for (const ResultRow& r : rows) out.push_back(&r);
  std::sort(out.begin(), out.end(), [](const ResultRow* a, const ResultRow* b) {
    if (a->dataset != b->dataset) return a->dataset < b->dataset;
    return a->algorithm < b->algorithm;
  });
  return out;
}

}  // namespace

void render_results_table(const std::vector<ResultRow>& rows, std::ostream& out) {
  const auto ordered = sorted_rows(rows);
  std::size_t name_w = 12;
  for (const ResultRow* r : ordered) name_w = std::max(name_w, r->dataset.size() + 2);

  out << std::left << std::setw(static_cast<int>(name_w)) << "dataset"
      << std::setw(10) << "algo" << std::right << std::setw(12) << "best J"
      << std::setw(10) << "percent" << std::setw(12) << "best acc"
      << std::setw(12) << "acc@bestJ" << std::setw(7) << "runs" << '\n';
  for (const ResultRow* r : ordered) {
    char jbuf[32], pbuf[16], abuf[16], bbuf[16];
    std::snprintf(jbuf, sizeof jbuf, "%.4f", r->stats.best_j);
    std::snprintf(pbuf, sizeof pbuf, "%.0f%%", r->stats.best_j_percent);
    std::snprintf(abuf, sizeof abuf, "%.2f%%", 100.0 * r->stats.best_accuracy);
    std::snprintf(bbuf, sizeof bbuf, "%.2f%%", 100.0 * r->stats.accuracy_at_best_j);
    out << std::left << std::setw(static_cast<int>(name_w)) << r->dataset
        << std::setw(10) << r->algorithm << std::right << std::setw(12) << jbuf
        << std::setw(10) << pbuf << std::setw(12) << abuf << std::setw(12) << bbuf
        << std::setw(7) << r->stats.runs << '\n';
  }
}

void write_results_csv(const std::vector<ResultRow>& rows, const std::string& path,
                       const std::vector<std::string>& config_lines) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  for (const std::string& line : config_lines) out << "# " << line << '\n';
  out << "dataset,algorithm,best_j,best_j_percent,best_accuracy,runs,master_seed\n";
  char buf[160];
  for (const ResultRow* r : sorted_rows(rows)) {
    std::snprintf(buf, sizeof buf, "%s,%s,%.9g,%.4g,%.6g,%zu,%llu\n", r->dataset.c_str(),
                  r->algorithm.c_str(), r->stats.best_j, r->stats.best_j_percent,
                  r->stats.best_accuracy, r->stats.runs,
                  static_cast<unsigned long long>(r->stats.master_seed));
    out << buf;
  }
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace ucsc
