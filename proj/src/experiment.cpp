#include "ucsc/experiment.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ucsc/rng.hpp"

namespace ucsc {

namespace {

// Seed-space tags so dataset generation, ucsc cells and kmeans cells never
// share a run-seed stream under one master seed.
constexpr std::uint64_t kDatasetSeedTag = 0xDA7A5EEDULL;
constexpr std::uint64_t kCellSeedTag = 0xCE115EEDULL;

std::uint64_t dataset_seed(std::uint64_t master_seed, std::uint64_t index) {
  return derive_run_seed(master_seed ^ kDatasetSeedTag, index);
}

std::uint64_t cell_seed(std::uint64_t master_seed, std::uint64_t index) {
  return derive_run_seed(master_seed ^ kCellSeedTag, index);
}

ClusteringAlgorithm make_ucsc_algorithm(UcscConfig cfg) {
  return [cfg](const DataSet& data, std::uint64_t seed) mutable {
    cfg.seed = seed;
    return run_ucsc(data, cfg).solution;
  };
}

ClusteringAlgorithm make_kmeans_algorithm(KMeansConfig cfg) {
  return [cfg](const DataSet& data, std::uint64_t seed) mutable {
    cfg.seed = seed;
    return run_kmeans(data, cfg).solution;
  };
}

std::string policy_name(MissingValuePolicy p) {
  switch (p) {
    case MissingValuePolicy::kReject: return "reject";
    case MissingValuePolicy::kDropRows: return "drop";
    case MissingValuePolicy::kImputeMedian: return "impute";
  }
  return "?";
}

std::string algo_name(AlgoSelection a) {
  switch (a) {
    case AlgoSelection::kUcsc: return "ucsc";
    case AlgoSelection::kKmeans: return "kmeans";
    case AlgoSelection::kBoth: return "both";
  }
  return "?";
}

std::vector<std::string> effective_config_lines(const ExperimentConfig& c) {
  std::vector<std::string> lines;
  auto add = [&lines](const std::string& k, const std::string& v) {
    lines.push_back(k + "=" + v);
  };
  add("dataset", c.source.spec);
  add("algo", algo_name(c.algo));
  add("k", std::to_string(c.k));
  add("runs", std::to_string(c.runs));
  add("seed", std::to_string(c.master_seed));
  add("j_tolerance", std::to_string(c.j_tolerance));
  add("missing", policy_name(c.source.schema.missing));
  add("missing_marker", c.source.schema.missing_marker);
  add("ucsc.pop_size", std::to_string(c.ucsc.n));
  add("ucsc.beta", std::to_string(c.ucsc.beta));
  add("ucsc.replace", std::to_string(c.ucsc.l_replace));
  add("ucsc.generations", std::to_string(c.ucsc.generations));
  add("ucsc.lamarckian", c.ucsc.lamarckian ? "true" : "false");
  add("kmeans.max_iters", std::to_string(c.kmeans.max_iterations));
  add("kmeans.init",
      c.kmeans.init == KMeansConfig::Init::kForgy ? "forgy" : "uniform");
  return lines;
}

struct ReferenceRow {
  const char* dataset;
  double ucsc_j, ucsc_pct, ucsc_acc;
  double km_j, km_pct, km_acc;
  bool regenerated;  // synthetic data: only property comparisons are meaningful
};

// Reference benchmark results the reproduce command reports deltas against.
constexpr ReferenceRow kReferenceResults[] = {
    {"dataset1", 25.141, 100.0, 88.00, 25.166, 100.0, 86.00, true},
    {"dataset2", 21.597, 100.0, 97.78, 21.906, 40.0, 97.33, true},
    {"dataset3", 70.628, 100.0, 91.33, 70.653, 75.0, 91.33, true},
    {"iris", 97.101, 100.0, 90.00, 97.205, 80.0, 89.33, false},
    {"breast-cancer", 3048.2, 100.0, 96.11, 3051.3, 100.0, 95.70, false},
};

}  // namespace

void ExperimentConfig::validate() const {
  if (source.spec.empty()) throw std::invalid_argument("config: dataset source is required");
  if (runs < 1) throw std::invalid_argument("config: runs must be >= 1");
  if (!(j_tolerance >= 0.0)) throw std::invalid_argument("config: j_tolerance must be >= 0");
  UcscConfig u = ucsc;
  u.k = k > 0 ? k : 1;  // k may still be resolved from the data
  u.validate();
  KMeansConfig m = kmeans;
  m.k = k > 0 ? k : 1;
  m.validate();
}

bool is_builtin_dataset(const std::string& name) {
  return name == "dataset1" || name == "dataset2" || name == "dataset3";
}

GaussianMixtureSpec builtin_dataset_spec(const std::string& name) {
  if (name == "dataset1") return dataset1_spec();
  if (name == "dataset2") return dataset2_spec();
  if (name == "dataset3") return dataset3_spec();
  throw std::invalid_argument("unknown dataset spec '" + name +
                              "' (expected dataset1, dataset2 or dataset3)");
}

LabeledDataSet resolve_dataset(const DatasetSource& source, std::uint64_t master_seed) {
  if (is_builtin_dataset(source.spec)) {
    const std::uint64_t idx = source.spec.back() - '1';
    return generate_gaussian_mixture(builtin_dataset_spec(source.spec),
                                     dataset_seed(master_seed, idx));
  }
  if (!std::filesystem::exists(source.spec))
    throw std::runtime_error("dataset file not found: " + source.spec);
  return load_delimited(source.spec, source.schema);
}

void cmd_generate(const std::string& spec_name, std::uint64_t seed,
                  const std::string& out_path, std::ostream& out) {
  const LabeledDataSet data = generate_gaussian_mixture(builtin_dataset_spec(spec_name), seed);
  save_delimited(data, out_path);
  out << spec_name << ": wrote " << out_path << "  N=" << data.data.n_points
      << " d=" << data.data.dims << " classes=" << data.k_true << '\n';
}

void cmd_run(const ExperimentConfig& config, std::ostream& out) {
  config.validate();
  const LabeledDataSet data = resolve_dataset(config.source, config.master_seed);
  const std::size_t k = config.k > 0 ? config.k : static_cast<std::size_t>(data.k_true);

  std::vector<ResultRow> rows;
  std::uint64_t cell = 0;
  if (config.algo != AlgoSelection::kKmeans) {
    UcscConfig u = config.ucsc;
    u.k = k;
    rows.push_back({config.source.spec, "ucsc",
                    multi_run(make_ucsc_algorithm(u), data, config.runs,
                              cell_seed(config.master_seed, cell), config.j_tolerance)});
  }
  ++cell;
  if (config.algo != AlgoSelection::kUcsc) {
    KMeansConfig m = config.kmeans;
    m.k = k;
    rows.push_back({config.source.spec, "kmeans",
                    multi_run(make_kmeans_algorithm(m), data, config.runs,
                              cell_seed(config.master_seed, cell), config.j_tolerance)});
  }

  render_results_table(rows, out);
  if (!config.out_csv.empty()) {
    write_results_csv(rows, config.out_csv, effective_config_lines(config));
    out << "report written to " << config.out_csv << '\n';
  }
}

void cmd_reproduce(const std::string& data_dir, std::uint64_t master_seed,
                   const std::string& out_dir, std::ostream& out) {
  namespace fs = std::filesystem;
  const fs::path iris_path = fs::path(data_dir) / "iris.data";
  const fs::path bc_path = fs::path(data_dir) / "breast-cancer-wisconsin.data";
  std::vector<std::string> missing;
  if (!fs::exists(iris_path)) missing.push_back(iris_path.string());
  if (!fs::exists(bc_path)) missing.push_back(bc_path.string());
  if (!missing.empty()) {
    std::string msg = "missing dataset file(s):";
    for (const std::string& m : missing) msg += " " + m;
    throw std::runtime_error(msg);
  }
  fs::create_directories(out_dir);

  struct Cell {
    std::string dataset;
    LabeledDataSet data;
    bool regenerated;
  };
  std::vector<Cell> cells;
  for (std::uint64_t i = 0; i < 3; ++i) {
    const std::string name = "dataset" + std::to_string(i + 1);
    cells.push_back({name,
                     generate_gaussian_mixture(builtin_dataset_spec(name),
                                               dataset_seed(master_seed, i)),
                     true});
  }
  cells.push_back({"iris", load_delimited(iris_path.string(), ColumnSchema::iris()), false});
  cells.push_back(
      {"breast-cancer", load_delimited(bc_path.string(), ColumnSchema::breast_cancer()), false});

  const std::size_t runs = 100;
  std::vector<ResultRow> rows;
  std::uint64_t cell_index = 0;
  for (const Cell& cell : cells) {
    const std::size_t k = static_cast<std::size_t>(cell.data.k_true);
    UcscConfig u;
    u.k = k;
    KMeansConfig m;
    m.k = k;
    out << cell.dataset << ": ucsc..." << std::flush;
    rows.push_back({cell.dataset, "ucsc",
                    multi_run(make_ucsc_algorithm(u), cell.data, runs,
                              cell_seed(master_seed, cell_index++))});
    out << " kmeans..." << std::flush;
    rows.push_back({cell.dataset, "kmeans",
                    multi_run(make_kmeans_algorithm(m), cell.data, runs,
                              cell_seed(master_seed, cell_index++))});
    out << " done\n";
  }

  out << '\n';
  render_results_table(rows, out);

  // side-by-side with the bundled reference values
  out << '\n'
      << "comparison with reference results (J / best-J percent / best accuracy):\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-14s %-7s %12s %12s %9s %9s %7s %9s %9s  %s\n",
                "dataset", "algo", "J", "ref J", "dJ", "pct", "ref", "acc", "ref",
                "note");
  out << line;
  std::ostringstream csv_extra;
  csv_extra << "dataset,algorithm,best_j,ref_j,delta_j,best_j_percent,ref_percent,"
               "best_accuracy,ref_accuracy,note\n";
  for (const ReferenceRow& ref : kReferenceResults) {
    for (int a = 0; a < 2; ++a) {
      const std::string algo = a == 0 ? "ucsc" : "kmeans";
      const ResultRow* row = nullptr;
      for (const ResultRow& r : rows)
        if (r.dataset == ref.dataset && r.algorithm == algo) row = &r;
      if (!row) continue;
      const double ref_j = a == 0 ? ref.ucsc_j : ref.km_j;
      const double ref_pct = a == 0 ? ref.ucsc_pct : ref.km_pct;
      const double ref_acc = a == 0 ? ref.ucsc_acc : ref.km_acc;
      const char* note = ref.regenerated ? "regenerated data: property comparison only" : "";
      std::snprintf(line, sizeof line,
                    "%-14s %-7s %12.4f %12.4f %+9.4f %8.0f%% %6.0f%% %8.2f%% %8.2f%%  %s\n",
                    ref.dataset, algo.c_str(), row->stats.best_j, ref_j,
                    row->stats.best_j - ref_j, row->stats.best_j_percent, ref_pct,
                    100.0 * row->stats.best_accuracy, ref_acc, note);
      out << line;
      std::snprintf(line, sizeof line, "%s,%s,%.9g,%.9g,%.9g,%.4g,%.4g,%.6g,%.4g,%s\n",
                    ref.dataset, algo.c_str(), row->stats.best_j, ref_j,
                    row->stats.best_j - ref_j, row->stats.best_j_percent, ref_pct,
                    100.0 * row->stats.best_accuracy, ref_acc, note);
      csv_extra << line;
    }
  }

  ExperimentConfig effective;
  effective.source.spec = "reproduce";
  effective.master_seed = master_seed;
  const fs::path csv_path = fs::path(out_dir) / "reproduction.csv";
  write_results_csv(rows, csv_path.string(), effective_config_lines(effective));
  const fs::path cmp_path = fs::path(out_dir) / "reproduction_vs_reference.csv";
  std::ofstream cmp(cmp_path);
  if (!cmp) throw std::runtime_error(cmp_path.string() + ": cannot open for writing");
  cmp << "# seed=" << master_seed << "\n" << csv_extra.str();
  out << "\nreports written to " << csv_path.string() << " and " << cmp_path.string() << '\n';
}

}  // namespace ucsc
