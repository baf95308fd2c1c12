// ucsc-bench: batch front door for the clustering benchmark.
//
//   ucsc-bench generate dataset2 --seed 7 --out ds2.csv
//   ucsc-bench run --dataset iris.data --algo both --runs 100 --out report.csv
//   ucsc-bench reproduce --data-dir data --out-dir results
//
// Flags can also come from a key=value config file (--config); command-line
// flags win over the file.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ucsc/experiment.hpp"

namespace {

ucsc::MissingValuePolicy parse_policy(const std::string& name) {
  if (name == "reject") return ucsc::MissingValuePolicy::kReject;
  if (name == "drop") return ucsc::MissingValuePolicy::kDropRows;
  if (name == "impute") return ucsc::MissingValuePolicy::kImputeMedian;
  throw CLI::ValidationError("--missing", "expected reject, drop or impute");
}

ucsc::ColumnSchema parse_schema(const std::string& name, const std::string& missing,
                                const std::string& marker) {
  ucsc::ColumnSchema schema;
  if (name == "iris") schema = ucsc::ColumnSchema::iris();
  else if (name == "breast-cancer") schema = ucsc::ColumnSchema::breast_cancer();
  else if (name == "trailing-label") schema = ucsc::ColumnSchema::trailing_label();
  else throw CLI::ValidationError("--schema", "expected trailing-label, iris or breast-cancer");
  schema.missing = parse_policy(missing);
  schema.missing_marker = marker;
  return schema;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clonal-selection clustering benchmark (UCSC vs K-means)"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file; command-line flags win");
  app.allow_config_extras(CLI::config_extras_mode::error);

  std::string dataset;
  std::string algo = "both";
  std::string schema_name = "trailing-label";
  std::string missing = "impute";
  std::string marker = "?";
  std::string out_path;
  std::uint64_t seed = 0;
  std::size_t k = 0;
  std::size_t runs = 100;
  double j_tolerance = ucsc::kDefaultJTolerance;
  ucsc::UcscConfig ucsc_cfg;
  ucsc::KMeansConfig km_cfg;
  std::string km_init = "forgy";
  bool baldwinian = false;

  CLI::App* gen = app.add_subcommand("generate", "write a built-in synthetic dataset to a file");
  std::string gen_spec;
  gen->add_option("spec", gen_spec, "dataset1, dataset2 or dataset3")->required();
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--out", out_path, "output file path")->required();

  CLI::App* run = app.add_subcommand("run", "multi-run experiment on one dataset");
  run->add_option("--dataset", dataset, "built-in spec name or path to a delimited file")
      ->required();
  run->add_option("--algo", algo, "ucsc, kmeans or both")
      ->check(CLI::IsMember({"ucsc", "kmeans", "both"}));
  run->add_option("--k", k, "cluster count (default: the dataset's class count)");
  run->add_option("--runs", runs, "independent runs per algorithm");
  run->add_option("--seed", seed, "master seed; per-run seeds derive from it");
  run->add_option("--generations", ucsc_cfg.generations, "ucsc generations");
  run->add_option("--pop-size", ucsc_cfg.n, "ucsc population size");
  run->add_option("--beta", ucsc_cfg.beta, "ucsc clonal factor");
  run->add_option("--replace", ucsc_cfg.l_replace, "ucsc diversity replacements per generation");
  run->add_flag("--baldwinian", baldwinian,
                "score on mean-updated centers without writing them back");
  run->add_option("--max-iters", km_cfg.max_iterations, "kmeans iteration cap");
  run->add_option("--init", km_init, "kmeans initialization")
      ->check(CLI::IsMember({"forgy", "uniform"}));
  run->add_option("--missing", missing, "missing-value policy: reject, drop or impute")
      ->check(CLI::IsMember({"reject", "drop", "impute"}));
  run->add_option("--missing-marker", marker, "token that marks a missing value");
  run->add_option("--schema", schema_name, "file schema: trailing-label, iris or breast-cancer")
      ->check(CLI::IsMember({"trailing-label", "iris", "breast-cancer"}));
  run->add_option("--j-tolerance", j_tolerance, "relative tolerance for best-J percentages");
  run->add_option("--out", out_path, "CSV report path");

  CLI::App* rep = app.add_subcommand("reproduce", "full benchmark on all five datasets");
  std::string data_dir = "data";
  std::string rep_out_dir = "results";
  rep->add_option("--data-dir", data_dir, "directory with iris.data and breast-cancer-wisconsin.data");
  rep->add_option("--seed", seed, "master seed");
  rep->add_option("--out-dir", rep_out_dir, "directory for report files");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      ucsc::cmd_generate(gen_spec, seed, out_path, std::cout);
    } else if (run->parsed()) {
      ucsc::ExperimentConfig cfg;
      cfg.source.spec = dataset;
      cfg.source.schema = parse_schema(schema_name, missing, marker);
      cfg.algo = algo == "ucsc"   ? ucsc::AlgoSelection::kUcsc
                 : algo == "kmeans" ? ucsc::AlgoSelection::kKmeans
                                    : ucsc::AlgoSelection::kBoth;
      cfg.k = k;
      cfg.runs = runs;
      cfg.master_seed = seed;
      cfg.j_tolerance = j_tolerance;
      cfg.ucsc = ucsc_cfg;
      cfg.ucsc.lamarckian = !baldwinian;
      cfg.kmeans = km_cfg;
      cfg.kmeans.init = km_init == "uniform" ? ucsc::KMeansConfig::Init::kUniformInBounds
                                             : ucsc::KMeansConfig::Init::kForgy;
      cfg.out_csv = out_path;
      ucsc::cmd_run(cfg, std::cout);
    } else if (rep->parsed()) {
      ucsc::cmd_reproduce(data_dir, seed, rep_out_dir, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
