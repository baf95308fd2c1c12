#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ucsc/clustering.hpp"
#include "ucsc/dataset.hpp"
#include "ucsc/evaluation.hpp"
#include "ucsc/experiment.hpp"
#include "ucsc/kmeans.hpp"
#include "ucsc/rng.hpp"
#include "ucsc/ucsc.hpp"

namespace py = pybind11;

namespace {

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

ucsc::DataSet dataset_from_array(const DoubleArray& points) {
  if (points.ndim() != 2) throw std::invalid_argument("points must be a 2-D array");
  ucsc::DataSet d;
  d.n_points = static_cast<std::size_t>(points.shape(0));
  d.dims = static_cast<std::size_t>(points.shape(1));
  d.values.assign(points.data(), points.data() + d.n_points * d.dims);
  d.validate();
  return d;
}

py::array_t<double> array_from(const std::vector<double>& v, std::size_t rows,
                               std::size_t cols) {
  py::array_t<double> out({rows, cols});
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

ucsc::CentroidSet centroids_from_array(const DoubleArray& centers) {
  if (centers.ndim() != 2) throw std::invalid_argument("centers must be a 2-D array");
  ucsc::CentroidSet c;
  c.k = static_cast<std::size_t>(centers.shape(0));
  c.dims = static_cast<std::size_t>(centers.shape(1));
  c.centers.assign(centers.data(), centers.data() + c.k * c.dims);
  return c;
}

ucsc::ColumnSchema schema_by_name(const std::string& name, const std::string& missing,
                                  const std::string& marker) {
  ucsc::ColumnSchema s;
  if (name == "iris") s = ucsc::ColumnSchema::iris();
  else if (name == "breast-cancer") s = ucsc::ColumnSchema::breast_cancer();
  else if (name == "trailing-label") s = ucsc::ColumnSchema::trailing_label();
  else throw std::invalid_argument("unknown schema '" + name + "'");
  if (missing == "reject") s.missing = ucsc::MissingValuePolicy::kReject;
  else if (missing == "drop") s.missing = ucsc::MissingValuePolicy::kDropRows;
  else if (missing == "impute") s.missing = ucsc::MissingValuePolicy::kImputeMedian;
  else throw std::invalid_argument("unknown missing policy '" + missing + "'");
  s.missing_marker = marker;
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Clonal-selection clustering (UCSC) with a K-means baseline";

  py::class_<ucsc::DataSet>(m, "DataSet")
      .def(py::init(&dataset_from_array), py::arg("points"))
      .def_property_readonly("n_points", [](const ucsc::DataSet& d) { return d.n_points; })
      .def_property_readonly("dims", [](const ucsc::DataSet& d) { return d.dims; })
      .def_property_readonly("points", [](const ucsc::DataSet& d) {
        return array_from(d.values, d.n_points, d.dims);
      });

  py::class_<ucsc::LabeledDataSet>(m, "LabeledDataSet")
      .def(py::init([](const DoubleArray& points, const std::vector<int>& labels, int k_true) {
             ucsc::LabeledDataSet l;
             l.data = dataset_from_array(points);
             l.labels = labels;
             l.k_true = k_true;
             l.validate();
             return l;
           }),
           py::arg("points"), py::arg("labels"), py::arg("k_true"))
      .def_readonly("data", &ucsc::LabeledDataSet::data)
      .def_readonly("labels", &ucsc::LabeledDataSet::labels)
      .def_readonly("k_true", &ucsc::LabeledDataSet::k_true);

  py::class_<ucsc::DataBounds>(m, "DataBounds")
      .def_readonly("lower", &ucsc::DataBounds::lower)
      .def_readonly("upper", &ucsc::DataBounds::upper)
      .def_readonly("rho", &ucsc::DataBounds::rho);

  py::class_<ucsc::UcscConfig>(m, "UcscConfig")
      .def(py::init<>())
      .def_readwrite("n", &ucsc::UcscConfig::n)
      .def_readwrite("beta", &ucsc::UcscConfig::beta)
      .def_readwrite("l_replace", &ucsc::UcscConfig::l_replace)
      .def_readwrite("generations", &ucsc::UcscConfig::generations)
      .def_readwrite("k", &ucsc::UcscConfig::k)
      .def_readwrite("seed", &ucsc::UcscConfig::seed)
      .def_readwrite("lamarckian", &ucsc::UcscConfig::lamarckian);

  py::class_<ucsc::KMeansConfig> km(m, "KMeansConfig");
  km.def(py::init<>())
      .def_readwrite("k", &ucsc::KMeansConfig::k)
      .def_readwrite("max_iterations", &ucsc::KMeansConfig::max_iterations)
      .def_readwrite("seed", &ucsc::KMeansConfig::seed)
      .def_readwrite("init", &ucsc::KMeansConfig::init);
  py::enum_<ucsc::KMeansConfig::Init>(km, "Init")
      .value("forgy", ucsc::KMeansConfig::Init::kForgy)
      .value("uniform_in_bounds", ucsc::KMeansConfig::Init::kUniformInBounds);

  py::class_<ucsc::ClusteringSolution>(m, "ClusteringSolution")
      .def_property_readonly("centers",
                             [](const ucsc::ClusteringSolution& s) {
                               return array_from(s.centroids.centers, s.centroids.k,
                                                 s.centroids.dims);
                             })
      .def_property_readonly("labels",
                             [](const ucsc::ClusteringSolution& s) {
                               return s.assignment.cluster_of;
                             })
      .def_readonly("j_value", &ucsc::ClusteringSolution::j_value)
      .def_readonly("seed", &ucsc::ClusteringSolution::seed)
      .def_readonly("iterations", &ucsc::ClusteringSolution::iterations);

  py::class_<ucsc::GenerationRecord>(m, "GenerationRecord")
      .def_readonly("best_j", &ucsc::GenerationRecord::best_j)
      .def_readonly("pop_best_j", &ucsc::GenerationRecord::pop_best_j)
      .def_readonly("mean_j", &ucsc::GenerationRecord::mean_j)
      .def_readonly("best_affinity", &ucsc::GenerationRecord::best_affinity)
      .def_readonly("empty_evaluations", &ucsc::GenerationRecord::empty_evaluations)
      .def_readonly("clones", &ucsc::GenerationRecord::clones)
      .def_readonly("population", &ucsc::GenerationRecord::population);

  py::class_<ucsc::UcscResult>(m, "UcscResult")
      .def_readonly("solution", &ucsc::UcscResult::solution)
      .def_readonly("trace", &ucsc::UcscResult::trace);

  py::class_<ucsc::KMeansIterationRecord>(m, "KMeansIterationRecord")
      .def_readonly("sse", &ucsc::KMeansIterationRecord::sse)
      .def_readonly("reseeded", &ucsc::KMeansIterationRecord::reseeded);

  py::class_<ucsc::KMeansResult>(m, "KMeansResult")
      .def_readonly("solution", &ucsc::KMeansResult::solution)
      .def_readonly("iterations", &ucsc::KMeansResult::iterations);

  py::class_<ucsc::RunRecord>(m, "RunRecord")
      .def_readonly("j", &ucsc::RunRecord::j)
      .def_readonly("accuracy", &ucsc::RunRecord::accuracy)
      .def_readonly("seed", &ucsc::RunRecord::seed)
      .def_readonly("iterations", &ucsc::RunRecord::iterations);

  py::class_<ucsc::RunStats>(m, "RunStats")
      .def_readonly("records", &ucsc::RunStats::records)
      .def_readonly("best_j", &ucsc::RunStats::best_j)
      .def_readonly("best_accuracy", &ucsc::RunStats::best_accuracy)
      .def_readonly("accuracy_at_best_j", &ucsc::RunStats::accuracy_at_best_j)
      .def_readonly("best_j_percent", &ucsc::RunStats::best_j_percent)
      .def_readonly("runs", &ucsc::RunStats::runs)
      .def_readonly("master_seed", &ucsc::RunStats::master_seed);

  m.def("compute_bounds", &ucsc::compute_bounds, py::arg("data"));
  m.def(
      "generate_mixture",
      [](const std::vector<std::tuple<std::vector<double>, std::vector<double>, std::size_t>>&
             components,
         std::uint64_t seed) {
        ucsc::GaussianMixtureSpec spec;
        for (const auto& [mean, variance, count] : components)
          spec.components.push_back({mean, variance, count});
        return ucsc::generate_gaussian_mixture(spec, seed);
      },
      py::arg("components"), py::arg("seed"),
      "Sample a diagonal-covariance Gaussian mixture; components are (mean, variance, count)");
  m.def(
      "builtin_dataset",
      [](const std::string& name, std::uint64_t seed) {
        return ucsc::generate_gaussian_mixture(ucsc::builtin_dataset_spec(name), seed);
      },
      py::arg("name"), py::arg("seed"));
  m.def(
      "load_delimited",
      [](const std::string& path, const std::string& schema, const std::string& missing,
         const std::string& marker) {
        return ucsc::load_delimited(path, schema_by_name(schema, missing, marker));
      },
      py::arg("path"), py::arg("schema") = "trailing-label", py::arg("missing") = "impute",
      py::arg("missing_marker") = "?");
  m.def("save_delimited", &ucsc::save_delimited, py::arg("data"), py::arg("path"));

  m.def("clone_counts", &ucsc::clone_counts, py::arg("n"), py::arg("beta"));
  m.def("normalize_affinities", &ucsc::normalize_affinities, py::arg("raw"));
  m.def("derive_run_seed", &ucsc::derive_run_seed, py::arg("master_seed"), py::arg("index"));
  m.def(
      "clustering_metric",
      [](const ucsc::DataSet& data, const std::vector<int>& labels, const DoubleArray& centers) {
        const ucsc::CentroidSet c = centroids_from_array(centers);
        ucsc::Assignment a;
        a.cluster_of = labels;
        a.counts.assign(c.k, 0);
        for (int l : labels) {
          if (l < 0 || static_cast<std::size_t>(l) >= c.k)
            throw std::invalid_argument("label out of range");
          ++a.counts[static_cast<std::size_t>(l)];
        }
        return ucsc::clustering_metric(data, a, c);
      },
      py::arg("data"), py::arg("labels"), py::arg("centers"));
  m.def(
      "evaluate_antibody",
      [](const ucsc::DataSet& data, const DoubleArray& centers) {
        const ucsc::EvaluatedSolution ev =
            ucsc::evaluate_antibody(data, centroids_from_array(centers));
        return py::make_tuple(array_from(ev.centroids.centers, ev.centroids.k, ev.centroids.dims),
                              ev.assignment.cluster_of, ev.j_value, ev.affinity,
                              ev.has_empty_cluster);
      },
      py::arg("data"), py::arg("centers"),
      "Returns (updated_centers, labels, j_value, affinity, has_empty_cluster)");

  m.def("run_ucsc", &ucsc::run_ucsc, py::arg("data"), py::arg("config"));
  m.def("run_kmeans", &ucsc::run_kmeans, py::arg("data"), py::arg("config"));
  m.def("classification_accuracy", &ucsc::classification_accuracy, py::arg("predicted"),
        py::arg("truth"), py::arg("k"));
  m.def(
      "multi_run",
      [](const std::string& algorithm, const ucsc::LabeledDataSet& data, std::size_t runs,
         std::uint64_t master_seed, double j_tolerance, std::size_t k,
         const ucsc::UcscConfig* ucsc_config, const ucsc::KMeansConfig* kmeans_config) {
        const std::size_t kk = k > 0 ? k : static_cast<std::size_t>(data.k_true);
        if (algorithm == "ucsc") {
          ucsc::UcscConfig cfg = ucsc_config ? *ucsc_config : ucsc::UcscConfig{};
          cfg.k = kk;
          return ucsc::multi_run(
              [cfg](const ucsc::DataSet& d, std::uint64_t seed) mutable {
                cfg.seed = seed;
                return ucsc::run_ucsc(d, cfg).solution;
              },
              data, runs, master_seed, j_tolerance);
        }
        if (algorithm == "kmeans") {
          ucsc::KMeansConfig cfg = kmeans_config ? *kmeans_config : ucsc::KMeansConfig{};
          cfg.k = kk;
          return ucsc::multi_run(
              [cfg](const ucsc::DataSet& d, std::uint64_t seed) mutable {
                cfg.seed = seed;
                return ucsc::run_kmeans(d, cfg).solution;
              },
              data, runs, master_seed, j_tolerance);
        }
        throw std::invalid_argument("algorithm must be 'ucsc' or 'kmeans'");
      },
      py::arg("algorithm"), py::arg("data"), py::arg("runs"), py::arg("master_seed") = 0,
      py::arg("j_tolerance") = ucsc::kDefaultJTolerance, py::arg("k") = 0,
      py::arg("ucsc_config") = nullptr, py::arg("kmeans_config") = nullptr);
}
