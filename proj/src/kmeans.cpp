#include "ucsc/kmeans.hpp"

#include <numeric>
#include <stdexcept>

#include "ucsc/rng.hpp"

namespace ucsc {

void KMeansConfig::validate() const {
  if (k < 1) throw std::invalid_argument("KMeansConfig: k must be >= 1");
  if (max_iterations < 1)
    throw std::invalid_argument("KMeansConfig: max_iterations must be >= 1");
}

namespace {

CentroidSet forgy_init(const DataSet& data, std::size_t k, Rng& rng) {
  // partial Fisher-Yates: k distinct point indices
  std::vector<std::size_t> idx(data.n_points);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  CentroidSet c;
  c.k = k;
  c.dims = data.dims;
  c.centers.resize(k * data.dims);
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(idx[i], idx[i + rng.index(data.n_points - i)]);
    const double* p = data.point(idx[i]);
    std::copy(p, p + data.dims, c.center(i));
  }
  return c;
}

CentroidSet uniform_init(const DataSet& data, std::size_t k, Rng& rng) {
  const DataBounds b = compute_bounds(data);
  CentroidSet c;
  c.k = k;
  c.dims = data.dims;
  c.centers.resize(k * data.dims);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t d = 0; d < data.dims; ++d)
      c.center(i)[d] = rng.uniform(b.lower[d], b.upper[d]);
  return c;
}

double sum_squared_error(const DataSet& data, const Assignment& a, const CentroidSet& c) {
  double sse = 0.0;
  for (std::size_t j = 0; j < data.n_points; ++j)
    sse += squared_distance(data.point(j), c.center(static_cast<std::size_t>(a.cluster_of[j])),
                            data.dims);
  return sse;
}

}  // namespace

KMeansResult run_kmeans(const DataSet& data, const KMeansConfig& config) {
  config.validate();
  data.validate();
  if (config.k > data.n_points)
    throw std::invalid_argument("run_kmeans: more clusters than points");

  Rng rng(config.seed);
  CentroidSet centers = config.init == KMeansConfig::Init::kForgy
                            ? forgy_init(data, config.k, rng)
                            : uniform_init(data, config.k, rng);

  KMeansResult result;
  Assignment assignment;
  Assignment previous;
  bool have_previous = false;
  std::size_t iterations = 0;

  while (iterations < config.max_iterations) {
    ++iterations;
    assignment = assign_points(data, centers);

    bool reseeded = false;
    for (int guard = 0; assignment.has_empty_cluster() && guard < 64; ++guard) {
      for (std::size_t c = 0; c < config.k; ++c) {
        if (assignment.counts[c] != 0) continue;
        const double* p = data.point(rng.index(data.n_points));
        std::copy(p, p + data.dims, centers.center(c));
        reseeded = true;
      }
      assignment = assign_points(data, centers);
    }

    if (have_previous && assignment.cluster_of == previous.cluster_of) break;

    CentroidUpdate u = compute_centroids(data, assignment, config.k);
    for (std::size_t c = 0; c < config.k; ++c)
      if (u.is_empty[c])  // only reachable when reseeding ran out of tries
        std::copy(centers.center(c), centers.center(c) + data.dims, u.centroids.center(c));
    centers = std::move(u.centroids);

    result.iterations.push_back({sum_squared_error(data, assignment, centers), reseeded});
    previous = assignment;
    have_previous = true;
  }

  result.solution.j_value = clustering_metric(data, assignment, centers);
  result.solution.centroids = std::move(centers);
  result.solution.assignment = std::move(assignment);
  result.solution.seed = config.seed;
  result.solution.iterations = iterations;
  return result;
}

}  // namespace ucsc
