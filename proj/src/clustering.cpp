#include "ucsc/clustering.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ucsc {

double squared_distance(const double* a, const double* b, std::size_t dims) {
  double s = 0.0;
  for (std::size_t i = 0; i < dims; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

namespace {

void check_dims(const DataSet& data, const CentroidSet& c) {
  if (data.dims != c.dims)
    throw std::invalid_argument("dimension mismatch between data and centroids");
  if (c.k < 1) throw std::invalid_argument("need at least one centroid");
  if (c.centers.size() != c.k * c.dims)
    throw std::invalid_argument("centroid buffer does not match k*dims");
}

void check_assignment(const DataSet& data, const Assignment& a, std::size_t k) {
  if (a.cluster_of.size() != data.n_points)
    throw std::invalid_argument("assignment does not cover the dataset");
  for (int c : a.cluster_of)
    if (c < 0 || static_cast<std::size_t>(c) >= k)
      throw std::invalid_argument("assignment index out of range");
}

}  // namespace

Assignment assign_points(const DataSet& data, const CentroidSet& centroids) {
  check_dims(data, centroids);
  Assignment a;
  a.cluster_of.resize(data.n_points);
  a.counts.assign(centroids.k, 0);
  for (std::size_t j = 0; j < data.n_points; ++j) {
    const double* x = data.point(j);
    int best = 0;
    double best_d2 = squared_distance(x, centroids.center(0), data.dims);
    for (std::size_t i = 1; i < centroids.k; ++i) {
      const double d2 = squared_distance(x, centroids.center(i), data.dims);
      if (d2 < best_d2) {  // strict: ties keep the lowest index
        best_d2 = d2;
        best = static_cast<int>(i);
      }
    }
    a.cluster_of[j] = best;
    ++a.counts[static_cast<std::size_t>(best)];
  }
  return a;
}

CentroidUpdate compute_centroids(const DataSet& data, const Assignment& assignment,
                                 std::size_t k) {
  check_assignment(data, assignment, k);
  CentroidUpdate u;
  u.centroids.k = k;
  u.centroids.dims = data.dims;
  u.centroids.centers.assign(k * data.dims, 0.0);
  u.is_empty.assign(k, 0);
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t j = 0; j < data.n_points; ++j) {
    const std::size_t c = static_cast<std::size_t>(assignment.cluster_of[j]);
    ++counts[c];
    const double* x = data.point(j);
    double* m = u.centroids.center(c);
    for (std::size_t i = 0; i < data.dims; ++i) m[i] += x[i];
  }
  for (std::size_t c = 0; c < k; ++c) {
    double* m = u.centroids.center(c);
    if (counts[c] == 0) {
      u.is_empty[c] = 1;
      for (std::size_t i = 0; i < data.dims; ++i)
        m[i] = std::numeric_limits<double>::quiet_NaN();
    } else {
      for (std::size_t i = 0; i < data.dims; ++i) m[i] /= static_cast<double>(counts[c]);
    }
  }
  return u;
}

double clustering_metric(const DataSet& data, const Assignment& assignment,
                         const CentroidSet& centroids) {
  check_dims(data, centroids);
  check_assignment(data, assignment, centroids.k);
  double j_value = 0.0;
  for (std::size_t j = 0; j < data.n_points; ++j) {
    const std::size_t c = static_cast<std::size_t>(assignment.cluster_of[j]);
    j_value += std::sqrt(squared_distance(data.point(j), centroids.center(c), data.dims));
  }
  return j_value;
}

double affinity_from_j(double j_value, bool has_empty_cluster, double zero_j_cap) {
  if (j_value < 0.0) throw std::invalid_argument("affinity_from_j: negative J");
  if (has_empty_cluster) return 0.0;
  if (j_value == 0.0) return zero_j_cap;
  return 1.0 / j_value;
}

EvaluatedSolution evaluate_antibody(const DataSet& data, const CentroidSet& centers,
                                    double zero_j_cap) {
  EvaluatedSolution out;
  out.assignment = assign_points(data, centers);
  CentroidUpdate u = compute_centroids(data, out.assignment, centers.k);
  for (std::size_t c = 0; c < centers.k; ++c) {
    if (!u.is_empty[c]) continue;
    // an empty cluster keeps its encoded center; zero affinity kills the
    // antibody rather than repairing it
    double* m = u.centroids.center(c);
    const double* enc = centers.center(c);
    for (std::size_t i = 0; i < centers.dims; ++i) m[i] = enc[i];
    out.has_empty_cluster = true;
  }
  out.centroids = std::move(u.centroids);
  out.j_value = clustering_metric(data, out.assignment, out.centroids);
  out.affinity = affinity_from_j(out.j_value, out.has_empty_cluster, zero_j_cap);
  return out;
}

}  // namespace ucsc
