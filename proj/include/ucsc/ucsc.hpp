#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ucsc/clustering.hpp"
#include "ucsc/dataset.hpp"
#include "ucsc/rng.hpp"

namespace ucsc {

/// Candidate solution: K cluster centers flattened center-major (the first
/// d entries are center 1, the next d center 2, ...).
struct Antibody {
  std::vector<double> genome;
  double affinity = 0.0;
  double j_value = 0.0;
  bool has_empty_cluster = false;
  bool evaluated = false;
};

struct UcscConfig {
  std::size_t n = 10;            // population size
  double beta = 5.0;             // clonal factor
  std::size_t l_replace = 4;     // fresh antibodies injected per generation
  std::size_t generations = 30;
  std::size_t k = 1;             // cluster count
  std::uint64_t seed = 0;
  bool lamarckian = true;        // write mean-updated centers back into the genome
  double affinity_cap = kDefaultAffinityCap;

  void validate() const;
};

/// Per-generation progress record. best_j is the best J found so far in the
/// run (non-increasing by construction); pop_best_j is the current
/// population's best and may wobble while a member is still descending.
struct GenerationRecord {
  double best_j;
  double pop_best_j;
  double mean_j;
  double best_affinity;
  std::size_t empty_evaluations;  // evaluations this generation with an empty cluster
  std::size_t clones;             // clones evaluated this generation
  std::size_t population;         // population size at the generation boundary
};

using GenerationTrace = std::vector<GenerationRecord>;

struct UcscResult {
  ClusteringSolution solution;
  GenerationTrace trace;
};

/// Uniform draw inside the data bounds, one coordinate at a time
/// (center-major order). Affinity is unset until evaluation.
Antibody generate_random_antibody(const DataBounds& bounds, std::size_t k, Rng& rng);

std::vector<Antibody> init_population(const DataBounds& bounds, const UcscConfig& config,
                                      Rng& rng);

/// Clones for rank l (1-based, rank 1 = highest affinity):
/// round(beta*n / l), rounding half away from zero.
std::vector<std::size_t> clone_counts(std::size_t n, double beta);

/// Min-max normalization onto [0,1]; a degenerate collection (max == min)
/// maps everything to 1 so a converged population mutates least.
std::vector<double> normalize_affinities(const std::vector<double>& raw);

/// Gaussian perturbation of every genome entry, scaled by
/// alpha = rho * exp(-normalized_aff). No clamping to the data bounds;
/// out-of-range centers die through empty-cluster zero affinity.
Antibody hypermutate(const Antibody& antibody, double normalized_aff, double rho, Rng& rng);

/// The full clonal-selection loop. Each generation: evaluate the population,
/// sort by affinity, clone rank-proportionally, hypermutate every clone with
/// its parent's normalized affinity, evaluate the clones, re-select the n
/// best of parents+clones, then replace the l_replace weakest with fresh
/// random antibodies. The best antibody is evaluated once more at the end
/// and returned.
UcscResult run_ucsc(const DataSet& data, const UcscConfig& config);

}  // namespace ucsc
