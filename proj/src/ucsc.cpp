#include "ucsc/ucsc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ucsc {

void UcscConfig::validate() const {
  if (n < 2) throw std::invalid_argument("UcscConfig: population size must be >= 2");
  if (!(beta > 0.0)) throw std::invalid_argument("UcscConfig: beta must be positive");
  if (l_replace >= n) throw std::invalid_argument("UcscConfig: l_replace must be < n");
  if (generations < 1) throw std::invalid_argument("UcscConfig: generations must be >= 1");
  if (k < 1) throw std::invalid_argument("UcscConfig: k must be >= 1");
  if (!(affinity_cap > 0.0)) throw std::invalid_argument("UcscConfig: affinity cap must be positive");
}

Antibody generate_random_antibody(const DataBounds& bounds, std::size_t k, Rng& rng) {
  const std::size_t d = bounds.lower.size();
  Antibody ab;
  ab.genome.resize(d * k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < d; ++i)
      ab.genome[c * d + i] = rng.uniform(bounds.lower[i], bounds.upper[i]);
  return ab;
}

std::vector<Antibody> init_population(const DataBounds& bounds, const UcscConfig& config,
                                      Rng& rng) {
  std::vector<Antibody> pop;
  pop.reserve(config.n);
  for (std::size_t i = 0; i < config.n; ++i)
    pop.push_back(generate_random_antibody(bounds, config.k, rng));
  return pop;
}

std::vector<std::size_t> clone_counts(std::size_t n, double beta) {
  if (n < 1) throw std::invalid_argument("clone_counts: n must be >= 1");
  if (!(beta > 0.0)) throw std::invalid_argument("clone_counts: beta must be positive");
  std::vector<std::size_t> counts(n);
  for (std::size_t l = 1; l <= n; ++l)
    counts[l - 1] = static_cast<std::size_t>(
        std::llround(beta * static_cast<double>(n) / static_cast<double>(l)));
  return counts;
}

std::vector<double> normalize_affinities(const std::vector<double>& raw) {
  if (raw.empty()) throw std::invalid_argument("normalize_affinities: empty input");
  for (double a : raw)
    if (a < 0.0) throw std::invalid_argument("normalize_affinities: negative affinity");
  const auto [lo_it, hi_it] = std::minmax_element(raw.begin(), raw.end());
  const double lo = *lo_it, hi = *hi_it;
  std::vector<double> out(raw.size(), 1.0);
  if (hi > lo)
    for (std::size_t i = 0; i < raw.size(); ++i) out[i] = (raw[i] - lo) / (hi - lo);
  return out;
}

Antibody hypermutate(const Antibody& antibody, double normalized_aff, double rho, Rng& rng) {
  if (normalized_aff < 0.0 || normalized_aff > 1.0)
    throw std::invalid_argument("hypermutate: normalized affinity outside [0,1]");
  if (rho < 0.0) throw std::invalid_argument("hypermutate: rho must be non-negative");
  const double alpha = rho * std::exp(-normalized_aff);
  Antibody out;
  out.genome.resize(antibody.genome.size());
  for (std::size_t i = 0; i < antibody.genome.size(); ++i)
    out.genome[i] = antibody.genome[i] + alpha * rng.gaussian();
  return out;  // affinity left unset: the cache is invalid after mutation
}

namespace {

CentroidSet genome_view(const Antibody& ab, std::size_t k, std::size_t d) {
  CentroidSet c;
  c.k = k;
  c.dims = d;
  c.centers = ab.genome;
  return c;
}

struct AffinityDesc {
  bool operator()(const Antibody& a, const Antibody& b) const { return a.affinity > b.affinity; }
};

}  // namespace

UcscResult run_ucsc(const DataSet& data, const UcscConfig& config) {
  config.validate();
  data.validate();
  if (config.k > data.n_points)
    throw std::invalid_argument(
        "run_ucsc: more clusters than points (every partition would have an empty cluster)");

  const std::size_t d = data.dims;
  const DataBounds bounds = compute_bounds(data);
  Rng rng(config.seed);

  std::vector<Antibody> pop = init_population(bounds, config, rng);
  const std::vector<std::size_t> per_rank = clone_counts(config.n, config.beta);
  const std::size_t total_clones =
      std::accumulate(per_rank.begin(), per_rank.end(), std::size_t{0});

  GenerationTrace trace;
  trace.reserve(config.generations);
  double best_so_far = std::numeric_limits<double>::infinity();

  // One evaluation applies one assignment + mean-update step; under the
  // Lamarckian default the updated centers replace the genome, so
  // re-evaluating a surviving antibody each generation keeps refining it.
  auto evaluate = [&](Antibody& ab) -> bool {
    const EvaluatedSolution ev =
        evaluate_antibody(data, genome_view(ab, config.k, d), config.affinity_cap);
    if (config.lamarckian) ab.genome = ev.centroids.centers;
    ab.j_value = ev.j_value;
    ab.affinity = ev.affinity;
    ab.has_empty_cluster = ev.has_empty_cluster;
    ab.evaluated = true;
    if (!ev.has_empty_cluster && ev.j_value < best_so_far) best_so_far = ev.j_value;
    return ev.has_empty_cluster;
  };

  for (std::size_t gen = 0; gen < config.generations; ++gen) {
    std::size_t empty_evals = 0;

    for (Antibody& ab : pop) empty_evals += evaluate(ab);
    std::stable_sort(pop.begin(), pop.end(), AffinityDesc{});

    std::vector<double> affs(config.n);
    for (std::size_t i = 0; i < config.n; ++i) affs[i] = pop[i].affinity;
    const std::vector<double> norm = normalize_affinities(affs);

    std::vector<Antibody> mutants;
    mutants.reserve(total_clones);
    for (std::size_t rank = 0; rank < config.n; ++rank)
      for (std::size_t c = 0; c < per_rank[rank]; ++c)
        mutants.push_back(hypermutate(pop[rank], norm[rank], bounds.rho, rng));
    for (Antibody& m : mutants) empty_evals += evaluate(m);

    // consolidate parents and mutants, keep the n best
    pop.insert(pop.end(), std::make_move_iterator(mutants.begin()),
               std::make_move_iterator(mutants.end()));
    std::stable_sort(pop.begin(), pop.end(), AffinityDesc{});
    pop.resize(config.n);

    // diversity: fresh random antibodies replace the l_replace weakest
    for (std::size_t i = 0; i < config.l_replace; ++i) {
      Antibody fresh = generate_random_antibody(bounds, config.k, rng);
      empty_evals += evaluate(fresh);
      pop[config.n - 1 - i] = std::move(fresh);
    }
    std::stable_sort(pop.begin(), pop.end(), AffinityDesc{});

    double mean_j = 0.0;
    for (const Antibody& ab : pop) mean_j += ab.j_value;
    mean_j /= static_cast<double>(config.n);
    trace.push_back({best_so_far,
                     pop.front().affinity > 0.0 ? pop.front().j_value
                                                : std::numeric_limits<double>::infinity(),
                     mean_j, pop.front().affinity, empty_evals, total_clones, pop.size()});
  }

  // Final answer: the highest-affinity member of P with affinities taken at
  // their settled values. Each member's evaluation is iterated to
  // stationarity first; a clone selected in the last generation may still be
  // mid-descent, and its one-step snapshot is neither reproducible
  // run-to-run nor an honest ranking of the basin it is falling into.
  auto stabilize = [&](const Antibody& ab) {
    EvaluatedSolution ev =
        evaluate_antibody(data, genome_view(ab, config.k, d), config.affinity_cap);
    for (std::size_t step = 0; step < data.n_points + 100; ++step) {
      EvaluatedSolution next = evaluate_antibody(data, ev.centroids, config.affinity_cap);
      const bool stable = next.assignment.cluster_of == ev.assignment.cluster_of;
      ev = std::move(next);
      if (stable) break;
    }
    return ev;
  };
  EvaluatedSolution final_eval = stabilize(pop.front());
  for (std::size_t i = 1; i < config.n; ++i) {
    EvaluatedSolution candidate = stabilize(pop[i]);
    if (candidate.affinity > final_eval.affinity) final_eval = std::move(candidate);
  }
  UcscResult result;
  result.solution.centroids = final_eval.centroids;
  result.solution.assignment = final_eval.assignment;
  result.solution.j_value = final_eval.j_value;
  result.solution.seed = config.seed;
  result.solution.iterations = config.generations;
  result.trace = std::move(trace);
  return result;
}

}  // namespace ucsc
