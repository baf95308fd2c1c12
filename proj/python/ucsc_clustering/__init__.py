"""Clonal-selection clustering (UCSC) with a K-means baseline."""

from ._core import (
    ClusteringSolution,
    DataBounds,
    DataSet,
    GenerationRecord,
    KMeansConfig,
    KMeansIterationRecord,
    KMeansResult,
    LabeledDataSet,
    RunRecord,
    RunStats,
    UcscConfig,
    UcscResult,
    builtin_dataset,
    classification_accuracy,
    clone_counts,
    clustering_metric,
    compute_bounds,
    derive_run_seed,
    evaluate_antibody,
    generate_mixture,
    load_delimited,
    multi_run,
    normalize_affinities,
    run_kmeans,
    run_ucsc,
    save_delimited,
)

__all__ = [
    "ClusteringSolution",
    "DataBounds",
    "DataSet",
    "GenerationRecord",
    "KMeansConfig",
    "KMeansIterationRecord",
    "KMeansResult",
    "LabeledDataSet",
    "RunRecord",
    "RunStats",
    "UcscConfig",
    "UcscResult",
    "builtin_dataset",
    "classification_accuracy",
    "clone_counts",
    "clustering_metric",
    "compute_bounds",
    "derive_run_seed",
    "evaluate_antibody",
    "generate_mixture",
    "load_delimited",
    "multi_run",
    "normalize_affinities",
    "run_kmeans",
    "run_ucsc",
    "save_delimited",
]
