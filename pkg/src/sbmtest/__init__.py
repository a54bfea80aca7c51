"""Two-sample testing for stochastic block models.

Decides whether two observed networks on a common node set were generated
by the same stochastic block model, using the largest singular value of a
geometric-mean-centered residual matrix calibrated against the
Tracy-Widom(1) law, with a parametric bootstrap finite-sample correction.
"""

__version__ = "0.1.0"

from .errors import (
    AlignmentError,
    ClusteringError,
    ConfigurationError,
    DegenerateBootstrapError,
    DegenerateCommunityError,
    EdgeListParseError,
    NumericalError,
    SbmTestError,
)
from .graph_model import (
    AdjacencyMatrix,
    BlockProbabilityMatrix,
    CommunityLabeling,
    edge_probability_matrix,
    sample_adjacency,
    sample_sbm,
)
from .community import (
    KSelectionStep,
    KSelectionTrace,
    estimate_block_matrix,
    min_row_separation,
    one_sample_statistic,
    select_num_communities,
    spectral_clustering,
)
from .tracy_widom import (
    TracyWidom1Table,
    tw1_cdf,
    tw1_moments,
    tw1_quantile,
)
from .two_sample_test import (
    ResidualMatrix,
    TestConfig,
    TestReport,
    bootstrap_correct,
    extreme_eigenvalues,
    residual_matrix,
    run_two_sample_test,
    test_statistic,
)
from .sim_harness import (
    ExperimentTable,
    Scenario,
    null_density_experiment,
    run_power_experiment,
    run_profile,
    run_size_experiment,
)

__all__ = [
    "AdjacencyMatrix",
    "AlignmentError",
    "BlockProbabilityMatrix",
    "ClusteringError",
    "CommunityLabeling",
    "ConfigurationError",
    "DegenerateBootstrapError",
    "DegenerateCommunityError",
    "EdgeListParseError",
    "ExperimentTable",
    "KSelectionStep",
    "KSelectionTrace",
    "NumericalError",
    "ResidualMatrix",
    "SbmTestError",
    "Scenario",
    "TestConfig",
    "TestReport",
    "TracyWidom1Table",
    "bootstrap_correct",
    "edge_probability_matrix",
    "estimate_block_matrix",
    "extreme_eigenvalues",
    "min_row_separation",
    "null_density_experiment",
    "one_sample_statistic",
    "residual_matrix",
    "run_power_experiment",
    "run_profile",
    "run_size_experiment",
    "run_two_sample_test",
    "sample_adjacency",
    "sample_sbm",
    "select_num_communities",
    "spectral_clustering",
    "test_statistic",
    "tw1_cdf",
    "tw1_moments",
    "tw1_quantile",
]
