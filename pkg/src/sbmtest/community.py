"""Community estimation from a single adjacency matrix.

Covers spectral clustering at a given community count, the block
probability MLE, the one-sample extreme-eigenvalue statistic, and a
sequential procedure that selects the number of communities by testing
K0 = 1, 2, ... until the first non-rejection.
"""

from dataclasses import dataclass

import numpy as np
from sklearn.cluster import KMeans

from .errors import ClusteringError, ConfigurationError, DegenerateCommunityError
from .graph_model import AdjacencyMatrix, BlockProbabilityMatrix, CommunityLabeling
from .seeds import Seed, seed_sequence, small_int
from .tracy_widom import tw1_quantile

KMEANS_RESTARTS = 20
KMEANS_MAX_ITER = 100
CLUSTERING_ATTEMPTS = 5


def estimate_block_matrix(
    A: AdjacencyMatrix, g: CommunityLabeling
) -> BlockProbabilityMatrix:
    """Maximum likelihood estimate of B from (A, g).

    Bhat_uv is the edge frequency over all (i, j) pairs with i in
    community u, j in community v; the diagonal uses ordered within-block
    pairs, denominator n_u (n_u - 1).
    """
    if g.n != A.n:
        raise ConfigurationError(f"labeling has {g.n} nodes, adjacency has {A.n}")
    k = g.num_communities
    sizes = g.community_sizes()
    Z = (g.labels[:, None] == np.arange(1, k + 1)[None, :]).astype(float)
    counts = Z.T @ A.entries.astype(float) @ Z
    denom = np.outer(sizes, sizes).astype(float)
    diag_denom = sizes.astype(float) * (sizes - 1)
    if np.any(diag_denom == 0):
        singles = (np.where(sizes == 1)[0] + 1).tolist()
        raise DegenerateCommunityError(
            f"communities of size 1 make the diagonal MLE undefined: {singles}"
        )
    np.fill_diagonal(denom, diag_denom)
    b = counts / denom
    return BlockProbabilityMatrix(np.clip((b + b.T) / 2.0, 0.0, 1.0))


def clamp_probabilities(p: np.ndarray | float, n: int) -> np.ndarray | float:
    """Clamp plug-in probabilities into [1/(n(n-1)), 1 - 1/(n(n-1))].

    Finite samples can produce 0/1 estimates that would zero the variance
    rescaling; the clamp keeps every denominator strictly positive.
    """
    if n < 2:
        raise ConfigurationError(f"need n >= 2 to clamp probabilities, got n={n}")
    eps = 1.0 / (n * (n - 1))
    return np.clip(p, eps, 1.0 - eps)


def _adjacency_spectrum(A: AdjacencyMatrix) -> tuple[np.ndarray, np.ndarray]:
    return np.linalg.eigh(A.entries.astype(float))


def _cluster_rows(
    evals: np.ndarray, evecs: np.ndarray, K: int, seed: Seed
) -> CommunityLabeling:
    """k-means on the rows of the K leading (largest |eigenvalue|)
    eigenvectors; retries with fresh derived seeds if a cluster comes
    out empty."""
    n = evals.size
    if K == 1:
        return CommunityLabeling(np.ones(n, dtype=np.int64), 1)
    order = np.argsort(-np.abs(evals))[:K]
    rows = evecs[:, order]
    for attempt in range(CLUSTERING_ATTEMPTS):
        km = KMeans(
            n_clusters=K,
            init="k-means++",
            n_init=KMEANS_RESTARTS,
            max_iter=KMEANS_MAX_ITER,
            random_state=small_int(seed, attempt),
        ).fit(rows)
        labels = km.labels_.astype(np.int64) + 1
        if np.unique(labels).size == K:
            return CommunityLabeling(labels, K)
    raise ClusteringError(
        f"could not produce {K} nonempty clusters after "
        f"{CLUSTERING_ATTEMPTS} attempts"
    )


def spectral_clustering(A: AdjacencyMatrix, K: int, seed: Seed) -> CommunityLabeling:
    """Cluster nodes by k-means on the rows of the n x K matrix of
    eigenvectors of A for the K largest-magnitude eigenvalues."""
    if not 1 <= K <= A.n:
        raise ConfigurationError(f"need 1 <= K <= n={A.n}, got K={K}")
    evals, evecs = _adjacency_spectrum(A)
    return _cluster_rows(evals, evecs, K, seed)


def _one_sample_residual(A: AdjacencyMatrix, g: CommunityLabeling) -> np.ndarray:
    from .graph_model import edge_probability_matrix

    bhat = estimate_block_matrix(A, g)
    phat = clamp_probabilities(edge_probability_matrix(g, bhat), A.n)
    resid = (A.entries - phat) / np.sqrt((A.n - 1) * phat * (1.0 - phat))
    np.fill_diagonal(resid, 0.0)
    return resid


def one_sample_statistic(A: AdjacencyMatrix, g: CommunityLabeling) -> float:
    """Goodness-of-fit statistic for a hypothesized labeling g:
    max of the scaled deviations of the extreme eigenvalues of the
    centered and rescaled adjacency matrix from the bulk edge at 2."""
    resid = _one_sample_residual(A, g)
    evals = np.linalg.eigvalsh(resid)
    scale = A.n ** (2.0 / 3.0)
    return float(max(scale * (evals[-1] - 2.0), scale * (-evals[0] - 2.0)))


@dataclass(frozen=True)
class KSelectionStep:
    k0: int
    statistic: float
    critical: float
    rejected: bool


@dataclass(frozen=True)
class KSelectionTrace:
    tried: tuple[KSelectionStep, ...]
    selected: int
    exhausted: bool

    def __post_init__(self):
        if not self.tried:
            raise ConfigurationError("selection trace cannot be empty")


def _select_with_labels(
    A: AdjacencyMatrix, alpha: float, k_max: int, seed: Seed
) -> tuple[KSelectionTrace, CommunityLabeling]:
    if not 0.0 < alpha < 1.0:
        raise ConfigurationError(f"alpha must be in (0,1), got {alpha}")
    if k_max < 1:
        raise ConfigurationError(f"K_max must be >= 1, got {k_max}")
    critical = tw1_quantile(1.0 - alpha / 2.0)
    evals, evecs = _adjacency_spectrum(A)
    steps = []
    labels = None
    for k0 in range(1, k_max + 1):
        g = _cluster_rows(evals, evecs, k0, seed_sequence(seed, k0))
        stat = one_sample_statistic(A, g)
        rejected = stat >= critical
        steps.append(KSelectionStep(k0, stat, critical, rejected))
        if not rejected:
            labels = g
            return KSelectionTrace(tuple(steps), k0, exhausted=False), labels
    return KSelectionTrace(tuple(steps), k_max, exhausted=True), g


def select_num_communities(
    A: AdjacencyMatrix, alpha: float, k_max: int, seed: Seed
) -> KSelectionTrace:
    """Sequentially test K0 = 1, 2, ... against 'more communities than K0'
    and return the first non-rejected K0 (or K_max, flagged exhausted)."""
    trace, _ = _select_with_labels(A, alpha, k_max, seed)
    return trace


def min_row_separation(B: BlockProbabilityMatrix) -> float:
    """Smallest infinity-norm distance between distinct rows of B; the
    quantity that drives the power lower bound."""
    k = B.num_communities
    if k < 2:
        raise ConfigurationError("row separation needs at least 2 communities")
    rows = B.entries
    best = np.inf
    for u in range(k):
        for v in range(u + 1, k):
            best = min(best, np.max(np.abs(rows[u] - rows[v])))
    return float(best)
