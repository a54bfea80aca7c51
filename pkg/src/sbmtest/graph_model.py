"""Core stochastic block model types and seeded sampling.

A block model is a pair (g, B): a community labeling g mapping each of n
nodes to one of K communities, and a symmetric K x K matrix B of
edge probabilities.  Observed networks are symmetric binary adjacency
matrices with zero diagonal.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError
from .seeds import Seed, rng


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class CommunityLabeling:
    """Community assignment: labels are 1-based contiguous integers."""

    labels: np.ndarray
    num_communities: int

    def __post_init__(self):
        labels = np.asarray(self.labels, dtype=np.int64)
        k = int(self.num_communities)
        if k < 1:
            raise ConfigurationError(f"num_communities must be positive, got {k}")
        if labels.ndim != 1 or labels.size == 0:
            raise ConfigurationError("labels must be a nonempty 1-d sequence")
        if labels.min() < 1 or labels.max() > k:
            raise ConfigurationError(
                f"labels must lie in [1, {k}], got range "
                f"[{labels.min()}, {labels.max()}]"
            )
        present = np.unique(labels)
        if present.size != k:
            missing = sorted(set(range(1, k + 1)) - set(present.tolist()))
            raise ConfigurationError(f"empty communities: {missing}")
        object.__setattr__(self, "labels", _frozen(labels))
        object.__setattr__(self, "num_communities", k)

    @property
    def n(self) -> int:
        return self.labels.size

    def community_sizes(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.num_communities + 1)[1:]

    @classmethod
    def equal_blocks(cls, n: int, k: int) -> "CommunityLabeling":
        """Contiguous blocks of (near-)equal size, larger blocks first."""
        if k < 1 or k > n:
            raise ConfigurationError(f"need 1 <= k <= n, got k={k}, n={n}")
        sizes = np.full(k, n // k)
        sizes[: n % k] += 1
        return cls(np.repeat(np.arange(1, k + 1), sizes), k)


@dataclass(frozen=True)
class BlockProbabilityMatrix:
    """Symmetric K x K matrix of within/between-community edge probabilities."""

    entries: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.entries, dtype=float)
        if b.ndim != 2 or b.shape[0] != b.shape[1]:
            raise ConfigurationError(f"B must be square, got shape {b.shape}")
        if not np.allclose(b, b.T, atol=1e-12):
            raise ConfigurationError("B must be symmetric")
        if b.min() < 0.0 or b.max() > 1.0:
            raise ConfigurationError("B entries must lie in [0, 1]")
        object.__setattr__(self, "entries", _frozen((b + b.T) / 2.0))

    @property
    def num_communities(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class AdjacencyMatrix:
    """Symmetric binary adjacency matrix with zero diagonal."""

    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ConfigurationError(f"adjacency must be square, got {a.shape}")
        if not np.array_equal(a, a.T):
            raise ConfigurationError("adjacency must be symmetric")
        vals = np.unique(a)
        if not np.all(np.isin(vals, (0, 1))):
            raise ConfigurationError("adjacency entries must be 0/1")
        if np.any(np.diag(a) != 0):
            raise ConfigurationError("adjacency diagonal must be zero")
        object.__setattr__(self, "entries", _frozen(a.astype(np.int8)))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def num_edges(self) -> int:
        return int(self.entries.sum()) // 2


def edge_probability_matrix(
    g: CommunityLabeling, B: BlockProbabilityMatrix
) -> np.ndarray:
    """Expand (g, B) to the n x n matrix P with P_ij = B[g(i), g(j)].

    The diagonal is populated too; consumers ignore it.
    """
    if g.num_communities > B.num_communities:
        raise ConfigurationError(
            f"labeling uses {g.num_communities} communities but B is "
            f"{B.num_communities} x {B.num_communities}"
        )
    idx = g.labels - 1
    return B.entries[np.ix_(idx, idx)]


def sample_adjacency(P: np.ndarray, seed: Seed) -> AdjacencyMatrix:
    """Draw a symmetric 0/1 matrix with independent Bernoulli(P_ij)
    upper-triangle entries and zero diagonal; deterministic given seed."""
    P = np.asarray(P, dtype=float)
    n = P.shape[0]
    iu = np.triu_indices(n, k=1)
    draws = rng(seed).random(iu[0].size) < P[iu]
    A = np.zeros((n, n), dtype=np.int8)
    A[iu] = draws
    A += A.T
    return AdjacencyMatrix(A)


def sample_sbm(
    g: CommunityLabeling, B: BlockProbabilityMatrix, seed: Seed
) -> AdjacencyMatrix:
    """Sample one adjacency matrix from the block model (g, B)."""
    return sample_adjacency(edge_probability_matrix(g, B), seed)
