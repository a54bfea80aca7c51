"""Sample a stochastic block model and recover its parameters.

Draws one network from a planted three-community model, re-estimates the
block probability matrix from the true labels, then recovers the labels
from scratch with spectral clustering and sequential model-order
selection.
"""

from itertools import permutations

import numpy as np

from sbmtest import (
    BlockProbabilityMatrix,
    CommunityLabeling,
    estimate_block_matrix,
    sample_sbm,
    select_num_communities,
    spectral_clustering,
)

n, k = 600, 3
g = CommunityLabeling.equal_blocks(n, k)
B = BlockProbabilityMatrix(0.1 * (1 + 3 * np.eye(k)))

A = sample_sbm(g, B, seed=7)
print(f"sampled network: n={n}, K={k}, edges={A.num_edges()}")

bhat = estimate_block_matrix(A, g)
print("\ntrue block matrix:")
print(B.entries)
print("estimate from the true labels:")
print(np.round(bhat.entries, 4))

trace = select_num_communities(A, alpha=0.05, k_max=8, seed=7)
print(f"\nselected number of communities: {trace.selected}"
      f" (exhausted={trace.exhausted})")
for step in trace.tried:
    verdict = "reject" if step.rejected else "accept"
    print(f"  K0={step.k0}: statistic={step.statistic:8.3f} -> {verdict}")

ghat = spectral_clustering(A, trace.selected, seed=7)
agreement = max(
    (ghat.labels == perm[g.labels - 1]).mean()
    for perm in map(np.array, permutations(range(1, k + 1)))
)
print(f"\nbest label agreement with the planted partition: {agreement:.3f}")
