"""Deterministic seed derivation.

All randomness flows through numpy SeedSequence so that per-edge,
per-restart, and per-replicate draws are reproducible regardless of
iteration order or worker count.
"""

import numpy as np

Seed = int | np.random.SeedSequence


def seed_sequence(seed: Seed, *key: int) -> np.random.SeedSequence:
    """Derive a child SeedSequence from a master seed and an index path."""
    if isinstance(seed, np.random.SeedSequence):
        base = seed
    else:
        base = np.random.SeedSequence(int(seed))
    if not key:
        return base
    return np.random.SeedSequence(base.entropy, spawn_key=base.spawn_key + tuple(key))


def rng(seed: Seed, *key: int) -> np.random.Generator:
    return np.random.default_rng(seed_sequence(seed, *key))


def small_int(seed: Seed, *key: int) -> int:
    """32-bit integer for APIs that take a plain random_state."""
    return int(seed_sequence(seed, *key).generate_state(1)[0])
