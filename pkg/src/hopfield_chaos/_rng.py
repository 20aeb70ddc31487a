"""Seed-stream helpers.

Every stochastic routine takes an explicit seed and derives an independent
stream with ``SeedSequence``, so disorder replicas spawned across workers are
reproducible from (master_seed, *stream indices) without coordination.
"""

import numpy as np


def rng_for(master_seed, *stream):
    """Independent generator for a (master seed, stream index...) address."""
    return np.random.default_rng(np.random.SeedSequence((int(master_seed),) + tuple(int(s) for s in stream)))
