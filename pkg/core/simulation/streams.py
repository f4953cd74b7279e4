"""
Per-replicate random streams.

Every dataset draws from its own PCG64 generator seeded by numpy's
SeedSequence over the entropy words (seed, point_id, replicate). The
SeedSequence hash mixes those words into the generator state, so streams of
neighbouring replicates are independent and a record depends only on its own
configuration, never on execution order or worker count. Normal variates
come from numpy's ziggurat sampler (`Generator.standard_normal`), uniforms
from `Generator.random`. Draw order inside a dataset is fixed: covariates
row by row, then the responses.
"""
import numpy as np


def replicate_rng(seed, point_id=0, replicate=0):
    sequence = np.random.SeedSequence([int(seed), int(point_id), int(replicate)])
    return np.random.Generator(np.random.PCG64(sequence))
