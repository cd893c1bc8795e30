"""Seeded random number generation.

All stochastic routines in the library draw from a counter-based Philox
generator so that a 64-bit seed reproduces bit-identical streams on every
platform.  Independent repetitions of an experiment use jumped substreams
derived from the same master seed.
"""

import numpy as np


def make_rng(seed):
    """Return the Philox generator for a 64-bit unsigned integer seed."""
    seed = int(seed)
    if seed < 0 or seed >= 2**64:
        raise ValueError("seed must fit in an unsigned 64-bit integer")
    return np.random.Generator(np.random.Philox(key=seed))


def substream(seed, index):
    """Generator for repetition `index` of the master seed, by counter jump."""
    seed = int(seed)
    if seed < 0 or seed >= 2**64:
        raise ValueError("seed must fit in an unsigned 64-bit integer")
    return np.random.Generator(np.random.Philox(key=seed).jumped(int(index)))


def complex_gaussian(rng, shape):
    """Zero-mean circularly-symmetric complex Gaussian entries, unit variance."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)
