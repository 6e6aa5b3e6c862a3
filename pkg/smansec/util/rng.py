"""
Seeded random streams.

All randomness in smansec flows from one 64-bit seed. The seed feeds a
``numpy.random.SeedSequence`` and streams are Philox generators, a
counter-based bit generator, so sub-streams obtained with ``spawn`` are
independent and reproducible regardless of how work is scheduled.
"""

from typing import List

import numpy as np

DEFAULT_SEED = 0

_SEED_MASK = (1 << 64) - 1


def make_generator(seed: int = DEFAULT_SEED) -> np.random.Generator:
    """Return the root generator for ``seed``."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed & _SEED_MASK)))


def spawn_generators(seed: int, count: int) -> List[np.random.Generator]:
    """
    Return ``count`` independent generators derived from ``seed``.

    Args:
        seed: The 64-bit run seed
        count: Number of sub-streams

    Returns:
        Generators in a fixed order; stream ``i`` only depends on (seed, i)
    """
    children = np.random.SeedSequence(seed & _SEED_MASK).spawn(count)
    return [np.random.Generator(np.random.Philox(child)) for child in children]
