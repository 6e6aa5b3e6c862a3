"""
Utilities for smansec.

- make_generator / spawn_generators: seeded, splittable random streams
"""

from .rng import DEFAULT_SEED, make_generator, spawn_generators

__all__ = [
    "DEFAULT_SEED",
    "make_generator",
    "spawn_generators",
]
