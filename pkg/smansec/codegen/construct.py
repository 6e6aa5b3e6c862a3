"""
Constructions of weakly secure MDS encoding matrices.

``construct_code`` samples the linked entries of G uniformly from the
nonzero field elements, verifies the sample exactly, and retries on
failure. A satisfying assignment exists over large enough fields whenever
the topology meets the Weak Security Condition; since every returned
matrix is verified, no field-size bound has to be trusted.
"""

import logging
from typing import NamedTuple

import numpy as np

from ..errors import InfeasibleError, RetryExhaustedError, UsageError
from ..gf.field import FieldPrime
from ..gf.matrix import FieldMatrix
from ..sman.conditions import check_weak_security_condition
from ..sman.network import Sman
from ..util.rng import DEFAULT_SEED, make_generator
from .code import EncodingMatrix, verify_mds_code, verify_weak_security_code

log = logging.getLogger(__name__)

DEFAULT_PRIME = 65537
DEFAULT_MAX_ATTEMPTS = 64


class ConstructionResult(NamedTuple):
    code: EncodingMatrix
    attempts: int


def construct_code(
    s: Sman,
    field: FieldPrime = FieldPrime(DEFAULT_PRIME),
    seed: int = DEFAULT_SEED,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> ConstructionResult:
    """
    Build a weakly secure MDS encoding matrix for ``s``.

    Random values are drawn in row-major order of the links, one batch per
    attempt, so the result depends only on (s, field, seed).

    Args:
        s: A SMAN satisfying the Weak Security Condition
        field: Field to build over
        seed: Run seed
        max_attempts: Samples to try before giving up

    Returns:
        ConstructionResult with the matrix and the attempt that succeeded

    Raises:
        InfeasibleError: If ``s`` violates the Weak Security Condition
        RetryExhaustedError: If no sample verified within ``max_attempts``
    """
    if max_attempts < 1:
        raise UsageError(f"max_attempts must be positive, got {max_attempts}")
    verdict = check_weak_security_condition(s)
    if not verdict.holds:
        raise InfeasibleError(
            f"No weakly secure MDS scheme exists: Weak Security Condition {verdict}",
            verdict=verdict,
        )

    links = s.links()
    rows = [i for i, _ in links]
    cols = [j for _, j in links]
    rng = make_generator(seed)
    for attempt in range(1, max_attempts + 1):
        data = np.zeros((s.k, s.n), dtype=np.int64)
        data[rows, cols] = rng.integers(1, field.p, size=len(links), dtype=np.int64)
        matrix = FieldMatrix(field, data)
        if verify_mds_code(matrix) and verify_weak_security_code(matrix):
            log.info(
                "Constructed %dx%d code over %s on attempt %d/%d",
                s.k, s.n, field, attempt, max_attempts,
            )
            return ConstructionResult(EncodingMatrix(matrix=matrix, sman=s), attempt)
        log.warning("Attempt %d over %s failed verification, resampling", attempt, field)

    raise RetryExhaustedError(
        f"No weakly secure MDS matrix over {field} found in {max_attempts} attempts; "
        f"try a larger prime",
        attempts=max_attempts,
    )


def cauchy_points(k: int, n: int, p: int):
    """
    Points (x, y) with x_i + y_j never zero mod p.

    x_i = i for i < k; y runs through k, k+1, ..., p-k, then 1, ..., k-1,
    which are exactly the residues whose negation is not an x_i.
    """
    xs = list(range(k))
    candidates = list(range(k, p - k + 1)) + list(range(1, k))
    return xs, candidates[:n]


def cauchy_code(k: int, n: int, field: FieldPrime) -> EncodingMatrix:
    """
    Cauchy encoding matrix g_ij = 1 / (x_i + y_j) on the all-ones SMAN.

    Every square submatrix is invertible, which makes the code MDS and
    b_ell = k - ell block secure.

    Raises:
        UsageError: If p < n + k
    """
    p = field.p
    if p < n + k:
        raise UsageError(f"A {k}x{n} Cauchy matrix needs p >= n + k = {n + k}, got {p}")
    xs, ys = cauchy_points(k, n, p)
    rows = [[field.inverse(x + y) for y in ys] for x in xs]
    return EncodingMatrix(matrix=FieldMatrix.from_rows(field, rows), sman=Sman.all_ones(k, n))


def vandermonde_code(k: int, n: int, field: FieldPrime) -> EncodingMatrix:
    """
    Vandermonde matrix g_ij = j^i on points 0..n-1.

    MDS, but its first column is a unit vector, so never weakly secure
    for k >= 2.

    Raises:
        UsageError: If p < n
    """
    p = field.p
    if p < n:
        raise UsageError(f"A {k}x{n} Vandermonde matrix needs p >= n = {n}, got {p}")
    rows = [[pow(point, power, p) for point in range(n)] for power in range(k)]
    return EncodingMatrix.from_matrix(FieldMatrix.from_rows(field, rows))
