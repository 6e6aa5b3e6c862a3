"""
Encoding and brute-force nearest-codeword decoding.

Decoding tabulates all q^k codewords once and answers each query with a
vectorised Hamming-distance scan, which is what makes exhaustive decoding
usable at desk scale.
"""

import logging
from typing import NamedTuple

import numpy as np

from ..errors import AmbiguousDecodeError, UsageError
from ..gf.linalg import DEFAULT_ENUMERATION_BUDGET, enumerate_vectors
from ..gf.matrix import mod_matmul
from .code import CodeLike, Codeword, Message, as_matrix

log = logging.getLogger(__name__)

DEFAULT_DECODE_BUDGET = DEFAULT_ENUMERATION_BUDGET


class DecodeResult(NamedTuple):
    message: Message
    errors: int


def encode(g: CodeLike, x: Message) -> Codeword:
    """
    Relay transmissions y_j = sum_i x_i g_ij.

    Raises:
        UsageError: On a field or length mismatch
    """
    m = as_matrix(g)
    if x.field != m.field:
        raise UsageError(f"Field mismatch: message over {x.field}, code over {m.field}")
    if len(x) != m.rows:
        raise UsageError(f"Message of length {len(x)} for a code with k = {m.rows}")
    row = np.array([x.values], dtype=np.int64)
    y = mod_matmul(row, m.array, m.field.p)[0]
    return Codeword(tuple(int(value) for value in y), m.field)


class NearestCodewordDecoder:
    """
    Exhaustive minimum-Hamming-distance decoder for one code.

    The codebook is built at construction and reused for every query.
    """

    def __init__(self, g: CodeLike, budget: int = DEFAULT_DECODE_BUDGET):
        """
        Args:
            g: The code
            budget: Largest q^k allowed

        Raises:
            UsageError: If q^k exceeds ``budget``
        """
        self.matrix = as_matrix(g)
        self.field = self.matrix.field
        self.messages = enumerate_vectors(self.field, self.matrix.rows, budget)
        self.codewords = mod_matmul(self.messages, self.matrix.array, self.field.p)

    def decode(self, y: Codeword) -> DecodeResult:
        """
        Message whose codeword is nearest to ``y``.

        Raises:
            UsageError: On a field or length mismatch
            AmbiguousDecodeError: If several messages tie at the minimum distance
        """
        if y.field != self.field:
            raise UsageError(f"Field mismatch: word over {y.field}, code over {self.field}")
        if len(y) != self.matrix.cols:
            raise UsageError(f"Word of length {len(y)} for a code with n = {self.matrix.cols}")
        received = np.array(y.values, dtype=np.int64)
        distances = np.count_nonzero(self.codewords != received, axis=1)
        best = int(distances.min())
        winners = np.nonzero(distances == best)[0]
        if len(winners) > 1:
            candidates = [Message(tuple(int(v) for v in self.messages[w]), self.field) for w in winners]
            raise AmbiguousDecodeError(
                f"{len(winners)} messages tie at distance {best}", candidates, best
            )
        message = Message(tuple(int(v) for v in self.messages[winners[0]]), self.field)
        return DecodeResult(message=message, errors=best)

    def min_distance(self) -> int:
        """Minimum Hamming weight over nonzero messages' codewords."""
        weights = np.count_nonzero(self.codewords, axis=1)
        nonzero_messages = np.any(self.messages != 0, axis=1)
        return int(weights[nonzero_messages].min())


def decode_nearest(g: CodeLike, y: Codeword, budget: int = DEFAULT_DECODE_BUDGET) -> DecodeResult:
    """One-shot nearest-codeword decoding; see NearestCodewordDecoder."""
    return NearestCodewordDecoder(g, budget).decode(y)


def min_distance(g: CodeLike, budget: int = DEFAULT_DECODE_BUDGET) -> int:
    """
    Minimum distance of the code generated by G, by exhaustive enumeration.

    Raises:
        UsageError: If q^k exceeds ``budget``
    """
    return NearestCodewordDecoder(g, budget).min_distance()


def correctable_errors(g: CodeLike) -> int:
    """floor((n - k + 1) / 2), the errors an MDS code always corrects."""
    m = as_matrix(g)
    return (m.cols - m.rows + 1) // 2
