"""
Encoding matrices for SMANs.

This package contains:
- EncodingMatrix / Message / Codeword: the coding scheme and its data
- verify_mds_code / verify_weak_security_code: exact algebraic checks
- construct_code / cauchy_code / vandermonde_code: constructions
- encode / decode_nearest / min_distance: brute-force coding at desk scale
- parse_code / serialize_code: the code file formats
"""

from .code import (
    EncodingMatrix,
    Codeword,
    Message,
    as_matrix,
    support_of,
    transposed_submatrices,
    verify_mds_code,
    verify_weak_security_code,
    verify_weak_security_minors,
)
from .codec_io import (
    code_from_json,
    code_to_dict,
    code_to_json,
    load_code,
    parse_code,
    serialize_code,
)
from .construct import (
    DEFAULT_MAX_ATTEMPTS,
    DEFAULT_PRIME,
    ConstructionResult,
    cauchy_code,
    cauchy_points,
    construct_code,
    vandermonde_code,
)
from .decoding import (
    DEFAULT_DECODE_BUDGET,
    DecodeResult,
    NearestCodewordDecoder,
    correctable_errors,
    decode_nearest,
    encode,
    min_distance,
)

__all__ = [
    "Codeword",
    "ConstructionResult",
    "DEFAULT_DECODE_BUDGET",
    "DEFAULT_MAX_ATTEMPTS",
    "DEFAULT_PRIME",
    "DecodeResult",
    "EncodingMatrix",
    "Message",
    "NearestCodewordDecoder",
    "as_matrix",
    "cauchy_code",
    "cauchy_points",
    "code_from_json",
    "code_to_dict",
    "code_to_json",
    "construct_code",
    "correctable_errors",
    "decode_nearest",
    "encode",
    "load_code",
    "min_distance",
    "parse_code",
    "serialize_code",
    "support_of",
    "transposed_submatrices",
    "vandermonde_code",
    "verify_mds_code",
    "verify_weak_security_code",
    "verify_weak_security_minors",
]
