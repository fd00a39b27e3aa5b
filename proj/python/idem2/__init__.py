"""Exact idempotents of 2x2 matrices over truncated power series with Z_n
coefficients.

Structured values (series, matrices, specs) are plain dicts in the same shape
the command line tool reads and writes; see the project README for the format.
"""

from ._core import (
    Error,
    __version__,
    brute_force_idempotents,
    brute_force_series_idempotents,
    classify,
    construct,
    construct_crt,
    crt_combine,
    enumerate_idempotents,
    factorize,
    idempotents_of_zn,
    totient,
    validate_spec,
    verify,
)

__all__ = [
    "Error",
    "__version__",
    "brute_force_idempotents",
    "brute_force_series_idempotents",
    "classify",
    "construct",
    "construct_crt",
    "crt_combine",
    "enumerate_idempotents",
    "factorize",
    "idempotents_of_zn",
    "totient",
    "validate_spec",
    "verify",
]
