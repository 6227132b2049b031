"""Perfect state transfer toolkit for arc-reversal walks on circulant graphs.

The heavy lifting lives in the C++ extension; this package re-exports its
operations.
"""

from ._core import (
    __version__,
    bosma_exponents,
    chebyshev_identity_max_deviation,
    circulant_eigenvalues,
    classify,
    crt_decompose,
    delta_integrality,
    is_connected,
    search_min_pst,
    simulate,
    verify,
)

__all__ = [
    "__version__",
    "bosma_exponents",
    "chebyshev_identity_max_deviation",
    "circulant_eigenvalues",
    "classify",
    "crt_decompose",
    "delta_integrality",
    "is_connected",
    "search_min_pst",
    "simulate",
    "verify",
]
