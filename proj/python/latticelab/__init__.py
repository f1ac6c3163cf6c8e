"""Join-meet ideals of finite lattices."""

import json

from ._core import (
    Lattice,
    LatticeLabError,
    groebner_basis,
    minimal_primes,
    radical_certificate,
    squarefree_order_scan,
)
from ._core import lk_suite as _lk_suite


def lk_suite(n, k):
    """Run the L_k checks and return the report as a dict."""
    return json.loads(_lk_suite(n, k))


__all__ = [
    "Lattice",
    "LatticeLabError",
    "groebner_basis",
    "lk_suite",
    "minimal_primes",
    "radical_certificate",
    "squarefree_order_scan",
]
