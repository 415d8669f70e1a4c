"""Canonical sphere bases for skeleta of the cube and the simplex over Z2.

Every operation of the C++ core is exposed as a plain function; structured
results come back as dicts and lists that mirror the CLI's JSON output.
Counting functions return exact Python ints of unbounded size.
"""

from ._spherebasis import (
    NotACycleError,
    basis,
    betti,
    binomial,
    bw,
    cells,
    coverage,
    decompose,
    gr,
    m,
    mprime,
    off_export,
    robust_check_all,
    s,
    spanning_tree_check,
    surface_certificate,
    torus_build,
    verify_identities,
)

__all__ = [
    "NotACycleError",
    "basis",
    "betti",
    "binomial",
    "bw",
    "cells",
    "coverage",
    "decompose",
    "gr",
    "m",
    "mprime",
    "off_export",
    "robust_check_all",
    "s",
    "spanning_tree_check",
    "surface_certificate",
    "torus_build",
    "verify_identities",
]
