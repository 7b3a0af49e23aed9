"""Single-site Pauli embeddings and propositions of the form (1 + product)/2.

An axis assignment gives one Pauli axis per particle site (serialized as a
string like "xyy"); the product of the embedded matrices is an involution,
so half of (identity + product) is a projector of trace 2^(n-1).
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .linalg import max_abs, tensor
from .systems import MAX_N, PropositionSystem

PAULI_AXES = ("x", "y", "z")

_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}

# Axis strings whose sigma-product propositions form the permuted triple
# equivalent to the relative-spin + parity system for three particles.
CERECEDA_AXES = ("xyy", "yxy", "yyx")

# Diagonal 0/1 preimages of that triple under the GHZ basis change,
# ordered to match CERECEDA_AXES.
CERECEDA_PREIMAGE_DIAGONALS = (
    (0, 1, 1, 0, 1, 0, 0, 1),
    (0, 1, 1, 0, 0, 1, 1, 0),
    (0, 1, 0, 1, 1, 0, 1, 0),
)


def pauli(axis: str) -> np.ndarray:
    """The 2x2 Pauli matrix for axis 'x', 'y', or 'z' (a fresh copy)."""
    if axis not in _PAULI:
        raise ValueError(f"axis must be one of {PAULI_AXES}, got {axis!r}")
    return _PAULI[axis].copy()


def _check_involutions() -> None:
    # sigma_a^2 = identity for each axis; guards against transcription slips.
    for axis, m in _PAULI.items():
        if max_abs(m @ m - np.eye(2)) != 0.0:
            raise AssertionError(f"pauli {axis} is not an involution")


_check_involutions()


def embed(axis: str, site: int, n: int) -> np.ndarray:
    """Pauli matrix on one site of an n-particle system (site is 1-based).

    Returns I_{2^(site-1)} (x) sigma_axis (x) I_{2^(n-site)}, dimension 2^n.
    """
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")
    if not 1 <= site <= n:
        raise ValueError(f"site must be in 1..{n}, got {site}")
    m = pauli(axis)
    if site > 1:
        m = tensor(np.eye(2 ** (site - 1)), m)
    if site < n:
        m = tensor(m, np.eye(2 ** (n - site)))
    return m


def normalize_axes(assignment: str | Sequence[str]) -> str:
    axes = "".join(assignment)
    if not axes:
        raise ValueError("axis assignment must not be empty")
    for a in axes:
        if a not in PAULI_AXES:
            raise ValueError(f"unknown axis {a!r} in assignment {axes!r}")
    return axes


def sigma_product_proposition(assignment: str | Sequence[str]) -> np.ndarray:
    """Projector (I + sigma_product)/2 for one axis per particle site.

    The assignment fixes the axis measured on each site; its length sets
    the particle count n, and the result has trace 2^(n-1).
    """
    axes = normalize_axes(assignment)
    n = len(axes)
    if n > MAX_N:
        raise ValueError(f"assignment length {n} exceeds the guard {MAX_N}")
    product = np.eye(2 ** n, dtype=complex)
    for site, axis in enumerate(axes, start=1):
        product = product @ embed(axis, site, n)
    return (np.eye(2 ** n) + product) / 2.0


def cereceda_system() -> PropositionSystem:
    """The permuted three-particle triple built from x/y sigma-products."""
    return PropositionSystem(
        3, tuple(sigma_product_proposition(a) for a in CERECEDA_AXES))
