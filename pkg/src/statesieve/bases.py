"""Catalog of named orthonormal bases and their defining unitaries.

Each named basis comes as (Basis, NamedUnitary) where the unitary's columns
are the basis vectors, i.e. |b_i> = U |e_i|.  The standard basis orders the
product states |+..+> first, descending lexicographically to |-..->, with
'+' mapping to the 0 bit.  Hard-coded matrices are stored as integer arrays
over square-root denominators evaluated once, and every catalog unitary is
certified unitary at construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import DEFAULT_TOL, as_matrix, conjugate, is_unitary, max_abs
from .systems import MAX_N, PropositionSystem

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT6 = math.sqrt(6.0)

BASIS_KEYS = ("standard", "ghz", "w", "equal_weight")


@dataclass(frozen=True, eq=False)
class Basis:
    """Ordered orthonormal basis: row k of `vectors` is the k-th state."""

    vectors: np.ndarray
    labels: tuple[str, ...]

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=complex)
        if v.ndim != 2:
            raise ValueError("basis vectors must form a 2-d array")
        if len(self.labels) != v.shape[0]:
            raise ValueError("one label per basis vector required")
        object.__setattr__(self, "vectors", v)

    @property
    def size(self) -> int:
        return self.vectors.shape[0]

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def gram_defect(self) -> float:
        """Max deviation of the Gram matrix from the identity."""
        g = np.conj(self.vectors) @ self.vectors.T
        return max_abs(g - np.eye(self.size))


@dataclass(frozen=True, eq=False)
class NamedUnitary:
    name: str
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "matrix", as_matrix(self.matrix))


def ket_label(index: int, n: int) -> str:
    """Product-state label for 0-based position `index`: 0 bit -> '+'."""
    bits = format(index, f"0{n}b") if n else ""
    return "|" + bits.replace("0", "+").replace("1", "-") + ">"


def _sqrt_string(d: int) -> str:
    """Render sqrt(d) as 'a√r' with r squarefree ('' when d == 1)."""
    a = 1
    for k in range(2, int(math.isqrt(d)) + 1):
        while d % (k * k) == 0:
            a *= k
            d //= k * k
    if d == 1:
        return str(a) if a > 1 else ""
    root = f"√{d}"
    return f"{a}{root}" if a > 1 else root


def combo_label(vec: np.ndarray, n: int, tol: float = 1e-9) -> str:
    """Render a vector as a signed integer combination of product kets.

    Works for vectors whose nonzero amplitudes are small integer multiples
    of a common 1/sqrt(d) factor (all catalog bases).  Falls back to an
    empty string when the pattern does not apply.
    """
    v = np.asarray(vec, dtype=complex)
    if max_abs(np.imag(v)) > tol:
        return ""
    r = np.real(v)
    nonzero = [k for k in range(r.size) if abs(r[k]) > tol]
    if not nonzero:
        return ""
    base = min(abs(r[k]) for k in nonzero)
    coeffs = {}
    for k in nonzero:
        c = r[k] / base
        ci = round(c)
        if abs(c - ci) > 1e-6 or ci == 0:
            return ""
        coeffs[k] = ci
    d = sum(c * c for c in coeffs.values())
    if abs(base - 1.0 / math.sqrt(d)) > 1e-6:
        return ""
    terms = ""
    for k in nonzero:
        c = coeffs[k]
        sign = "-" if c < 0 else ("+" if terms else "")
        mag = "" if abs(c) == 1 else str(abs(c))
        terms += f"{sign}{mag}{ket_label(k, n)}"
    if d == 1:
        return terms
    return f"({terms})/{_sqrt_string(d)}"


def _labels_for(vectors: np.ndarray, n: int, fallback: str) -> tuple[str, ...]:
    labels = []
    for k in range(vectors.shape[0]):
        labels.append(combo_label(vectors[k], n) or f"{fallback}{k + 1}")
    return tuple(labels)


def standard_basis(n: int, force: bool = False) -> Basis:
    """The N = 2^n canonical unit vectors labeled |+..+> down to |-..->."""
    if n < 1 or (n > MAX_N and not force):
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")
    dim = 2 ** n
    vectors = np.eye(dim, dtype=complex)
    labels = tuple(ket_label(k, n) for k in range(dim))
    return Basis(vectors, labels)


def basis_from_unitary(u: NamedUnitary, n: int,
                       tol: float = DEFAULT_TOL) -> Basis:
    """Basis whose k-th vector is column k of the (certified) unitary."""
    if not is_unitary(u.matrix, tol):
        raise ValueError(f"matrix for basis '{u.name}' is not unitary within {tol}")
    vectors = u.matrix.T.copy()
    return Basis(vectors, _labels_for(vectors, n, fallback=f"{u.name}_"))


_GHZ_INT = np.array([
    [1,  1,  0,  0,  0,  0,  0,  0],
    [0,  0,  1,  1,  0,  0,  0,  0],
    [0,  0,  0,  0,  1,  1,  0,  0],
    [0,  0,  0,  0,  0,  0,  1,  1],
    [0,  0,  0,  0,  0,  0,  1, -1],
    [0,  0,  0,  0,  1, -1,  0,  0],
    [0,  0,  1, -1,  0,  0,  0,  0],
    [1, -1,  0,  0,  0,  0,  0,  0],
])


def ghz_unitary() -> NamedUnitary:
    """The 8x8 unitary sending the standard basis to the GHZ basis."""
    return NamedUnitary("ghz", _GHZ_INT / SQRT2)


def ghz_basis(tol: float = DEFAULT_TOL) -> tuple[Basis, NamedUnitary]:
    """Eight maximally entangled three-particle states (|abc> +/- |a'b'c'>)/√2."""
    u = ghz_unitary()
    return basis_from_unitary(u, 3, tol), u


def w_unitary() -> NamedUnitary:
    """Unitary whose columns carry the W state and its orthonormal companions."""
    s3, s2, s6 = 1.0 / SQRT3, 1.0 / SQRT2, 1.0 / SQRT6
    m = np.array([
        [1,  0,    0,   0,       0,   0,   0,      0],
        [0,  s3,  -s2, -s6,      0,   0,   0,      0],
        [0,  s3,   0,   2 * s6,  0,   0,   0,      0],
        [0,  s3,   s2, -s6,      0,   0,   0,      0],
        [0,  0,    0,   0,       s3, -s2, -s6,     0],
        [0,  0,    0,   0,       s3,  0,   2 * s6, 0],
        [0,  0,    0,   0,       s3,  s2, -s6,     0],
        [0,  0,    0,   0,       0,   0,   0,      1],
    ])
    return NamedUnitary("w", m)


def w_basis(tol: float = DEFAULT_TOL) -> tuple[Basis, NamedUnitary]:
    u = w_unitary()
    return basis_from_unitary(u, 3, tol), u


_EQUAL_WEIGHT_INT = np.array([
    [1,  1,  1,  1,  2,  0,  0,  0],
    [1,  1,  1, -1, -1,  1, -1, -1],
    [1,  1, -1,  1, -1, -1,  1, -1],
    [1,  1, -1, -1,  0,  0,  0,  2],
    [1, -1,  1,  1, -1, -1, -1,  1],
    [1, -1,  1, -1,  0,  0,  2,  0],
    [1, -1, -1,  1,  0,  2,  0,  0],
    [1, -1, -1, -1,  1, -1, -1, -1],
])


def equal_weight_unitary(tol: float = DEFAULT_TOL) -> NamedUnitary:
    """The all-(+/-1, +/-2)/(2√2) orthogonal matrix; certified at construction."""
    m = _EQUAL_WEIGHT_INT / (2.0 * SQRT2)
    if not is_unitary(m, tol):
        raise ValueError("equal-weight matrix failed unitarity certification")
    return NamedUnitary("equal_weight", m)


def equal_weight_basis(tol: float = DEFAULT_TOL) -> tuple[Basis, NamedUnitary]:
    """Basis in which the first four states weight every product state equally."""
    u = equal_weight_unitary(tol)
    return basis_from_unitary(u, 3, tol), u


def named_basis(key: str, n: int = 3, tol: float = DEFAULT_TOL,
                force: bool = False) -> tuple[Basis, NamedUnitary | None]:
    """Look up a catalog basis by key; the fixed 8-state bases require n = 3."""
    if key == "standard":
        return standard_basis(n, force=force), None
    makers = {"ghz": ghz_basis, "w": w_basis, "equal_weight": equal_weight_basis}
    if key not in makers:
        raise ValueError(f"unknown basis key {key!r}; expected one of {BASIS_KEYS}")
    if n != 3:
        raise ValueError(f"basis {key!r} is defined for n = 3, got n = {n}")
    return makers[key](tol)


def transformed_system(u: NamedUnitary | np.ndarray, system: PropositionSystem,
                       tol: float = DEFAULT_TOL) -> PropositionSystem:
    """Conjugate every projector of a system into the basis defined by u."""
    mat = u.matrix if isinstance(u, NamedUnitary) else as_matrix(u)
    if mat.shape[0] != system.dim:
        raise ValueError(
            f"dimension mismatch: unitary {mat.shape[0]}, system {system.dim}")
    return PropositionSystem(
        system.n, tuple(conjugate(mat, p, tol) for p in system.projectors))
