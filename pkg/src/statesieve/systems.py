"""Systems of n commuting yes-no propositions over a 2^n-dimensional space.

The standard system implements a binary search over basis positions: the
i-th projector keeps the first half of each remaining block.  Reading the
stacked diagonals column-wise gives each basis position a distinct n-bit
code word, and permuting the columns generates all N! = 2^n! equivalent
diagonal systems.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, Sequence

import numpy as np

from .linalg import DEFAULT_TOL, commutator_norm, eigenvalue_bit, is_projector, max_abs
from .partitions import Partition, is_atomic, meet, meet_all, partition_from_projector

if TYPE_CHECKING:
    from .bases import Basis

MAX_N = 10          # dense 2^n x 2^n matrices stay cheap up to here
FULL_ENUM_MAX_N = 3  # 8! = 40320 streams fine; 16! does not


class ResourceLimitError(ValueError):
    """A size guard tripped; pass force=True (CLI: --force) to override."""


@dataclass(frozen=True, eq=False)
class PropositionSystem:
    """Ordered list of n commuting projectors on a 2^n-dimensional space."""

    n: int
    projectors: tuple[np.ndarray, ...]

    def __post_init__(self):
        projs = tuple(np.asarray(p, dtype=complex) for p in self.projectors)
        dim = 2 ** self.n
        for i, p in enumerate(projs):
            if p.shape != (dim, dim):
                raise ValueError(
                    f"projector {i + 1} has shape {p.shape}, expected {(dim, dim)}")
        object.__setattr__(self, "projectors", projs)

    @property
    def dim(self) -> int:
        return 2 ** self.n

    @property
    def size(self) -> int:
        return len(self.projectors)


@dataclass(frozen=True)
class ColumnCode:
    """Bit column read down the stacked diagonals at one basis position."""

    position: int                # 1-based basis position
    bits: tuple[int, ...]        # one bit per proposition, first proposition first

    @property
    def value(self) -> int:
        """The bits as a binary number, most significant bit first."""
        v = 0
        for b in self.bits:
            v = (v << 1) | b
        return v


@dataclass(frozen=True)
class RequirementReport:
    """Outcome of the three structural requirements on a proposition system.

    co_measurable:     all pairs of projectors commute,
    balanced_halves:   every projector splits the basis 50:50,
    pairwise_quarters: any two distinct propositions jointly cut block
                       sizes by another factor of two.
    """

    co_measurable: bool
    balanced_halves: bool
    pairwise_quarters: bool
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.co_measurable and self.balanced_halves and self.pairwise_quarters


@dataclass(frozen=True)
class MinimalityReport:
    """Why n-1 binary propositions cannot separate 2^n basis states.

    The counting bound always applies: k propositions induce at most 2^k
    answer classes.  For n <= 2 an exhaustive scan over all 0/1-diagonal
    projector subsets of size n-1 double-checks the bound by brute force.
    """

    n: int
    num_states: int
    max_classes: int             # 2^(n-1), best case for n-1 propositions
    analytic_bound_holds: bool   # max_classes < num_states
    exhaustive_scanned: int | None = None
    exhaustive_separating_found: bool | None = None

    @property
    def ok(self) -> bool:
        if not self.analytic_bound_holds:
            return False
        return self.exhaustive_separating_found is not True


def _check_n(n: int, force: bool = False) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > MAX_N and not force:
        raise ResourceLimitError(
            f"n = {n} exceeds the guard {MAX_N}; override with force")
    return 2 ** n


def standard_diagonals(n: int, force: bool = False) -> np.ndarray:
    """0/1 diagonals of the standard system as an (n, 2^n) integer array.

    Row i holds 2^i alternating blocks of ones then zeros of length
    2^(n-1-i), so column k reads the binary digits of N-1-k: the codes
    run from N-1 down to 0 across positions.
    """
    dim = _check_n(n, force)
    codes = dim - 1 - np.arange(dim)
    shifts = np.arange(n - 1, -1, -1)
    return (codes[np.newaxis, :] >> shifts[:, np.newaxis]) & 1


def system_from_diagonals(diagonals: np.ndarray) -> PropositionSystem:
    diagonals = np.asarray(diagonals)
    n = int(np.log2(diagonals.shape[1]))
    return PropositionSystem(
        n, tuple(np.diag(row.astype(complex)) for row in diagonals))


def standard_system(n: int, force: bool = False) -> PropositionSystem:
    """The binary-search system: projector i asks "is particle i in state +"."""
    return system_from_diagonals(standard_diagonals(n, force))


def certify_system(system: PropositionSystem,
                   tol: float = DEFAULT_TOL) -> list[str]:
    """Check projector property, pairwise commutation, and trace = N/2.

    Returns a list of human-readable failure descriptions (empty = certified).
    """
    failures = []
    half = system.dim / 2
    for i, p in enumerate(system.projectors, start=1):
        if not is_projector(p, tol):
            failures.append(f"projector {i} is not a projector within {tol}")
        trace = complex(np.trace(p))
        if abs(trace - half) > tol:
            failures.append(f"projector {i} has trace {trace:.6g}, expected {half}")
    for i, j in itertools.combinations(range(system.size), 2):
        c = commutator_norm(system.projectors[i], system.projectors[j])
        if c > tol:
            failures.append(
                f"projectors {i + 1} and {j + 1} do not commute (norm {c:.3e})")
    return failures


def system_partitions(system: PropositionSystem, basis: "Basis",
                      tol: float = DEFAULT_TOL) -> list[Partition]:
    if system.dim != basis.dim:
        raise ValueError(
            f"dimension mismatch: system {system.dim}, basis {basis.dim}")
    return [partition_from_projector(p, basis, tol) for p in system.projectors]


def verify_requirements(system: PropositionSystem, basis: "Basis",
                        tol: float = DEFAULT_TOL) -> RequirementReport:
    """Verify the three defining requirements against a basis."""
    failures = []

    co_measurable = True
    for i, j in itertools.combinations(range(system.size), 2):
        c = commutator_norm(system.projectors[i], system.projectors[j])
        if c > tol:
            co_measurable = False
            failures.append(
                f"(i) projectors {i + 1},{j + 1} do not commute (norm {c:.3e})")

    parts = system_partitions(system, basis, tol)
    half = basis.size // 2
    balanced = True
    for i, part in enumerate(parts, start=1):
        sizes = sorted(len(b) for b in part.blocks)
        if sizes != [half, half]:
            balanced = False
            failures.append(f"(ii) projector {i} splits sizes {sizes}, "
                            f"expected [{half}, {half}]")

    quarter = basis.size // 4
    refining = True
    for i, j in itertools.combinations(range(len(parts)), 2):
        sizes = sorted(len(b) for b in meet(parts[i], parts[j]).blocks)
        if any(s != quarter for s in sizes):
            refining = False
            failures.append(f"(iii) propositions {i + 1},{j + 1} meet has "
                            f"block sizes {sizes}, expected all {quarter}")

    return RequirementReport(co_measurable, balanced, refining, tuple(failures))


def _diagonals_of(system: PropositionSystem, tol: float) -> np.ndarray:
    """Extract 0/1 diagonals, rejecting non-diagonal or non-0/1 projectors."""
    rows = []
    for i, p in enumerate(system.projectors, start=1):
        off = p - np.diag(np.diag(p))
        if max_abs(off) > tol:
            raise ValueError(f"projector {i} is not diagonal")
        d = np.real(np.diag(p))
        bits = np.rint(d).astype(int)
        if max_abs(np.diag(p) - bits) > tol or not np.all((bits == 0) | (bits == 1)):
            raise ValueError(f"projector {i} diagonal is not 0/1")
        rows.append(bits)
    return np.array(rows)


def column_codes(system: PropositionSystem,
                 tol: float = DEFAULT_TOL) -> list[ColumnCode]:
    """The n-bit word at each basis position of a diagonal 0/1 system."""
    diags = _diagonals_of(system, tol)
    return [ColumnCode(k + 1, tuple(int(b) for b in diags[:, k]))
            for k in range(diags.shape[1])]


def _validate_permutation(perm: Sequence[int], size: int) -> np.ndarray:
    p = np.asarray(perm, dtype=int)
    if p.shape != (size,):
        raise ValueError(f"permutation must have length {size}, got {p.shape}")
    if sorted(p.tolist()) != list(range(size)):
        raise ValueError("permutation is not a bijection on 0..N-1")
    return p


def permute_system(system: PropositionSystem,
                   perm: Sequence[int],
                   tol: float = DEFAULT_TOL) -> PropositionSystem:
    """Rearrange the diagonal columns of a 0/1-diagonal system.

    `perm` maps (0-based) source position k to target position perm[k],
    applied identically across all n diagonals, so that composing
    permutations composes the maps: permute(permute(S, p), q) equals
    permute(S, q o p).
    """
    diags = _diagonals_of(system, tol)
    p = _validate_permutation(perm, diags.shape[1])
    out = np.empty_like(diags)
    out[:, p] = diags
    return system_from_diagonals(out)


def enumerate_systems(n: int, limit: int | None = None,
                      force: bool = False) -> Iterator[PropositionSystem]:
    """Stream the N! equivalent diagonal systems in lexicographic perm order.

    Yields one system per permutation of the N column codes.  Full
    enumeration is refused for n > 3 unless force is given; any n up to
    the dimension guard is allowed with an explicit limit.
    """
    dim = _check_n(n, force=False)
    if limit is None and n > FULL_ENUM_MAX_N and not force:
        raise ResourceLimitError(
            f"full enumeration for n = {n} means {dim}! systems; "
            "pass a limit or force")
    std = standard_diagonals(n)
    count = 0
    for perm in itertools.permutations(range(dim)):
        if limit is not None and count >= limit:
            return
        out = np.empty_like(std)
        out[:, perm] = std
        yield system_from_diagonals(out)
        count += 1


def separates(system: PropositionSystem, basis: "Basis",
              tol: float = DEFAULT_TOL) -> bool:
    """True iff the eigenvalue bit-codes distinguish every basis vector.

    Every basis vector must be a common eigenvector of all projectors;
    a vector that is not raises EigenbasisError (that situation is a
    usage error, not a 'no').
    """
    if system.dim != basis.dim:
        raise ValueError(
            f"dimension mismatch: system {system.dim}, basis {basis.dim}")
    codes = set()
    for k in range(basis.size):
        bits = tuple(
            eigenvalue_bit(p, basis.vectors[k], tol,
                           projector_index=i + 1, vector_index=k + 1)
            for i, p in enumerate(system.projectors))
        codes.add(bits)
    return len(codes) == basis.size


def _diagonal_subset_separates(diag_masks: tuple[int, ...], dim: int) -> bool:
    """Do the 0/1 diagonals (as bitmasks over positions) give distinct codes?"""
    codes = set()
    for k in range(dim):
        codes.add(tuple((mask >> k) & 1 for mask in diag_masks))
    return len(codes) == dim


def minimality_certificate(n: int) -> MinimalityReport:
    """Certify that fewer than n binary propositions cannot separate 2^n states."""
    dim = _check_n(n)
    max_classes = 2 ** (n - 1)
    report = MinimalityReport(
        n=n, num_states=dim, max_classes=max_classes,
        analytic_bound_holds=max_classes < dim)
    if n > 2:
        return report
    scanned = 0
    found = False
    for subset in itertools.combinations(range(2 ** dim), n - 1):
        scanned += 1
        if _diagonal_subset_separates(subset, dim):
            found = True
            break
    return MinimalityReport(
        n=n, num_states=dim, max_classes=max_classes,
        analytic_bound_holds=max_classes < dim,
        exhaustive_scanned=scanned, exhaustive_separating_found=found)


def standard_subset_meets_nonatomic(n: int, basis: "Basis",
                                    tol: float = DEFAULT_TOL) -> bool:
    """True iff dropping any one standard projector leaves a non-atomic meet."""
    system = standard_system(n)
    parts = system_partitions(system, basis, tol)
    if n == 1:
        return True  # the empty subset trivially leaves one 2-element block
    for skip in range(n):
        sub = [parts[i] for i in range(n) if i != skip]
        if is_atomic(meet_all(sub)):
            return False
    return True
