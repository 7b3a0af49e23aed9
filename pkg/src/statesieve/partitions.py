"""Partitions of basis-state indices and their refinement by intersection.

A projector with a common eigenbasis splits the basis indices {1..N} into
an eigenvalue-1 block and an eigenvalue-0 block; running several commuting
propositions in sequence refines the partition down to (ideally) singletons.
Partitions are purely combinatorial: indices are 1-based integers, and the
basis object owns the index -> vector correspondence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from .linalg import DEFAULT_TOL, as_matrix, eigenvalue_bit

if TYPE_CHECKING:
    from .bases import Basis


@dataclass(frozen=True)
class Partition:
    """Disjoint non-empty blocks covering {1..ground_size}, in canonical form.

    Canonical form (blocks sorted by smallest element, elements ascending
    within a block) is established at construction, so equality is plain
    structural comparison.
    """

    ground_size: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        canon = tuple(sorted((tuple(sorted(b)) for b in self.blocks),
                             key=lambda b: b[0] if b else -1))
        object.__setattr__(self, "blocks", canon)
        seen: set[int] = set()
        for block in canon:
            if not block:
                raise ValueError("empty block in partition")
            for i in block:
                if not 1 <= i <= self.ground_size:
                    raise ValueError(f"index {i} outside 1..{self.ground_size}")
                if i in seen:
                    raise ValueError(f"index {i} appears in more than one block")
                seen.add(i)
        if len(seen) != self.ground_size:
            missing = sorted(set(range(1, self.ground_size + 1)) - seen)
            raise ValueError(f"blocks do not cover the ground set, missing {missing}")

    def __len__(self) -> int:
        return len(self.blocks)


def partition_from_projector(p, basis: "Basis",
                             tol: float = DEFAULT_TOL) -> Partition:
    """Partition induced by a projector on a basis of its eigenvectors.

    Blocks are the indices (1-based) with eigenvalue 1 and with eigenvalue
    0.  A projector with only one eigenvalue present yields a single-block
    partition; a basis vector that is not an eigenvector raises
    EigenbasisError.
    """
    p = as_matrix(p)
    n_vecs = basis.size
    if p.shape[0] != basis.dim:
        raise ValueError(f"dimension mismatch: projector {p.shape[0]}, basis {basis.dim}")
    ones, zeros = [], []
    for k in range(n_vecs):
        bit = eigenvalue_bit(p, basis.vectors[k], tol, vector_index=k + 1)
        (ones if bit else zeros).append(k + 1)
    blocks = [b for b in (ones, zeros) if b]
    return Partition(n_vecs, tuple(tuple(b) for b in blocks))


def meet(a: Partition, b: Partition) -> Partition:
    """Common refinement: all non-empty pairwise intersections of blocks."""
    if a.ground_size != b.ground_size:
        raise ValueError(
            f"ground-size mismatch: {a.ground_size} vs {b.ground_size}")
    blocks = []
    for block_a in a.blocks:
        set_a = set(block_a)
        for block_b in b.blocks:
            common = set_a.intersection(block_b)
            if common:
                blocks.append(tuple(sorted(common)))
    return Partition(a.ground_size, tuple(blocks))


def meet_all(parts: Iterable[Partition]) -> Partition:
    """Meet of a non-empty sequence of partitions."""
    parts = list(parts)
    if not parts:
        raise ValueError("meet_all needs at least one partition")
    acc = parts[0]
    for p in parts[1:]:
        acc = meet(acc, p)
    return acc


def is_atomic(p: Partition) -> bool:
    """True iff every block is a singleton (states fully separated)."""
    return all(len(b) == 1 for b in p.blocks)


def refines(fine: Partition, coarse: Partition) -> bool:
    """True iff every block of `fine` is contained in some block of `coarse`."""
    if fine.ground_size != coarse.ground_size:
        return False
    containing = {}
    for block in coarse.blocks:
        for i in block:
            containing[i] = block
    return all(set(b) <= set(containing[b[0]]) for b in fine.blocks)
