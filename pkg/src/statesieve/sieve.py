"""Measurement cascade: route eigenstates to detectors, Born-rule distributions,
and question-count benchmarks for the naive per-state strategy.

Detector indexing follows the strictly-decreasing code convention: the
all-ones answer word hits detector 1 and the all-zeros word detector N,
so with the standard system basis state k always fires detector k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

import numpy as np

from .linalg import DEFAULT_TOL, as_vector, eigenvalue_bit
from .systems import MAX_N, PropositionSystem, ResourceLimitError

if TYPE_CHECKING:
    from .bases import Basis


@dataclass(frozen=True)
class DetectorOutcome:
    """Answer bits of the n propositions and the detector they select."""

    answer_bits: tuple[int, ...]
    detector_index: int


@dataclass(frozen=True)
class MeasurementDistribution:
    """Probabilities over detectors 1..N (sum to 1 for a certified system)."""

    probabilities: tuple[float, ...]

    def point_mass(self, tol: float = DEFAULT_TOL) -> int | None:
        """Detector index if one probability is 1 within tol, else None."""
        for k, p in enumerate(self.probabilities, start=1):
            if abs(p - 1.0) <= tol:
                return k
        return None


@dataclass(frozen=True)
class QuestionCountRecord:
    state_index: int
    questions_asked: int
    strategy: str


@dataclass(frozen=True)
class StrategyStats:
    strategy: str
    n: int
    trials: int
    seed: int
    mean: float
    max: int


@dataclass(frozen=True)
class StatsSummary:
    naive: StrategyStats
    sieve: StrategyStats


def detector_for_bits(bits: Sequence[int]) -> int:
    """Detector index N - value(bits), bits most significant first."""
    value = 0
    for b in bits:
        value = (value << 1) | int(b)
    return 2 ** len(bits) - value


def route_basis_state(system: PropositionSystem, basis: "Basis", index: int,
                      tol: float = DEFAULT_TOL) -> DetectorOutcome:
    """Deterministic detector for basis vector `index` (1-based).

    The vector must be a common eigenvector of every projector; answer
    bit i is the eigenvalue of projector i on it.
    """
    if system.dim != basis.dim:
        raise ValueError(
            f"dimension mismatch: system {system.dim}, basis {basis.dim}")
    if not 1 <= index <= basis.size:
        raise ValueError(f"index must be in 1..{basis.size}, got {index}")
    v = basis.vectors[index - 1]
    bits = tuple(
        eigenvalue_bit(p, v, tol, projector_index=i + 1, vector_index=index)
        for i, p in enumerate(system.projectors))
    return DetectorOutcome(bits, detector_for_bits(bits))


def _cascade_weights(system: PropositionSystem, state: np.ndarray) -> np.ndarray:
    """Leaf norms-squared of the filter cascade, indexed by detector - 1.

    Level i splits every branch vector v into P_i v and v - P_i v; after n
    levels the leaf for answer word b carries (product of selected
    projectors) applied to the state.
    """
    branches: list[tuple[tuple[int, ...], np.ndarray]] = [((), state)]
    for p in system.projectors:
        nxt = []
        for bits, v in branches:
            yes = p @ v
            nxt.append((bits + (1,), yes))
            nxt.append((bits + (0,), v - yes))
        branches = nxt
    probs = np.zeros(system.dim)
    for bits, v in branches:
        probs[detector_for_bits(bits) - 1] = float(np.real(np.vdot(v, v)))
    return probs


def measure_state(system: PropositionSystem, state,
                  tol: float = DEFAULT_TOL) -> MeasurementDistribution:
    """Detector distribution for an arbitrary normalized state.

    Probability of detector k is the squared norm of the state filtered
    through the k-th branch of commuting projectors/complements; for a
    common eigenvector this is a point mass on the routed detector.
    """
    v = as_vector(state)
    if v.shape[0] != system.dim:
        raise ValueError(
            f"dimension mismatch: state {v.shape[0]}, system {system.dim}")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > tol:
        raise ValueError(f"state is not normalized (norm {norm:.6g})")
    probs = _cascade_weights(system, v)
    total = float(probs.sum())
    if abs(total - 1.0) > max(tol, 1e-9):
        raise ValueError(
            f"branch weights sum to {total:.6g}; system is not certified")
    return MeasurementDistribution(tuple(float(p) for p in probs))


def sample_detections(system: PropositionSystem, state, trials: int,
                      seed: int, tol: float = DEFAULT_TOL) -> list[int]:
    """Monte-Carlo detector counts from sequential projective measurement.

    Each trial walks the cascade: at step i the yes-branch fires with
    probability |P_i v|^2 / |v|^2 and the state collapses accordingly.
    Reproducible for a fixed seed (trial t uses generator seed seed + t).
    """
    v = as_vector(state)
    if v.shape[0] != system.dim:
        raise ValueError(
            f"dimension mismatch: state {v.shape[0]}, system {system.dim}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    counts = [0] * system.dim
    for t in range(trials):
        rng = np.random.default_rng(seed + t)
        w = v
        bits = []
        for p in system.projectors:
            yes = p @ w
            p_yes = float(np.real(np.vdot(yes, yes)) / np.real(np.vdot(w, w)))
            if rng.random() < p_yes:
                bits.append(1)
                w = yes
            else:
                bits.append(0)
                w = w - yes
        counts[detector_for_bits(bits) - 1] += 1
    return counts


def naive_search(n: int, target_index: int, question_order: Sequence[int],
                 infer_last: bool = False) -> QuestionCountRecord:
    """Ask "is it state i?" in the given order until the target says yes.

    question_order is a permutation of 1..2^n.  By default the final
    question is counted even when its answer is forced after 2^n - 1
    noes; infer_last drops that forced question.
    """
    dim = 2 ** n
    if not 1 <= target_index <= dim:
        raise ValueError(f"target_index must be in 1..{dim}, got {target_index}")
    order = list(question_order)
    if sorted(order) != list(range(1, dim + 1)):
        raise ValueError("question_order must be a permutation of 1..2^n")
    asked = 0
    for q in order:
        asked += 1
        if q == target_index:
            break
    if infer_last and asked == dim:
        asked = dim - 1
    return QuestionCountRecord(target_index, asked, "naive")


def question_count_stats(n: int, trials: int, seed: int,
                         infer_last: bool = False) -> StatsSummary:
    """Mean/max question counts: sampled naive strategy vs. the n-step sieve.

    Naive trials draw a uniform target and a uniform question order;
    trial t derives its generator from seed + t, so results do not depend
    on execution order across threads.  The sieve side is exact: every
    search takes n questions.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > MAX_N:
        raise ResourceLimitError(f"n = {n} exceeds the guard {MAX_N}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    dim = 2 ** n
    total = 0
    worst = 0
    for t in range(trials):
        rng = np.random.default_rng(seed + t)
        target = int(rng.integers(1, dim + 1))
        order = rng.permutation(dim) + 1
        record = naive_search(n, target, order.tolist(), infer_last=infer_last)
        total += record.questions_asked
        worst = max(worst, record.questions_asked)
    naive = StrategyStats("naive", n, trials, seed, total / trials, worst)
    sieve = StrategyStats("sieve", n, trials, seed, float(n), n)
    return StatsSummary(naive, sieve)
