"""JSON wire formats shared by the library and the CLI.

Matrices: {"rows": R, "cols": C, "data": [[re, im], ...]} row-major;
vectors are the same with cols = 1.  Values round-trip bit-identically
(floats are emitted with Python's shortest exact repr).
"""

from __future__ import annotations

from dataclasses import asdict
from typing import Any

import numpy as np

from .bases import Basis
from .partitions import Partition
from .sieve import DetectorOutcome, MeasurementDistribution, StrategyStats
from .systems import (MinimalityReport, PropositionSystem, RequirementReport)


def matrix_to_json(m) -> dict[str, Any]:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {a.shape}")
    return {
        "rows": a.shape[0],
        "cols": a.shape[1],
        "data": [[float(x.real), float(x.imag)] for x in a.reshape(-1)],
    }


def matrix_from_json(obj: dict[str, Any]) -> np.ndarray:
    rows, cols = int(obj["rows"]), int(obj["cols"])
    data = obj["data"]
    if len(data) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, got {len(data)}")
    flat = np.array([complex(re, im) for re, im in data], dtype=complex)
    return flat.reshape(rows, cols)


def vector_to_json(v) -> dict[str, Any]:
    a = np.asarray(v, dtype=complex)
    if a.ndim != 1:
        raise ValueError(f"expected a 1-d vector, got shape {a.shape}")
    return matrix_to_json(a.reshape(-1, 1))


def vector_from_json(obj: dict[str, Any]) -> np.ndarray:
    m = matrix_from_json(obj)
    if m.shape[1] != 1:
        raise ValueError(f"expected cols = 1 for a vector, got {m.shape[1]}")
    return m.reshape(-1)


def system_to_json(system: PropositionSystem) -> dict[str, Any]:
    return {"n": system.n,
            "projectors": [matrix_to_json(p) for p in system.projectors]}


def system_from_json(obj: dict[str, Any]) -> PropositionSystem:
    projs = tuple(matrix_from_json(p) for p in obj["projectors"])
    return PropositionSystem(int(obj["n"]), projs)


def partition_to_json(p: Partition) -> dict[str, Any]:
    return {"ground": p.ground_size, "blocks": [list(b) for b in p.blocks]}


def partition_from_json(obj: dict[str, Any]) -> Partition:
    return Partition(int(obj["ground"]),
                     tuple(tuple(int(i) for i in b) for b in obj["blocks"]))


def basis_to_json(b: Basis) -> dict[str, Any]:
    return {"labels": list(b.labels),
            "vectors": [vector_to_json(b.vectors[k]) for k in range(b.size)]}


def basis_from_json(obj: dict[str, Any]) -> Basis:
    vectors = np.array([vector_from_json(v) for v in obj["vectors"]])
    return Basis(vectors, tuple(obj["labels"]))


def requirement_report_to_json(r: RequirementReport) -> dict[str, Any]:
    d = asdict(r)
    d["ok"] = r.ok
    d["failures"] = list(r.failures)
    return d


def minimality_report_to_json(r: MinimalityReport) -> dict[str, Any]:
    d = asdict(r)
    d["ok"] = r.ok
    return d


def outcome_to_json(o: DetectorOutcome) -> dict[str, Any]:
    return {"answer_bits": list(o.answer_bits), "detector": o.detector_index}


def distribution_to_json(d: MeasurementDistribution) -> dict[str, Any]:
    return {"detectors": list(d.probabilities)}


def stats_to_json(s: StrategyStats) -> dict[str, Any]:
    return asdict(s)
