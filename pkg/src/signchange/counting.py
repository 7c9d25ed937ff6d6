"""Counting nonzero components and the subdifferential of the count.

The number of nonzero components of a vector equals the squared Euclidean
norm of its componentwise sign vector.  Its Frechet, proximal and Clarke
subdifferentials at x all coincide with the subspace of vectors vanishing
on the support of x, so membership is a simple predicate.  A concave-style
minorant |x|_1 / |x|_2 bounds the count from below away from the origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.stats import qmc

__all__ = [
    "sign",
    "sign_vector",
    "count_nonzero",
    "IndexSets",
    "index_sets",
    "is_count_subgradient",
    "sign_minorant_gap",
    "ProbeReport",
    "frechet_inequality_probe",
]


def sign(value: float, tol: float = 0.0) -> int:
    """Componentwise sign in {-1, 0, +1}; |value| <= tol maps to 0."""
    if not math.isfinite(value):
        raise ValueError(f"sign is undefined for non-finite value {value!r}")
    if tol < 0.0:
        raise ValueError("tolerance must be nonnegative")
    if value > tol:
        return 1
    if value < -tol:
        return -1
    return 0


def as_vector(x: Iterable[float]) -> np.ndarray:
    """Validate and convert to a 1-D float array with finite entries."""
    arr = np.asarray(list(x) if not isinstance(x, (np.ndarray, list, tuple)) else x, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("expected a nonempty 1-D real vector")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector entries must be finite")
    return arr


def sign_vector(x: Iterable[float], tol: float = 0.0) -> tuple[int, ...]:
    return tuple(sign(v, tol) for v in as_vector(x))


def count_nonzero(x: Iterable[float]) -> int:
    """Number of nonzero components (zero detection is exact)."""
    return int(np.count_nonzero(as_vector(x)))


@dataclass(frozen=True)
class IndexSets:
    """Partition of 0-based indices by zero versus nonzero component."""

    zeros: frozenset[int]
    support: frozenset[int]


def index_sets(x: Iterable[float]) -> IndexSets:
    arr = as_vector(x)
    zeros = frozenset(int(i) for i in np.flatnonzero(arr == 0.0))
    support = frozenset(range(arr.size)) - zeros
    return IndexSets(zeros=zeros, support=support)


def is_count_subgradient(x: Iterable[float], candidate: Iterable[float]) -> bool:
    """Whether candidate lies in the subdifferential of the count at x.

    All three subdifferential notions (Frechet, proximal, Clarke) agree:
    the candidate must vanish on the support of x.  At x = 0 every vector
    qualifies.
    """
    arr = as_vector(x)
    cand = as_vector(candidate)
    if arr.size != cand.size:
        raise ValueError("dimension mismatch")
    return bool(np.all(cand[arr != 0.0] == 0.0))


def sign_minorant_gap(x: Iterable[float]) -> float:
    """count_nonzero(x) - |x|_1 / |x|_2, nonnegative for x != 0."""
    arr = as_vector(x)
    norm = float(np.linalg.norm(arr))
    if norm == 0.0:
        raise ValueError("minorant gap is undefined at the origin")
    return count_nonzero(arr) - float(np.sum(np.abs(arr))) / norm


@dataclass(frozen=True)
class ProbeReport:
    """Worst sampled Frechet difference quotient near a point."""

    min_quotient: float
    worst_offset: tuple[float, ...]
    samples_used: int
    radius: float


def frechet_inequality_probe(
    x: Iterable[float],
    candidate: Iterable[float],
    samples: int = 512,
    radius: float = 0.1,
) -> ProbeReport:
    """Sample (c(y) - c(x) - <candidate, y - x>) / |y - x| over y near x.

    Uses an unscrambled Sobol sample of the radius box (deterministic)
    plus every axis-aligned +-radius probe.  A markedly negative minimum
    is evidence against candidate being a Frechet subgradient; the probe
    is one-sided and cannot certify membership.
    """
    arr = as_vector(x)
    cand = as_vector(candidate)
    if arr.size != cand.size:
        raise ValueError("dimension mismatch")
    if samples < 1:
        raise ValueError("need at least one sample")
    if radius <= 0.0:
        raise ValueError("radius must be positive")
    n = arr.size

    m = max(1, math.ceil(math.log2(samples)))
    unit = qmc.Sobol(d=n, scramble=False).random_base2(m)[:samples]
    offsets = []
    for row in unit:
        off = radius * (2.0 * row - 1.0)
        norm = float(np.linalg.norm(off))
        if norm > radius:
            # project box corners back onto the sphere so no budget is lost
            off = off * (radius / norm)
        offsets.append(off)
    for i in range(n):
        for s in (radius, -radius):
            probe = np.zeros(n)
            probe[i] = s
            offsets.append(probe)

    base = count_nonzero(arr)
    best = math.inf
    worst = None
    used = 0
    for off in offsets:
        norm = float(np.linalg.norm(off))
        if norm == 0.0 or norm > radius + 1e-15:
            continue
        used += 1
        quotient = (count_nonzero(arr + off) - base - float(np.dot(cand, off))) / norm
        if quotient < best:
            best = quotient
            worst = off
    assert worst is not None
    return ProbeReport(
        min_quotient=best,
        worst_offset=tuple(float(v) for v in worst),
        samples_used=used,
        radius=radius,
    )
