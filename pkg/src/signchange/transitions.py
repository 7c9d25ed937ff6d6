"""Sign change counting via a parametrized transition map.

For adjacent components with signs (a, b) the transition value is

    (a + b + k*a*b) * (a*b - 1)

which vanishes when the signs agree, has magnitude 1 when exactly one of
them is zero (a weak transition) and magnitude 2|k| on a full sign flip.
At k = +-1/2 the squared norm of the transition vector therefore counts
the sign changes exactly, and for general k it brackets that count from
below (|k| <= 1/2) or above (|k| >= 1/2).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .counting import as_vector, sign_vector

__all__ = [
    "Topology",
    "TransitionVector",
    "transition_component",
    "transition_map",
    "sign_changes",
    "pair_counts",
    "transition_norm_sq",
    "hadamard_norm_sq",
    "SmoothingParams",
    "smoothed_count",
    "smoothed_sign_changes",
    "Hessian2",
    "transition_hessian_2d",
    "symmetric2_eigenvalues",
]


class Topology(enum.Enum):
    """Adjacency pattern: wrap around (n pairs) or chain (n - 1 pairs)."""

    CIRCULAR = "circular"
    LINEAR = "linear"

    def pairs(self, n: int) -> list[tuple[int, int]]:
        if n < 1:
            raise ValueError("dimension must be positive")
        if self is Topology.CIRCULAR:
            return [(i, (i + 1) % n) for i in range(n)]
        return [(i, i + 1) for i in range(n - 1)]

    @classmethod
    def from_name(cls, name: str) -> "Topology":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown topology {name!r}; use 'circular' or 'linear'") from None


def _check_weight(k) -> None:
    if isinstance(k, float) and not math.isfinite(k):
        raise ValueError("transition weight k must be finite")


def transition_component(sign_a: int, sign_b: int, k):
    """(a + b + k*a*b) * (a*b - 1) for signs a, b in {-1, 0, 1}.

    Exact when k is int or Fraction.  Note both full flips evaluate to
    +2k: (-1 + 1 - k)(-1 - 1) = 2k, same as (1 - 1 - k)(-1 - 1).
    """
    if sign_a not in (-1, 0, 1) or sign_b not in (-1, 0, 1):
        raise ValueError("sign arguments must lie in {-1, 0, 1}")
    _check_weight(k)
    prod = sign_a * sign_b
    return (sign_a + sign_b + k * prod) * (prod - 1)


@dataclass(frozen=True)
class TransitionVector:
    """Transition values over the adjacency pairs, with their weight k."""

    values: tuple
    k: object
    topology: Topology


def transition_map(x: Iterable[float], k, topology: Topology = Topology.CIRCULAR) -> TransitionVector:
    s = sign_vector(x)
    values = tuple(transition_component(s[i], s[j], k) for i, j in topology.pairs(len(s)))
    return TransitionVector(values=values, k=k, topology=topology)


def pair_counts(x: Iterable[float], topology: Topology = Topology.CIRCULAR) -> tuple[int, int]:
    """(weak transitions, full flips) over the adjacency pairs of x."""
    s = sign_vector(x)
    weak = 0
    flips = 0
    for i, j in topology.pairs(len(s)):
        prod = s[i] * s[j]
        if prod == -1:
            flips += 1
        elif prod == 0 and s[i] != s[j]:
            weak += 1
    return weak, flips


def sign_changes(x: Iterable[float], topology: Topology = Topology.CIRCULAR) -> int:
    """Number of adjacent pairs whose componentwise signs differ."""
    s = sign_vector(x)
    if len(s) < 2:
        raise ValueError("sign changes need at least two components")
    return sum(1 for i, j in topology.pairs(len(s)) if s[i] != s[j])


def transition_norm_sq(x: Iterable[float], k, topology: Topology = Topology.CIRCULAR):
    """Squared norm of the transition vector, via weak + 4*k^2*flips.

    The closed form avoids accumulating squares, so the result is exact
    for int or Fraction k and reproduces sign_changes exactly at k = +-1/2.
    """
    _check_weight(k)
    weak, flips = pair_counts(x, topology)
    return weak + 4 * k * k * flips


def hadamard_norm_sq(x: Iterable[float], k) -> float:
    """Circular-topology squared norm in Hadamard product form.

    <((I + Z)s + k(s o Zs))^o2, ((s o Zs) - e)^o2> with s the sign vector
    of x and Z the one-step circular shift; an independent route to
    transition_norm_sq(x, k, CIRCULAR).
    """
    _check_weight(k)
    s = np.asarray(sign_vector(x), dtype=float)
    zs = np.roll(s, -1)
    prod = s * zs
    left = (s + zs + float(k) * prod) ** 2
    right = (prod - 1.0) ** 2
    return float(np.dot(left, right))


@dataclass(frozen=True)
class SmoothingParams:
    epsilon: float

    def __post_init__(self) -> None:
        if not (self.epsilon > 0.0 and math.isfinite(self.epsilon)):
            raise ValueError("smoothing epsilon must be positive and finite")


def _epsilon(eps) -> float:
    if isinstance(eps, SmoothingParams):
        return eps.epsilon
    return SmoothingParams(float(eps)).epsilon


def smoothed_count(y: Iterable[float], eps) -> float:
    """Smooth minorant of count_nonzero: sum of y_i^2 / (y_i^2 + eps)."""
    e = _epsilon(eps)
    arr = as_vector(y)
    sq = arr * arr
    return float(np.sum(sq / (sq + e)))


def smoothed_sign_changes(x: Iterable[float], eps, topology: Topology = Topology.CIRCULAR) -> float:
    """Smoothed count applied to the transition vector at k = 1/2.

    Monotonically nondecreasing as eps decreases, with limit sign_changes(x).
    """
    values = transition_map(x, 0.5, topology).values
    return smoothed_count(np.asarray(values, dtype=float), eps) if values else 0.0


@dataclass(frozen=True)
class Hessian2:
    """Symmetric 2x2 Hessian of the smooth two-component transition entry."""

    a11: float
    a12: float
    a22: float
    branch: float


def transition_hessian_2d(x: Iterable[float], branch: float) -> Hessian2:
    """Hessian of (x1 + x2 + b*x1*x2)(x1*x2 - 1) at real x, b = +-1/2.

    Second derivatives: d11 = x2(2 + 2b*x2), d22 = x1(2 + 2b*x1),
    d12 = 2(x1 + x2 + 2b*x1*x2 - b/2).
    """
    arr = as_vector(x)
    if arr.size != 2:
        raise ValueError("the smooth transition Hessian is a 2-D construction")
    if branch not in (0.5, -0.5):
        raise ValueError("branch must be +0.5 or -0.5")
    x1, x2 = float(arr[0]), float(arr[1])
    b = branch
    return Hessian2(
        a11=x2 * (2.0 + 2.0 * b * x2),
        a12=2.0 * x1 + 2.0 * x2 + 4.0 * b * x1 * x2 - b,
        a22=x1 * (2.0 + 2.0 * b * x1),
        branch=b,
    )


def symmetric2_eigenvalues(h: Hessian2) -> tuple[float, float]:
    """Closed-form eigenvalues of a symmetric 2x2 matrix, descending."""
    mean = 0.5 * (h.a11 + h.a22)
    spread = math.hypot(0.5 * (h.a11 - h.a22), h.a12)
    return (mean + spread, mean - spread)
