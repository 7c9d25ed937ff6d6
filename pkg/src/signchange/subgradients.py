"""Generalized subgradient gaps for the sign change count.

The count admits a two-argument subgradient calculus: a gap function
q(x, d) qualifies when t(x + d) - t(x) >= q(x, d) - q(x, 0) for all
displacements d.  The coupled choice q(x, d) = |l(x + d; 1/2)|^2 achieves
equality everywhere.  Decoupling the weight into an inner value k_y with
0 < |k_y| <= 1/2 for the displaced point and an outer value |k_x| >= 1/2
for the base point keeps the inequality valid and opens a nonpositive
slack at d = 0 with a short closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .counting import as_vector, sign_vector
from .transitions import Topology, pair_counts, transition_norm_sq

__all__ = [
    "GapParams",
    "coupled_subgradient_value",
    "decoupled_gap",
    "zero_direction_gap",
    "GapProfile",
    "gap_profile",
    "profile_csv",
]


@dataclass(frozen=True)
class GapParams:
    """Weight pair (k_y, k_x) with 0 < |k_y| <= 1/2 <= |k_x|."""

    k_y: object
    k_x: object

    def __post_init__(self) -> None:
        if not 0 < abs(self.k_y) <= Fraction(1, 2) <= abs(self.k_x):
            raise ValueError("gap weights must satisfy 0 < |k_y| <= 1/2 <= |k_x|")


def coupled_subgradient_value(y: Iterable[float], topology: Topology = Topology.CIRCULAR):
    """|l(y; 1/2)|^2, which equals sign_changes(y) exactly."""
    return transition_norm_sq(y, 0.5, topology)


def decoupled_gap(
    x: Iterable[float],
    d: Iterable[float],
    params: GapParams,
    topology: Topology = Topology.CIRCULAR,
):
    """|l(x + d; k_y)|^2 - |l(x; k_x)|^2.

    Subgradient inequality: sign_changes(x + d) - sign_changes(x) dominates
    this value for every displacement d.
    """
    base = as_vector(x)
    step = as_vector(d)
    if base.size != step.size:
        raise ValueError("dimension mismatch between point and displacement")
    return transition_norm_sq(base + step, params.k_y, topology) - transition_norm_sq(
        base, params.k_x, topology
    )


def zero_direction_gap(
    x: Iterable[float],
    params: GapParams,
    topology: Topology = Topology.CIRCULAR,
):
    """Closed form of the gap at d = 0 for the positive weight branch.

    (k_y - k_x) * sum over pairs of
        (s_i s_j - 1)^2 ((k_y + k_x) s_i^2 s_j^2 + 2 s_i s_j (s_i + s_j))
    where s is the sign vector of x.  Each summand is 0 except on full
    flips, where it contributes 4(k_y^2 - k_x^2) <= 0.  Exact for
    Fraction weights.
    """
    k_y, k_x = params.k_y, params.k_x
    if not 0 < k_y <= Fraction(1, 2) <= k_x:
        raise ValueError("closed form requires the positive branch 0 < k_y <= 1/2 <= k_x")
    s = sign_vector(x)
    total = 0
    for i, j in topology.pairs(len(s)):
        prod = s[i] * s[j]
        total += (prod - 1) ** 2 * ((k_y + k_x) * prod * prod + 2 * prod * (s[i] + s[j]))
    return (k_y - k_x) * total


@dataclass(frozen=True)
class GapProfile:
    """Exact quadratic k |-> weak + 4*flips*k^2 + offset on (0, 1/2].

    weak and flips describe the displaced sign pattern; offset is the
    negated base norm -|l(x; k_x)|^2, kept exact when k_x is rational.
    """

    weak: int
    flips: int
    offset: object
    k_x: object

    @property
    def quad_coeff(self) -> int:
        return 4 * self.flips

    def value(self, k):
        if not 0 < k <= Fraction(1, 2):
            raise ValueError("profile weight must lie in (0, 1/2]")
        return self.weak + self.quad_coeff * k * k + self.offset


def gap_profile(
    x: Iterable[float],
    d: Iterable[float],
    k_x,
    topology: Topology = Topology.CIRCULAR,
) -> GapProfile:
    """Gap at fixed displacement as an exact quadratic in the inner weight."""
    if not abs(k_x) >= Fraction(1, 2):
        raise ValueError("outer weight must satisfy |k_x| >= 1/2")
    base = as_vector(x)
    step = as_vector(d)
    if base.size != step.size:
        raise ValueError("dimension mismatch between point and displacement")
    weak, flips = pair_counts(base + step, topology)
    return GapProfile(
        weak=weak,
        flips=flips,
        offset=-transition_norm_sq(base, k_x, topology),
        k_x=k_x,
    )


def profile_csv(profile: GapProfile, step: Fraction = Fraction(1, 200)) -> str:
    """CSV rows 'k,gap' for k = step, 2*step, ... up to 1/2."""
    step = Fraction(step)
    if not 0 < step <= Fraction(1, 2):
        raise ValueError("step must lie in (0, 1/2]")
    lines = ["k,gap"]
    k = step
    while k <= Fraction(1, 2):
        lines.append(f"{float(k)!r},{float(profile.value(k))!r}")
        k += step
    return "\n".join(lines) + "\n"
