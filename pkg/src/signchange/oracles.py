"""Brute-force enumeration and named verification oracles.

Everything here recomputes sign change statistics directly from integer
pattern arrays, independently of the scalar library routines, so the
registered oracles can confront the library with exhaustive desk-scale
evidence: full pattern-pair subgradient sweeps, norm bound chains,
Hadamard identity checks, the 2-D Hessian eigenvalue table and the exact
zero-direction gap identity.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable

import numpy as np

from .counting import count_nonzero, sign_minorant_gap, sign_vector
from .subgradients import GapParams, decoupled_gap, zero_direction_gap
from .transitions import (
    Hessian2,
    Topology,
    hadamard_norm_sq,
    pair_counts,
    sign_changes,
    smoothed_sign_changes,
    symmetric2_eigenvalues,
    transition_hessian_2d,
    transition_norm_sq,
)

__all__ = [
    "pattern_grid",
    "pattern_stats",
    "GridTable",
    "enumerate_grid",
    "center_symmetry_check",
    "Label",
    "LocalClass",
    "classify_point",
    "VerifyReport",
    "run_oracle",
    "list_oracles",
]

MAX_GRID_DIM = 12

# weight pairs (inner, outer) satisfying 0 < inner <= 1/2 <= outer
SWEEP_WEIGHTS = [
    (ky, kx) for ky in (0.1, 0.25, 0.5) for kx in (0.5, 0.75, 1.0, 2.0)
]
SWEEP_WEIGHTS_EXACT = [
    (ky, kx)
    for ky in (Fraction(1, 10), Fraction(1, 4), Fraction(1, 2))
    for kx in (Fraction(1, 2), Fraction(3, 4), Fraction(1), Fraction(2))
]


def pattern_grid(n: int) -> np.ndarray:
    """All 3^n sign patterns as an int8 array in lexicographic order.

    Row r holds the base-3 digits of r shifted to {-1, 0, 1}, so the
    ordering matches itertools.product((-1, 0, 1), repeat=n) and the
    negation of row r is row 3^n - 1 - r.
    """
    if not 2 <= n <= MAX_GRID_DIM:
        raise ValueError(f"pattern dimension must lie in [2, {MAX_GRID_DIM}]")
    powers = 3 ** np.arange(n - 1, -1, -1, dtype=np.int64)
    idx = np.arange(3**n, dtype=np.int64)
    return ((idx[:, None] // powers[None, :]) % 3 - 1).astype(np.int8)


def pattern_stats(patterns: np.ndarray, topology: Topology) -> tuple[np.ndarray, np.ndarray]:
    """(weak, flips) per row, computed directly from adjacent products."""
    if topology is Topology.CIRCULAR:
        a, b = patterns, np.roll(patterns, -1, axis=1)
    else:
        a, b = patterns[:, :-1], patterns[:, 1:]
    prod = a.astype(np.int16) * b.astype(np.int16)
    flips = np.count_nonzero(prod == -1, axis=1)
    weak = np.count_nonzero((prod == 0) & (a != b), axis=1)
    return weak.astype(np.int64), flips.astype(np.int64)


@dataclass(frozen=True)
class GridTable:
    """Exhaustive sign change table over all patterns of one dimension."""

    n: int
    topology: Topology
    patterns: np.ndarray
    t: np.ndarray

    def histogram(self) -> dict[int, int]:
        values, counts = np.unique(self.t, return_counts=True)
        return {int(v): int(c) for v, c in zip(values, counts)}

    def rows(self) -> Iterable[tuple[tuple[int, ...], int]]:
        for pattern, value in zip(self.patterns, self.t):
            yield tuple(int(v) for v in pattern), int(value)

    def first_component_slices(self) -> dict[int, tuple[int, int]]:
        """Contiguous row ranges per leading component (lex-major order)."""
        block = 3 ** (self.n - 1)
        return {z1: ((z1 + 1) * block, (z1 + 2) * block) for z1 in (-1, 0, 1)}

    def to_csv(self, first_component: int | None = None) -> str:
        header = ",".join(f"z{i + 1}" for i in range(self.n)) + ",t"
        if first_component is None:
            rows = zip(self.patterns, self.t)
        else:
            if first_component not in (-1, 0, 1):
                raise ValueError("slice selector must be a sign value")
            lo, hi = self.first_component_slices()[first_component]
            rows = zip(self.patterns[lo:hi], self.t[lo:hi])
        lines = [header]
        for pattern, value in rows:
            lines.append(",".join(str(int(v)) for v in pattern) + f",{int(value)}")
        return "\n".join(lines) + "\n"

    def json_summary(self, threshold: int | None = None) -> dict:
        thr = self.n - 1 if threshold is None else threshold
        sel = self.t > thr
        return {
            "n": self.n,
            "topology": self.topology.value,
            "rows": int(self.t.size),
            "histogram": {str(k): v for k, v in sorted(self.histogram().items())},
            "slices": {
                str(z1): list(span) for z1, span in self.first_component_slices().items()
            },
            "symmetry": {
                "threshold": thr,
                "count_above": int(np.count_nonzero(sel)),
                "closed_under_negation": center_symmetry_check(self, thr),
            },
        }


def enumerate_grid(n: int, topology: Topology = Topology.CIRCULAR) -> GridTable:
    patterns = pattern_grid(n)
    weak, flips = pattern_stats(patterns, topology)
    return GridTable(n=n, topology=topology, patterns=patterns, t=weak + flips)


def center_symmetry_check(table: GridTable, threshold: int) -> bool:
    """Whether {z : t(z) > threshold} is closed under z -> -z.

    Lexicographic ordering maps negation to index reversal, so the
    selected mask must be a palindrome.
    """
    sel = table.t > threshold
    return bool(np.array_equal(sel, sel[::-1]))


class Label(enum.Enum):
    NO_ZERO_STATIONARY = "NoZeroStationary"
    LOCAL_MAX = "LocalMax"
    LOCAL_MIN = "LocalMin"
    NEITHER = "Neither"


_FRECHET_NOTES = {
    Label.NO_ZERO_STATIONARY: "frechet subdifferential = {0}",
    Label.NEITHER: "frechet subdifferential = {0}",
    Label.LOCAL_MAX: "frechet subdifferential contained in the zero-support subspace of x",
    Label.LOCAL_MIN: "frechet subdifferential combinatorial (not enumerated here)",
}


@dataclass(frozen=True)
class LocalClass:
    """Local behaviour of the count over sign patterns reachable from x."""

    label: Label
    t_at_x: int
    reachable: tuple[tuple[tuple[int, ...], int], ...]
    frechet_note: str


def classify_point(x: Iterable[float], topology: Topology = Topology.CIRCULAR) -> LocalClass:
    """Compare t over every pattern reachable by perturbing zeros of x.

    Nonzero components keep their sign under small perturbations while
    zeros may move anywhere, so the reachable patterns determine whether
    x is a local extremum of the count.
    """
    s = sign_vector(x)
    if len(s) < 2:
        raise ValueError("classification needs at least two components")
    options = [(si,) if si != 0 else (-1, 0, 1) for si in s]
    reachable = tuple(
        (pattern, sign_changes(pattern, topology)) for pattern in product(*options)
    )
    t_x = sign_changes(s, topology)
    values = [t for _, t in reachable]
    if all(si != 0 for si in s):
        label = Label.NO_ZERO_STATIONARY
    elif all(t <= t_x for t in values):
        label = Label.LOCAL_MAX
    elif all(t >= t_x for t in values):
        label = Label.LOCAL_MIN
    else:
        label = Label.NEITHER
    return LocalClass(
        label=label,
        t_at_x=t_x,
        reachable=reachable,
        frechet_note=_FRECHET_NOTES[label],
    )


@dataclass(frozen=True)
class VerifyReport:
    name: str
    passed: bool
    checks: int
    counterexample: dict | None
    details: str


def _report(name: str, checks: int, counterexample: dict | None, details: str) -> VerifyReport:
    return VerifyReport(
        name=name,
        passed=counterexample is None,
        checks=checks,
        counterexample=counterexample,
        details=details,
    )


def _oracle_library_crosscheck(n: int) -> VerifyReport:
    """Scalar routines against the independent array statistics."""
    name = f"library_crosscheck_n{n}"
    checks = 0
    for topology in Topology:
        patterns = pattern_grid(n)
        weak, flips = pattern_stats(patterns, topology)
        for r, pattern in enumerate(map(tuple, patterns.tolist())):
            checks += 3
            got = pair_counts(pattern, topology)
            if got != (int(weak[r]), int(flips[r])):
                return _report(name, checks, {"pattern": pattern, "pair_counts": got}, "")
            t_lib = sign_changes(pattern, topology)
            if t_lib != int(weak[r] + flips[r]):
                return _report(name, checks, {"pattern": pattern, "t": t_lib}, "")
            if transition_norm_sq(pattern, 0.5, topology) != t_lib:
                return _report(name, checks, {"pattern": pattern, "norm_half": True}, "")
    return _report(name, checks, None, f"{checks} scalar/array comparisons agree")


def _oracle_ft_inequality(n: int) -> VerifyReport:
    """t(s') - t(s) >= |l(s'; ky)|^2 - |l(s; kx)|^2 over all pattern pairs.

    Every displaced pattern s' is realized by d = s' - s, so the pair
    sweep is a complete verification at this dimension.
    """
    name = f"ft_inequality_n{n}"
    checks = 0
    for topology in Topology:
        patterns = pattern_grid(n)
        weak, flips = pattern_stats(patterns, topology)
        t = (weak + flips).astype(float)
        for ky, kx in SWEEP_WEIGHTS:
            displaced = weak + 4.0 * ky * ky * flips
            base = weak + 4.0 * kx * kx * flips
            lhs = t[None, :] - t[:, None]
            rhs = displaced[None, :] - base[:, None]
            checks += lhs.size
            bad = np.argwhere(lhs < rhs)
            if bad.size:
                i, j = map(int, bad[0])
                return _report(
                    name,
                    checks,
                    {
                        "base": tuple(int(v) for v in patterns[i]),
                        "displaced": tuple(int(v) for v in patterns[j]),
                        "weights": (ky, kx),
                        "topology": topology.value,
                    },
                    "",
                )
    return _report(
        name,
        checks,
        None,
        f"{3**n}x{3**n} pattern pairs x {len(SWEEP_WEIGHTS)} weight pairs x 2 topologies, no violation",
    )


def _oracle_coupled_equality(n: int) -> VerifyReport:
    """The coupled gap |l(y; 1/2)|^2 matches t(y) exactly, so the
    subgradient inequality holds with equality on every pattern pair."""
    name = f"coupled_equality_n{n}"
    checks = 0
    for topology in Topology:
        patterns = pattern_grid(n)
        weak, flips = pattern_stats(patterns, topology)
        t = weak + flips
        coupled = weak + 4.0 * 0.25 * flips
        checks += t.size
        if not np.array_equal(coupled, t.astype(float)):
            r = int(np.argmax(coupled != t))
            return _report(
                name, checks, {"pattern": tuple(int(v) for v in patterns[r])}, ""
            )
        lhs = t[None, :] - t[:, None]
        rhs = coupled[None, :] - coupled[:, None]
        checks += lhs.size
        if not np.array_equal(lhs.astype(float), rhs):
            return _report(name, checks, {"topology": topology.value}, "")
    return _report(name, checks, None, "coupled gap equals the count difference exactly")


def _oracle_bound_chain(n: int) -> VerifyReport:
    """|l(x; k)|^2 <= t(x) <= |l(x; k')|^2 for |k| <= 1/2 <= |k'|."""
    name = f"bound_chain_n{n}"
    lows = (0.1, 0.25, 0.4, 0.5, -0.5)
    highs = (0.5, 0.75, 1.0, 2.0, -2.0)
    checks = 0
    for topology in Topology:
        patterns = pattern_grid(n)
        weak, flips = pattern_stats(patterns, topology)
        t = weak + flips
        for k in lows:
            norm = weak + 4.0 * k * k * flips
            checks += t.size
            if np.any(norm > t):
                r = int(np.argmax(norm > t))
                return _report(
                    name,
                    checks,
                    {"pattern": tuple(int(v) for v in patterns[r]), "k": k},
                    "",
                )
        for k in highs:
            norm = weak + 4.0 * k * k * flips
            checks += t.size
            if np.any(norm < t):
                r = int(np.argmax(norm < t))
                return _report(
                    name,
                    checks,
                    {"pattern": tuple(int(v) for v in patterns[r]), "k": k},
                    "",
                )
        checks += t.size
        if np.any(weak + flips != t):
            return _report(name, checks, {"topology": topology.value}, "")
    return _report(name, checks, None, "norm bracket around the count holds at every pattern")


def _oracle_zero_set(n: int) -> VerifyReport:
    """count_nonzero(l(x; k)) = t(x) for every k != 0."""
    name = f"zero_set_n{n}"
    checks = 0
    for topology in Topology:
        patterns = pattern_grid(n)
        weak, flips = pattern_stats(patterns, topology)
        t = weak + flips
        if topology is Topology.CIRCULAR:
            a, b = patterns, np.roll(patterns, -1, axis=1)
        else:
            a, b = patterns[:, :-1], patterns[:, 1:]
        a = a.astype(float)
        b = b.astype(float)
        prod = a * b
        for k in (0.1, 0.5, 1.0, 2.0, -0.3):
            values = (a + b + k * prod) * (prod - 1.0)
            nonzeros = np.count_nonzero(values != 0.0, axis=1)
            checks += t.size
            if np.any(nonzeros != t):
                r = int(np.argmax(nonzeros != t))
                return _report(
                    name,
                    checks,
                    {"pattern": tuple(int(v) for v in patterns[r]), "k": k},
                    "",
                )
    return _report(name, checks, None, "transition support size equals the count for k != 0")


def _oracle_hadamard(n: int) -> VerifyReport:
    """Hadamard product form against the closed-form circular norm."""
    name = f"hadamard_n{n}"
    checks = 0
    worst = 0.0
    for pattern in product((-1, 0, 1), repeat=n):
        for k in (0.5, 1.0, 0.25):
            checks += 1
            delta = abs(
                hadamard_norm_sq(pattern, k)
                - float(transition_norm_sq(pattern, k, Topology.CIRCULAR))
            )
            worst = max(worst, delta)
            if delta > 1e-12:
                return _report(name, checks, {"pattern": pattern, "k": k, "delta": delta}, "")
    return _report(name, checks, None, f"max |difference| = {worst:.3e}")


def _oracle_hadamard_random(seed: int = 20240817, count: int = 1000) -> VerifyReport:
    name = "hadamard_random"
    rng = np.random.default_rng(seed)
    checks = 0
    worst = 0.0
    for _ in range(count):
        n = int(rng.integers(2, 11))
        x = rng.normal(scale=10.0, size=n)
        x[rng.random(n) < 0.3] = 0.0
        k = float(rng.uniform(-2.0, 2.0))
        checks += 1
        delta = abs(hadamard_norm_sq(x, k) - float(transition_norm_sq(x, k, Topology.CIRCULAR)))
        worst = max(worst, delta)
        if delta > 1e-12:
            return _report(name, checks, {"x": x.tolist(), "k": k, "delta": delta}, "")
    return _report(name, checks, None, f"{count} random vectors, max |difference| = {worst:.3e}")


_SQRT26 = math.sqrt(26.0)
_SQRT41 = math.sqrt(41.0)
_SQRT2 = math.sqrt(2.0)

# 2 * eigenvalue pairs of the upper branch (+1/2) Hessian at each sign point;
# the lower branch at p equals the negated upper branch at -p.
EXPECTED_2EIG_UPPER: dict[tuple[int, int], tuple[float, float]] = {
    (-1, -1): (3.0, -7.0),
    (-1, 0): (-1.0 + _SQRT26, -1.0 - _SQRT26),
    (-1, 1): (2.0 + _SQRT41, 2.0 - _SQRT41),
    (0, -1): (-1.0 + _SQRT26, -1.0 - _SQRT26),
    (0, 0): (1.0, -1.0),
    (0, 1): (3.0 + 3.0 * _SQRT2, 3.0 - 3.0 * _SQRT2),
    (1, -1): (2.0 + _SQRT41, 2.0 - _SQRT41),
    (1, 0): (3.0 + 3.0 * _SQRT2, 3.0 - 3.0 * _SQRT2),
    (1, 1): (17.0, -5.0),
}


def expected_double_eigenvalues(point: tuple[int, int], branch: float) -> tuple[float, float]:
    if branch == 0.5:
        return EXPECTED_2EIG_UPPER[point]
    hi, lo = EXPECTED_2EIG_UPPER[(-point[0], -point[1])]
    return (-lo, -hi)


def _oracle_hessian_table() -> VerifyReport:
    """Eigenvalue table at the nine sign points, both branches.

    Confronts the closed-form symmetric eigensolver with numpy's
    eigvalsh and with the frozen expected values (doubled eigenvalues).
    """
    name = "hessian_table"
    checks = 0
    worst = 0.0
    for point in product((-1, 0, 1), repeat=2):
        for branch in (0.5, -0.5):
            h = transition_hessian_2d(point, branch)
            hi, lo = symmetric2_eigenvalues(h)
            ref = np.linalg.eigvalsh(np.array([[h.a11, h.a12], [h.a12, h.a22]]))
            exp_hi, exp_lo = expected_double_eigenvalues(point, branch)
            deltas = (
                abs(2.0 * hi - exp_hi),
                abs(2.0 * lo - exp_lo),
                abs(hi - float(ref[1])),
                abs(lo - float(ref[0])),
            )
            checks += len(deltas)
            worst = max(worst, *deltas)
            if max(deltas) > 1e-10:
                return _report(
                    name,
                    checks,
                    {"point": point, "branch": branch, "eigenvalues": (hi, lo)},
                    "",
                )
    return _report(name, checks, None, f"9 points x 2 branches match, max delta {worst:.3e}")


def _oracle_qhat_identity(n: int) -> VerifyReport:
    """Zero-direction closed form equals the decoupled gap at d = 0 exactly
    and reduces to 4(ky^2 - kx^2) * flips <= 0 (Fraction arithmetic)."""
    name = f"qhat_identity_n{n}"
    checks = 0
    zero = [0] * n
    for topology in Topology:
        for pattern in product((-1, 0, 1), repeat=n):
            _, flips = pair_counts(pattern, topology)
            for ky, kx in SWEEP_WEIGHTS_EXACT:
                params = GapParams(k_y=ky, k_x=kx)
                closed = zero_direction_gap(pattern, params, topology)
                direct = decoupled_gap(pattern, zero, params, topology)
                checks += 3
                if closed != direct:
                    return _report(
                        name,
                        checks,
                        {"pattern": pattern, "weights": (str(ky), str(kx))},
                        "",
                    )
                if closed != 4 * (ky * ky - kx * kx) * flips:
                    return _report(name, checks, {"pattern": pattern, "reduction": True}, "")
                if closed > 0:
                    return _report(name, checks, {"pattern": pattern, "positive": True}, "")
    return _report(name, checks, None, f"{checks} exact rational identities hold")


def _oracle_smoothing(n: int) -> VerifyReport:
    """Smoothed count below the count, monotone as eps decreases, tight
    at eps = 1e-9."""
    name = f"smoothing_n{n}"
    checks = 0
    eps_grid = (1e-1, 1e-3, 1e-6)
    for topology in Topology:
        for pattern in product((-1, 0, 1), repeat=n):
            t = sign_changes(pattern, topology)
            values = [smoothed_sign_changes(pattern, e, topology) for e in eps_grid]
            checks += len(values) + 2
            if any(v > t for v in values):
                return _report(name, checks, {"pattern": pattern, "above": True}, "")
            if any(a > b for a, b in zip(values, values[1:])):
                return _report(name, checks, {"pattern": pattern, "monotone": False}, "")
            if abs(smoothed_sign_changes(pattern, 1e-9, topology) - t) > 1e-6:
                return _report(name, checks, {"pattern": pattern, "limit": False}, "")
    return _report(name, checks, None, "smoothing is a monotone lower approximation")


def _oracle_signminor_random(seed: int = 20240817, count: int = 10000) -> VerifyReport:
    """Minorant gap nonnegative on random nonzero vectors, zero on
    single-support ones."""
    name = "signminor_random"
    rng = np.random.default_rng(seed)
    checks = 0
    worst = math.inf
    for _ in range(count):
        n = int(rng.integers(1, 11))
        x = rng.normal(scale=rng.choice([0.01, 1.0, 100.0]), size=n)
        x[rng.random(n) < 0.25] = 0.0
        if not np.any(x):
            x[int(rng.integers(n))] = float(rng.normal() or 1.0)
        gap = sign_minorant_gap(x)
        checks += 1
        worst = min(worst, gap)
        if gap < -1e-12:
            return _report(name, checks, {"x": x.tolist(), "gap": gap}, "")
    for value in (3.0, -0.5, 1e-8):
        single = np.zeros(4)
        single[1] = value
        checks += 1
        if sign_minorant_gap(single) != 0.0:
            return _report(name, checks, {"x": single.tolist()}, "")
    return _report(name, checks, None, f"minimum sampled gap = {worst:.3e}")


def _build_registry() -> dict[str, Callable[[], VerifyReport]]:
    registry: dict[str, Callable[[], VerifyReport]] = {}
    for n in range(2, 7):
        registry[f"library_crosscheck_n{n}"] = lambda n=n: _oracle_library_crosscheck(n)
        registry[f"ft_inequality_n{n}"] = lambda n=n: _oracle_ft_inequality(n)
        registry[f"coupled_equality_n{n}"] = lambda n=n: _oracle_coupled_equality(n)
        registry[f"zero_set_n{n}"] = lambda n=n: _oracle_zero_set(n)
        registry[f"qhat_identity_n{n}"] = lambda n=n: _oracle_qhat_identity(n)
        registry[f"smoothing_n{n}"] = lambda n=n: _oracle_smoothing(n)
    for n in range(2, 9):
        registry[f"bound_chain_n{n}"] = lambda n=n: _oracle_bound_chain(n)
        registry[f"hadamard_n{n}"] = lambda n=n: _oracle_hadamard(n)
    registry["hadamard_random"] = _oracle_hadamard_random
    registry["hessian_table"] = _oracle_hessian_table
    registry["signminor_random"] = _oracle_signminor_random
    return registry


_REGISTRY = _build_registry()


def list_oracles() -> list[str]:
    return sorted(_REGISTRY)


def run_oracle(name: str) -> VerifyReport:
    try:
        runner = _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown oracle {name!r}; known: {', '.join(list_oracles())}") from None
    return runner()
