import math
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from signchange.counting import count_nonzero
from signchange.transitions import (
    Hessian2,
    SmoothingParams,
    Topology,
    hadamard_norm_sq,
    pair_counts,
    sign_changes,
    smoothed_count,
    smoothed_sign_changes,
    symmetric2_eigenvalues,
    transition_component,
    transition_hessian_2d,
    transition_map,
    transition_norm_sq,
)

signs = st.sampled_from((-1, 0, 1))
patterns = st.lists(signs, min_size=2, max_size=8).map(tuple)
topologies = st.sampled_from(list(Topology))


def test_pairs_layout():
    assert Topology.CIRCULAR.pairs(4) == [(0, 1), (1, 2), (2, 3), (3, 0)]
    assert Topology.LINEAR.pairs(4) == [(0, 1), (1, 2), (2, 3)]
    with pytest.raises(ValueError):
        Topology.CIRCULAR.pairs(0)


def test_topology_from_name():
    assert Topology.from_name("circular") is Topology.CIRCULAR
    assert Topology.from_name("LINEAR") is Topology.LINEAR
    with pytest.raises(ValueError):
        Topology.from_name("moebius")


@pytest.mark.parametrize("a,b", [(x, x) for x in (-1, 0, 1)])
def test_component_vanishes_on_equal_signs(a, b):
    for k in (0.5, -0.5, 2.0, Fraction(1, 3)):
        assert transition_component(a, b, k) == 0


@pytest.mark.parametrize("a,b", [(0, 1), (1, 0), (0, -1), (-1, 0)])
def test_component_weak_transition_magnitude_one(a, b):
    for k in (0.5, -0.5, 2.0):
        assert abs(transition_component(a, b, k)) == 1


@pytest.mark.parametrize("a,b", [(1, -1), (-1, 1)])
def test_component_full_flip_is_plus_two_k(a, b):
    # both flip orientations give +2k, not opposite signs
    assert transition_component(a, b, 0.5) == 1.0
    assert transition_component(a, b, Fraction(1, 2)) == Fraction(1)
    assert transition_component(a, b, -2) == -4


def test_component_rejects_non_signs():
    with pytest.raises(ValueError):
        transition_component(2, 0, 0.5)
    with pytest.raises(ValueError):
        transition_component(0, 1, math.inf)


def test_sign_change_example_vector():
    x = (-24.0, -30.0, 19.0, 14.0, 0.0)
    assert sign_changes(x, Topology.CIRCULAR) == 3
    assert sign_changes(x, Topology.LINEAR) == 2
    assert pair_counts(x, Topology.CIRCULAR) == (2, 1)


def test_sign_changes_needs_two_components():
    with pytest.raises(ValueError):
        sign_changes([1.0])


@given(patterns, topologies)
def test_norm_at_half_counts_changes(pattern, topo):
    t = sign_changes(pattern, topo)
    assert transition_norm_sq(pattern, Fraction(1, 2), topo) == t
    assert transition_norm_sq(pattern, Fraction(-1, 2), topo) == t
    assert transition_norm_sq(pattern, 0.5, topo) == t


@given(patterns, topologies, st.sampled_from((0.1, 0.25, 0.4, 0.5)), st.sampled_from((0.5, 0.75, 1.0, 2.0)))
def test_norm_brackets_count(pattern, topo, k_low, k_high):
    t = sign_changes(pattern, topo)
    assert transition_norm_sq(pattern, k_low, topo) <= t
    assert transition_norm_sq(pattern, k_high, topo) >= t


@given(patterns, topologies)
def test_count_is_negation_invariant(pattern, topo):
    negated = tuple(-v for v in pattern)
    assert sign_changes(pattern, topo) == sign_changes(negated, topo)


@given(patterns, topologies, st.sampled_from((0.1, 0.5, 1.0, -0.3, 2.0)))
def test_transition_support_size_is_the_count(pattern, topo, k):
    values = transition_map(pattern, k, topo).values
    assert count_nonzero(np.asarray(values, dtype=float)) == sign_changes(pattern, topo)


@given(patterns, topologies)
def test_weak_plus_flips_is_the_count(pattern, topo):
    weak, flips = pair_counts(pattern, topo)
    assert weak + flips == sign_changes(pattern, topo)
    assert sign_changes(pattern, topo) <= (len(pattern) if topo is Topology.CIRCULAR else len(pattern) - 1)


@given(patterns, st.sampled_from((0.5, 1.0, 0.25, -1.5)))
def test_hadamard_form_matches_closed_form(pattern, k):
    direct = float(transition_norm_sq(pattern, k, Topology.CIRCULAR))
    assert hadamard_norm_sq(pattern, k) == pytest.approx(direct, abs=1e-12)


def test_hadamard_on_real_vector():
    x = np.array([3.5, -0.2, 0.0, 12.0, -7.0])
    assert hadamard_norm_sq(x, 0.5) == float(sign_changes(x, Topology.CIRCULAR))


def test_norm_sq_exact_fraction_arithmetic():
    value = transition_norm_sq((1, -1, 0, 1), Fraction(1, 3), Topology.CIRCULAR)
    # 2 weak transitions and 1 full flip: 2 + 4*(1/9)
    assert value == Fraction(22, 9)
    assert isinstance(value, Fraction)


def test_smoothing_params_validation():
    with pytest.raises(ValueError):
        SmoothingParams(0.0)
    with pytest.raises(ValueError):
        SmoothingParams(-1e-9)
    with pytest.raises(ValueError):
        smoothed_count([1.0], math.inf)


@given(st.lists(st.floats(-50, 50), min_size=1, max_size=8))
def test_smoothed_count_below_count(y):
    assert smoothed_count(y, 1e-3) <= count_nonzero(y) + 1e-12


@given(patterns, topologies)
def test_smoothed_changes_scale_on_patterns(pattern, topo):
    # transition entries on patterns are 0 or +-1 at k = 1/2, so the
    # smoothed value collapses to t / (1 + eps)
    t = sign_changes(pattern, topo)
    for eps in (1e-1, 1e-4, 1e-8):
        value = smoothed_sign_changes(pattern, eps, topo)
        assert value == pytest.approx(t / (1.0 + eps), abs=1e-9)
        assert value <= t


def test_smoothed_changes_monotone_in_eps():
    x = (1.0, -2.0, 0.0, 3.0)
    values = [smoothed_sign_changes(x, eps) for eps in (1e-1, 1e-3, 1e-6, 1e-9)]
    assert values == sorted(values)
    assert values[-1] == pytest.approx(sign_changes(x), abs=1e-6)


def test_hessian_entries_match_finite_differences():
    def g(x1, x2, b):
        return (x1 + x2 + b * x1 * x2) * (x1 * x2 - 1.0)

    x1, x2, b, h = 0.7, -1.3, 0.5, 1e-5
    hess = transition_hessian_2d((x1, x2), b)
    d11 = (g(x1 + h, x2, b) - 2.0 * g(x1, x2, b) + g(x1 - h, x2, b)) / (h * h)
    d22 = (g(x1, x2 + h, b) - 2.0 * g(x1, x2, b) + g(x1, x2 - h, b)) / (h * h)
    d12 = (
        g(x1 + h, x2 + h, b) - g(x1 + h, x2 - h, b) - g(x1 - h, x2 + h, b) + g(x1 - h, x2 - h, b)
    ) / (4.0 * h * h)
    assert hess.a11 == pytest.approx(d11, abs=1e-5)
    assert hess.a22 == pytest.approx(d22, abs=1e-5)
    assert hess.a12 == pytest.approx(d12, abs=1e-5)


def test_hessian_branch_negation_symmetry():
    # H at (-x) on the -1/2 branch is the negated +1/2 branch H at x
    for point in product((-1.0, 0.0, 1.0, 0.4), repeat=2):
        upper = transition_hessian_2d(point, 0.5)
        lower = transition_hessian_2d(tuple(-v for v in point), -0.5)
        assert lower.a11 == pytest.approx(-upper.a11, abs=1e-12)
        assert lower.a12 == pytest.approx(-upper.a12, abs=1e-12)
        assert lower.a22 == pytest.approx(-upper.a22, abs=1e-12)


def test_hessian_validation():
    with pytest.raises(ValueError):
        transition_hessian_2d((1.0, 2.0, 3.0), 0.5)
    with pytest.raises(ValueError):
        transition_hessian_2d((1.0, 2.0), 0.3)


@given(
    st.floats(-100, 100),
    st.floats(-100, 100),
    st.floats(-100, 100),
)
def test_closed_form_eigenvalues_match_numpy(a11, a12, a22):
    hi, lo = symmetric2_eigenvalues(Hessian2(a11=a11, a12=a12, a22=a22, branch=0.5))
    ref = np.linalg.eigvalsh(np.array([[a11, a12], [a12, a22]]))
    assert hi == pytest.approx(float(ref[1]), abs=1e-9)
    assert lo == pytest.approx(float(ref[0]), abs=1e-9)
    assert hi >= lo
