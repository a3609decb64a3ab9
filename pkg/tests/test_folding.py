from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from djtrudi.core import SkewDiagram, positivity, specialize_mono
from djtrudi.folding import (
    conditions,
    enumerate_P,
    fold_pair,
    in_Q,
    in_R,
    in_R_direct,
    phi,
    phi_t,
    phi_t_inv,
    pi_inv_Q1,
    pi_inv_R,
    t_zero,
    unfold_pair,
)
from djtrudi.paths import classify_pair, enumerate_tuples
from djtrudi.regions import enumerate_H, enumerate_P2, odd_regions, project_pi

SHAPES = [(2, 1), (2, 2), (3, 2), (3, 3), (2, 2, 1), (3, 3, 1)]


def brute_P(d, n):
    """Identity tuples, no ordinary adjacent pair, no odd II_1-region."""
    out = set()
    for t in enumerate_tuples(d, n, "all"):
        if t.sigma != tuple(range(len(t.sigma))):
            continue
        if any(classify_pair(t.paths[i], t.paths[i + 1]) == "ordinary" for i in range(len(t.paths) - 1)):
            continue
        if odd_regions(project_pi(t, n), 1, "II"):
            continue
        out.add(t)
    return out


def test_t_zero():
    assert [t_zero(l) for l in range(1, 9)] == [1, 2, 2, 3, 3, 3, 3, 4]


@pytest.mark.parametrize("lam", SHAPES[:4])
@pytest.mark.parametrize("n", [2, 3])
def test_enumerate_P_matches_brute_force(lam, n):
    d = SkewDiagram(lam)
    assert set(enumerate_P(d, n)) == brute_P(d, n)


@pytest.mark.parametrize("lam", SHAPES)
@pytest.mark.parametrize("n", [2, 3])
def test_phi_is_a_weight_preserving_bijection(lam, n):
    d = SkewDiagram(lam)
    assert positivity(d, n)
    P2 = list(enumerate_P2(d, n))
    P = set(enumerate_P(d, n))
    images = [phi(t, n) for t in P2]
    assert set(images) == P and len(images) == len(P)
    for t, f in zip(P2, images):
        assert specialize_mono(t.weight_mono(n), n) == specialize_mono(f.weight_mono(n), n)


@pytest.mark.parametrize("lam", SHAPES)
def test_stages_invert(lam):
    n = 3
    d = SkewDiagram(lam)
    for t in enumerate_P2(d, n):
        h = project_pi(t, n)
        assert in_Q(h, 1)
        assert pi_inv_Q1(h) == t
        cur, stage = h, 1
        while conditions(cur, stage)[7]:
            nxt = phi_t(cur, stage)
            assert phi_t_inv(nxt, stage) == cur
            cur, stage = nxt, stage + 1
        assert fold_pair(h) == (cur, stage)
        assert unfold_pair(cur, stage) == h
        assert in_R(cur)
        assert pi_inv_R(cur) == phi(t, n)


@pytest.mark.parametrize("lam", [(2, 2), (3, 2), (2, 2, 1)])
def test_two_descriptions_of_R_agree(lam):
    for n in (2, 3):
        for h in enumerate_H(SkewDiagram(lam), n):
            assert in_R(h) == in_R_direct(h)


def test_conditions_keys():
    d = SkewDiagram((2, 2))
    h = next(iter(enumerate_H(d, 2)))
    assert set(conditions(h, 1)) == set(range(1, 8))


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(SHAPES), st.integers(2, 3))
def test_weight_multisets_agree(lam, n):
    d = SkewDiagram(lam)
    w2 = Counter(specialize_mono(t.weight_mono(n), n) for t in enumerate_P2(d, n))
    w1 = Counter(specialize_mono(t.weight_mono(n), n) for t in enumerate_P(d, n))
    assert w1 == w2


def test_second_stage_is_reached_and_inverted():
    n = 2
    d = SkewDiagram((3, 3, 3))
    stages = Counter()
    for t in enumerate_P2(d, n):
        h = project_pi(t, n)
        hf, stage = fold_pair(h)
        stages[stage] += 1
        assert unfold_pair(hf, stage) == h
        assert in_R(hf) and in_R_direct(hf)
    assert stages[2] > 0
