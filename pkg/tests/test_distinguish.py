import random
from fractions import Fraction
from math import comb, factorial, sqrt

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_cycle_type, closure
from weakqfs.characters import character, dimension, partitions
from weakqfs.constructions import block_group, fpf_involution, two_subset_group
from weakqfs.distinguish import (
    ClassVector,
    RadicalSum,
    classify,
    corollary2_bounds,
    dist_report,
    empirical_epsilon,
    empirical_tv,
    l1_distance,
    lemma_last_bound,
    plancherel,
    prop1_bounds,
    sample_weak,
    support_bound_holds,
    theoremB_rhs,
    total_variation,
    weak_distribution,
)
from weakqfs.errors import TrivialGroup
from weakqfs.groups import PermGroup, minimal_degree, symmetric_group
from weakqfs.perm import parse_permutation as pp
from weakqfs.verify import random_subgroups

F = Fraction
T12 = PermGroup([pp("(1 2)", 3)], 3)
FPF4 = fpf_involution(4)


def brute_distance(G):
    """D_H straight from the defining sum over elements, no class grouping."""
    n = G.degree
    els = [a for a in closure([g.array for g in G.generators], n) if a != tuple(range(n))]
    total = sum(dimension(lam) * abs(sum(character(lam, brute_cycle_type(a)) for a in els))
                for lam in partitions(n))
    return F(total, factorial(n))


def test_weak_distribution_examples():
    triv = weak_distribution(PermGroup([], 3)).probs
    assert triv == {(3,): F(1, 6), (2, 1): F(4, 6), (1, 1, 1): F(1, 6)}
    assert weak_distribution(symmetric_group(3)).probs == {(3,): 1, (2, 1): 0, (1, 1, 1): 0}
    assert weak_distribution(T12).probs == {(3,): F(1, 3), (2, 1): F(2, 3), (1, 1, 1): 0}


def test_total_variation_examples():
    assert total_variation(PermGroup([], 3)) == 0
    assert total_variation(symmetric_group(3)) == F(5, 3)
    assert total_variation(T12) == F(1, 3)


def test_prop1_examples():
    lo, up = prop1_bounds(T12)
    assert lo == F(1, 6) and up.terms == ((1, 3),)
    lo, up = prop1_bounds(FPF4)
    assert lo == F(1, 6) and up.terms == ((1, 3),)
    lo, up = prop1_bounds(symmetric_group(3))
    assert lo == F(9, 18) + F(4, 12) == F(5, 6)
    assert sorted(up.terms) == [(2, 2), (3, 3)]
    assert abs(float(up) - (3 / sqrt(3) + 2 / sqrt(2))) < 1e-12


def test_corollary2_examples():
    lo, up = corollary2_bounds(T12)
    assert lo == F(1, 6) and up.terms == ((1, 3),)
    lo, up = corollary2_bounds(FPF4)
    assert lo == F(1, 6) and up.terms == ((1, 3),)
    # the smallest class meeting S_3 is the 3-cycles (size 2)
    lo, up = corollary2_bounds(symmetric_group(3))
    assert lo == F(1, 12) and up.terms == ((5, 2),)


def test_bounds_need_nontrivial():
    for fn in (prop1_bounds, corollary2_bounds, lemma_last_bound):
        with pytest.raises(TrivialGroup):
            fn(PermGroup([], 4))


def test_lemma_last_examples():
    assert lemma_last_bound(T12).terms == ((1, 3),)
    assert lemma_last_bound(FPF4).terms == ((1, 3),)
    assert sorted(lemma_last_bound(symmetric_group(3)).terms) == [(2, 2), (3, 3)]


def test_radical_sum_exact_comparisons():
    r = RadicalSum([(1, 3)])
    assert r > F(57735, 100000) and r < F(57736, 100000)
    assert RadicalSum([(1, 4)]).compare(F(1, 2)) == 0
    s = RadicalSum([(3, 3), (2, 2)])  # sqrt 3 + sqrt 2 = 3.1462643699...
    assert s > F(31462643699, 10**10) and s < F(31462643700, 10**10)
    assert RadicalSum([(2, 8), (1, 2)]).is_rational() is False
    assert RadicalSum([(2, 4), (3, 9)]).compare(2) == 0
    lo, hi = s.bounds(80)
    assert lo < hi and hi - lo < F(1, 2**70)


def test_classify():
    assert not classify(PermGroup([], 4), c=3).distinguishable
    v = classify(symmetric_group(3), c=1)
    assert v.distinguishable and abs(float(v.threshold) - 1 / mpmath.log(6, 2)) < 1e-15
    v = classify(fpf_involution(10), c=1)
    assert v.dh == F(2521, 113400)
    assert not v.distinguishable  # 0.02223 < 1/log2(10!) = 0.04589
    # larger c lowers the threshold (log2 10!)^-c
    assert classify(fpf_involution(10), c=2).distinguishable is True
    assert classify(fpf_involution(10), c=0.5).distinguishable is False
    with pytest.raises(ValueError):
        classify(T12, c=0)


def test_theorem_b_rhs():
    with mpmath.workdps(60):
        quarter = mpmath.mpf(1) / 4
        assert abs(theoremB_rhs(8, 8, 8, 0) - mpmath.mpf(40320) ** quarter) < mpmath.mpf(10) ** -50
        assert abs(theoremB_rhs(8, 2, 2, 0) - mpmath.sqrt(28) * 2**quarter) < mpmath.mpf(10) ** -50
    vals = [theoremB_rhs(8, 8, 3, e) for e in (0, 0.5, 1, 5, 50)]
    assert all(a > b for a, b in zip(vals, vals[1:])) and vals[-1] < 1e-100
    with pytest.raises(ValueError):
        theoremB_rhs(8, 9, 2, 0)


def test_support_bound_and_epsilon():
    assert support_bound_holds(10, 10, 1)
    assert not support_bound_holds(8, 2, 28)
    assert abs(empirical_epsilon(8, 2, 1, 2) - (mpmath.log(28) / 2 + mpmath.log(2) / 4) / (2 * mpmath.log(8))) < 1e-12


def test_sampler():
    assert set(sample_weak(symmetric_group(3), 200, seed=7)) == {(3,)}
    assert sample_weak(T12, 50, seed=3) == sample_weak(T12, 50, seed=3)
    with pytest.raises(ValueError):
        sample_weak(T12, 0, seed=1)
    draws = sample_weak(PermGroup([], 6), 10**5, seed=11)
    assert empirical_tv(draws, plancherel(6)) < F(1, 100)


def test_dist_report_json():
    rep = dist_report(fpf_involution(6), samples=10, seed=2).to_json()
    assert rep["dh"] == "17/90" and rep["min_degree"] == 6 and rep["order"] == 2
    assert rep["class_vector"] == {"2+2+2": 1}
    assert rep["prop1"]["lower"] == "1/30"
    assert rep["samples"]["prng"] == "python-random-MT19937"
    assert sum(rep["samples"]["counts"].values()) == 10
    empty = dist_report(PermGroup([], 3)).to_json()
    assert empty["dh"] == "0/1" and empty["prop1"] is None and empty["min_degree"] is None


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_full_group_closed_form(n):
    assert total_variation(symmetric_group(n)) == 2 * (1 - F(1, factorial(n))) == brute_distance(symmetric_group(n))


SUBGROUPS = random_subgroups(40, seed=99, max_n=6)


@pytest.mark.parametrize("G", SUBGROUPS, ids=lambda G: f"n{G.degree}o{G.order()}")
def test_distance_matches_elementwise_sum(G):
    cv = ClassVector.from_group(G)
    dh = total_variation(cv)
    assert dh == brute_distance(G)
    p = weak_distribution(cv)
    assert sum(p.probs.values()) == 1 and min(p.probs.values()) >= 0
    assert dh == l1_distance(p, plancherel(G.degree))
    lo, up = prop1_bounds(cv)
    assert lo < dh and up >= dh
    lo2, up2 = corollary2_bounds(cv)
    assert lo2 < dh and up2 >= dh
    assert lemma_last_bound(cv) >= dh
    assert 0 <= dh <= 2


def test_plancherel_is_trivial_subgroup():
    for n in range(1, 8):
        assert weak_distribution(PermGroup([], n)).probs == plancherel(n).probs


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_conjugation_invariance(seed):
    rng = random.Random(seed)
    (G,) = random_subgroups(1, seed, max_n=7)
    img = list(range(G.degree))
    rng.shuffle(img)
    from weakqfs.perm import Permutation

    assert total_variation(G.conjugate(Permutation(img))) == total_variation(G)


def test_fpf_family_trend():
    prev = None
    for n in (4, 6, 8, 10):
        dh = total_variation(fpf_involution(n))
        assert corollary2_bounds(fpf_involution(n))[1] >= dh
        assert prev is None or dh < prev
        prev = dh


def test_distinguishable_groups_have_small_minimal_degree():
    groups = random_subgroups(60, seed=5) + [fpf_involution(n) for n in (4, 6, 8, 10)]
    groups += [block_group(n, m) for n, m in [(8, 4), (8, 8), (12, 4), (12, 6), (10, 10)]]
    groups += [two_subset_group(l) for l in (5, 6)]
    for G in groups:
        if total_variation(G) * G.degree >= 1:
            assert minimal_degree(G) <= 8
