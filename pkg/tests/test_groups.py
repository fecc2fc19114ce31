from math import factorial

import pytest
from hypothesis import given, settings, strategies as st
from sympy.combinatorics import Permutation as SymPerm, PermutationGroup as SymGroup

from conftest import permutations_of
from oracles import brute_cycle_type, closure
from weakqfs.constructions import block_group
from weakqfs.errors import CapExceeded, DegreeMismatch, NotTransitive, ParseError, TrivialGroup
from weakqfs.groups import (
    PermGroup,
    class_intersections,
    format_group,
    is_primitive,
    minimal_blocks,
    minimal_degree,
    orbits,
    parse_group,
    support_distribution,
    support_from_classes,
    symmetric_group,
)
from weakqfs.perm import Permutation, parse_permutation as pp


def group(n, *cycles):
    return PermGroup([pp(c, n) for c in cycles], n)


A4 = group(4, "(1 2 3)", "(2 3 4)")


def test_trivial_group():
    G = PermGroup([], 4)
    assert G.order() == 1
    assert list(G.elements()) == [Permutation.identity(4)]
    assert support_distribution(G) == {}


def test_orders():
    assert group(3, "(1 2)").order() == 2
    assert group(4, "(1 2)", "(1 2 3 4)").order() == 24
    assert A4.order() == 12
    assert block_group(8, 4).order() == 24


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        PermGroup([pp("(1 2)", 3), pp("(1 2)", 4)], 3)
    with pytest.raises(DegreeMismatch):
        A4.contains(Permutation.identity(3))


def test_contains():
    assert A4.contains(Permutation.identity(4))
    assert not group(3, "(1 2)").contains(pp("(1 3)", 3))
    assert not A4.contains(pp("(1 2)", 4))
    assert A4.contains(pp("(1 2)(3 4)", 4))


def test_elements_identity_first_and_distinct():
    S4 = symmetric_group(4)
    els = list(S4.elements())
    assert els[0] == Permutation.identity(4)
    assert len(set(els)) == 24 and all(S4.contains(g) for g in els)
    assert len(list(group(4, "(1 2 3)").elements())) == 3


def test_elements_deterministic():
    G = group(6, "(1 2 3)(4 5)", "(2 6)")
    assert list(G.elements()) == list(group(6, "(1 2 3)(4 5)", "(2 6)").elements())


def test_cap_exceeded_is_explicit():
    with pytest.raises(CapExceeded):
        list(symmetric_group(5).elements(cap=100))
    with pytest.raises(CapExceeded):
        support_distribution(symmetric_group(5), cap=100)


def test_minimal_degree():
    assert minimal_degree(group(3, "(1 2)")) == 2
    assert minimal_degree(A4) == 3
    assert minimal_degree(block_group(8, 4)) == 4
    with pytest.raises(TrivialGroup):
        minimal_degree(PermGroup([], 3))


def test_support_distribution():
    assert support_distribution(group(4, "(1 2)(3 4)")) == {4: 1}
    # S_3: three transpositions, two 3-cycles
    assert support_distribution(symmetric_group(3)) == {2: 3, 3: 2}


def test_class_intersections():
    assert class_intersections(group(3, "(1 2)")) == {(2, 1): 1}
    assert class_intersections(symmetric_group(3)) == {(3,): 2, (2, 1): 3}
    assert class_intersections(group(4, "(1 2)(3 4)")) == {(2, 2): 1}
    assert class_intersections(A4) == {(3, 1): 8, (2, 2): 3}


def test_orbits():
    assert orbits(PermGroup([], 3)) == [[1], [2], [3]]
    assert orbits(group(3, "(1 2)")) == [[1, 2], [3]]
    assert orbits(group(4, "(1 2 3 4)")) == [[1, 2, 3, 4]]


def test_minimal_blocks():
    assert minimal_blocks(symmetric_group(4)) is None
    assert minimal_blocks(group(4, "(1 2 3 4)")) == [[1, 3], [2, 4]]
    with pytest.raises(NotTransitive):
        minimal_blocks(group(3, "(1 2)"))


def test_block_group_blocks_are_invariant_but_group_intransitive():
    G = block_group(8, 4)
    blocks = [{1, 2}, {3, 4}, {5, 6}, {7, 8}]
    for g in G.generators:
        assert all({g(x) for x in b} in blocks for b in blocks)
    assert orbits(G) == [[1, 3, 5, 7], [2, 4, 6, 8]]
    with pytest.raises(NotTransitive):
        minimal_blocks(G)


def test_blocks_of_wreath_product():
    # S_2 wr S_3 on 6 points: blocks of size 2 are finer than size 3
    G = group(6, "(1 2)", "(1 3 5)(2 4 6)", "(1 3)(2 4)")
    assert minimal_blocks(G) == [[1, 2], [3, 4], [5, 6]]
    assert not is_primitive(G)


def test_group_file_roundtrip():
    G = group(5, "(1 2 3)(4 5)", "(1 4)")
    text = format_group(G)
    assert text == "degree: 5\n(1 2 3)(4 5)\n(1 4)\n"
    assert format_group(parse_group(text)) == text
    assert parse_group("degree: 3\n").order() == 1


@pytest.mark.parametrize("text", ["", "deg: 3\n(1 2)", "degree: x", "degree: 3\n(1 4)"])
def test_group_file_errors(text):
    with pytest.raises(ParseError):
        parse_group(text)


@st.composite
def small_groups(draw):
    n = draw(st.integers(2, 7))
    k = draw(st.integers(0, 3))
    return PermGroup([draw(permutations_of(n)) for _ in range(k)], n)


@settings(max_examples=60, deadline=None)
@given(small_groups())
def test_chain_matches_closure(G):
    els = closure([g.array for g in G.generators], G.degree)
    assert G.order() == len(els)
    assert {g.array for g in G.elements()} == els
    assert all(G.contains(g) for g in G.generators)


@settings(max_examples=60, deadline=None)
@given(small_groups())
def test_distributions_consistent(G):
    cv = class_intersections(G)
    dist = support_distribution(G)
    assert sum(cv.values()) == G.order() - 1 == sum(dist.values())
    assert support_from_classes(cv) == dist
    if not G.is_trivial():
        assert minimal_degree(G) == min(dist)
    brute = {}
    for a in closure([g.array for g in G.generators], G.degree):
        ct = brute_cycle_type(a)
        if ct != (1,) * G.degree:
            brute[ct] = brute.get(ct, 0) + 1
    assert cv == brute


@settings(max_examples=40, deadline=None)
@given(small_groups())
def test_order_matches_sympy(G):
    gens = [SymPerm(list(g.array)) for g in G.generators] or [SymPerm(list(range(G.degree)))]
    assert G.order() == SymGroup(gens).order()


def test_large_symmetric_order():
    assert symmetric_group(30).order() == factorial(30)
    assert block_group(30, 2).order() == factorial(30)
