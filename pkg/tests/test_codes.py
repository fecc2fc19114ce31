from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from weakqfs.codes import (
    embed,
    format_code,
    min_weight,
    parse_code,
    random_gv_code,
    weight_distribution,
    zero_code,
)
from weakqfs.errors import CapExceeded, DependentRows, ParseError, RaggedRows
from weakqfs.groups import minimal_degree, orbits, support_distribution
from weakqfs.perm import Permutation, parse_permutation


def brute_weights(rows):
    """Weight distribution by summing every coefficient vector over GF(2)."""
    length = len(rows[0])
    out = {}
    for coeffs in product((0, 1), repeat=len(rows)):
        word = [sum(c * int(r[i]) for c, r in zip(coeffs, rows)) % 2 for i in range(length)]
        w = sum(word)
        out[w] = out.get(w, 0) + 1
    return out


def test_parse_code():
    C = parse_code(["11"])
    assert (C.length, C.dim) == (2, 1)
    assert parse_code(["10", "01"]).dim == 2
    C = parse_code(["110", "011"])
    assert (C.length, C.dim) == (3, 2)
    assert format_code(C) == "110\n011\n"


@pytest.mark.parametrize("rows,err", [
    (["11", "1"], RaggedRows),
    (["110", "011", "101"], DependentRows),
    (["12"], ParseError),
    ([], ParseError),
])
def test_parse_code_errors(rows, err):
    with pytest.raises(err):
        parse_code(rows)


def test_weight_distribution():
    assert weight_distribution(parse_code(["11"])) == {0: 1, 2: 1}
    assert weight_distribution(parse_code(["10", "01"])) == {0: 1, 1: 2, 2: 1}
    rows = ["110", "011"]
    assert weight_distribution(parse_code(rows)) == brute_weights(rows) == {0: 1, 2: 3}
    with pytest.raises(CapExceeded):
        weight_distribution(random_gv_code(12, 12, 0), cap=100)


def test_min_weight():
    assert min_weight(parse_code(["1111"])) == 4
    assert min_weight(parse_code(["10", "01"])) == 1


def test_embed():
    H = embed(parse_code(["11"]))
    assert H.degree == 4 and H.generators == (parse_permutation("(1 2)(3 4)", 4),)
    assert minimal_degree(H) == 4
    assert embed(zero_code(3)).order() == 1
    full = embed(parse_code(["1000", "0100", "0010", "0001"]))
    assert full.order() == 16 and minimal_degree(full) == 2
    assert orbits(full) == [[1, 2], [3, 4], [5, 6], [7, 8]]


def test_random_gv_code_deterministic():
    a = random_gv_code(16, 8, 42)
    assert a == random_gv_code(16, 8, 42)
    assert a.dim == 8 and a.length == 16
    assert random_gv_code(8, 1, 5).rows[0] != 0
    with pytest.raises(ValueError):
        random_gv_code(4, 5, 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2**32), st.data())
def test_embedding_dictionary(length, seed, data):
    dim = data.draw(st.integers(1, min(length, 8)))
    C = random_gv_code(length, dim, seed)
    A = weight_distribution(C)
    assert A == brute_weights(C.row_strings())
    assert sum(A.values()) == 2**dim
    H = embed(C)
    assert H.order() == 2**dim
    assert minimal_degree(H) == 2 * min_weight(C)
    assert support_distribution(H) == {2 * w: a for w, a in A.items() if w}
    ident = Permutation.identity(2 * length)
    assert all(g * g == ident for g in H.elements())
