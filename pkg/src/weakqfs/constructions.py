"""Named subgroup families used as fixtures by the verification harness."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial

from .errors import BadParameters, OddDegree
from .groups import PermGroup
from .perm import Permutation

FAMILIES = ("block_symmetric", "fpf_involution", "two_subset", "embedded_code")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    parameters: tuple
    realized: PermGroup
    expected_order: int
    expected_min_degree: int


def block_group(n: int, m: int) -> PermGroup:
    """S_{2n/m} permuting 2n/m contiguous blocks of size m/2 rigidly.

    Block j holds points (j-1)(m/2)+1 .. j(m/2).  Generators are the block
    swap of blocks 1, 2 and the cyclic shift of all blocks.
    """
    if m < 2 or m % 2 or n % (m // 2) or 2 * n // m < 2:
        raise BadParameters(f"block_group needs even m >= 2 with m/2 | n and 2n/m >= 2 (n={n}, m={m})")
    size = m // 2
    nblocks = n // size

    def lift(block_images):
        img = [0] * n
        for j, tj in enumerate(block_images):
            for t in range(size):
                img[j * size + t] = tj * size + t
        return Permutation(img)

    swap = [1, 0] + list(range(2, nblocks))
    shift = [(j + 1) % nblocks for j in range(nblocks)]
    gens = [lift(swap)]
    if nblocks > 2:
        gens.append(lift(shift))
    return PermGroup(gens, n)


def fpf_involution(n: int) -> PermGroup:
    """Order-2 group generated by (1 2)(3 4)...(n-1 n)."""
    if n < 2 or n % 2:
        raise OddDegree(f"fixed-point-free involution needs even n >= 2, got {n}")
    return PermGroup([Permutation.from_cycles([(i, i + 1) for i in range(1, n, 2)], n)], n)


def pairs(l: int) -> list[tuple[int, int]]:
    """Unordered pairs of 1..l in lexicographic order; pair index + 1 is its point label."""
    return list(combinations(range(1, l + 1), 2))


def two_subset_group(l: int) -> PermGroup:
    """S_l acting on the C(l,2) unordered pairs of {1..l}."""
    if l < 5:
        raise BadParameters(f"two_subset_group needs l >= 5, got {l}")
    pts = pairs(l)
    index = {p: i for i, p in enumerate(pts)}

    def induced(sigma):
        img = []
        for a, b in pts:
            x, y = sigma[a], sigma[b]
            img.append(index[(x, y) if x < y else (y, x)])
        return Permutation(img)

    transposition = {i: i for i in range(1, l + 1)}
    transposition[1], transposition[2] = 2, 1
    cycle = {i: i % l + 1 for i in range(1, l + 1)}
    return PermGroup([induced(transposition), induced(cycle)], comb(l, 2))


def family(name: str, *params: int) -> FamilySpec:
    """Realize a named family together with its documented order and minimal degree."""
    if name in ("block_symmetric", "block"):
        n, m = params
        return FamilySpec("block_symmetric", (n, m), block_group(n, m), factorial(2 * n // m), m)
    if name in ("fpf_involution", "fpf"):
        (n,) = params
        return FamilySpec("fpf_involution", (n,), fpf_involution(n), 2, n)
    if name in ("two_subset", "two-subset"):
        (l,) = params
        return FamilySpec("two_subset", (l,), two_subset_group(l), factorial(l), 2 * (l - 2))
    if name in ("embedded_code", "code"):
        from .codes import embed, min_weight, random_gv_code

        length, dim, seed = params
        code = random_gv_code(length, dim, seed)
        return FamilySpec("embedded_code", (length, dim, seed), embed(code), 2**dim, 2 * min_weight(code))
    raise BadParameters(f"unknown family {name!r}")


def valid_block_parameters(max_n: int) -> list[tuple[int, int]]:
    out = []
    for n in range(2, max_n + 1):
        for m in range(2, 2 * n + 1, 2):
            if n % (m // 2) == 0 and 2 * n // m >= 2:
                out.append((n, m))
    return out
