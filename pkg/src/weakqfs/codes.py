"""Binary linear codes and their embedding into S_2l.

A codeword is stored as an int bitmask, bit i standing for coordinate i+1.
The embedding sends coordinate i to the transposition (2i-1 2i), so a word
of Hamming weight w becomes an involution moving exactly 2w points.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from .errors import CapExceeded, DependentRows, ParseError, RaggedRows
from .groups import DEFAULT_CAP, PermGroup
from .perm import Permutation


def _rank(rows: list[int]) -> int:
    basis: dict[int, int] = {}  # leading bit -> row
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in basis:
                basis[top] = r
                break
            r ^= basis[top]
    return len(basis)


@dataclass(frozen=True)
class BinaryLinearCode:
    length: int
    rows: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def row_strings(self) -> list[str]:
        return [format(r, f"0{self.length}b")[::-1] for r in self.rows]

    def codewords(self, cap: int = DEFAULT_CAP):
        """All 2^k codewords in Gray-code order starting at zero."""
        if 2**self.dim > cap:
            raise CapExceeded(2**self.dim, cap)
        word = 0
        yield word
        for i in range(1, 2**self.dim):
            word ^= self.rows[(i & -i).bit_length() - 1]
            yield word


def parse_code(rows: list[str]) -> BinaryLinearCode:
    """Rows are 0/1 strings, first character = coordinate 1."""
    rows = [r.strip() for r in rows if r.strip()]
    if not rows:
        raise ParseError("a code needs at least one generator row")
    length = len(rows[0])
    if any(len(r) != length for r in rows):
        raise RaggedRows("generator rows have different lengths")
    if any(set(r) - {"0", "1"} for r in rows):
        raise ParseError("rows must be 0/1 strings")
    masks = [int(r[::-1], 2) for r in rows]
    if _rank(masks) != len(masks):
        raise DependentRows("generator rows are linearly dependent")
    return BinaryLinearCode(length, tuple(masks))


def zero_code(length: int) -> BinaryLinearCode:
    return BinaryLinearCode(length, ())


def read_code(path) -> BinaryLinearCode:
    with open(path) as fh:
        return parse_code(fh.read().splitlines())


def format_code(C: BinaryLinearCode) -> str:
    return "".join(r + "\n" for r in C.row_strings())


def weight_distribution(C: BinaryLinearCode, cap: int = DEFAULT_CAP) -> dict[int, int]:
    counts = Counter(w.bit_count() for w in C.codewords(cap))
    return dict(sorted(counts.items()))


def min_weight(C: BinaryLinearCode, cap: int = DEFAULT_CAP) -> int:
    if C.dim < 1:
        raise ValueError("the zero code has no minimum weight")
    return min(w for w in weight_distribution(C, cap) if w)


def word_to_permutation(word: int, length: int) -> Permutation:
    cycles = [(2 * i + 1, 2 * i + 2) for i in range(length) if word >> i & 1]
    return Permutation.from_cycles(cycles, 2 * length)


def embed(C: BinaryLinearCode) -> PermGroup:
    """Elementary abelian subgroup of S_2l generated by the images of the rows."""
    if C.length < 1:
        raise ValueError("code length must be >= 1")
    return PermGroup([word_to_permutation(r, C.length) for r in C.rows], 2 * C.length)


def random_gv_code(length: int, dim: int, seed: int) -> BinaryLinearCode:
    """Uniform random full-rank dim x length generator matrix; resampled until full rank."""
    if not 1 <= dim <= length:
        raise ValueError("need 1 <= dim <= length")
    rng = random.Random(seed)
    while True:
        rows = [rng.getrandbits(length) for _ in range(dim)]
        if _rank(rows) == dim:
            return BinaryLinearCode(length, tuple(rows))
