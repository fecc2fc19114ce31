"""Exact characters of the symmetric group.

Partitions are plain tuples of weakly decreasing positive ints.  They label
both irreducible characters (lambda) and conjugacy classes via cycle type
(mu).  Character values come from the Murnaghan-Nakayama rule on beta-sets;
all arithmetic is on Python ints.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator

from .errors import NoSuchClass, SizeMismatch

Partition = tuple[int, ...]


def _parts_at_most(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _parts_at_most(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    return tuple(_parts_at_most(n, n))


def partitions(n: int) -> list[Partition]:
    """All partitions of n in lexicographically decreasing order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return list(_partitions(n))


def is_partition(parts) -> bool:
    return all(p >= 1 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> list[int]:
    cols = conjugate(lam)
    return [lam[i] - j + cols[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


@lru_cache(maxsize=None)
def dimension(lam: Partition) -> int:
    """Degree of the irreducible character via the hook length formula."""
    return factorial(sum(lam)) // prod(hook_lengths(lam))


def class_size(mu: Partition) -> int:
    """Size of the conjugacy class of cycle type mu: n! / prod_j j^a_j a_j!."""
    n = sum(mu)
    denom = 1
    for j in set(mu):
        a = mu.count(j)
        denom *= j**a * factorial(a)
    return factorial(n) // denom


def sign(mu: Partition) -> int:
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def _beta(lam: Partition) -> tuple[int, ...]:
    length = len(lam)
    return tuple(p + length - 1 - i for i, p in enumerate(lam))


def _from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    parts = [b - (length - 1 - i) for i, b in enumerate(beta)]
    return tuple(p for p in parts if p > 0)


def remove_rim_hooks(lam: Partition, r: int) -> list[tuple[Partition, int]]:
    """All (lam minus an r-rim hook, (-1)^height) pairs."""
    beta = _beta(lam)
    occupied = set(beta)
    out = []
    for x in beta:
        y = x - r
        if y < 0 or y in occupied:
            continue
        height = sum(1 for b in beta if y < b < x)
        rest = [b for b in beta if b != x] + [y]
        out.append((_from_beta(rest), -1 if height % 2 else 1))
    return out


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    return sum(s * _mn(nu, rest) for nu, s in remove_rim_hooks(lam, r))


def character(lam: Partition, mu: Partition) -> int:
    """chi_lambda evaluated on the class of cycle type mu."""
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|lambda| = {sum(lam)} but |mu| = {sum(mu)}")
    # removing the largest part first keeps the memo small
    return _mn(tuple(lam), tuple(sorted(mu, reverse=True)))


def min_class_size(n: int, k: int) -> int:
    """Least size of a class of S_n whose elements move exactly k points."""
    return min(class_size(mu) for mu in classes_with_support(n, k))


def classes_with_support(n: int, k: int) -> list[Partition]:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if k == 1:
        raise NoSuchClass("no permutation moves exactly one point")
    if k == 0:
        return [(1,) * n]
    return [moved + (1,) * (n - k) for moved in _parts_at_most(k, k) if moved[-1] >= 2]


class CharacterTable:
    """Per-n memo of character values, optionally fully populated and frozen.

    After :meth:`freeze` every lookup is a dict read, so concurrent readers
    never see a partial value.
    """

    def __init__(self, n: int):
        self.n = n
        self.partitions = partitions(n)
        self.values: dict[tuple[Partition, Partition], int] = {}
        self.frozen = False

    def __call__(self, lam: Partition, mu: Partition) -> int:
        key = (lam, mu)
        val = self.values.get(key)
        if val is None:
            if self.frozen:
                raise KeyError(key)
            val = character(lam, mu)
            self.values[key] = val
        return val

    def freeze(self) -> "CharacterTable":
        for lam in self.partitions:
            for mu in self.partitions:
                self(lam, mu)
        self.frozen = True
        return self

    def row(self, lam: Partition) -> list[int]:
        return [self(lam, mu) for mu in self.partitions]

    def to_csv(self) -> str:
        cols = [format_partition(mu) for mu in self.partitions]
        lines = ["lambda\\mu," + ",".join(cols)]
        for lam in self.partitions:
            lines.append(format_partition(lam) + "," + ",".join(map(str, self.row(lam))))
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=16)
def character_table(n: int) -> CharacterTable:
    return CharacterTable(n).freeze()


def format_partition(lam: Partition) -> str:
    return "+".join(map(str, lam))


def parse_partition(text: str) -> Partition:
    parts = tuple(int(t) for t in text.split("+"))
    if not parts or not is_partition(parts):
        raise ValueError(f"not a partition: {text!r}")
    return parts


def binomial_support_bounds(mu: Partition) -> tuple[int, int, int]:
    """(C(n,k), |C_mu|, n^k) for the class mu of support k."""
    n = sum(mu)
    k = sum(p for p in mu if p > 1)
    return comb(n, k), class_size(mu), n**k
