"""Permutation groups given by generators.

A :class:`PermGroup` builds its stabilizer chain eagerly with a deterministic
Schreier-Sims procedure, so order and membership are cheap.  Everything that
needs the individual elements (minimal degree, support distribution, class
intersections) enumerates the group through the chain and refuses with
:class:`CapExceeded` rather than truncating.
"""
from __future__ import annotations

from collections import Counter
from math import factorial
from typing import Iterator, Sequence

from .errors import CapExceeded, DegreeMismatch, NotTransitive, ParseError, TrivialGroup
from .perm import (
    Permutation,
    cycle_type_of,
    format_permutation,
    invert,
    mul,
    parse_permutation,
    support_size_of,
)

DEFAULT_CAP = 10**6


class _Level:
    """One level of the stabilizer chain.

    ``gens`` generate the pointwise stabilizer of the earlier base points;
    ``trans[b]`` maps the base point to ``b`` and ``itrans[b]`` is its inverse.
    """

    __slots__ = ("point", "gens", "orbit", "trans", "itrans")

    def __init__(self, point: int, identity: tuple):
        self.point = point
        self.gens: list[tuple] = []
        self.orbit: list[int] = [point]
        self.trans = {point: identity}
        self.itrans = {point: identity}


class PermGroup:
    """Permutation group of degree ``n`` with an eagerly built stabilizer chain."""

    def __init__(self, generators: Sequence[Permutation], degree: int):
        if degree < 1:
            raise ValueError("degree must be >= 1")
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = tuple(generators)
        self._id = tuple(range(degree))
        self._levels: list[_Level] = []
        for g in self.generators:
            if not g.is_identity():
                self._insert(0, g.array)

    def __repr__(self):
        gens = ", ".join(format_permutation(g) for g in self.generators)
        return f"PermGroup([{gens}], degree={self.degree})"

    # -- stabilizer chain ---------------------------------------------------

    def _sift(self, g: tuple, start: int) -> tuple[tuple, int]:
        """Strip ``g`` through levels ``start..``; return residue and failing level."""
        levels = self._levels
        for i in range(start, len(levels)):
            lev = levels[i]
            b = g[lev.point]
            inv = lev.itrans.get(b)
            if inv is None:
                return g, i
            g = mul(inv, g)
        return g, len(levels)

    def _insert(self, start: int, g: tuple) -> None:
        """Make the chain from level ``start`` down contain ``g`` (which fixes earlier base points)."""
        h, j = self._sift(g, start)
        if h == self._id:
            return
        if j == len(self._levels):
            moved = next(i for i, x in enumerate(h) if i != x)
            self._levels.append(_Level(moved, self._id))
        # h fixes the base points of levels start..j-1, so it belongs to each of them
        for lvl in range(j, start - 1, -1):
            self._add_generator(lvl, h)

    def _add_generator(self, lvl: int, h: tuple) -> None:
        lev = self._levels[lvl]
        lev.gens.append(h)
        old_orbit = list(lev.orbit)
        # new generator against old orbit points, all generators against new points
        pending = [(b, h) for b in old_orbit]
        queue_start = len(lev.orbit)
        for b in old_orbit:
            self._extend_orbit(lev, b, h)
        idx = queue_start
        while idx < len(lev.orbit):
            b = lev.orbit[idx]
            for s in lev.gens:
                self._extend_orbit(lev, b, s)
            idx += 1
        for b in lev.orbit[queue_start:]:
            for s in lev.gens:
                pending.append((b, s))
        for b, s in pending:
            sb = s[b]
            # Schreier generator u_{s(b)}^-1 * s * u_b fixes the base point
            schreier = mul(lev.itrans[sb], mul(s, lev.trans[b]))
            if schreier != self._id:
                self._insert(lvl + 1, schreier)

    @staticmethod
    def _extend_orbit(lev: _Level, b: int, s: tuple) -> None:
        c = s[b]
        if c not in lev.trans:
            u = mul(s, lev.trans[b])
            lev.trans[c] = u
            lev.itrans[c] = invert(u)
            lev.orbit.append(c)

    # -- queries --------------------------------------------------------------

    @property
    def base(self) -> list[int]:
        """Base points, 1-based."""
        return [lev.point + 1 for lev in self._levels]

    def transversal_sizes(self) -> list[int]:
        return [len(lev.orbit) for lev in self._levels]

    def order(self) -> int:
        out = 1
        for lev in self._levels:
            out *= len(lev.orbit)
        return out

    def is_trivial(self) -> bool:
        return not self._levels

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise DegreeMismatch(f"degree {g.degree} != {self.degree}")
        h, j = self._sift(g.array, 0)
        return j == len(self._levels) and h == self._id

    def check_cap(self, cap: int) -> int:
        order = self.order()
        if order > cap:
            raise CapExceeded(order, cap)
        return order

    def iter_arrays(self, cap: int = DEFAULT_CAP) -> Iterator[tuple]:
        """Yield every element as a 0-based image tuple, identity first."""
        self.check_cap(cap)
        levels = self._levels
        depth = len(levels)
        if depth == 0:
            yield self._id
            return
        # transversal lists with the identity (base point) first
        reps = [[lev.trans[b] for b in lev.orbit] for lev in levels]

        def walk(i: int, prefix: tuple) -> Iterator[tuple]:
            if i == depth:
                yield prefix
                return
            for u in reps[i]:
                yield from walk(i + 1, mul(prefix, u))

        yield from walk(0, self._id)

    def elements(self, cap: int = DEFAULT_CAP) -> Iterator[Permutation]:
        for a in self.iter_arrays(cap):
            yield Permutation._trusted(a)

    def conjugate(self, x: Permutation) -> "PermGroup":
        """The group ``x H x^-1``."""
        return PermGroup([g.conjugate(x) for g in self.generators], self.degree)


def build_group(gens: Sequence[Permutation], degree: int) -> PermGroup:
    return PermGroup(gens, degree)


def order(G: PermGroup) -> int:
    return G.order()


def contains(G: PermGroup, g: Permutation) -> bool:
    return G.contains(g)


def elements(G: PermGroup, cap: int = DEFAULT_CAP) -> Iterator[Permutation]:
    return G.elements(cap)


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup([], 1)
    gens = [Permutation.from_cycles([(1, 2)], n)]
    if n > 2:
        gens.append(Permutation.from_cycles([tuple(range(1, n + 1))], n))
    return PermGroup(gens, n)


# -- support and class data --------------------------------------------------

def support_distribution(G: PermGroup, cap: int = DEFAULT_CAP) -> dict[int, int]:
    """Map k -> |H_k| for the nonidentity elements; nonzero entries only, sorted by k."""
    if _alternating_or_symmetric(G) is not None:
        return support_from_classes(class_intersections(G, cap))
    counts = Counter(support_size_of(a) for a in G.iter_arrays(cap))
    counts.pop(0, None)
    return dict(sorted(counts.items()))


def minimal_degree(G: PermGroup, cap: int = DEFAULT_CAP) -> int:
    if G.is_trivial():
        raise TrivialGroup("the trivial group has no minimal degree")
    return min(support_distribution(G, cap))


def _alternating_or_symmetric(G: PermGroup) -> str | None:
    n = G.degree
    total = factorial(n)
    order = G.order()
    if n >= 2 and order == total:
        return "S"
    if n >= 3 and 2 * order == total:
        # the only index-2 subgroup of S_n
        return "A"
    return None


def class_intersections(G: PermGroup, cap: int = DEFAULT_CAP) -> dict[tuple[int, ...], int]:
    """Map cycle type mu (identity excluded) -> |C_mu intersect H|."""
    G.check_cap(cap)
    kind = _alternating_or_symmetric(G)
    if kind is not None:
        from .characters import class_size, partitions

        n = G.degree
        out = {}
        for mu in partitions(n):
            if mu == (1,) * n:
                continue
            if kind == "A" and (n - len(mu)) % 2:
                continue
            out[mu] = class_size(mu)
        return dict(sorted(out.items(), reverse=True))
    counts = Counter(cycle_type_of(a) for a in G.iter_arrays(cap))
    counts.pop((1,) * G.degree, None)
    return dict(sorted(counts.items(), reverse=True))


def support_from_classes(cv: dict[tuple[int, ...], int]) -> dict[int, int]:
    """Aggregate a class vector by support size."""
    out: Counter = Counter()
    for mu, c in cv.items():
        out[sum(p for p in mu if p > 1)] += c
    return dict(sorted(out.items()))


# -- orbits and blocks ---------------------------------------------------------

def orbits(G: PermGroup) -> list[list[int]]:
    """Orbits as sorted 1-based point lists, ordered by least point."""
    n = G.degree
    seen = [False] * n
    out = []
    gens = [g.array for g in G.generators]
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        orb = [start]
        i = 0
        while i < len(orb):
            x = orb[i]
            for g in gens:
                y = g[x]
                if not seen[y]:
                    seen[y] = True
                    orb.append(y)
            i += 1
        out.append(sorted(p + 1 for p in orb))
    return out


def is_transitive(G: PermGroup) -> bool:
    return len(orbits(G)) == 1


def _minimal_block_system(gens: list[tuple], n: int, beta: int) -> list[int]:
    """Finest block system in which 0 and beta share a block (union-find closure).

    Returns a representative array: ``rep[x]`` is the least point of x's block.
    """
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = [(0, beta)]
    parent[max(0, beta)] = min(0, beta)
    while queue:
        a, b = queue.pop()
        for g in gens:
            ra, rb = find(g[a]), find(g[b])
            if ra != rb:
                if ra > rb:
                    ra, rb = rb, ra
                parent[rb] = ra
                queue.append((ra, rb))
    return [find(x) for x in range(n)]


def minimal_blocks(G: PermGroup) -> list[list[int]] | None:
    """A minimal nontrivial block system of a transitive group, or ``None`` if primitive.

    Among systems generated by {1, beta} the smallest block size wins; ties go
    to the lexicographically least block containing point 1.
    """
    n = G.degree
    if not is_transitive(G):
        raise NotTransitive(f"group has {len(orbits(G))} orbits")
    gens = [g.array for g in G.generators]
    best = None
    for beta in range(1, n):
        rep = _minimal_block_system(gens, n, beta)
        block1 = sorted(x + 1 for x in range(n) if rep[x] == 0)
        if len(block1) == n:
            continue
        key = (len(block1), block1)
        if best is None or key < best[0]:
            best = (key, rep)
    if best is None:
        return None
    rep = best[1]
    blocks: dict[int, list[int]] = {}
    for x in range(n):
        blocks.setdefault(rep[x], []).append(x + 1)
    return sorted(blocks.values())


def is_primitive(G: PermGroup) -> bool:
    return is_transitive(G) and minimal_blocks(G) is None


# -- group files -----------------------------------------------------------------

def format_group(G: PermGroup) -> str:
    lines = [f"degree: {G.degree}"]
    lines += [format_permutation(g) for g in G.generators]
    return "\n".join(lines) + "\n"


def parse_group(text: str) -> PermGroup:
    """Read the group file format: ``degree: n`` then one generator per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty group file")
    head = lines[0]
    key, _, value = head.partition(":")
    if key.strip() != "degree" or not value.strip():
        raise ParseError(f"expected 'degree: n' header, got {head!r}")
    try:
        degree = int(value)
    except ValueError:
        raise ParseError(f"bad degree {value.strip()!r}") from None
    if degree < 1:
        raise ParseError("degree must be >= 1")
    gens = [parse_permutation(ln, degree) for ln in lines[1:]]
    return PermGroup(gens, degree)


def read_group(path) -> PermGroup:
    with open(path) as fh:
        return parse_group(fh.read())


def write_group(G: PermGroup, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_group(G))
