"""Permutations of {1..n}.

Points are 1-based at every public boundary (parsing, formatting, ``images``,
``support``).  Internally a permutation is a tuple of 0-based images so the
group engine can compose raw tuples without wrapping.

Composition follows ``(g * h)(x) = g(h(x))``: the right factor acts first.
"""
from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import DegreeMismatch, ParseError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """Immutable bijection of {1..n} stored as a 0-based image table."""

    __slots__ = ("_img",)

    def __init__(self, images0: Sequence[int]):
        img = tuple(images0)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a bijection of 0..{len(img) - 1}: {img}")
        object.__setattr__(self, "_img", img)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def _trusted(cls, images0: tuple) -> "Permutation":
        p = object.__new__(cls)
        object.__setattr__(p, "_img", images0)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be >= 1")
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        """Build from a 1-based image list, ``images[i-1] = g(i)``."""
        return cls([x - 1 for x in images])

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for p in cyc:
                if not 1 <= p <= degree:
                    raise ParseError(f"point {p} outside 1..{degree}")
                if p in seen:
                    raise ParseError(f"point {p} repeated")
                seen.add(p)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a - 1] = b - 1
        return cls._trusted(tuple(img))

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self._img)

    @property
    def array(self) -> tuple[int, ...]:
        """0-based image tuple (internal representation)."""
        return self._img

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self):
        return hash(self._img)

    def __lt__(self, other: "Permutation"):
        return self._img < other._img

    def __repr__(self):
        return f"Permutation({format_permutation(self)!r}, degree={self.degree})"

    def __str__(self):
        return format_permutation(self)

    def inverse(self) -> "Permutation":
        return Permutation._trusted(invert(self._img))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._img))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its least point."""
        return [tuple(p + 1 for p in c) for c in _cycles0(self._img) if len(c) > 1]

    def conjugate(self, x: "Permutation") -> "Permutation":
        """Return ``x * self * x^-1``."""
        return compose(compose(x, self), x.inverse())


# raw tuple helpers used by the group engine

def mul(a: tuple, b: tuple) -> tuple:
    """0-based composite ``a o b``."""
    return tuple([a[i] for i in b])


def invert(a: tuple) -> tuple:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def _cycles0(img: Sequence[int]) -> list[list[int]]:
    n = len(img)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = img[x]
        out.append(cyc)
    return out


def cycle_type_of(img: Sequence[int]) -> tuple[int, ...]:
    """Cycle type of a 0-based image tuple, fixed points included as 1-parts."""
    n = len(img)
    seen = bytearray(n)
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = 1
            x = img[x]
            length += 1
        lengths.append(length)
    lengths.sort(reverse=True)
    return tuple(lengths)


def support_size_of(img: Sequence[int]) -> int:
    return sum(1 for i, x in enumerate(img) if i != x)


def compose(g: Permutation, h: Permutation) -> Permutation:
    """Return ``g o h``, i.e. ``x -> g(h(x))``."""
    if g.degree != h.degree:
        raise DegreeMismatch(f"degrees differ: {g.degree} vs {h.degree}")
    return Permutation._trusted(mul(g.array, h.array))


def support(g: Permutation) -> frozenset[int]:
    return frozenset(i + 1 for i, x in enumerate(g.array) if i != x)


def cycle_type(g: Permutation) -> tuple[int, ...]:
    return cycle_type_of(g.array)


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1 2 3)(4 5)"``; ``"()"`` is the identity.

    Points may be separated by spaces or commas.
    """
    if degree < 1:
        raise ParseError("degree must be >= 1")
    body = text.strip()
    if not body:
        raise ParseError("empty permutation text")
    cycles = []
    pos = 0
    for match in _CYCLE_RE.finditer(body):
        if body[pos:match.start()].strip():
            raise ParseError(f"malformed cycle text: {text!r}")
        pos = match.end()
        inner = match.group(1).replace(",", " ").split()
        try:
            pts = [int(tok) for tok in inner]
        except ValueError:
            raise ParseError(f"non-integer point in {text!r}") from None
        if pts:
            cycles.append(pts)
    if pos == 0 or body[pos:].strip():
        raise ParseError(f"malformed cycle text: {text!r}")
    return Permutation.from_cycles(cycles, degree)


def format_permutation(g: Permutation) -> str:
    cyc = g.cycles()
    if not cyc:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
