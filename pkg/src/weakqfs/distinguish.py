"""Weak Fourier sampling over S_n: outcome distribution, L1 distance, bounds.

All probabilities and distances are exact ``Fraction`` values.  Bounds that
involve inverse square roots of class sizes are kept as :class:`RadicalSum`
objects and compared against rationals exactly, never through floats.
"""
from __future__ import annotations

import bisect
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, isqrt, log

import mpmath

from .characters import Partition, character_table, class_size, dimension, format_partition, min_class_size
from .errors import TrivialGroup
from .groups import DEFAULT_CAP, PermGroup, class_intersections, support_from_classes

PRNG_NAME = "python-random-MT19937"
FLOAT_DIGITS = 17
_MP_DPS = 60


def _squarefree_split(r: int) -> tuple[int, int]:
    """Return (s, f) with r = s*s*f and f squarefree."""
    s, f = 1, 1
    p = 2
    while p * p <= r:
        e = 0
        while r % p == 0:
            r //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            f *= p
        p += 1 if p == 2 else 2
    return s, f * r


class RadicalSum:
    """Exact value  sum_i a_i / sqrt(r_i)  with rational a_i >= 0 and integer r_i >= 1."""

    def __init__(self, terms):
        self.terms = tuple((Fraction(a), int(r)) for a, r in terms)
        grouped: Counter = Counter()
        for a, r in self.terms:
            if r < 1 or a < 0:
                raise ValueError("terms need a >= 0 and r >= 1")
            s, f = _squarefree_split(r)
            grouped[f] += a / (s * f)  # a/sqrt(s^2 f) = a sqrt(f) / (s f)
        self.radicals = {f: c for f, c in sorted(grouped.items()) if c}

    def is_rational(self) -> bool:
        return all(f == 1 for f in self.radicals)

    def bounds(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        scale = 1 << bits
        lo = hi = Fraction(0)
        for f, c in self.radicals.items():
            root = isqrt(f * scale * scale)
            exact = root * root == f * scale * scale
            lo += c * Fraction(root, scale)
            hi += c * Fraction(root if exact else root + 1, scale)
        return lo, hi

    def upper_rational(self, bits: int = 64) -> Fraction:
        return self.bounds(bits)[1]

    def compare(self, q) -> int:
        """Sign of (self - q), decided exactly."""
        q = Fraction(q)
        if len(self.terms) == 1:
            a, r = self.terms[0]
            if q < 0:
                return 1
            lhs, rhs = a * a, q * q * r  # a/sqrt(r) vs q, squared
            return (lhs > rhs) - (lhs < rhs)
        if self.is_rational():
            v = self.radicals.get(1, Fraction(0))
            return (v > q) - (v < q)
        # a positive combination of independent square roots is irrational: never equal
        bits = 64
        while True:
            lo, hi = self.bounds(bits)
            if lo > q:
                return 1
            if hi < q:
                return -1
            bits *= 2

    def __ge__(self, q):
        return self.compare(q) >= 0

    def __le__(self, q):
        return self.compare(q) <= 0

    def __gt__(self, q):
        return self.compare(q) > 0

    def __lt__(self, q):
        return self.compare(q) < 0

    def __float__(self):
        return float(self.to_mpf())

    def to_mpf(self):
        with mpmath.workdps(_MP_DPS):
            return mpmath.fsum(mpmath.mpf(a.numerator) / a.denominator / mpmath.sqrt(r) for a, r in self.terms)

    def __repr__(self):
        inner = " + ".join(f"{a}/sqrt({r})" for a, r in self.terms) or "0"
        return f"RadicalSum({inner})"

    def to_json(self) -> dict:
        return {
            "terms": [[fraction_str(a), r] for a, r in self.terms],
            "upper_rational": fraction_str(self.upper_rational()),
            "float": float_str(self.to_mpf()),
        }


def fraction_str(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def float_str(x) -> str:
    if isinstance(x, Fraction):
        with mpmath.workdps(_MP_DPS):
            x = mpmath.mpf(x.numerator) / x.denominator
    return mpmath.nstr(mpmath.mpf(x), FLOAT_DIGITS)


@dataclass(frozen=True)
class ClassVector:
    """Cycle-type counts |C_mu cap H| of a subgroup, identity excluded."""

    n: int
    order: int
    entries: dict

    @classmethod
    def from_group(cls, H: PermGroup, cap: int = DEFAULT_CAP) -> "ClassVector":
        return cls(H.degree, H.order(), class_intersections(H, cap))

    def support_distribution(self) -> dict[int, int]:
        return support_from_classes(self.entries)

    def to_json(self) -> dict:
        return {format_partition(mu): c for mu, c in self.entries.items()}


def _as_cv(H, cap) -> ClassVector:
    return H if isinstance(H, ClassVector) else ClassVector.from_group(H, cap)


def character_sums(cv: ClassVector) -> dict[Partition, int]:
    """lambda -> sum over nonidentity h in H of chi_lambda(h), grouped by class."""
    table = character_table(cv.n)
    return {lam: sum(c * table(lam, mu) for mu, c in cv.entries.items()) for lam in table.partitions}


@dataclass(frozen=True)
class WeakDistribution:
    n: int
    probs: dict

    def to_json(self) -> dict:
        return {format_partition(lam): fraction_str(p) for lam, p in self.probs.items()}


def weak_distribution(H, cap: int = DEFAULT_CAP) -> WeakDistribution:
    """Exact P_H(lambda) = d_lambda / n! * sum_{h in H} chi_lambda(h)."""
    cv = _as_cv(H, cap)
    nfact = factorial(cv.n)
    sums = character_sums(cv)
    probs = {}
    for lam, s in sums.items():
        d = dimension(lam)
        probs[lam] = Fraction(d * (d + s), nfact)
    return WeakDistribution(cv.n, probs)


def plancherel(n: int) -> WeakDistribution:
    nfact = factorial(n)
    return WeakDistribution(n, {lam: Fraction(dimension(lam) ** 2, nfact) for lam in character_table(n).partitions})


def total_variation(H, cap: int = DEFAULT_CAP) -> Fraction:
    """D_H = (1/n!) sum_lambda d_lambda |sum_{h != 1} chi_lambda(h)|."""
    cv = _as_cv(H, cap)
    sums = character_sums(cv)
    return Fraction(sum(dimension(lam) * abs(s) for lam, s in sums.items()), factorial(cv.n))


def l1_distance(p: WeakDistribution, q: WeakDistribution) -> Fraction:
    keys = set(p.probs) | set(q.probs)
    return sum((abs(p.probs.get(k, 0) - q.probs.get(k, 0)) for k in keys), Fraction(0))


def _nontrivial(cv: ClassVector) -> None:
    if cv.order <= 1 or not cv.entries:
        raise TrivialGroup("bounds need a nontrivial subgroup")


def prop1_bounds(H, cap: int = DEFAULT_CAP) -> tuple[Fraction, RadicalSum]:
    """Class-size sandwich: lower < D_H <= upper."""
    cv = _as_cv(H, cap)
    _nontrivial(cv)
    lower = sum(
        (Fraction(c * c, cv.order * class_size(mu)) for mu, c in cv.entries.items()),
        Fraction(0),
    )
    upper = RadicalSum((c, class_size(mu)) for mu, c in cv.entries.items())
    return lower, upper


def min_class(cv: ClassVector) -> Partition:
    return min(cv.entries, key=lambda mu: (class_size(mu), mu))


def corollary2_bounds(H, cap: int = DEFAULT_CAP) -> tuple[Fraction, RadicalSum]:
    """Bounds from the smallest class meeting H: 1/(|H||C|) < D_H <= (|H|-1)/sqrt|C|."""
    cv = _as_cv(H, cap)
    _nontrivial(cv)
    size = class_size(min_class(cv))
    return Fraction(1, cv.order * size), RadicalSum([(cv.order - 1, size)])


def lemma_last_bound(H, cap: int = DEFAULT_CAP) -> RadicalSum:
    """Upper bound on D_H using only the support distribution."""
    cv = _as_cv(H, cap)
    _nontrivial(cv)
    return RadicalSum((cnt, min_class_size(cv.n, k)) for k, cnt in cv.support_distribution().items())


def log2_group_order(n: int):
    with mpmath.workdps(_MP_DPS):
        return mpmath.log(mpmath.factorial(n), 2)


@dataclass(frozen=True)
class Verdict:
    distinguishable: bool
    c: float
    threshold: object  # mpf
    dh: Fraction

    def to_json(self) -> dict:
        return {
            "distinguishable": self.distinguishable,
            "c": self.c,
            "threshold": float_str(self.threshold),
            "rule": "D_H >= (log2 n!)^(-c)",
        }


def classify(H, c: float = 1.0, cap: int = DEFAULT_CAP) -> Verdict:
    if c <= 0:
        raise ValueError("c must be positive")
    cv = _as_cv(H, cap)
    dh = total_variation(cv)
    with mpmath.workdps(_MP_DPS):
        if cv.n < 2:
            threshold = mpmath.inf
        else:
            threshold = log2_group_order(cv.n) ** (-mpmath.mpf(c))
        dist = dh > 0 and mpmath.mpf(dh.numerator) / dh.denominator >= threshold
    return Verdict(bool(dist), c, threshold, dh)


def theoremB_rhs(n: int, k: int, m: int, eps: float):
    """n^(-eps m) * C(n,k)^(1/2) * (k!)^(1/4) as a 60-digit mpf."""
    if not 1 <= k <= n or m < 1 or eps < 0:
        raise ValueError("need 1 <= k <= n, m >= 1, eps >= 0")
    with mpmath.workdps(_MP_DPS):
        logv = (-mpmath.mpf(eps) * m * mpmath.log(n) + mpmath.log(comb(n, k)) / 2
                + mpmath.log(mpmath.factorial(k)) / 4)
        return mpmath.exp(logv)


def support_bound_holds(n: int, k: int, count: int) -> bool:
    """Exact check of count <= C(n,k)^(1/2) (k!)^(1/4), via fourth powers."""
    return count**4 <= comb(n, k) ** 2 * factorial(k)


def empirical_epsilon(n: int, k: int, count: int, m: int) -> float:
    """Largest eps with count <= n^(-eps m) C(n,k)^(1/2) (k!)^(1/4)."""
    ratio = log(count) - log(comb(n, k)) / 2 - sum(log(i) for i in range(2, k + 1)) / 4
    return -ratio / (log(n) * m)


def sample_weak(H, count: int, seed: int, cap: int = DEFAULT_CAP) -> list[Partition]:
    """Draw i.i.d. outcomes from P_H by exact inverse CDF over partition order."""
    if count < 1:
        raise ValueError("count must be >= 1")
    dist = weak_distribution(H, cap)
    nfact = factorial(dist.n)
    labels = list(dist.probs)
    cumulative = []
    acc = 0
    for lam in labels:
        p = dist.probs[lam]
        acc += p.numerator * (nfact // p.denominator)
        cumulative.append(acc)
    assert acc == nfact
    rng = random.Random(seed)
    return [labels[bisect.bisect_right(cumulative, rng.randrange(nfact))] for _ in range(count)]


def empirical_tv(samples: list[Partition], target: WeakDistribution) -> Fraction:
    """Total-variation distance (half L1) between sample frequencies and a distribution."""
    freq = Counter(samples)
    total = len(samples)
    keys = set(freq) | set(target.probs)
    return sum((abs(Fraction(freq.get(k, 0), total) - target.probs.get(k, 0)) for k in keys), Fraction(0)) / 2


@dataclass
class DistReport:
    n: int
    order: int
    min_degree: int | None
    dh: Fraction
    prop1_lower: Fraction | None
    prop1_upper: RadicalSum | None
    cor2_lower: Fraction | None
    cor2_upper: RadicalSum | None
    verdict: Verdict
    class_vector: ClassVector
    samples: dict | None = field(default=None)

    @property
    def dh_float(self) -> str:
        return float_str(self.dh)

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "order": self.order,
            "min_degree": self.min_degree,
            "dh": fraction_str(self.dh),
            "dh_float": self.dh_float,
            "prop1": None,
            "cor2": None,
            "verdict": self.verdict.to_json(),
            "class_vector": self.class_vector.to_json(),
        }
        if self.prop1_lower is not None:
            out["prop1"] = {"lower": fraction_str(self.prop1_lower), "upper": self.prop1_upper.to_json()}
            out["cor2"] = {"lower": fraction_str(self.cor2_lower), "upper": self.cor2_upper.to_json()}
        if self.samples is not None:
            out["samples"] = self.samples
        return out


def dist_report(H: PermGroup, c: float = 1.0, cap: int = DEFAULT_CAP,
                samples: int = 0, seed: int = 0) -> DistReport:
    cv = ClassVector.from_group(H, cap)
    dh = total_variation(cv)
    verdict = classify(cv, c)
    report = DistReport(cv.n, cv.order, None, dh, None, None, None, None, verdict, cv)
    if cv.entries:
        report.min_degree = min(cv.support_distribution())
        report.prop1_lower, report.prop1_upper = prop1_bounds(cv)
        report.cor2_lower, report.cor2_upper = corollary2_bounds(cv)
    if samples:
        draws = sample_weak(cv, samples, seed)
        freq = Counter(draws)
        report.samples = {
            "count": samples,
            "seed": seed,
            "prng": PRNG_NAME,
            "counts": {format_partition(lam): freq[lam] for lam in character_table(cv.n).partitions if freq[lam]},
        }
    return report
