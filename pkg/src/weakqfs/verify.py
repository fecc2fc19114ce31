"""Verification harness: each suite checks one claim on finite instances.

A suite returns a plain dict: ``name``, ``claim``, ``asserted`` (whether a
nonzero ``violations`` count is a failure), ``instances``, ``violations``,
``witness`` (an extremal or failing instance) and ``constants`` (empirical
values reported without assertion).  Suites that hit the enumeration cap
report ``error: CapExceeded`` instead of aborting the run.
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, log, sqrt

import mpmath

from . import __version__
from .characters import (
    character_table,
    class_size,
    classes_with_support,
    dimension,
    min_class_size,
    partitions,
)
from .codes import embed, min_weight, random_gv_code, weight_distribution
from .constructions import block_group, fpf_involution, two_subset_group, valid_block_parameters
from .distinguish import (
    PRNG_NAME,
    ClassVector,
    corollary2_bounds,
    empirical_epsilon,
    empirical_tv,
    float_str,
    l1_distance,
    lemma_last_bound,
    log2_group_order,
    plancherel,
    prop1_bounds,
    sample_weak,
    support_bound_holds,
    total_variation,
    weak_distribution,
)
from .errors import CapExceeded, WeakQFSError
from .groups import DEFAULT_CAP, PermGroup, is_primitive, minimal_degree, support_distribution, symmetric_group
from .perm import Permutation, format_permutation

THREADS_ENV = "WEAKQFS_THREADS"


@dataclass
class VerifyConfig:
    suites: list[str] | None = None
    cap: int = DEFAULT_CAP
    seed: int = 2024
    random_groups: int = 200
    conjugate_pairs: int = 50
    samples: int = 10**5
    gv_codes: int = 100
    chars_max_n: int = 8


CLAIMS = {
    "characters": "row orthogonality, sum of squared degrees = n!, chi(1) = hook-length degree",
    "full_group_distance": "D_G = 2(1 - 1/n!) when the hidden subgroup is all of S_n",
    "class_size_sandwich": "sum |C cap H|^2/(|H||C|) < D_H <= sum |C cap H|/sqrt|C|, and the smallest-class form",
    "conjugation_invariance": "D_{xHx^-1} = D_H",
    "sampling_identity": "D_H equals the L1 distance between P_H and the Plancherel measure",
    "order_vs_minimal_degree": "|H| <= n^(10n/m) if m <= log2 n, |H| <= 2^(10n) if m >= log2 n",
    "coding_dictionary": "minimal degree of the embedded code is twice its minimum weight; support 2w counts equal A_w",
    "primitive_minimal_degree": "primitive groups not containing A_n have m >= (sqrt(n)-1)/2; pair action has m = 2(l-2)",
    "fpf_involution_family": "D_H for a fixed-point-free involution decreases in n and stays below |C|^(-1/2)",
    "sampler_fidelity": "empirical L1 distance of 10^5 trivial-subgroup draws to Plancherel < 0.02",
    "binomial": "C(n,x) C(n,y) <= C(n,x+y) 2^(2(x+y)) for x+y <= n <= 60",
    "class_size_binomial_bounds": "C(n,k) <= |C| <= n^k for a class of support k",
    "fpf_class_minimality": "the smallest class of even support k is the involution class (2^(k/2), 1^(n-k))",
    "polylog_order_lower_bound": "if |H| and the smallest class meeting H are at most log2 n!, the lower bound is at least (log2 n!)^-2",
    "support_count_bound": "|H_k| <= C(n,k)^(1/2) (k!)^(1/4) where derivable; empirical eps and (m, D_H) reported",
}


def _suite(name, asserted, instances=0, violations=0, witness=None, constants=None):
    return {
        "name": name,
        "claim": CLAIMS[name],
        "asserted": asserted,
        "instances": instances,
        "violations": violations,
        "witness": witness,
        "constants": constants or {},
    }


# -- shared fixtures -----------------------------------------------------------

def random_permutation_on_subset(rng: random.Random, n: int) -> Permutation:
    """A random permutation of a random subset of {1..n} (so small supports occur)."""
    k = rng.randint(2, n)
    subset = rng.sample(range(n), k)
    shuffled = subset[:]
    rng.shuffle(shuffled)
    img = list(range(n))
    for a, b in zip(subset, shuffled):
        img[a] = b
    return Permutation(img)


def random_subgroups(count: int, seed: int, min_n: int = 3, max_n: int = 8) -> list[PermGroup]:
    """Seeded nontrivial 2-generator subgroups of S_n with n in [min_n, max_n]."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(min_n, max_n)
        G = PermGroup([random_permutation_on_subset(rng, n) for _ in range(2)], n)
        if not G.is_trivial():
            out.append(G)
    return out


def cyclic_subgroups(count: int, seed: int, max_n: int = 10) -> list[PermGroup]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(3, max_n)
        G = PermGroup([random_permutation_on_subset(rng, n)], n)
        if not G.is_trivial():
            out.append(G)
    return out


def _describe(G: PermGroup) -> dict:
    return {"degree": G.degree, "generators": [format_permutation(g) for g in G.generators], "order": G.order()}


# -- suites ------------------------------------------------------------------------

def suite_characters(cfg: VerifyConfig) -> dict:
    violations = 0
    instances = 0
    for n in range(1, cfg.chars_max_n + 1):
        table = character_table(n)
        parts = table.partitions
        sizes = {mu: class_size(mu) for mu in parts}
        nfact = factorial(n)
        ident = (1,) * n
        for i, lam in enumerate(parts):
            if table(lam, ident) != dimension(lam):
                violations += 1
            for lam2 in parts[i:]:
                s = sum(sizes[mu] * table(lam, mu) * table(lam2, mu) for mu in parts)
                instances += 1
                if s != (nfact if lam == lam2 else 0):
                    violations += 1
        if sum(dimension(lam) ** 2 for lam in parts) != nfact:
            violations += 1
        if sum(sizes.values()) != nfact:
            violations += 1
    return _suite("characters", True, instances, violations, constants={"max_n": cfg.chars_max_n})


def direct_table_distance(n: int, cv: dict) -> Fraction:
    """D_H summed straight off the character table, independent of the ClassVector path."""
    table = character_table(n)
    total = 0
    for lam in table.partitions:
        total += table(lam, (1,) * n) * abs(sum(c * table(lam, mu) for mu, c in cv.items()))
    return Fraction(total, factorial(n))


def suite_full_group(cfg: VerifyConfig) -> dict:
    violations = 0
    values = {}
    for n in range(3, 8):
        G = symmetric_group(n)
        dh = total_variation(G, cfg.cap)
        closed = 2 * (1 - Fraction(1, factorial(n)))
        oracle = direct_table_distance(n, {mu: class_size(mu) for mu in partitions(n) if mu != (1,) * n})
        if not dh == closed == oracle:
            violations += 1
        values[str(n)] = f"{dh.numerator}/{dh.denominator}"
    return _suite("full_group_distance", True, 5, violations, constants={"dh": values})


def suite_sandwich(cfg: VerifyConfig) -> dict:
    violations = 0
    witness = None
    tightest = None
    groups = random_subgroups(cfg.random_groups, cfg.seed)
    for G in groups:
        cv = ClassVector.from_group(G, cfg.cap)
        dh = total_variation(cv)
        lo1, up1 = prop1_bounds(cv)
        lo2, up2 = corollary2_bounds(cv)
        up3 = lemma_last_bound(cv)
        ok = lo1 < dh and up1 >= dh and lo2 < dh and up2 >= dh and up3 >= dh and 0 <= dh <= 2
        if not ok:
            violations += 1
            witness = witness or _describe(G)
        ratio = float(dh) / float(up1)
        if tightest is None or ratio > tightest[0]:
            tightest = (ratio, _describe(G))
    return _suite("class_size_sandwich", True, len(groups), violations, witness or (tightest and tightest[1]),
                  {"max_dh_over_upper": tightest and round(tightest[0], 12)})


def suite_conjugation(cfg: VerifyConfig) -> dict:
    rng = random.Random(cfg.seed + 1)
    groups = random_subgroups(cfg.conjugate_pairs, cfg.seed + 2)
    violations = 0
    witness = None
    for G in groups:
        img = list(range(G.degree))
        rng.shuffle(img)
        x = Permutation(img)
        if total_variation(G, cfg.cap) != total_variation(G.conjugate(x), cfg.cap):
            violations += 1
            witness = witness or _describe(G)
    return _suite("conjugation_invariance", True, len(groups), violations, witness)


def suite_sampling_identity(cfg: VerifyConfig) -> dict:
    groups = [symmetric_group(n) for n in range(3, 8)]
    groups += random_subgroups(cfg.random_groups, cfg.seed)
    groups += random_subgroups(cfg.conjugate_pairs, cfg.seed + 2)
    violations = 0
    witness = None
    for G in groups:
        cv = ClassVector.from_group(G, cfg.cap)
        p = weak_distribution(cv)
        if sum(p.probs.values()) != 1 or min(p.probs.values()) < 0:
            violations += 1
        if total_variation(cv) != l1_distance(p, plancherel(G.degree)):
            violations += 1
            witness = witness or _describe(G)
    return _suite("sampling_identity", True, len(groups), violations, witness)


def order_bound_violated(order: int, n: int, m: int) -> bool:
    """Order versus minimal degree, decided in exact integers."""
    bad = False
    if 2**m <= n and order**m > n ** (10 * n):  # m <= log2 n
        bad = True
    if 2**m >= n and order > 2 ** (10 * n):  # m >= log2 n
        bad = True
    return bad


def _theorem_a_groups(cfg: VerifyConfig):
    for n, m in valid_block_parameters(30):
        yield f"block({n},{m})", block_group(n, m), m
    rng = random.Random(cfg.seed + 3)
    for length in range(2, 13):
        for dim in range(1, length + 1):
            code = random_gv_code(length, dim, rng.randrange(2**32))
            yield f"gv({length},{dim})", embed(code), None
    for l in range(5, 8):
        yield f"two_subset({l})", two_subset_group(l), None
    for i, G in enumerate(random_subgroups(cfg.random_groups, cfg.seed)):
        yield f"random#{i}", G, None


def suite_theorem_a(cfg: VerifyConfig) -> dict:
    violations = 0
    instances = 0
    witness = None
    worst = None
    documented = 0
    for label, G, known_m in _theorem_a_groups(cfg):
        order = G.order()
        if order <= cfg.cap:
            m = minimal_degree(G, cfg.cap)
            if known_m is not None and m != known_m:
                violations += 1
                witness = witness or {"group": label, "reason": "documented minimal degree disagrees"}
        elif known_m is not None:
            m = known_m
            documented += 1
        else:
            raise CapExceeded(order, cfg.cap)
        n = G.degree
        instances += 1
        if order_bound_violated(order, n, m):
            violations += 1
            witness = witness or {"group": label, "order": order, "m": m}
        # log_n |H| / (n/m): how much of the exponent 10 is used
        used = log(order) / log(n) / (n / m) if n > 1 and order > 1 else 0.0
        if worst is None or used > worst[0]:
            worst = (used, label)
    return _suite("order_vs_minimal_degree", True, instances, violations, witness or {"group": worst[1]},
                  {"max_exponent_ratio": round(worst[0], 12), "documented_min_degrees": documented})


def suite_coding(cfg: VerifyConfig) -> dict:
    rng = random.Random(cfg.seed + 4)
    violations = 0
    witness = None
    weights = []
    for _ in range(cfg.gv_codes):
        length = rng.randint(2, 16)
        dim = rng.randint(1, min(10, length))
        code = random_gv_code(length, dim, rng.randrange(2**32))
        H = embed(code)
        A = weight_distribution(code, cfg.cap)
        dist = support_distribution(H, cfg.cap)
        expected = {2 * w: a for w, a in A.items() if w}
        ok = (minimal_degree(H, cfg.cap) == 2 * min_weight(code) and dist == expected
              and H.order() == 2**dim
              and all(Permutation._trusted(a) * Permutation._trusted(a) == Permutation.identity(H.degree)
                      for a in H.iter_arrays(cfg.cap)))
        if not ok:
            violations += 1
            witness = witness or {"rows": code.row_strings()}
        weights.append((length, dim, min_weight(code)))
    return _suite("coding_dictionary", True, cfg.gv_codes, violations, witness,
                  {"max_relative_distance": round(max(w / l for l, _, w in weights), 12)})


def suite_babai(cfg: VerifyConfig) -> dict:
    violations = 0
    values = {}
    for l in range(5, 8):
        G = two_subset_group(l)
        n = G.degree
        m = minimal_degree(G, cfg.cap)
        ok = (is_primitive(G) and G.order() == factorial(l) and 2 * G.order() < factorial(n)
              and (2 * m + 1) ** 2 >= n and m == 2 * (l - 2))  # m >= (sqrt(n)-1)/2
        violations += not ok
        values[str(l)] = {"n": n, "m": m, "babai_bound": round((sqrt(n) - 1) / 2, 12)}
    return _suite("primitive_minimal_degree", True, 3, violations, constants=values)


def suite_fpf(cfg: VerifyConfig) -> dict:
    violations = 0
    prev = None
    values = {}
    for n in (4, 6, 8, 10):
        H = fpf_involution(n)
        dh = total_variation(H, cfg.cap)
        _, upper = corollary2_bounds(H, cfg.cap)
        size = class_size((2,) * (n // 2))
        if not (upper.terms == ((1, size),) and upper >= dh):
            violations += 1
        if prev is not None and not dh < prev:
            violations += 1
        prev = dh
        values[str(n)] = {"dh": f"{dh.numerator}/{dh.denominator}", "dh_float": float_str(dh),
                          "upper_float": float_str(upper.to_mpf())}
    return _suite("fpf_involution_family", True, 4, violations, constants=values)


def suite_sampler(cfg: VerifyConfig) -> dict:
    n = 6
    draws = sample_weak(PermGroup([], n), cfg.samples, cfg.seed)
    l1 = 2 * empirical_tv(draws, plancherel(n))
    return _suite("sampler_fidelity", True, 1, int(l1 >= Fraction(2, 100)),
                  constants={"l1": float_str(l1), "draws": cfg.samples, "seed": cfg.seed, "prng": PRNG_NAME})


def suite_binomial(cfg: VerifyConfig) -> dict:
    violations = 0
    strong = 0
    instances = 0
    for n in range(2, 61):
        row = [comb(n, j) for j in range(n + 1)]
        for x in range(1, n):
            for y in range(1, n - x + 1):
                instances += 1
                lhs = row[x] * row[y]
                if lhs > row[x + y] * 4 ** (x + y):
                    violations += 1
                if lhs > row[x + y] * comb(x + y, y) ** 2:
                    strong += 1
    return _suite("binomial", True, instances, violations + strong, constants={"strong_form_violations": strong})


def suite_class_sizes(cfg: VerifyConfig) -> dict:
    violations = 0
    instances = 0
    for n in range(2, 11):
        for mu in partitions(n):
            k = sum(p for p in mu if p > 1)
            if k == 0:
                continue
            instances += 1
            if not comb(n, k) <= class_size(mu) <= n**k:
                violations += 1
    return _suite("class_size_binomial_bounds", True, instances, violations)


def suite_size_c(cfg: VerifyConfig) -> dict:
    violations = 0
    instances = 0
    best = None
    for n in range(2, 11):
        for k in range(2, n + 1):
            size = min_class_size(n, k)
            if k % 2 == 0:
                instances += 1
                if size != class_size((2,) * (k // 2) + (1,) * (n - k)):
                    violations += 1
            # the constant bounded below: |C| sqrt(k) / (C(n,k) sqrt(k!))
            for mu in classes_with_support(n, k):
                ratio = class_size(mu) * sqrt(k) / (comb(n, k) * sqrt(factorial(k)))
                if best is None or ratio < best[0]:
                    best = (ratio, n, k, mu)
    return _suite("fpf_class_minimality", True, instances, violations,
                  {"witness": {"n": best[1], "k": best[2], "cycle_type": list(best[3])}},
                  {"min_ratio": round(best[0], 12)})


def suite_polylog(cfg: VerifyConfig) -> dict:
    violations = 0
    instances = 0
    groups = cyclic_subgroups(cfg.random_groups, cfg.seed + 5)
    groups += [fpf_involution(n) for n in (4, 6, 8, 10)]
    groups += random_subgroups(cfg.random_groups, cfg.seed)
    with mpmath.workdps(60):
        for G in groups:
            n = G.degree
            L = log2_group_order(n)
            if G.order() > L:
                continue
            cv = ClassVector.from_group(G, cfg.cap)
            lo, _ = corollary2_bounds(cv)
            if min(class_size(mu) for mu in cv.entries) > L:
                continue
            instances += 1
            if mpmath.mpf(lo.numerator) / lo.denominator < L**-2:
                violations += 1
    return _suite("polylog_order_lower_bound", True, instances, violations)


def _bc_groups(cfg: VerifyConfig):
    for n in (4, 6, 8, 10):
        yield f"fpf({n})", fpf_involution(n), True
    for n, m in valid_block_parameters(12):
        G = block_group(n, m)
        if G.order() > cfg.cap:
            continue
        # derivable when even |H|-1 fits under every bound with k >= m
        derivable = all(support_bound_holds(n, k, G.order() - 1) for k in range(m, n + 1))
        yield f"block({n},{m})", G, derivable
    for l in range(5, 8):
        yield f"two_subset({l})", two_subset_group(l), False
    for i, G in enumerate(random_subgroups(cfg.random_groups, cfg.seed)):
        yield f"random#{i}", G, False


def suite_support_bound(cfg: VerifyConfig) -> dict:
    violations = 0
    asserted = 0
    instances = 0
    eps_min = None
    pairs = []
    max_m_dist = 0
    for label, G, derivable in _bc_groups(cfg):
        n = G.degree
        cv = ClassVector.from_group(G, cfg.cap)
        dist = cv.support_distribution()
        m = min(dist)
        instances += 1
        if derivable:
            asserted += 1
            if not all(support_bound_holds(n, k, c) for k, c in dist.items()):
                violations += 1
        eps = min(empirical_epsilon(n, k, c, m) for k, c in dist.items())
        if eps_min is None or eps < eps_min[0]:
            eps_min = (eps, label)
        dh = total_variation(cv)
        if dh * n >= 1:
            max_m_dist = max(max_m_dist, m)
        if not label.startswith("random"):
            pairs.append([label, m, float_str(dh)])
    return _suite("support_count_bound", True, instances, violations, {"min_eps_group": eps_min[1]},
                  {"asserted_groups": asserted, "min_empirical_eps": round(eps_min[0], 12),
                   "max_min_degree_with_dh_at_least_1_over_n": max_m_dist, "family_m_dh": pairs})


SUITES = {
    "characters": suite_characters,
    "full_group_distance": suite_full_group,
    "class_size_sandwich": suite_sandwich,
    "conjugation_invariance": suite_conjugation,
    "sampling_identity": suite_sampling_identity,
    "order_vs_minimal_degree": suite_theorem_a,
    "coding_dictionary": suite_coding,
    "primitive_minimal_degree": suite_babai,
    "fpf_involution_family": suite_fpf,
    "sampler_fidelity": suite_sampler,
    "binomial": suite_binomial,
    "class_size_binomial_bounds": suite_class_sizes,
    "fpf_class_minimality": suite_size_c,
    "polylog_order_lower_bound": suite_polylog,
    "support_count_bound": suite_support_bound,
}


def _run_one(name: str, cfg: VerifyConfig) -> dict:
    try:
        return SUITES[name](cfg)
    except WeakQFSError as exc:
        out = _suite(name, True)
        out["error"] = exc.kind
        out["message"] = str(exc)
        return out


def run_verify(cfg: VerifyConfig) -> dict:
    names = cfg.suites or list(SUITES)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    workers = int(os.environ.get(THREADS_ENV, "1") or 1)
    if workers > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, names, [cfg] * len(names)))
    else:
        results = [_run_one(name, cfg) for name in names]
    return {
        "suites": results,
        "metadata": {
            "version": __version__,
            "seed": cfg.seed,
            "cap": cfg.cap,
            "random_groups": cfg.random_groups,
            "samples": cfg.samples,
            "prng": PRNG_NAME,
        },
        "passed": report_passed(results),
    }


def report_passed(suites: list[dict]) -> bool:
    return all(not (s["asserted"] and s["violations"]) for s in suites)
