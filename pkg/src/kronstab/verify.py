"""Replayable checks of the worked examples and the general identities.

Each check returns a :class:`CheckResult`; suites group them. The range of
the exhaustive checks is governed by a single ``max_weight`` knob.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Callable

from . import bounds
from .kronecker import kronecker_coefficient, kronecker_product
from .lr import lr_coefficient
from .partitions import (
    Partition,
    add,
    murnaghan_inequalities,
    pad,
    partitions_of,
    partitions_up_to,
)
from .reduced import murnaghan_expansion, recover_kronecker, reduced_coefficient
from .schur import SchurExpansion, straighten
from .stability import (
    stab_product_by_definition,
    stab_product_empirical,
    stab_triple_empirical,
    v_shift_holds,
)

SEED = 20100315


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"suite": self.suite, "name": self.name, "passed": self.passed, "detail": self.detail}


# s_{(k,2)} * s_{(k,2)} for k = 2..7, as printed
INTRO_PRODUCTS: dict[int, dict[Partition, int]] = {
    2: {(4,): 1, (1, 1, 1, 1): 1, (2, 2): 1},
    3: {(5,): 1, (2, 1, 1, 1): 1, (3, 2): 1, (4, 1): 1, (3, 1, 1): 1, (2, 2, 1): 1},
    4: {(6,): 1, (3, 1, 1, 1): 1, (4, 2): 2, (5, 1): 1, (4, 1, 1): 1, (3, 2, 1): 2, (2, 2, 2): 1},
    5: {(7,): 1, (4, 1, 1, 1): 1, (5, 2): 2, (6, 1): 1, (5, 1, 1): 1, (4, 2, 1): 2,
        (3, 2, 2): 1, (4, 3): 1, (3, 3, 1): 1},
    6: {(8,): 1, (5, 1, 1, 1): 1, (6, 2): 2, (7, 1): 1, (6, 1, 1): 1, (5, 2, 1): 2,
        (4, 2, 2): 1, (5, 3): 1, (4, 3, 1): 1, (4, 4): 1},
    7: {(9,): 1, (6, 1, 1, 1): 1, (7, 2): 2, (8, 1): 1, (7, 1, 1): 1, (6, 2, 1): 2,
        (5, 2, 2): 1, (6, 3): 1, (5, 3, 1): 1, (5, 4): 1},
}


def random_partition(rng: random.Random, max_weight: int) -> Partition:
    return rng.choice(partitions_of(rng.randint(0, max_weight)))


def _support_pairs(max_weight: int):
    shapes = list(partitions_up_to(max_weight))
    for a in shapes:
        for b in shapes:
            yield a, b


# --- intro -----------------------------------------------------------------

def check_intro_products(max_weight: int) -> tuple[bool, str]:
    bad = [k for k, want in INTRO_PRODUCTS.items()
           if kronecker_product((k, 2), (k, 2)) != SchurExpansion(want)]
    return not bad, f"mismatched k: {bad}" if bad else "k = 2..7 match"


def check_intro_reduced(max_weight: int) -> tuple[bool, str]:
    got = {(g, m): reduced_coefficient((2,), (2,), g, method=m)
           for g in ((2,), (4,)) for m in ("stable", "littlewood")}
    ok = all(v == (2 if g == (2,) else 1) for (g, _), v in got.items())
    return ok, "gbar^(2)=2, gbar^(4)=1 by both routes" if ok else repr(got)


def check_intro_stab(max_weight: int) -> tuple[bool, str]:
    formula = bounds.stab_product((2,), (2,))
    empirical = stab_product_empirical((2,), (2,))
    fails7 = not v_shift_holds((2,), (2,), 7, 1)
    holds = all(v_shift_holds((2,), (2,), n, k) for n in (8, 9, 10) for k in (1, 2, 3))
    ok = formula == empirical == 8 and fails7 and holds
    return ok, f"formula={formula} empirical={empirical} V-shift fails at 7={fails7} holds 8..10={holds}"


def check_straightening(max_weight: int) -> tuple[bool, str]:
    cases = {(1, 3): (-1, (2, 2)), (1, 2, 1): None, (0, 2, 2): None,
             (0, 3, 1): (-1, (2, 1, 1)), (0, 4): (-1, (3, 1))}
    bad = [seq for seq, want in cases.items() if straighten(seq) != want]
    return not bad, f"bad: {bad}" if bad else "signed straightenings match"


def check_saturation(max_weight: int) -> tuple[bool, str]:
    got = {n: kronecker_coefficient((n, n), (n, n), (n, n)) for n in range(1, 7)}
    ok = all(v == (n + 1) % 2 for n, v in got.items())
    return ok, repr(got)


# --- theorems --------------------------------------------------------------

def check_recovery(max_weight: int) -> tuple[bool, str]:
    count = 0
    for n in range(max_weight + 1):
        shapes = partitions_of(n)
        for lam in shapes:
            for mu in shapes:
                for nu in shapes:
                    count += 1
                    if recover_kronecker(lam, mu, nu) != kronecker_coefficient(lam, mu, nu):
                        return False, f"differs at {lam}, {mu}, {nu}"
    return True, f"{count} triples"


def check_two_routes(max_weight: int) -> tuple[bool, str]:
    count = 0
    for a, b in _support_pairs(max_weight):
        for w in range(sum(a) + sum(b) + 1):
            for g in partitions_of(w):
                if not murnaghan_inequalities(a, b, g):
                    continue
                count += 1
                if reduced_coefficient(a, b, g) != reduced_coefficient(a, b, g, method="littlewood"):
                    return False, f"differs at {a}, {b}, {g}"
    return True, f"{count} triples"


def check_attainment(max_weight: int) -> tuple[bool, str]:
    for a, b in _support_pairs(max_weight):
        supp = list(murnaghan_expansion(a, b))
        weights = [sum(g) for g in supp]
        firsts = [g[0] if g else 0 for g in supp]
        lo, hi = bounds.weight_range(a, b)
        if (max(firsts) != bounds.max_gamma1(a, b)
                or max(w + f for w, f in zip(weights, firsts)) != bounds.stab_product(a, b)
                or min(weights) != lo or max(weights) != hi):
            return False, f"closed form missed at {a}, {b}"
    return True, "max gamma_1, max |gamma|+gamma_1, weight range all attained"


def check_row_bounds(max_weight: int) -> tuple[bool, str]:
    for a, b in _support_pairs(max_weight):
        for g in murnaghan_expansion(a, b):
            for k, gk in enumerate(g, start=1):
                if gk > bounds.row_bound(a, b, k):
                    return False, f"gamma_{k} too large at {a}, {b}, {g}"
    return True, "every support row within its bound"


def check_murnaghan_littlewood(max_weight: int) -> tuple[bool, str]:
    for a, b in _support_pairs(max_weight):
        if sum(a) + sum(b) > max_weight:
            continue
        for g in partitions_of(sum(a) + sum(b)):
            if reduced_coefficient(a, b, g) != lr_coefficient(a, b, g):
                return False, f"differs at {a}, {b}, {g}"
    return True, f"|alpha|+|beta| <= {max_weight}"


def check_dvir(max_weight: int) -> tuple[bool, str]:
    for n in range(1, max_weight + 1):
        for a in partitions_of(n):
            for b in partitions_of(n):
                top = max(lam[0] for lam in kronecker_product(a, b, prune=False))
                if top != sum(min(x, y) for x, y in zip(a, b)):
                    return False, f"max first row wrong at {a}, {b}"
    return True, "max first row equals |alpha cap beta|"


def check_symmetry(max_weight: int) -> tuple[bool, str]:
    # read the same coefficient out of three different stable products
    for a, b in _support_pairs(max_weight):
        for g, value in murnaghan_expansion(a, b).items():
            if sum(g) > max_weight:
                continue
            if any(murnaghan_expansion(x, y)[z] != value for x, y, z in permutations((a, b, g))):
                return False, f"asymmetric at {a}, {b}, {g}"
    return True, "invariant under all permutations"


def check_brion(max_weight: int, samples: int = 200) -> tuple[bool, str]:
    rng = random.Random(SEED)
    for _ in range(samples):
        a, b, g = (random_partition(rng, max_weight) for _ in range(3))
        start = bounds.first_valid_degree(a, b, g)
        stop = max(start, bounds.bound_n2(a, b, g)) + 3
        seq = [kronecker_coefficient(pad(g, n), pad(a, n), pad(b, n)) for n in range(start, stop + 1)]
        if any(x > y for x, y in zip(seq, seq[1:])):
            return False, f"decreases on {a}, {b}, {g}: {seq}"
    return True, f"{samples} random triples weakly increasing"


def check_semigroup(max_weight: int, samples: int = 100) -> tuple[bool, str]:
    rng = random.Random(SEED + 1)
    pool = [(a, b, g) for a, b in _support_pairs(max_weight) for g in murnaghan_expansion(a, b)
            if sum(g) <= max_weight]
    for _ in range(samples):
        (a1, b1, g1), (a2, b2, g2) = rng.choice(pool), rng.choice(pool)
        if reduced_coefficient(add(a1, a2), add(b1, b2), add(g1, g2)) <= 0:
            return False, f"sum of {(a1, b1, g1)} and {(a2, b2, g2)} left the support"
    return True, f"{samples} random sums stay in the support"


# --- bounds ----------------------------------------------------------------

def check_row_tables(max_weight: int) -> tuple[bool, str]:
    tables = {
        ((2,), (4, 3, 2)): ([6, 4, 3, 2, 1], [6, 5, 3, 2, 2]),
        ((3, 1), (2, 2)): ([6, 3, 2, 1, 1, 1], [6, 4, 2, 2, 1, 1]),
    }
    for (a, b), (maxes, bnds) in tables.items():
        supp = list(murnaghan_expansion(a, b))
        got_max = [max(g[k - 1] if len(g) >= k else 0 for g in supp) for k in range(1, len(maxes) + 1)]
        got_bnd = [bounds.row_bound(a, b, k) for k in range(1, len(bnds) + 1)]
        if got_max != maxes or got_bnd != bnds:
            return False, f"{a}, {b}: maxes {got_max} bounds {got_bnd}"
    return True, "both tables reproduced"


def check_n1_improves(max_weight: int, samples: int = 1000, random_weight: int = 10) -> tuple[bool, str]:
    shapes = list(partitions_up_to(max_weight))
    triples = [(a, b, g) for a in shapes for b in shapes for g in shapes]
    rng = random.Random(SEED + 2)
    triples += [tuple(random_partition(rng, random_weight) for _ in range(3)) for _ in range(samples)]
    for t in triples:
        n1 = bounds.bound_n1(*t)
        if n1 > bounds.bound_nb(*t) or n1 > bounds.bound_nv(*t):
            return False, f"N1 worse at {t}"
    return True, f"{len(triples)} triples"


def check_vallejo_example(max_weight: int) -> tuple[bool, str]:
    t = ((3, 2), (2, 2, 1), (2, 2))
    got = (stab_triple_empirical(*t), bounds.bound_n1(*t), bounds.bound_n2(*t),
           bounds.bound_nb(*t), bounds.bound_nv(*t))
    return got == (10, 11, 10, 11, 11), f"(stab, N1, N2, NB, NV) = {got}"


def check_comparison_examples(max_weight: int) -> tuple[bool, str]:
    t1, t2, t3 = ((2, 1), (3, 1), (3, 1)), ((2, 1), (3, 1), (3, 2, 2)), ((3, 2), (3, 1, 1), (6,))
    got = [bounds.bound_nb(*t1), bounds.bound_n2(*t1),
           bounds.bound_nb(*t2), bounds.bound_n2(*t2), bounds.bound_nv(*t2),
           bounds.bound_nv(*t3), bounds.bound_n2(*t3)]
    return got == [10, 9, 10, 11, 12, 13, 14], repr(got)


def check_hooks(max_weight: int) -> tuple[bool, str]:
    top = max(1, max_weight + 1)
    for d in range(1, top + 1):
        for e in range(1, top + 1):
            for f in range(1, top + 1):
                a, b, g = (1,) * e, (1,) * f, (1,) * d
                value = reduced_coefficient(a, b, g)
                if value != int(e <= d + f and d <= e + f and f <= e + d):
                    return False, f"gbar wrong for d,e,f={d},{e},{f}"
                if value and stab_triple_empirical(a, b, g) != (d + e + f + 3) // 2:
                    return False, f"stab wrong for d,e,f={d},{e},{f}"
    return True, f"1 <= d,e,f <= {top}"


def check_two_row(max_weight: int) -> tuple[bool, str]:
    for x in range(1, max_weight + 1):
        for y in range(1, max_weight + 1):
            a, b = (x,), (y,)
            for g in murnaghan_expansion(a, b):
                g3 = g[2] if len(g) > 2 else 0
                g1 = g[0] if g else 0
                if stab_triple_empirical(a, b, g) != g1 - g3 + x + y:
                    return False, f"wrong at {a}, {b}, {g}"
    return True, f"one-row alpha, beta up to {max_weight}"


def check_stab_product_definition(max_weight: int) -> tuple[bool, str]:
    for a, b in _support_pairs(max_weight):
        if stab_product_by_definition(a, b) != bounds.stab_product(a, b):
            return False, f"V-shift definition disagrees at {a}, {b}"
    return True, "V-shift definition matches the closed form"


Check = Callable[[int], tuple[bool, str]]

SUITES: dict[str, list[tuple[str, Check]]] = {
    "intro": [
        ("Kronecker squares of s_(k,2), k=2..7", check_intro_products),
        ("reduced values gbar_(2),(2)", check_intro_reduced),
        ("stab((2),(2)) = 8 three ways", check_intro_stab),
        ("Jacobi-Trudi straightening examples", check_straightening),
        ("saturation fails for g_(n,n)", check_saturation),
    ],
    "theorems": [
        ("recovery of g from gbar", check_recovery),
        ("stable route equals Littlewood route", check_two_routes),
        ("support extremes attained", check_attainment),
        ("support rows within row bounds", check_row_bounds),
        ("Murnaghan-Littlewood reduction to LR", check_murnaghan_littlewood),
        ("Dvir first-row maximum", check_dvir),
        ("gbar symmetric in its indices", check_symmetry),
        ("Brion monotonicity", check_brion),
        ("semigroup property", check_semigroup),
        ("stab(alpha,beta) from the V-shift definition", check_stab_product_definition),
    ],
    "bounds": [
        ("row bound tables", check_row_tables),
        ("N1 improves NB and NV", check_n1_improves),
        ("Vallejo example", check_vallejo_example),
        ("N2 vs NB/NV comparison examples", check_comparison_examples),
        ("three hooks: indicator and stab = N2", check_hooks),
        ("two one-row partitions: stab formula", check_two_row),
    ],
}


def run_suite(name: str, max_weight: int = 4) -> list[CheckResult]:
    names = list(SUITES) if name == "all" else [name]
    results = []
    for suite in names:
        for label, check in SUITES[suite]:
            try:
                passed, detail = check(max_weight)
            except Exception as exc:  # a crash is a failed check, not a crashed run
                passed, detail = False, f"{type(exc).__name__}: {exc}"
            results.append(CheckResult(suite, label, passed, detail))
    return results
