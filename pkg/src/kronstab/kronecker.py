"""Kronecker coefficients and Kronecker products of Schur functions."""

from __future__ import annotations

from math import factorial

from .characters import CharacterCache, class_sizes, default_cache
from .partitions import Partition, intersect, partitions_of
from .schur import SchurExpansion


class InvariantViolation(ArithmeticError):
    """An internal identity that must hold exactly did not."""


def _divide(total: int, n: int) -> int:
    q, r = divmod(total, factorial(n))
    if r:
        raise InvariantViolation(f"character sum {total} not divisible by {n}!")
    return q


def kronecker_coefficient(lam: Partition, mu: Partition, nu: Partition,
                          cache: CharacterCache | None = None) -> int:
    """``g^lam_{mu,nu}`` by character orthogonality, exact.

    Returns 0 when the three weights differ.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        return 0
    cache = cache or default_cache
    a, b, c = cache.row(lam), cache.row(mu), cache.row(nu)
    total = sum(w * x * y * z for w, x, y, z in zip(class_sizes(n), a, b, c))
    return _divide(total, n)


def _candidates(mu: Partition, nu: Partition, n: int) -> list[Partition]:
    # lam_1 <= |mu ∩ nu| (Dvir) and |tail(lam)| <= |tail(mu)| + |tail(nu)|
    top = sum(intersect(mu, nu))
    deepest = min(n, sum(mu[1:]) + sum(nu[1:]))
    out = []
    for w in range(max(0, n - top), deepest + 1):
        first = n - w
        for t in partitions_of(w, first):
            out.append((first,) + t if first else t)
    return out


def kronecker_product(mu: Partition, nu: Partition, prune: bool = True,
                      cache: CharacterCache | None = None) -> SchurExpansion:
    """Schur expansion of ``s_mu * s_nu``.

    With ``prune`` the candidate shapes are restricted by the first-row bound
    and the tail-weight bound; ``prune=False`` scans every partition of ``n``.
    """
    mu, nu = tuple(mu), tuple(nu)
    n = sum(mu)
    if sum(nu) != n:
        raise ValueError(f"Kronecker product needs equal weights, got {n} and {sum(nu)}")
    cache = cache or default_cache
    weights = [w * x * y for w, x, y in zip(class_sizes(n), cache.row(mu), cache.row(nu))]
    shapes = _candidates(mu, nu, n) if prune else partitions_of(n)
    terms = {}
    for lam in shapes:
        g = _divide(sum(map(int.__mul__, weights, cache.row(lam))), n)
        if g:
            terms[lam] = g
    return SchurExpansion(terms)
