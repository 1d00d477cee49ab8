"""Littlewood-Richardson coefficients, Schur products and skewing.

Coefficients are counted by filling a skew shape in reading order (rows top
to bottom, each row right to left) with a lattice word that is weakly
increasing along rows and strictly increasing down columns.
"""

from __future__ import annotations

from collections import Counter
from functools import cache

from .partitions import Partition, contains, partitions_of
from .schur import SchurExpansion


class ContainmentError(ValueError):
    """Raised when a skew shape's inner partition does not fit in the outer."""


def _fillings(outer: Partition, inner: Partition, content: Partition | None) -> Counter:
    """Count LR fillings of ``outer/inner``, grouped by content.

    With ``content`` given, only fillings of that content are counted.
    """
    rows = len(outer)
    inner = tuple(inner) + (0,) * (rows - len(inner))
    cells = [(i, j) for i in range(rows) for j in range(outer[i] - 1, inner[i] - 1, -1)]
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * (rows + 1)
    found: Counter = Counter()
    limit = list(content) + [0] * (rows + 1 - len(content)) if content is not None else None

    def place(k: int) -> None:
        if k == len(cells):
            found[tuple(c for c in counts[1:] if c)] += 1
            return
        i, j = cells[k]
        hi = grid.get((i, j + 1), i + 1)
        lo = grid[(i - 1, j)] + 1 if (i - 1, j) in grid else 1
        for v in range(lo, min(hi, i + 1) + 1):
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            if limit is not None and (v >= len(limit) or counts[v] >= limit[v - 1]):
                continue
            counts[v] += 1
            grid[(i, j)] = v
            place(k + 1)
            del grid[(i, j)]
            counts[v] -= 1

    place(0)
    return found


@cache
def lr_coefficient(mu: Partition, nu: Partition, lam: Partition) -> int:
    """``c^lam_{mu,nu}``: the coefficient of ``s_lam`` in ``s_mu * s_nu``."""
    mu, nu, lam = tuple(mu), tuple(nu), tuple(lam)
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu) or not contains(lam, nu):
        return 0
    # fewer cells to fill when the larger factor sits inside
    if sum(nu) > sum(mu):
        mu, nu = nu, mu
    return _fillings(lam, mu, nu).get(nu, 0)


@cache
def _skew(outer: Partition, inner: Partition) -> SchurExpansion:
    return SchurExpansion(_fillings(outer, inner, None))


def skew_expansion(outer: Partition, inner: Partition) -> SchurExpansion:
    """Schur expansion of the skew Schur function ``s_{outer/inner}``."""
    outer, inner = tuple(outer), tuple(inner)
    if not contains(outer, inner):
        raise ContainmentError(f"{inner} is not contained in {outer}")
    return _skew(outer, inner)


def lr_triple(alpha: Partition, beta: Partition, gamma: Partition, delta: Partition) -> int:
    """Coefficient of ``s_delta`` in ``s_alpha s_beta s_gamma``, summed over the middle shape."""
    w = sum(alpha) + sum(beta)
    if w + sum(gamma) != sum(delta):
        return 0
    return sum(
        lr_coefficient(alpha, beta, phi) * lr_coefficient(phi, gamma, delta)
        for phi in partitions_of(w)
        if contains(delta, phi)
    )


def _schur_pair(mu: Partition, nu: Partition) -> dict[Partition, int]:
    out = {}
    for lam in partitions_of(sum(mu) + sum(nu)):
        c = lr_coefficient(mu, nu, lam)
        if c:
            out[lam] = c
    return out


def schur_product(f: SchurExpansion, g: SchurExpansion) -> SchurExpansion:
    acc: dict[Partition, int] = {}
    for mu, a in f.as_dict().items():
        for nu, b in g.as_dict().items():
            for lam, c in _schur_pair(mu, nu).items():
                acc[lam] = acc.get(lam, 0) + a * b * c
    return SchurExpansion(acc)


def perp(skewer: SchurExpansion, f: SchurExpansion) -> SchurExpansion:
    """Adjoint of multiplication by ``skewer`` under the Hall inner product.

    ``s_mu`` acting on ``s_lam`` gives ``s_{lam/mu}``, or zero if ``mu`` does
    not fit inside ``lam``.
    """
    acc = SchurExpansion()
    for mu, a in skewer.as_dict().items():
        for lam, b in f.as_dict().items():
            if contains(lam, mu):
                acc = acc + skew_expansion(lam, mu).scale(a * b)
    return acc
