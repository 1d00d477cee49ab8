"""Reduced Kronecker coefficients, the stable expansion, and recovery of ``g`` from ``gbar``.

Two independent routes compute ``gbar^gamma_{alpha,beta}``:

* ``stable``: evaluate the Kronecker coefficient ``g^{gamma[N]}_{alpha[N],beta[N]}``
  at a degree ``N`` past the stabilization point;
* ``littlewood``: the cancellation-free sum
  ``sum g^zeta_{delta,eps} c^alpha_{delta,sigma,tau} c^beta_{eps,rho,tau} c^gamma_{zeta,rho,sigma}``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import cache

from .bounds import bound_n2, first_valid_degree, stab_product
from .kronecker import kronecker_coefficient, kronecker_product
from .lr import lr_triple, skew_expansion
from .partitions import (
    Partition,
    contains,
    dagger,
    intersect,
    murnaghan_inequalities,
    pad,
    partitions_of,
    tail,
)

_stable_cache: dict[tuple[Partition, ...], int] = {}
_lock = threading.Lock()


def evaluation_degree(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """Degree used by the stable route: ``N2``, raised until all three pads are partitions."""
    return max(bound_n2(alpha, beta, gamma), first_valid_degree(alpha, beta, gamma))


def _stable(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    # gbar is symmetric in its three indices
    key = tuple(sorted((alpha, beta, gamma)))
    hit = _stable_cache.get(key)
    if hit is not None:
        return hit
    n = evaluation_degree(alpha, beta, gamma)
    value = kronecker_coefficient(pad(gamma, n), pad(alpha, n), pad(beta, n))
    with _lock:
        _stable_cache[key] = value
    return value


@cache
def _subpartitions(lam: Partition) -> tuple[Partition, ...]:
    """All partitions whose diagram fits inside ``lam``."""
    if not lam:
        return ((),)
    out = []
    for first in range(lam[0], -1, -1):
        if first == 0:
            out.append(())
            continue
        rest = lam[1:]
        capped = tuple(min(x, first) for x in rest)
        capped = tuple(x for x in capped if x)
        for sub in _subpartitions(capped):
            out.append((first,) + sub)
    return tuple(out)


@cache
def _triple_splits(outer: Partition, tau: Partition, d: int) -> tuple[tuple[Partition, Partition, int], ...]:
    """``(delta, sigma, c^outer_{delta,sigma,tau})`` with ``|delta| = d``, nonzero only."""
    acc: dict[tuple[Partition, Partition], int] = {}
    for kappa, a in skew_expansion(outer, tau).items():
        if sum(kappa) < d:
            continue
        for delta in partitions_of(d):
            if not contains(kappa, delta):
                continue
            for sigma, b in skew_expansion(kappa, delta).items():
                acc[(delta, sigma)] = acc.get((delta, sigma), 0) + a * b
    return tuple((dl, sg, c) for (dl, sg), c in acc.items() if c)


@cache
def _littlewood(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    wa, wb, wc = sum(alpha), sum(beta), sum(gamma)
    total = 0
    for tau in _subpartitions(intersect(alpha, beta)):
        wt = sum(tau)
        d = wa + wb - 2 * wt - wc
        if d < 0 or wa - wt - d < 0 or wb - wt - d < 0:
            continue
        left = _triple_splits(alpha, tau, d)
        if not left:
            continue
        right = _triple_splits(beta, tau, d)
        for delta, sigma, a in left:
            for eps, rho, b in right:
                for zeta, g in kronecker_product(delta, eps).items():
                    c = lr_triple(zeta, rho, sigma, gamma)
                    if c:
                        total += g * a * b * c
    return total


def reduced_coefficient(alpha: Partition, beta: Partition, gamma: Partition,
                        method: str = "stable") -> int:
    """``gbar^gamma_{alpha,beta}``; ``method`` is ``"stable"`` or ``"littlewood"``."""
    alpha, beta, gamma = tuple(alpha), tuple(beta), tuple(gamma)
    if not murnaghan_inequalities(alpha, beta, gamma):
        return 0
    if method == "stable":
        return _stable(alpha, beta, gamma)
    if method == "littlewood":
        return _littlewood(alpha, beta, gamma)
    raise ValueError(f"unknown method {method!r}; use 'stable' or 'littlewood'")


def reduced_coefficient_littlewood(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    return reduced_coefficient(alpha, beta, gamma, method="littlewood")


@dataclass(frozen=True)
class SupportTable:
    """The stable expansion ``s_alpha[n] * s_beta[n] = sum gbar^gamma s_gamma[n]``."""

    alpha: Partition
    beta: Partition
    coeffs: dict[Partition, int] = field(default_factory=dict)

    def __getitem__(self, gamma: Partition) -> int:
        return self.coeffs.get(tuple(gamma), 0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def items(self):
        return self.coeffs.items()

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "degree": stab_product(self.alpha, self.beta),
            "support": [{"partition": list(g), "coeff": c} for g, c in self.coeffs.items()],
        }


@cache
def murnaghan_expansion(alpha: Partition, beta: Partition) -> SupportTable:
    """All nonzero ``gbar^gamma_{alpha,beta}`` from one product at ``n = stab(alpha, beta)``.

    At that degree every ``gamma[n]`` in the support is a partition and the
    terms are pairwise distinct, so dropping the first row of each shape in
    the product reads off the reduced coefficients.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    n = stab_product(alpha, beta)
    product = kronecker_product(pad(alpha, n), pad(beta, n))
    return SupportTable(alpha, beta, {tail(lam): c for lam, c in product.items()})


def recover_kronecker(lam: Partition, mu: Partition, nu: Partition) -> int:
    """``g^lam_{mu,nu}`` as the alternating sum of ``gbar^{lam dagger i}_{tail(mu), tail(nu)}``.

    The sum stops once ``i`` is past the length of ``lam`` and
    ``|lam dagger i| > |tail(mu)| + |tail(nu)|``: from there the weight only
    grows and every later term violates Murnaghan's inequalities.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise ValueError("recover_kronecker needs three partitions of the same weight")
    a, b = tail(mu), tail(nu)
    reach = sum(a) + sum(b)
    total = 0
    i = 1
    while True:
        gamma = dagger(lam, i)
        if i > len(lam) and sum(gamma) > reach:
            break
        term = reduced_coefficient(a, b, gamma)
        total += term if i % 2 else -term
        i += 1
    return total


def clear_caches() -> None:
    with _lock:
        _stable_cache.clear()
    _littlewood.cache_clear()
    murnaghan_expansion.cache_clear()
