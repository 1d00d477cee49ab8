"""Empirical stabilization indices and the bound comparison report."""

from __future__ import annotations

from dataclasses import dataclass

from . import bounds
from .kronecker import InvariantViolation, kronecker_coefficient, kronecker_product
from .partitions import Partition, pad, partition
from .reduced import murnaghan_expansion
from .schur import SchurExpansion, shift_v, straighten


def stab_product_empirical(alpha: Partition, beta: Partition) -> int:
    """Maximum of ``|gamma| + gamma_1`` over the reduced support."""
    table = murnaghan_expansion(tuple(alpha), tuple(beta))
    return max(sum(g) + (g[0] if g else 0) for g in table)


def padded_product(alpha: Partition, beta: Partition, n: int) -> SchurExpansion:
    """``s_alpha[n] * s_beta[n]`` with both factors read as Jacobi-Trudi determinants."""
    left, right = straighten(pad(alpha, n)), straighten(pad(beta, n))
    if left is None or right is None:
        return SchurExpansion()
    return kronecker_product(left[1], right[1]).scale(left[0] * right[0])


def v_shift_holds(alpha: Partition, beta: Partition, n: int, k: int) -> bool:
    """Whether ``s_alpha[n+k] * s_beta[n+k] == V^k(s_alpha[n] * s_beta[n])``."""
    shifted = padded_product(alpha, beta, n)
    for _ in range(k):
        shifted = shift_v(shifted)
    return padded_product(alpha, beta, n + k) == shifted


def stab_product_by_definition(alpha: Partition, beta: Partition, horizon: int | None = None) -> int:
    """Smallest ``n`` with ``P(n + k) == V^k P(n)`` for all ``k > 0``, where ``P(n)`` is the padded product.

    V is injective, so this is the smallest ``n`` with ``P(m + 1) == V P(m)``
    for every ``m >= n``. The scan runs down from ``horizon``, by default
    ``2(|alpha| + |beta|)``: every support element has ``|gamma| + gamma_1``
    at most that, so the one-step identity holds from there on.
    """
    if horizon is None:
        horizon = 2 * (sum(alpha) + sum(beta))
    n = horizon
    while n > 0 and v_shift_holds(alpha, beta, n - 1, 1):
        n -= 1
    return n


def stab_triple_empirical(alpha: Partition, beta: Partition, gamma: Partition,
                          reduced: int | None = None) -> int:
    """Smallest valid ``N`` with ``g^{gamma[n]}_{alpha[n],beta[n]} = gbar`` for all ``n >= N``.

    ``gbar`` defaults to the entry of the stable expansion of ``(alpha, beta)``,
    which is computed at ``stab(alpha, beta)`` and never at ``N2``. The scan
    runs upward and stops at the first match, relying on the sequence being
    weakly increasing.
    """
    alpha, beta, gamma = tuple(alpha), tuple(beta), tuple(gamma)
    if reduced is None:
        reduced = murnaghan_expansion(alpha, beta)[gamma]
    start = bounds.first_valid_degree(alpha, beta, gamma)
    # past both of these the coefficient equals its stable value
    ceiling = max(start, bounds.stab_product(alpha, beta))
    for n in range(start, ceiling + 1):
        if kronecker_coefficient(pad(gamma, n), pad(alpha, n), pad(beta, n)) == reduced:
            return n
    raise InvariantViolation(
        f"g never reached gbar={reduced} for {alpha}, {beta}, {gamma} by n={ceiling}"
    )


@dataclass(frozen=True)
class BoundReport:
    triple: tuple[Partition, Partition, Partition]
    m1_three_ways: tuple[int, int, int]
    n1: int
    n2: int
    nb: int
    nv: int
    stab_empirical: int
    reduced_value: int

    def to_json(self) -> dict:
        return {
            "triple": [list(p) for p in self.triple],
            "reduced": self.reduced_value,
            "stab": self.stab_empirical,
            "N1": self.n1,
            "N2": self.n2,
            "NB": self.nb,
            "NV": self.nv,
        }

    @classmethod
    def from_json(cls, data: dict) -> BoundReport:
        triple = tuple(partition(p) for p in data["triple"])
        return cls(
            triple=triple,
            m1_three_ways=bounds.m1_three_ways(*triple),
            n1=data["N1"],
            n2=data["N2"],
            nb=data["NB"],
            nv=data["NV"],
            stab_empirical=data["stab"],
            reduced_value=data["reduced"],
        )


def compare_bounds(alpha: Partition, beta: Partition, gamma: Partition) -> BoundReport:
    """Evaluate every bound and the empirical index for one triple.

    Raises :class:`InvariantViolation` if ``N1`` exceeds ``NB`` or ``NV``, or
    if a bound falls below the empirical index of a nonzero coefficient.
    """
    alpha, beta, gamma = tuple(alpha), tuple(beta), tuple(gamma)
    reduced = murnaghan_expansion(alpha, beta)[gamma]
    report = BoundReport(
        triple=(alpha, beta, gamma),
        m1_three_ways=bounds.m1_three_ways(alpha, beta, gamma),
        n1=bounds.bound_n1(alpha, beta, gamma),
        n2=bounds.bound_n2(alpha, beta, gamma),
        nb=bounds.bound_nb(alpha, beta, gamma),
        nv=bounds.bound_nv(alpha, beta, gamma),
        stab_empirical=stab_triple_empirical(alpha, beta, gamma, reduced),
        reduced_value=reduced,
    )
    if report.n1 > report.nb or report.n1 > report.nv:
        raise InvariantViolation(f"N1 does not improve NB/NV on {report.triple}")
    if reduced and report.stab_empirical > min(report.n1, report.n2, report.nb, report.nv):
        raise InvariantViolation(f"a bound is below the empirical index on {report.triple}")
    return report
