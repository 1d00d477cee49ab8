"""Closed-form stability indices and bounds on reduced Kronecker supports.

Every function here is a formula in the parts and weights of its arguments.
The ``n1``/``nb``/``nv`` bounds minimise a one-sided bound ``M(a, b; c)``
over the three ways of choosing which partition plays the role of ``c``.
"""

from __future__ import annotations

from .partitions import Partition, erase_part, intersect, part, tail


def _w(lam: Partition) -> int:
    return sum(lam)


def _first(lam: Partition) -> int:
    return lam[0] if lam else 0


def stab_product(alpha: Partition, beta: Partition) -> int:
    """Degree from which ``s_alpha[n] * s_beta[n]`` only moves by the V-shift."""
    return _w(alpha) + _w(beta) + _first(alpha) + _first(beta)


def max_gamma1(alpha: Partition, beta: Partition) -> int:
    return _w(intersect(alpha, beta)) + max(_first(alpha), _first(beta))


def part_bound(alpha: Partition, beta: Partition, i: int, j: int) -> int:
    """Upper bound on ``gamma_{i+j-1}`` over the reduced support of ``(alpha, beta)``."""
    return _w(intersect(erase_part(alpha, i), erase_part(beta, j))) + part(alpha, i) + part(beta, j)


def row_bound(alpha: Partition, beta: Partition, k: int) -> int:
    """Best available bound on ``gamma_k``: all splittings ``i + j - 1 = k``, and the weight."""
    if k < 1:
        raise ValueError("row index must be positive")
    best = min(part_bound(alpha, beta, i, k + 1 - i) for i in range(1, k + 1))
    return min(best, (_w(alpha) + _w(beta)) // k)


def weight_range(alpha: Partition, beta: Partition) -> tuple[int, int]:
    lo = max(_w(alpha), _w(beta)) - _w(intersect(alpha, beta))
    return lo, _w(alpha) + _w(beta)


def m1(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    return _w(gamma) + _w(intersect(tail(alpha), tail(beta))) + _first(alpha) + _first(beta)


def m_brion(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    return _w(alpha) + _w(beta) + _first(gamma)


def m_vallejo(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    # the equal case is syntactic equality of the two partitions
    if tuple(alpha) == tuple(beta):
        inner = max(_w(alpha) + _first(alpha), _w(gamma))
    else:
        inner = max(_w(alpha) + _first(alpha) - 1, _w(beta) + _first(beta) - 1, _w(gamma))
    return _w(gamma) + inner


def rotations(alpha: Partition, beta: Partition, gamma: Partition):
    """The triples ``(a, b; c)`` with ``c`` running over gamma, beta, alpha."""
    return ((alpha, beta, gamma), (alpha, gamma, beta), (beta, gamma, alpha))


def m1_three_ways(alpha: Partition, beta: Partition, gamma: Partition) -> tuple[int, int, int]:
    return tuple(m1(*t) for t in rotations(alpha, beta, gamma))


def bound_n1(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    return min(m1_three_ways(alpha, beta, gamma))


def bound_n2(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    total = _w(alpha) + _w(beta) + _w(gamma) + _first(alpha) + _first(beta) + _first(gamma)
    return total // 2


def bound_nb(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    return min(m_brion(*t) for t in rotations(alpha, beta, gamma))


def bound_nv(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    return min(m_vallejo(*t) for t in rotations(alpha, beta, gamma))


def first_valid_degree(*shapes: Partition) -> int:
    """Smallest ``n`` at which every ``shape[n]`` is a partition."""
    return max((_w(s) + _first(s) for s in shapes), default=0)
