"""Irreducible characters of the symmetric group and class sizes.

Characters are computed with the Murnaghan-Nakayama rule by the kernel in
:mod:`kronstab._kernels` and cached one full row (all cycle types of ``n``)
at a time, since every consumer in this package sums over the whole row.
"""

from __future__ import annotations

import threading
from collections import Counter
from functools import cache
from math import factorial, prod

from . import _kernels
from .partitions import Partition, partitions_of


class CharacterCache:
    """Memoized character rows ``chi^lam(rho)`` for ``rho`` in ``partitions_of(n)`` order.

    Safe to share between threads: row computation is serialized and
    finished rows are immutable tuples.
    """

    def __init__(self, backend: str | None = None):
        self.backend = backend
        self._kernels: dict[int, object] = {}
        self._rows: dict[Partition, tuple[int, ...]] = {}
        self._lock = threading.RLock()

    def _kernel(self, n: int, backend: str | None):
        key = (n, backend)
        kernel = self._kernels.get(key)
        if kernel is None:
            kernel = _kernels.make_kernel(n, backend)
            self._kernels[key] = kernel
        return kernel

    def row(self, lam: Partition) -> tuple[int, ...]:
        hit = self._rows.get(lam)
        if hit is not None:
            return hit
        with self._lock:
            hit = self._rows.get(lam)
            if hit is not None:
                return hit
            n = sum(lam)
            try:
                values = self._kernel(n, self.backend).row(lam)
            except OverflowError:
                if self.backend not in (None, "python"):
                    raise
                values = self._kernel(n, "python").row(lam)
            row = tuple(values)
            self._rows[lam] = row
            return row

    def character(self, lam: Partition, rho: Partition) -> int:
        if sum(lam) != sum(rho):
            raise ValueError(f"weight mismatch: |{lam}| != |{rho}|")
        return self.row(lam)[class_index(rho)]

    def __len__(self) -> int:
        return len(self._rows)

    def clear(self) -> None:
        with self._lock:
            self._rows.clear()
            self._kernels.clear()


default_cache = CharacterCache()


@cache
def _class_positions(n: int) -> dict[Partition, int]:
    return {rho: i for i, rho in enumerate(partitions_of(n))}


def class_index(rho: Partition) -> int:
    return _class_positions(sum(rho))[tuple(rho)]


def character(lam: Partition, rho: Partition) -> int:
    """``chi^lam(rho)``: the irreducible character ``lam`` on cycle type ``rho``."""
    return default_cache.character(tuple(lam), tuple(rho))


def character_row(lam: Partition) -> tuple[int, ...]:
    return default_cache.row(tuple(lam))


def z(rho: Partition) -> int:
    """Centralizer order ``prod_i i**m_i * m_i!`` of a permutation of cycle type ``rho``."""
    return prod(i**m * factorial(m) for i, m in Counter(rho).items())


@cache
def class_sizes(n: int) -> tuple[int, ...]:
    """``n!/z_rho`` for each ``rho`` in ``partitions_of(n)`` order."""
    nf = factorial(n)
    return tuple(nf // z(rho) for rho in partitions_of(n))


def sign(rho: Partition) -> int:
    return -1 if (sum(rho) - len(rho)) % 2 else 1


def dimension(lam: Partition) -> int:
    """Number of standard tableaux of shape ``lam`` (hook length formula)."""
    conj = [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(sum(lam)) // hooks
