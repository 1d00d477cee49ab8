"""Pure-Python Murnaghan-Nakayama kernel.

Shapes are encoded as beta-sets packed into an integer bitmask: a partition
with ``l`` rows has beads at ``lam_i + l - i``. Removing a border strip of
length ``r`` moves one bead from ``b`` to ``b - r``; the sign is the parity
of the beads jumped over. Masks are canonicalised by dropping beads packed
at the bottom (``mask >> trailing_ones``), so every partition has exactly one
mask and the memo is shared across all shapes and all cycle types.
"""

from __future__ import annotations

from ..partitions import Partition, partitions_of

BACKEND = "python"


def beta_mask(lam: Partition) -> int:
    ell = len(lam)
    mask = 0
    for i, x in enumerate(lam):
        mask |= 1 << (x + ell - 1 - i)
    return mask


def canonical(mask: int) -> int:
    # strip the packed run of beads at the bottom
    return mask >> ((~mask & (mask + 1)).bit_length() - 1)


class CharacterKernel:
    """Character values of ``S_n`` for cycle types in ``partitions_of(n)`` order."""

    def __init__(self, n: int):
        self.n = n
        self.rhos = partitions_of(n)
        self._index = {rho: i for i, rho in enumerate(self.rhos)}
        self._memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def _chi(self, mask: int, rho: tuple[int, ...]) -> int:
        if not rho:
            return 1
        key = (mask, rho)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        r = rho[0]
        rest = rho[1:]
        total = 0
        m = mask
        while m:
            low = m & -m
            b = low.bit_length() - 1
            m ^= low
            if b < r or (mask >> (b - r)) & 1:
                continue
            jumped = ((mask >> (b - r + 1)) & ((1 << (r - 1)) - 1)).bit_count()
            child = canonical(mask ^ (1 << b) ^ (1 << (b - r)))
            val = self._chi(child, rest)
            total += -val if jumped & 1 else val
        self._memo[key] = total
        return total

    def value(self, lam: Partition, rho: Partition) -> int:
        return self._chi(canonical(beta_mask(lam)), tuple(rho))

    def row(self, lam: Partition) -> list[int]:
        mask = canonical(beta_mask(lam))
        return [self._chi(mask, rho) for rho in self.rhos]

    def memo_size(self) -> int:
        return len(self._memo)
