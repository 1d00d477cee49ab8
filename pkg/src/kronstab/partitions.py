"""Integer partitions and the index operators used throughout the package.

Partitions are plain tuples of positive integers in weakly decreasing order,
with no trailing zeros; ``()`` is the empty partition. Every operator treats
a partition as an infinite sequence padded with zeros, so ``part(lam, i)``
is 0 past the length.
"""

from __future__ import annotations

import os
from functools import cache
from itertools import zip_longest
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]

DEFAULT_MAX_WEIGHT = 64


class PartitionError(ValueError):
    """Raised for malformed partition input."""


def max_weight() -> int:
    """Safety cap on partition weights, overridable with ``KRON_MAX_WEIGHT``."""
    raw = os.environ.get("KRON_MAX_WEIGHT")
    if raw is None:
        return DEFAULT_MAX_WEIGHT
    try:
        cap = int(raw)
    except ValueError:
        raise PartitionError(f"KRON_MAX_WEIGHT must be an integer, got {raw!r}") from None
    if cap < 0:
        raise PartitionError("KRON_MAX_WEIGHT must be nonnegative")
    return cap


def is_partition(seq: Sequence[int]) -> bool:
    """True if ``seq`` (trailing zeros allowed) is weakly decreasing and nonnegative."""
    prev = None
    for x in seq:
        if x < 0 or (prev is not None and x > prev):
            return False
        prev = x
    return True


def partition(seq: Iterable[int]) -> Partition:
    """Validate ``seq`` and return it in canonical form (trailing zeros dropped)."""
    parts = tuple(int(x) for x in seq)
    if not is_partition(parts):
        raise PartitionError(f"not a partition: {parts}")
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def _strip(parts: Iterable[int]) -> Partition:
    parts = tuple(parts)
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def part(lam: Sequence[int], i: int) -> int:
    """The ``i``-th part, 1-indexed; zero beyond the length."""
    if i < 1:
        raise IndexError("parts are indexed from 1")
    return lam[i - 1] if i <= len(lam) else 0


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    """True if the diagram of ``inner`` sits inside the diagram of ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def intersect(a: Partition, b: Partition) -> Partition:
    return _strip(min(x, y) for x, y in zip(a, b))


def add(a: Partition, b: Partition) -> Partition:
    return tuple(x + y for x, y in zip_longest(a, b, fillvalue=0))


def pad(lam: Partition, n: int) -> tuple[int, ...]:
    """The sequence ``(n - |lam|, lam_1, lam_2, ...)``.

    The result need not be a partition; it is one exactly when
    ``n >= |lam| + lam_1``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return (n - sum(lam),) + tuple(lam)


def tail(lam: Partition) -> Partition:
    return tuple(lam[1:])


def dagger(lam: Partition, i: int) -> Partition:
    """Add 1 to the first ``i - 1`` terms of ``lam`` and erase the ``i``-th.

    ``lam`` is read as an infinite zero-padded sequence, so ``i`` may exceed
    the length; the result is always a partition.
    """
    if i < 1:
        raise ValueError("dagger index must be positive")
    padded = list(lam) + [0] * max(0, i - len(lam))
    head = [x + 1 for x in padded[: i - 1]]
    return _strip(head + padded[i:])


def erase_part(lam: Partition, k: int) -> Partition:
    """Remove the ``k``-th part; no-op when ``lam`` has fewer than ``k`` parts."""
    if k < 1:
        raise ValueError("part index must be positive")
    if k > len(lam):
        return lam
    return lam[: k - 1] + lam[k:]


def murnaghan_inequalities(a: Partition, b: Partition, c: Partition) -> bool:
    wa, wb, wc = sum(a), sum(b), sum(c)
    return wa <= wb + wc and wb <= wa + wc and wc <= wa + wb


def sort_key(lam: Partition) -> tuple:
    """Output order: by weight, then reverse-lexicographic within a weight."""
    return (sum(lam), tuple(-x for x in lam))


@cache
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` with parts at most ``max_part``, reverse-lex order."""
    if n < 0:
        return ()
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(max_n: int) -> Iterator[Partition]:
    for n in range(max_n + 1):
        yield from partitions_of(n)


def parse(text: str) -> Partition:
    """Parse ``"4,3,2"``, ``"[4,3,2]"``, ``"4"`` or ``"[]"``.

    Weights above :func:`max_weight` are rejected.
    """
    s = text.strip()
    if s.startswith("[") or s.endswith("]"):
        if not (s.startswith("[") and s.endswith("]")):
            raise PartitionError(f"unbalanced brackets in {text!r}")
        s = s[1:-1].strip()
    if not s:
        return ()
    try:
        parts = [int(tok) for tok in s.split(",")]
    except ValueError:
        raise PartitionError(f"cannot parse partition {text!r}") from None
    if any(p <= 0 for p in parts):
        raise PartitionError(f"parts must be positive integers: {text!r}")
    lam = partition(parts)
    cap = max_weight()
    if sum(lam) > cap:
        raise PartitionError(f"weight {sum(lam)} exceeds the cap {cap} (set KRON_MAX_WEIGHT)")
    return lam


def fmt(lam: Partition) -> str:
    """Inverse of :func:`parse`: ``"4,3,2"``, or ``"[]"`` for the empty partition."""
    return ",".join(map(str, lam)) if lam else "[]"
