"""Sparse expansions in the Schur basis and Jacobi-Trudi straightening."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

from .partitions import Partition, pad, partition, sort_key


def straighten(seq: Sequence[int]) -> tuple[int, Partition] | None:
    """Rewrite the Jacobi-Trudi determinant ``s_seq`` as ``sign * s_lam``.

    Returns ``None`` when the determinant vanishes. The columns of the
    determinant are indexed by ``seq_j + m - j + 1``; the determinant is zero
    if two columns coincide or one index drops to zero or below, and otherwise
    sorting the indices is a column permutation.
    """
    m = len(seq)
    v = [x + m - j for j, x in enumerate(seq)]
    if any(x <= 0 for x in v) or len(set(v)) != m:
        return None
    inversions = sum(1 for a in range(m) for b in range(a + 1, m) if v[a] < v[b])
    v.sort(reverse=True)
    lam = tuple(x - (m - j) for j, x in enumerate(v))
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return (-1 if inversions % 2 else 1), lam


class SchurExpansion:
    """Integer combination of Schur functions, zero coefficients never stored.

    Degrees may be mixed. Iteration follows :func:`~kronstab.partitions.sort_key`.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Partition, int] | Iterable[tuple[Partition, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, int] = {}
        for lam, c in items:
            lam = partition(lam)
            acc[lam] = acc.get(lam, 0) + int(c)
        self._terms = {lam: c for lam, c in acc.items() if c}

    @classmethod
    def schur(cls, lam: Sequence[int], coeff: int = 1) -> SchurExpansion:
        return cls({tuple(lam): coeff})

    @classmethod
    def zero(cls) -> SchurExpansion:
        return cls()

    @classmethod
    def _trusted(cls, terms: dict[Partition, int]) -> SchurExpansion:
        out = cls.__new__(cls)
        out._terms = {lam: c for lam, c in terms.items() if c}
        return out

    def coefficient(self, lam: Sequence[int]) -> int:
        return self._terms.get(tuple(lam), 0)

    def items(self) -> list[tuple[Partition, int]]:
        return sorted(self._terms.items(), key=lambda kv: sort_key(kv[0]))

    def support(self) -> list[Partition]:
        return [lam for lam, _ in self.items()]

    def as_dict(self) -> dict[Partition, int]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.support())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, lam) -> bool:
        return tuple(lam) in self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, SchurExpansion):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self == SchurExpansion(other)
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: SchurExpansion) -> SchurExpansion:
        acc = dict(self._terms)
        for lam, c in other._terms.items():
            acc[lam] = acc.get(lam, 0) + c
        return SchurExpansion._trusted(acc)

    def __neg__(self) -> SchurExpansion:
        return SchurExpansion._trusted({lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other: SchurExpansion) -> SchurExpansion:
        return self + (-other)

    def scale(self, k: int) -> SchurExpansion:
        return SchurExpansion._trusted({lam: k * c for lam, c in self._terms.items()})

    def __mul__(self, k: int) -> SchurExpansion:
        if not isinstance(k, int):
            return NotImplemented
        return self.scale(k)

    __rmul__ = __mul__

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self._terms}

    def to_json(self) -> list[dict]:
        return [{"partition": list(lam), "coeff": c} for lam, c in self.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> SchurExpansion:
        return cls((tuple(d["partition"]), d["coeff"]) for d in data)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for lam, c in self.items():
            name = "s_{" + ",".join(map(str, lam)) + "}"
            mag = abs(c)
            body = name if mag == 1 else f"{mag}{name}"
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"SchurExpansion({dict(self.items())!r})"


def shift_v(f: SchurExpansion) -> SchurExpansion:
    """The operator sending ``s_lam`` to ``s_{lam + (1)}``."""
    out = {}
    for lam, c in f.as_dict().items():
        grown = (lam[0] + 1,) + lam[1:] if lam else (1,)
        out[grown] = c
    return SchurExpansion._trusted(out)


def lift_u(f: SchurExpansion, n: int) -> SchurExpansion:
    """The operator sending ``s_lam`` to the Jacobi-Trudi determinant ``s_{lam[n]}``."""
    acc: dict[Partition, int] = {}
    for lam, c in f.as_dict().items():
        st = straighten(pad(lam, n))
        if st is None:
            continue
        sign, mu = st
        acc[mu] = acc.get(mu, 0) + sign * c
    return SchurExpansion._trusted(acc)
