"""Integer partitions, dominance order, Kostka numbers and the sign-Pieri rule.

Partitions are stored without trailing zeros.  A :class:`PartitionVector` is a
finitely supported integer combination of partitions of a fixed ``n``; it is
used both for virtual symmetric-group characters and for virtual sums of
principal-series constituents.
"""
from __future__ import annotations

import json
from functools import lru_cache
from itertools import accumulate, combinations
from typing import Iterable, Iterator, Mapping


class PartitionError(ValueError):
    pass


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition((3, 1, 1)).conjugate()
    Partition(3, 1, 1)
    >>> Partition([2, 2, 0])
    Partition(2, 2)
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 1 for p in parts):
            raise PartitionError(f"parts must be positive integers: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise PartitionError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def __repr__(self):
        return "Partition(%s)" % ", ".join(map(str, self))

    def __str__(self):
        return format_partition(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self):
            for j in range(row):
                yield i, j


def conjugate(lam: Iterable[int]) -> Partition:
    """Transpose of the Young diagram."""
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        return
    if max_part is None:
        max_part = n

    def rec(rem, cap, prefix):
        if rem == 0:
            yield Partition(prefix)
            return
        for k in range(min(rem, cap), 0, -1):
            yield from rec(rem - k, k, prefix + (k,))

    yield from rec(n, max_part, ())


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of positive integers summing to ``n``."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def dominates(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """True iff ``lam`` dominates ``mu`` (prefix sums of lam are never smaller)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.n != mu.n:
        raise PartitionError(
            f"incomparable sizes: {format_partition(lam)} has size {lam.n}, "
            f"{format_partition(mu)} has size {mu.n}")
    k = max(len(lam), len(mu))
    a = accumulate(tuple(lam) + (0,) * (k - len(lam)))
    b = accumulate(tuple(mu) + (0,) * (k - len(mu)))
    return all(x >= y for x, y in zip(a, b))


def kostka_ssyt(shape: Iterable[int], content: Iterable[int]) -> int:
    """Number of semistandard tableaux of the given shape and content.

    Tableaux are enumerated cell by cell in row-reading order: each cell
    receives a value strictly larger than the cell above it and at least the
    value to its left, subject to the remaining content.
    """
    shape, content = Partition(shape), Partition(content)
    if shape.n != content.n:
        raise PartitionError(
            f"incomparable sizes: shape {format_partition(shape)} vs "
            f"content {format_partition(content)}")
    return _kostka(shape, content)


@lru_cache(maxsize=None)
def _kostka(shape: Partition, content: Partition) -> int:
    cells = list(shape.cells())
    if not cells:
        return 1
    k = len(content)
    remaining = list(content)
    filling: dict[tuple[int, int], int] = {}

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo = filling.get((i, j - 1), 0)
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, k):
            if remaining[v]:
                remaining[v] -= 1
                filling[(i, j)] = v
                total += fill(idx + 1)
                remaining[v] += 1
        filling.pop((i, j), None)
        return total

    return fill(0)


def vertical_strips(lam: Partition, l: int) -> Iterator[Partition]:
    """Partitions obtained from ``lam`` by adding ``l`` boxes, no two in one row.

    Rows are scanned top to bottom; each result corresponds to exactly one
    choice of the set of rows receiving a box, so no duplicates arise.
    """
    lam = Partition(lam)
    rows = len(lam) + l
    padded = list(lam) + [0] * l
    for chosen in combinations(range(rows), l):
        new = padded[:]
        for r in chosen:
            new[r] += 1
        if all(new[r] >= new[r + 1] for r in range(rows - 1)):
            yield Partition(new)


class PartitionVector(Mapping):
    """Integer combination of partitions of ``n`` with zero entries dropped."""

    __slots__ = ("n", "_entries")

    def __init__(self, n: int, entries: Mapping | Iterable = ()):
        self.n = int(n)
        acc: dict[Partition, int] = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for key, coeff in items:
            key = Partition(key)
            if key.n != self.n:
                raise PartitionError(
                    f"{format_partition(key)} is not a partition of {self.n}")
            acc[key] = acc.get(key, 0) + int(coeff)
        self._entries = {k: v for k, v in acc.items() if v}

    def __getitem__(self, key):
        return self._entries.get(Partition(key), 0)

    def __contains__(self, key):
        return Partition(key) in self._entries

    def __iter__(self):
        return iter(sorted(self._entries, reverse=True))

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, PartitionVector):
            return self.n == other.n and self._entries == other._entries
        if isinstance(other, Mapping):
            return self == PartitionVector(self.n, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._entries.items())))

    def __add__(self, other: "PartitionVector") -> "PartitionVector":
        if self.n != other.n:
            raise PartitionError("cannot add vectors of different sizes")
        out = dict(self._entries)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return PartitionVector(self.n, out)

    def __sub__(self, other: "PartitionVector") -> "PartitionVector":
        return self + other.scale(-1)

    def scale(self, c: int) -> "PartitionVector":
        return PartitionVector(self.n, {k: c * v for k, v in self.items()})

    def __repr__(self):
        inner = ", ".join(f"{format_partition(k)}: {v}" for k, v in self.items())
        return f"PartitionVector(n={self.n}, {{{inner}}})"

    def support(self) -> list[Partition]:
        return list(self)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "entries": [{"partition": list(k), "coeff": v} for k, v in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> "PartitionVector":
        return cls(data["n"], [(e["partition"], e["coeff"]) for e in data["entries"]])

    @classmethod
    def from_json(cls, text: str) -> "PartitionVector":
        return cls.from_dict(json.loads(text))


def pieri_sign_step(acc: PartitionVector, l: int) -> PartitionVector:
    """Tensor with a sign representation of S_l and induce (vertical-strip Pieri)."""
    if l < 1:
        raise PartitionError(f"strip size must be positive, got {l}")
    out: dict[Partition, int] = {}
    for lam, c in acc.items():
        for nu in vertical_strips(lam, l):
            out[nu] = out.get(nu, 0) + c
    return PartitionVector(acc.n + l, out)


def pieri_fold(lengths: Iterable[int]) -> PartitionVector:
    acc = PartitionVector(0, {Partition(): 1})
    for l in lengths:
        acc = pieri_sign_step(acc, l)
    return acc


def kostka_formula_vector(lengths: Iterable[int]) -> PartitionVector:
    """tau -> K(tau', lam') with lam the conjugate of the sorted lengths."""
    content = Partition(sorted(lengths, reverse=True))
    n = content.n
    return PartitionVector(
        n, {tau: kostka_ssyt(conjugate(tau), content) for tau in partitions(n)})


def sign_induction_multiplicities(lengths: Iterable[int]) -> PartitionVector:
    """Decomposition of the sign character induced from a Young subgroup.

    Computed twice, by iterated Pieri and by tableau counting; the two must
    agree or an ``AssertionError`` is raised.
    """
    lengths = tuple(int(l) for l in lengths)
    if not lengths or any(l < 1 for l in lengths):
        raise PartitionError(f"lengths must be a nonempty tuple of positive integers: {lengths}")
    via_pieri = pieri_fold(lengths)
    via_kostka = kostka_formula_vector(lengths)
    if via_pieri != via_kostka:
        raise AssertionError(
            f"Pieri and Kostka disagree for lengths {lengths}: {via_pieri!r} vs {via_kostka!r}")
    return via_pieri


def format_partition(lam: Iterable[int]) -> str:
    lam = tuple(lam)
    return ",".join(map(str, lam)) if lam else "-"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("-", ""):
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise PartitionError(f"malformed partition literal: {text!r}") from None
    return Partition(parts)
