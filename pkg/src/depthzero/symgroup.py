"""Character theory of the symmetric group, used as an independent oracle.

Characters are stored as :class:`ClassFunction` values indexed by cycle type.
Irreducible characters come from the Murnaghan-Nakayama rule (rim hooks are
removed on the beta-set, so no diagram geometry is needed); induced characters
from Young subgroups are computed from the induced-character formula over
class data of the subgroup, never through Pieri or Kostka.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, PartitionVector, partitions


class NotAVirtualCharacter(ValueError):
    pass


def centralizer_order(mu: Iterable[int]) -> int:
    """z_mu = prod_i i^{m_i} m_i! for a cycle type with m_i cycles of length i."""
    counts = Counter(mu)
    return prod(i ** m * factorial(m) for i, m in counts.items())


def class_size(mu: Iterable[int]) -> int:
    mu = Partition(mu)
    return factorial(mu.n) // centralizer_order(mu)


class ClassFunction(Mapping):
    """Integer-valued class function on S_n keyed by cycle type."""

    __slots__ = ("n", "_values")

    def __init__(self, n: int, values: Mapping):
        self.n = n
        self._values = {Partition(k): v for k, v in values.items()}
        missing = [mu for mu in partitions(n) if mu not in self._values]
        if missing:
            raise ValueError(f"class function on S_{n} lacks values at {missing}")

    def __getitem__(self, mu):
        return self._values[Partition(mu)]

    def __iter__(self):
        return iter(partitions(self.n))

    def __len__(self):
        return len(self._values)

    def __eq__(self, other):
        if isinstance(other, ClassFunction):
            return self.n == other.n and self._values == other._values
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._values.items())))

    def __add__(self, other):
        return ClassFunction(self.n, {mu: self[mu] + other[mu] for mu in self})

    def scale(self, c):
        return ClassFunction(self.n, {mu: c * self[mu] for mu in self})

    def __repr__(self):
        return f"ClassFunction(n={self.n}, {dict(self._values)})"


@lru_cache(maxsize=None)
def _mn(beta: frozenset, mu: tuple) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in beta:
            continue
        # height of the rim hook = number of beads jumped over
        height = sum(1 for c in beta if t < c < b)
        total += (-1) ** height * _mn(beta - {b} | {t}, rest)
    return total


def character_value(lam: Iterable[int], mu: Iterable[int]) -> int:
    """chi^lam at an element of cycle type mu (Murnaghan-Nakayama)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.n != mu.n:
        raise ValueError(f"shape of size {lam.n} vs cycle type of size {mu.n}")
    k = len(lam)
    beta = frozenset(lam[i] + (k - 1 - i) for i in range(k))
    return _mn(beta, tuple(mu))


def irreducible_character(lam: Iterable[int]) -> ClassFunction:
    lam = Partition(lam)
    return ClassFunction(lam.n, {mu: character_value(lam, mu) for mu in partitions(lam.n)})


def character_table(n: int) -> dict[Partition, ClassFunction]:
    return {lam: irreducible_character(lam) for lam in partitions(n)}


@lru_cache(maxsize=None)
def standard_tableaux_count(lam: Partition) -> int:
    """Number of standard tableaux, by removing a corner in every possible way."""
    lam = Partition(lam)
    if not lam:
        return 1
    total = 0
    for i in range(len(lam)):
        if i == len(lam) - 1 or lam[i] > lam[i + 1]:
            smaller = list(lam)
            smaller[i] -= 1
            total += standard_tableaux_count(Partition(smaller))
    return total


def hook_length_dimension(lam: Iterable[int]) -> int:
    lam = Partition(lam)
    conj = lam.conjugate()
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i, j in lam.cells())
    return factorial(lam.n) // hooks


def _factor_value(kind: str, mu: Partition) -> int:
    if kind == "trivial":
        return 1
    if kind == "sign":
        return (-1) ** (mu.n - len(mu))
    raise ValueError(f"unknown factor {kind!r}; expected 'trivial' or 'sign'")


def induce_from_young(lengths: Sequence[int], factors: Sequence[str]) -> ClassFunction:
    """Character of Ind_{S_l1 x ... x S_lr}^{S_n} of a product of trivial/sign factors.

    Uses Ind(chi)(g) = z_mu * sum over subgroup classes (mu^1, ..., mu^r) whose
    union is mu of prod chi_i(mu^i) / z_{mu^i}, where mu is the cycle type of g.
    """
    lengths = tuple(lengths)
    factors = tuple(factors)
    if not lengths:
        raise ValueError("lengths must be nonempty")
    if len(factors) != len(lengths):
        raise ValueError("need one factor per block")
    n = sum(lengths)
    acc: dict[Partition, Fraction] = {mu: Fraction(0) for mu in partitions(n)}
    for blocks in product(*(tuple(partitions(l)) for l in lengths)):
        mu = Partition(sorted((p for b in blocks for p in b), reverse=True))
        val = prod(_factor_value(f, b) for f, b in zip(factors, blocks))
        acc[mu] += Fraction(val, prod(centralizer_order(b) for b in blocks))
    values = {}
    for mu, v in acc.items():
        v *= centralizer_order(mu)
        assert v.denominator == 1
        values[mu] = int(v)
    return ClassFunction(n, values)


def inner_product(chi: Mapping, psi: Mapping, n: int) -> Fraction:
    return sum((Fraction(chi[mu] * psi[mu], centralizer_order(mu)) for mu in partitions(n)),
               Fraction(0))


def decompose(chi: ClassFunction) -> PartitionVector:
    """Multiplicities of the irreducibles in a virtual character."""
    n = chi.n
    coeffs = {}
    for lam in partitions(n):
        c = inner_product(chi, irreducible_character(lam), n)
        if c.denominator != 1:
            raise NotAVirtualCharacter(f"not a virtual character: <chi, chi^{tuple(lam)}> = {c}")
        coeffs[lam] = int(c)
    result = PartitionVector(n, coeffs)
    rebuilt = {mu: sum(c * character_value(lam, mu) for lam, c in result.items())
               for mu in partitions(n)}
    if any(rebuilt[mu] != chi[mu] for mu in partitions(n)):
        raise NotAVirtualCharacter("not a virtual character: reconstruction failed")
    return result


def regular_character(n: int) -> ClassFunction:
    return ClassFunction(n, {mu: (factorial(n) if mu == Partition((1,) * n) else 0)
                             for mu in partitions(n)})


def table_as_json(n: int) -> dict:
    classes = list(partitions(n))
    return {
        "n": n,
        "classes": [list(mu) for mu in classes],
        "class_sizes": [class_size(mu) for mu in classes],
        "characters": [
            {"partition": list(lam), "values": [character_value(lam, mu) for mu in classes]}
            for lam in classes
        ],
    }
