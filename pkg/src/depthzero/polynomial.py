"""Polynomials in q with integer coefficients."""
from __future__ import annotations

from typing import Iterable, Mapping


class IntPolynomial:
    """Immutable polynomial in ``q`` over the integers.

    >>> q = IntPolynomial.q()
    >>> (q - 1) * (q + 1)
    IntPolynomial('-1 + 1*q^2')
    >>> str(1 + q)
    '1 + 1*q'
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[int] | int = ()):
        if isinstance(coeffs, int):
            items = {0: coeffs}.items()
        elif isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        clean = {}
        for e, c in items:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            c = int(c)
            if c:
                clean[int(e)] = clean.get(int(e), 0) + c
        self._coeffs = {e: c for e, c in sorted(clean.items()) if c}
        self._hash = None

    @classmethod
    def q(cls) -> "IntPolynomial":
        return cls({1: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "IntPolynomial":
        return cls({exponent: coeff})

    @staticmethod
    def _lift(other):
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial(other)
        return NotImplemented

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def coefficient_list(self) -> list[int]:
        if not self._coeffs:
            return []
        return [self._coeffs.get(e, 0) for e in range(self.degree + 1)]

    @property
    def degree(self) -> int:
        return max(self._coeffs) if self._coeffs else -1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __call__(self, value):
        return sum(c * value ** e for e, c in self._coeffs.items())

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by q^k."""
        return IntPolynomial({e + k: c for e, c in self._coeffs.items()})

    def __repr__(self):
        return f"IntPolynomial('{self}')"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for e, c in self._coeffs.items():
            if e == 0:
                body = str(abs(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = f"{abs(c)}*{mono}"
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms)


ZERO = IntPolynomial()
ONE = IntPolynomial(1)
Q = IntPolynomial.q()
