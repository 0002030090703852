"""Type A Coxeter combinatorics and the Iwahori-Hecke algebra with one parameter q.

Permutations are in one-line notation with values ``1..n``.  Products are
composition of functions, ``(x*y)(i) = x(y(i))``; hence ``x * s_i`` swaps the
positions ``i, i+1`` of ``x`` while ``s_i * x`` swaps the values ``i, i+1``.

The generators satisfy ``(T_s - q)(T_s + 1) = 0`` and the braid relations; an
induced module ``H (x)_{H_J} V`` for a one-dimensional ``V`` has basis
``{T_x (x) v : x in Y_J}`` and the generators act by the three-case rule coming
from Deodhar's lemma.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, PartitionVector, partitions
from .polynomial import ONE, Q, ZERO, IntPolynomial
from . import symgroup


class HeckeError(ValueError):
    pass


class WeylElement(tuple):
    """A permutation of ``{1..n}`` in one-line notation."""

    __slots__ = ()

    def __new__(cls, perm: Iterable[int]):
        perm = tuple(int(p) for p in perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise HeckeError(f"not a permutation of 1..{len(perm)}: {perm}")
        return super().__new__(cls, perm)

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        return cls(range(1, n + 1))

    @classmethod
    def simple(cls, n: int, i: int) -> "WeylElement":
        if not 1 <= i < n:
            raise HeckeError(f"simple index {i} out of range for n={n}")
        p = list(range(1, n + 1))
        p[i - 1], p[i] = p[i], p[i - 1]
        return cls(p)

    @classmethod
    def from_word(cls, n: int, word: Iterable[int]) -> "WeylElement":
        w = cls.identity(n)
        for i in word:
            w = w.right_simple(i)
        return w

    @classmethod
    def longest(cls, n: int) -> "WeylElement":
        return cls(range(n, 0, -1))

    @property
    def n(self) -> int:
        return len(self)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if len(other) != len(self):
            raise HeckeError(f"rank mismatch: {len(self)} vs {len(other)}")
        return WeylElement(self[j - 1] for j in other)

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self)
        for pos, val in enumerate(self, 1):
            inv[val - 1] = pos
        return WeylElement(inv)

    def left_simple(self, i: int) -> "WeylElement":
        """s_i * self: swap the values i and i+1."""
        return WeylElement(i + 1 if v == i else i if v == i + 1 else v for v in self)

    def right_simple(self, i: int) -> "WeylElement":
        """self * s_i: swap the entries in positions i and i+1."""
        p = list(self)
        p[i - 1], p[i] = p[i], p[i - 1]
        return WeylElement(p)

    def position(self, value: int) -> int:
        return self.index(value) + 1

    def has_left_descent(self, i: int) -> bool:
        return self.position(i) > self.position(i + 1)

    def has_right_descent(self, i: int) -> bool:
        return self[i - 1] > self[i]

    def length(self) -> int:
        return length(self)

    def reduced_word(self) -> tuple[int, ...]:
        return reduced_word(self)

    def cycle_type(self) -> Partition:
        seen, cycles = set(), []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            k, j = 0, start
            while j not in seen:
                seen.add(j)
                j = self[j - 1]
                k += 1
            cycles.append(k)
        return Partition(sorted(cycles, reverse=True))

    def __repr__(self):
        return "WeylElement(%s)" % ",".join(map(str, self))

    def __str__(self):
        return ",".join(map(str, self))


def length(w: Sequence[int]) -> int:
    """Inversion count by merge sort."""

    def sort_count(seq):
        if len(seq) <= 1:
            return list(seq), 0
        mid = len(seq) // 2
        left, a = sort_count(seq[:mid])
        right, b = sort_count(seq[mid:])
        merged, inv, i, j = [], a + b, 0, 0
        while i < len(left) and j < len(right):
            if left[i] <= right[j]:
                merged.append(left[i])
                i += 1
            else:
                merged.append(right[j])
                inv += len(left) - i
                j += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, inv

    return sort_count(list(w))[1]


def reduced_word(w: WeylElement) -> tuple[int, ...]:
    """Reduced word (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k}.

    At every step the smallest left descent is stripped off.
    """
    word = []
    while True:
        for i in range(1, w.n):
            if w.has_left_descent(i):
                word.append(i)
                w = w.left_simple(i)
                break
        else:
            return tuple(word)


def all_elements(n: int) -> list[WeylElement]:
    return [WeylElement(p) for p in permutations(range(1, n + 1))]


def _check_subset(n: int, J: Iterable[int]) -> frozenset[int]:
    J = frozenset(int(j) for j in J)
    bad = [j for j in J if not 1 <= j < n]
    if bad:
        raise HeckeError(f"simple indices {sorted(bad)} out of range for n={n}")
    return J


def in_Y(x: WeylElement, J: Iterable[int]) -> bool:
    """x is the minimal-length element of x W_J."""
    return all(x[j - 1] < x[j] for j in J)


def distinguished_reps(n: int, J: Iterable[int]) -> list[WeylElement]:
    """Y_J, sorted by length and then lexicographically."""
    J = _check_subset(n, J)
    ys = [w for w in all_elements(n) if in_Y(w, J)]
    return sorted(ys, key=lambda w: (length(w), w))


def parabolic_elements(n: int, J: Iterable[int]) -> list[WeylElement]:
    J = _check_subset(n, J)
    blocks = blocks_of(n, J)
    return [w for w in all_elements(n)
            if all(lo <= w[p - 1] <= hi for lo, hi in blocks for p in range(lo, hi + 1))]


def blocks_of(n: int, J: Iterable[int]) -> list[tuple[int, int]]:
    """Position intervals [lo, hi] that W_J permutes; singletons included."""
    J = set(J)
    blocks, lo = [], 1
    for i in range(1, n + 1):
        if i not in J:
            blocks.append((lo, i))
            lo = i + 1
    return blocks


def components_of(J: Iterable[int]) -> list[tuple[int, ...]]:
    """Maximal runs of consecutive simple indices in J."""
    comps: list[list[int]] = []
    for j in sorted(set(J)):
        if comps and comps[-1][-1] == j - 1:
            comps[-1].append(j)
        else:
            comps.append([j])
    return [tuple(c) for c in comps]


def subset_from_composition(lengths: Sequence[int]) -> frozenset[int]:
    J, pos = set(), 0
    for l in lengths:
        J.update(range(pos + 1, pos + l))
        pos += l
    return frozenset(J)


def parabolic_factorization(w: WeylElement, J: Iterable[int]) -> tuple[WeylElement, WeylElement]:
    """(x, v) with w = x v, x in Y_J and v in W_J."""
    J = _check_subset(w.n, J)
    x = list(w)
    for lo, hi in blocks_of(w.n, J):
        x[lo - 1:hi] = sorted(x[lo - 1:hi])
    x = WeylElement(x)
    return x, x.inverse() * w


@dataclass(frozen=True)
class DeodharCase:
    """Outcome of left multiplication of x in Y_J by a simple reflection.

    ``kind`` is ``"up"`` or ``"down"`` with ``element`` = s x, or ``"fold"``
    with ``element`` the index u in J such that s x = x s_u.
    """

    kind: str
    element: object


def deodhar_case(x: WeylElement, s: int, J: Iterable[int]) -> DeodharCase:
    J = _check_subset(x.n, J)
    if not 1 <= s < x.n:
        raise HeckeError(f"simple index {s} out of range for n={x.n}")
    if not in_Y(x, J):
        raise HeckeError(f"{x} is not a distinguished representative for J={sorted(J)}")
    p, p1 = x.position(s), x.position(s + 1)
    if p1 == p + 1 and p in J:
        return DeodharCase("fold", p)
    sx = x.left_simple(s)
    return DeodharCase("up" if p < p1 else "down", sx)


class HeckeElement:
    """Element of the generic Iwahori-Hecke algebra of S_n in the T_w basis."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[WeylElement, IntPolynomial | int] = ()):
        self.n = n
        clean = {}
        for w, c in dict(terms).items():
            w = WeylElement(w)
            if w.n != n:
                raise HeckeError(f"rank mismatch: {w} in rank {n}")
            c = c if isinstance(c, IntPolynomial) else IntPolynomial(c)
            c = clean.get(w, ZERO) + c
            if c:
                clean[w] = c
            else:
                clean.pop(w, None)
        self.terms = clean

    @classmethod
    def basis(cls, w: WeylElement) -> "HeckeElement":
        return cls(w.n, {w: ONE})

    @classmethod
    def generator(cls, n: int, i: int) -> "HeckeElement":
        return cls.basis(WeylElement.simple(n, i))

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return HeckeElement(self.n, out)

    def __sub__(self, other):
        return self + other.scale(IntPolynomial(-1))

    def scale(self, c) -> "HeckeElement":
        return HeckeElement(self.n, {w: c * v for w, v in self.terms.items()})

    def _check(self, other):
        if self.n != other.n:
            raise HeckeError(f"rank mismatch: {self.n} vs {other.n}")

    def left_generator(self, i: int) -> "HeckeElement":
        """T_{s_i} * self."""
        out: dict[WeylElement, IntPolynomial] = {}
        for w, c in self.terms.items():
            sw = w.left_simple(i)
            if not w.has_left_descent(i):
                out[sw] = out.get(sw, ZERO) + c
            else:
                out[sw] = out.get(sw, ZERO) + Q * c
                out[w] = out.get(w, ZERO) + (Q - 1) * c
        return HeckeElement(self.n, out)

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        total = HeckeElement(self.n)
        for x, c in self.terms.items():
            acc = other
            for i in reversed(reduced_word(x)):
                acc = acc.left_generator(i)
            total = total + acc.scale(c)
        return total

    def __repr__(self):
        inner = ", ".join(f"T[{w}]: {c}" for w, c in sorted(self.terms.items()))
        return f"HeckeElement(n={self.n}, {{{inner}}})"


def hecke_multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    return a * b


_CHARACTERS = {"sign": IntPolynomial(-1), "trivial": Q}


@dataclass
class InducedModule:
    """H_q (x)_{(H_q)_J} V with V one-dimensional.

    ``eigen`` maps every j in J to the scalar by which T_{s_j} acts on V:
    -1 for a sign block, q for a trivial block.
    """

    n: int
    J: frozenset
    eigen: dict
    basis: list = field(init=False)

    def __post_init__(self):
        self.basis = distinguished_reps(self.n, self.J)
        self._index = {x: k for k, x in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def element(self, terms: Mapping) -> "InducedModuleElement":
        return InducedModuleElement(self, terms)

    def basis_vector(self, x: WeylElement) -> "InducedModuleElement":
        return InducedModuleElement(self, {x: ONE})

    def act(self, s: int, elt: "InducedModuleElement") -> "InducedModuleElement":
        return act_on_induced(s, elt)

    def matrix(self, s: int) -> list[list[IntPolynomial]]:
        """Matrix of T_{s} with columns the images of basis vectors."""
        mat = [[ZERO] * self.dim for _ in range(self.dim)]
        for col, x in enumerate(self.basis):
            image = act_on_induced(s, self.basis_vector(x))
            for y, c in image.terms.items():
                mat[self._index[y]][col] = c
        return mat

    def word_matrix(self, word: Sequence[int]) -> list[list[IntPolynomial]]:
        """Matrix of T_{i_1} ... T_{i_k}."""
        mat = identity_matrix(self.dim)
        for i in word:
            mat = matmul(mat, self.matrix(i))
        return mat


@dataclass
class InducedModuleElement:
    module: InducedModule
    terms: dict

    def __post_init__(self):
        clean = {}
        for x, c in dict(self.terms).items():
            x = WeylElement(x)
            if not in_Y(x, self.module.J):
                raise HeckeError(f"{x} is not in Y_J for J={sorted(self.module.J)}")
            c = c if isinstance(c, IntPolynomial) else IntPolynomial(c)
            c = clean.get(x, ZERO) + c
            if c:
                clean[x] = c
            else:
                clean.pop(x, None)
        self.terms = clean

    def __eq__(self, other):
        if not isinstance(other, InducedModuleElement):
            return NotImplemented
        return self.module is other.module and self.terms == other.terms


def induce_module(n: int, J: Iterable[int], characters: str | Sequence[str] | Mapping[int, object] = "sign"
                  ) -> InducedModule:
    """Build the induced module from one-dimensional characters of (H_q)_J.

    ``characters`` is ``"sign"``/``"trivial"`` for every block, a sequence with
    one entry per connected component of J, or a mapping from each j in J to
    its eigenvalue (an IntPolynomial equal to -1 or q, or a name).
    """
    J = _check_subset(n, J)
    comps = components_of(J)
    if isinstance(characters, str):
        eigen = {j: characters for j in J}
    elif isinstance(characters, Mapping):
        eigen = dict(characters)
        if set(eigen) != set(J):
            raise HeckeError("invalid eigenvalue assignment: keys must be exactly J")
    else:
        characters = list(characters)
        if len(characters) != len(comps):
            raise HeckeError(f"need one character per component of J, got {len(characters)} for {comps}")
        eigen = {j: ch for comp, ch in zip(comps, characters) for j in comp}
    resolved = {}
    for j, val in eigen.items():
        if isinstance(val, str):
            if val not in _CHARACTERS:
                raise HeckeError(f"invalid eigenvalue: {val!r}")
            val = _CHARACTERS[val]
        val = val if isinstance(val, IntPolynomial) else IntPolynomial(val)
        if val not in (IntPolynomial(-1), Q):
            raise HeckeError(f"invalid eigenvalue: {val} (must be -1 or q)")
        resolved[j] = val
    for comp in comps:
        if len({resolved[j] for j in comp}) > 1:
            raise HeckeError(f"invalid eigenvalue: one-dimensional character must be constant on {comp}")
    return InducedModule(n, J, resolved)


def induce_from_composition(lengths: Sequence[int], factors: str | Sequence[str] = "sign") -> InducedModule:
    """Induced module for the Young subalgebra of a composition of n."""
    n = sum(lengths)
    J = subset_from_composition(lengths)
    if isinstance(factors, str):
        factors = [factors] * len(lengths)
    eigen = {}
    pos = 0
    for l, f in zip(lengths, factors):
        for j in range(pos + 1, pos + l):
            eigen[j] = f
        pos += l
    return induce_module(n, J, eigen)


def act_on_induced(s: int, elt: InducedModuleElement) -> InducedModuleElement:
    """T_s acting on sum_x T_x (x) v_x by the three-case rule."""
    mod = elt.module
    out: dict[WeylElement, IntPolynomial] = {}
    for x, c in elt.terms.items():
        case = deodhar_case(x, s, mod.J)
        if case.kind == "up":
            out[case.element] = out.get(case.element, ZERO) + c
        elif case.kind == "fold":
            out[x] = out.get(x, ZERO) + mod.eigen[case.element] * c
        else:
            out[case.element] = out.get(case.element, ZERO) + Q * c
            out[x] = out.get(x, ZERO) + (Q - 1) * c
    return InducedModuleElement(mod, out)


def identity_matrix(d: int) -> list[list[IntPolynomial]]:
    return [[ONE if i == j else ZERO for j in range(d)] for i in range(d)]


def matmul(a, b):
    d, k, m = len(a), len(b), len(b[0]) if b else 0
    out = [[ZERO] * m for _ in range(d)]
    for i in range(d):
        row = a[i]
        for t in range(k):
            if not row[t]:
                continue
            bt = b[t]
            for j in range(m):
                if bt[j]:
                    out[i][j] = out[i][j] + row[t] * bt[j]
    return out


def matadd(a, b, sign: int = 1):
    return [[x + sign * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scalar_matrix(c, d):
    return [[c if i == j else ZERO for j in range(d)] for i in range(d)]


def is_zero_matrix(a) -> bool:
    return all(not x for row in a for x in row)


def relation_failures(module: InducedModule) -> list[str]:
    """Quadratic and braid relations that fail on the module (empty if all hold)."""
    n, d = module.n, module.dim
    mats = {i: module.matrix(i) for i in range(1, n)}
    failures = []
    for i, m in mats.items():
        quad = matmul(matadd(m, scalar_matrix(Q, d), -1), matadd(m, scalar_matrix(ONE, d)))
        if not is_zero_matrix(quad):
            failures.append(f"quadratic relation fails for T_{i}")
    for i in range(1, n):
        for j in range(i + 1, n):
            a, b = mats[i], mats[j]
            if j == i + 1:
                lhs, rhs = matmul(matmul(a, b), a), matmul(matmul(b, a), b)
            else:
                lhs, rhs = matmul(a, b), matmul(b, a)
            if lhs != rhs:
                failures.append(f"braid relation fails for T_{i}, T_{j}")
    return failures


def trace(mat) -> IntPolynomial:
    return sum((mat[i][i] for i in range(len(mat))), ZERO)


def class_representative(mu: Iterable[int]) -> WeylElement:
    """Product of cycles (1..mu_1)(mu_1+1 .. mu_1+mu_2)... in one-line notation."""
    mu = Partition(mu)
    perm, start = [], 1
    for part in mu:
        block = list(range(start, start + part))
        perm.extend(block[1:] + block[:1])
        start += part
    return WeylElement(perm)


def _act_at(module: InducedModule, s: int, vec: dict, qval: int) -> dict:
    """act_on_induced with q specialized to an integer; sparse integer vectors."""
    out: dict = {}
    for x, c in vec.items():
        case = deodhar_case(x, s, module.J)
        if case.kind == "up":
            out[case.element] = out.get(case.element, 0) + c
        elif case.kind == "fold":
            out[x] = out.get(x, 0) + module.eigen[case.element](qval) * c
        else:
            out[case.element] = out.get(case.element, 0) + qval * c
            out[x] = out.get(x, 0) + (qval - 1) * c
    return {x: c for x, c in out.items() if c}


def character_at_q1(module: InducedModule) -> symgroup.ClassFunction:
    """Character of the W-representation obtained by setting q = 1."""
    values = {}
    for mu in partitions(module.n):
        word = reduced_word(class_representative(mu))
        total = 0
        for x in module.basis:
            vec = {x: 1}
            for i in reversed(word):
                vec = _act_at(module, i, vec, 1)
            total += vec.get(x, 0)
        values[mu] = total
    return symgroup.ClassFunction(module.n, values)


def specialize_q1_decompose(module: InducedModule) -> PartitionVector:
    return symgroup.decompose(character_at_q1(module))


def verify_relations(n: int) -> list[str]:
    """Relation checks on every induced module of rank n with sign/trivial blocks."""
    from itertools import product as cartesian

    failures = []
    for mask in range(2 ** (n - 1)):
        J = frozenset(j for j in range(1, n) if mask >> (j - 1) & 1)
        comps = components_of(J)
        for chars in cartesian(("sign", "trivial"), repeat=len(comps)):
            mod = induce_module(n, J, list(chars))
            for f in relation_failures(mod):
                failures.append(f"J={sorted(J)} chars={chars}: {f}")
    return failures
