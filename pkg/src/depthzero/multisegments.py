"""Segments and multisegments on the unramified cuspidal line.

A segment ``[b, e]`` stands for the characters nu^b, ..., nu^e.  The order
``b <= a`` is generated by elementary operations (replace a linked pair by its
union and intersection).  Decomposition numbers m(b; a) come from
Kazhdan-Lusztig polynomials at q = 1 through the begin/end encoding below.

Begin/end encoding
------------------
Let a have begins beta_1 <= ... <= beta_N and ends eps_1 <= ... <= eps_N.  An
elementary operation never changes these multisets once an empty intersection
``[x, x-1]`` is kept as a formal empty segment.  So every b <= a is
``sum_i [beta_i, eps_sigma(i)]`` for a permutation sigma with
eps_sigma(i) >= beta_i - 1, empty segments discarded.  The permutation is
defined up to permuting equal begins and equal ends; we take the longest
element of that double coset.  Identity-like pairings give the largest
multisegments, so the order on multisegments is opposite to Bruhat order and

    m(b; a) = P_{sigma(a), sigma(b)}(1).
"""
from __future__ import annotations

import json
import re
from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .hecke import WeylElement, length
from .kl import bruhat_leq, kl_polynomial
from .partitions import Partition, conjugate

DEFAULT_CAP = 12


class MultisegmentError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Segment:
    start: int
    end: int

    def __post_init__(self):
        if self.start > self.end:
            raise MultisegmentError(f"empty segment [{self.start},{self.end}]")

    def __len__(self):
        return self.end - self.start + 1

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def points(self) -> range:
        return range(self.start, self.end + 1)

    def contains(self, other: "Segment") -> bool:
        return self.start <= other.start and other.end <= self.end

    def precedes(self, other: "Segment") -> bool:
        return linked(self, other) and self.start < other.start

    def __str__(self):
        return f"[{self.start}]" if self.start == self.end else f"[{self.start},{self.end}]"

    def __repr__(self):
        return f"Segment({self.start}, {self.end})"


def linked(d1: Segment, d2: Segment) -> bool:
    """Neither contains the other and the union is again a segment."""
    if d1.contains(d2) or d2.contains(d1):
        return False
    return max(d1.start, d2.start) <= min(d1.end, d2.end) + 1


def _canonical(segs) -> tuple:
    return tuple(sorted(segs, key=lambda d: (d.start, d.end), reverse=True))


class Multisegment(tuple):
    """Multiset of segments, stored in descending (start, end) order."""

    __slots__ = ()

    def __new__(cls, segments: Iterable = ()):
        segs = []
        for d in segments:
            if isinstance(d, Segment):
                segs.append(d)
            else:
                b, e = d
                segs.append(Segment(int(b), int(e)))
        return super().__new__(cls, _canonical(segs))

    @property
    def segments(self) -> tuple:
        return tuple(self)

    @property
    def degree(self) -> int:
        return sum(len(d) for d in self)

    def support(self) -> Counter:
        """Multiset of points nu^k, counted with multiplicity."""
        return Counter(k for d in self for k in d.points())

    def lengths(self) -> tuple[int, ...]:
        return tuple(sorted((len(d) for d in self), reverse=True))

    def square_sum(self) -> int:
        return sum(len(d) ** 2 for d in self)

    def __str__(self):
        return format_multisegment(self)

    def __repr__(self):
        return f"Multisegment({format_multisegment(self)!r})"


def format_multisegment(a: Multisegment) -> str:
    return "+".join(str(d) for d in a) if a else "0"


_SEG = re.compile(r"\[\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?\]")


def parse_multisegment(text: str) -> Multisegment:
    """Parse ``"[0,2]+[1,1]+[3]"``."""
    text = text.strip()
    if text == "0":
        return Multisegment()
    segs = []
    for token in text.split("+"):
        token = token.strip()
        m = _SEG.fullmatch(token)
        if not m:
            raise MultisegmentError(f"malformed segment literal: {token!r}")
        b = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else b
        if b > e:
            raise MultisegmentError(f"malformed segment literal: {token!r} (start > end)")
        segs.append(Segment(b, e))
    return Multisegment(segs)


def elementary_op(a: Multisegment, i: int, j: int) -> Multisegment:
    d1, d2 = a[i], a[j]
    if not linked(d1, d2):
        raise MultisegmentError(f"{d1} and {d2} are not linked")
    rest = [d for k, d in enumerate(a) if k not in (i, j)]
    rest.append(Segment(min(d1.start, d2.start), max(d1.end, d2.end)))
    lo, hi = max(d1.start, d2.start), min(d1.end, d2.end)
    if lo <= hi:
        rest.append(Segment(lo, hi))
    return Multisegment(rest)


def elementary_ops(a: Multisegment) -> set[Multisegment]:
    """All results of one elementary operation on a."""
    out = set()
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if linked(a[i], a[j]):
                out.add(elementary_op(a, i, j))
    return out


def _same_support(b: Multisegment, a: Multisegment):
    if b.support() != a.support():
        raise MultisegmentError(
            f"different cuspidal support: {format_multisegment(b)} vs {format_multisegment(a)}")


def _check_cap(a: Multisegment, cap: int | None):
    cap = DEFAULT_CAP if cap is None else cap
    if a.degree > cap:
        raise MultisegmentError(
            f"support of {format_multisegment(a)} has {a.degree} points, above the poset cap of {cap}")


def leq(b: Multisegment, a: Multisegment, cap: int | None = None) -> bool:
    """b <= a: b is reachable from a by elementary operations."""
    b, a = Multisegment(b), Multisegment(a)
    _same_support(b, a)
    if b == a:
        return True
    return b in poset(a, cap).nodes


@dataclass(frozen=True)
class Poset:
    """All b <= a with one edge per elementary operation."""

    top: Multisegment
    nodes: tuple
    edges: tuple

    def linear_extension(self) -> list[Multisegment]:
        """Nodes ordered so that every edge goes forward (top first)."""
        return list(self.nodes)

    def to_dict(self, m_values: dict | None = None) -> dict:
        out = {
            "nodes": [format_multisegment(b) for b in self.nodes],
            "edges": [[format_multisegment(u), format_multisegment(v)] for u, v in self.edges],
        }
        if m_values is not None:
            out["m_values"] = {format_multisegment(b): v for b, v in m_values.items()}
        return out

    def to_json(self, m_values: dict | None = None) -> str:
        return json.dumps(self.to_dict(m_values), separators=(",", ":"))

    def to_dot(self) -> str:
        lines = ["digraph multisegments {"]
        for b in self.nodes:
            lines.append(f'  "{format_multisegment(b)}";')
        for u, v in self.edges:
            lines.append(f'  "{format_multisegment(u)}" -> "{format_multisegment(v)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def poset(a: Multisegment, cap: int | None = None) -> Poset:
    a = Multisegment(a)
    _check_cap(a, cap)
    return _poset(a)


@lru_cache(maxsize=None)
def _poset(a: Multisegment) -> Poset:
    seen = {a}
    queue = deque([a])
    edges = set()
    while queue:
        c = queue.popleft()
        for d in elementary_ops(c):
            if d.square_sum() <= c.square_sum():
                raise AssertionError(f"elementary operation {c} -> {d} did not increase sum of squares")
            edges.add((c, d))
            if d not in seen:
                seen.add(d)
                queue.append(d)
    # sum of squared lengths strictly increases along edges, so sorting by it
    # (ties broken by the text form) is a deterministic linear extension
    key = lambda m: (m.square_sum(), format_multisegment(m))
    nodes = tuple(sorted(seen, key=key))
    edges = tuple(sorted(edges, key=lambda e: (key(e[0]), key(e[1]))))
    return Poset(a, nodes, edges)


def partition_P(a: Multisegment) -> Partition:
    """Conjugate of the partition formed by the segment lengths."""
    a = Multisegment(a)
    if not a:
        raise MultisegmentError("empty multisegment has no partition")
    return conjugate(a.lengths())


def begin_end_encoding(b: Multisegment, a: Multisegment) -> WeylElement:
    """The permutation attached to b inside the begin/end frame of a."""
    return _encode(Multisegment(b), _frame(Multisegment(a)))


@lru_cache(maxsize=None)
def _frame(a: Multisegment) -> tuple[tuple, tuple]:
    begins = tuple(sorted(d.start for d in a))
    ends = tuple(sorted(d.end for d in a))
    return begins, ends


def _encode(b: Multisegment, frame) -> WeylElement:
    begins, ends = frame
    pairs = [(d.start, d.end) for d in b]
    spare_b = Counter(begins) - Counter(p[0] for p in pairs)
    spare_e = Counter(ends) - Counter(p[1] for p in pairs)
    empties = sorted(spare_b.elements())
    overflow = (Counter(p[0] for p in pairs) - Counter(begins)) or (Counter(p[1] for p in pairs) - Counter(ends))
    if overflow or sorted(x - 1 for x in empties) != sorted(spare_e.elements()):
        raise MultisegmentError(
            f"{format_multisegment(b)} does not fit the begin/end frame {begins}/{ends}")
    pairs.extend((x, x - 1) for x in empties)
    # longest double-coset representative: equal begins take ends in
    # decreasing order, equal ends go to increasing begins in decreasing slot order
    pairs.sort(key=lambda p: (p[0], -p[1]))
    slots: dict[int, list[int]] = {}
    for j, e in enumerate(ends, 1):
        slots.setdefault(e, []).append(j)
    perm = [slots[e].pop() for _, e in pairs]
    return WeylElement(perm)


def decomposition_number(b: Multisegment, a: Multisegment) -> int:
    """m(b; a): multiplicity of <b> in the standard module of a."""
    b, a = Multisegment(b), Multisegment(a)
    _same_support(b, a)
    if not a:
        return 1
    frame = _frame(a)
    # the frame of a contains every c <= a, and is the frame of b whenever b <= a
    try:
        sb = _encode(b, frame)
    except MultisegmentError:
        return 0
    sa = _encode(a, frame)
    if not bruhat_leq(sa, sb):
        return 0
    return kl_polynomial(sa, sb)(1)


def m_matrix(a: Multisegment, cap: int | None = None) -> tuple[list[Multisegment], list[list[int]]]:
    """Nodes of poset(a) (top first) and M[i][j] = m(node_i; node_j)."""
    nodes = list(poset(a, cap).nodes)
    mat = [[decomposition_number(b, c) for c in nodes] for b in nodes]
    return nodes, mat


def zelevinsky_dual(a: Multisegment) -> Multisegment:
    """Moeglin-Waldspurger algorithm for the Zelevinsky involution.

    Repeatedly take the largest end e, the shortest segment ending at e, then
    the shortest segment ending at e-1 that starts strictly earlier, and so on;
    the chain contributes [e-k+1, e] and each chain member loses its end.
    """
    segs = [(d.start, d.end) for d in Multisegment(a)]
    out = []
    while segs:
        e = max(end for _, end in segs)
        chain = []
        last_start = None
        cur = e
        while True:
            cands = [k for k, (s, t) in enumerate(segs)
                     if t == cur and k not in chain and (last_start is None or s < last_start)]
            if not cands:
                break
            k = max(cands, key=lambda k: segs[k][0])
            chain.append(k)
            last_start = segs[k][0]
            cur -= 1
        out.append(Segment(cur + 1, e))
        new = []
        for k, (s, t) in enumerate(segs):
            if k in chain:
                if s <= t - 1:
                    new.append((s, t - 1))
            else:
                new.append((s, t))
        segs = new
    return Multisegment(out)


def all_multisegments(support: Counter) -> Iterator[Multisegment]:
    """Every multisegment with the given multiset of points."""
    support = Counter({k: v for k, v in support.items() if v})

    def rec(remaining: Counter):
        if not remaining:
            yield ()
            return
        lo = min(remaining)
        # the segment covering one copy of the smallest point starts there
        e = lo
        while remaining.get(e, 0):
            seg = Segment(lo, e)
            rest = remaining - Counter(seg.points())
            for tail in rec(rest):
                if not tail or (tail[0].start, tail[0].end) >= (seg.start, seg.end):
                    yield (seg,) + tail
            e += 1

    seen = set()
    for segs in rec(support):
        m = Multisegment(segs)
        if m not in seen:
            seen.add(m)
            yield m
