"""Bruhat order and Kazhdan-Lusztig polynomials for the symmetric group."""
from __future__ import annotations

from functools import lru_cache

from .hecke import HeckeError, WeylElement, length, reduced_word
from .polynomial import ONE, ZERO, IntPolynomial


def _check(x: WeylElement, w: WeylElement):
    if len(x) != len(w):
        raise HeckeError(f"rank mismatch: {len(x)} vs {len(w)}")


def bruhat_leq(x: WeylElement, w: WeylElement) -> bool:
    """x <= w in Bruhat order.

    Subword test along the reduced word of w produced by ``reduced_word``:
    peeling the first letter s off w = s w', x <= w iff min(x, sx) <= w'.
    """
    x, w = WeylElement(x), WeylElement(w)
    _check(x, w)
    return _bruhat(x, w)


@lru_cache(maxsize=None)
def _bruhat(x: WeylElement, w: WeylElement) -> bool:
    lx, lw = length(x), length(w)
    if lx > lw:
        return False
    if lw == 0:
        return lx == 0
    word = reduced_word(w)
    s = word[0]
    sw = w.left_simple(s)
    if x.has_left_descent(s):
        return _bruhat(x.left_simple(s), sw)
    return _bruhat(x, sw)


def lower_interval(w: WeylElement) -> frozenset:
    """All x <= w."""
    return _lower(WeylElement(w))


@lru_cache(maxsize=None)
def _lower(w: WeylElement) -> frozenset:
    if length(w) == 0:
        return frozenset([w])
    s = reduced_word(w)[0]
    below = _lower(w.left_simple(s))
    return below | frozenset(x.left_simple(s) for x in below)


def kl_polynomial(x: WeylElement, w: WeylElement) -> IntPolynomial:
    """P_{x,w}, zero unless x <= w."""
    x, w = WeylElement(x), WeylElement(w)
    _check(x, w)
    return _column(w).get(x, ZERO)


def kl_column(w: WeylElement) -> dict[WeylElement, IntPolynomial]:
    """{x: P_{x,w}} over the Bruhat interval below w."""
    return dict(_column(WeylElement(w)))


def mu_coefficient(x: WeylElement, w: WeylElement) -> int:
    """Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w} (zero when the gap is even)."""
    gap = length(w) - length(x)
    if gap <= 0 or gap % 2 == 0:
        return 0
    return kl_polynomial(x, w).coeffs.get((gap - 1) // 2, 0)


@lru_cache(maxsize=None)
def _mu_list(v: WeylElement) -> tuple:
    lv = length(v)
    col = _column(v)
    out = []
    for z, p in col.items():
        gap = lv - length(z)
        if gap > 0 and gap % 2 == 1:
            m = p.coeffs.get((gap - 1) // 2, 0)
            if m:
                out.append((z, m))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _column(w: WeylElement) -> dict:
    # P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v} - sum_{z: sz<z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}
    # for a left descent s of w, v = s w, c = [sx < x].
    lw = length(w)
    if lw == 0:
        return {w: ONE}
    s = reduced_word(w)[0]
    v = w.left_simple(s)
    pv = _column(v)
    corrections = [(z, m, _column(z)) for z, m in _mu_list(v) if z.has_left_descent(s)]
    out = {}
    for x in _lower(w):
        sx = x.left_simple(s)
        if x.has_left_descent(s):
            p = pv.get(sx, ZERO) + pv.get(x, ZERO).shift(1)
        else:
            p = pv.get(sx, ZERO).shift(1) + pv.get(x, ZERO)
        for z, m, pz in corrections:
            pxz = pz.get(x)
            if pxz is not None:
                p = p - (pxz * m).shift((lw - length(z)) // 2)
        if p:
            out[x] = p
    return out


def clear_caches():
    for f in (_bruhat, _lower, _column, _mu_list):
        f.cache_clear()
