"""Dense univariate polynomials over a base ring, ascending coefficient lists."""

from __future__ import annotations

from typing import Sequence

from .errors import BadParameter
from .rings import RingSpec

Poly = tuple


def trim(ring: RingSpec, p: Sequence) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def add(ring: RingSpec, p: Sequence, q: Sequence) -> Poly:
    n = max(len(p), len(q))
    p = list(p) + [ring.zero] * (n - len(p))
    q = list(q) + [ring.zero] * (n - len(q))
    return trim(ring, [ring.add(x, y) for x, y in zip(p, q)])


def neg(ring: RingSpec, p: Sequence) -> Poly:
    return trim(ring, [ring.neg(x) for x in p])


def sub(ring: RingSpec, p: Sequence, q: Sequence) -> Poly:
    return add(ring, p, neg(ring, q))


def mul(ring: RingSpec, p: Sequence, q: Sequence) -> Poly:
    if not p or not q:
        return ()
    out = [ring.zero] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x == 0:
            continue
        for j, y in enumerate(q):
            if y != 0:
                out[i + j] = ring.add(out[i + j], ring.mul(x, y))
    return trim(ring, out)


def power(ring: RingSpec, p: Sequence, e: int) -> Poly:
    result: Poly = (ring.one,)
    base = trim(ring, p)
    while e:
        if e & 1:
            result = mul(ring, result, base)
        base = mul(ring, base, base)
        e >>= 1
    return result


def monomial(ring: RingSpec, degree: int) -> Poly:
    return tuple([ring.zero] * degree + [ring.one])


def divmod_poly(ring: RingSpec, p: Sequence, f: Sequence) -> tuple[Poly, Poly]:
    """Euclidean division by ``f``; the leading coefficient of ``f`` must be a unit."""
    f = trim(ring, f)
    if not f:
        raise ZeroDivisionError("division by the zero polynomial")
    if not ring.is_unit(f[-1]):
        raise BadParameter("leading coefficient of the divisor is not a unit")
    inv = ring.inverse(f[-1])
    r = list(trim(ring, p))
    q = [ring.zero] * max(len(r) - len(f) + 1, 0)
    while len(r) >= len(f):
        c = ring.mul(r[-1], inv)
        shift = len(r) - len(f)
        q[shift] = c
        for i, y in enumerate(f):
            r[shift + i] = ring.sub(r[shift + i], ring.mul(c, y))
        r = list(trim(ring, r))
    return trim(ring, q), tuple(r)
