"""Named algebra families used as the test corpus and by the CLI.

Basis conventions:

* ``matrix(n)``: matrix units e_ij in row-major order.
* ``upper_triangular(n)``: e_ij with i <= j, row-major (n = 2 gives e11, e12, e22).
* ``field_poly_quotient(p, f)``: 1, x, ..., x^(deg f - 1).
* ``dual_numbers``: 1, eps.
* ``group_algebra_cyclic(k)``: g^0, ..., g^(k-1).
* ``product([A, B, ...])``: concatenated bases, componentwise product.
"""

from __future__ import annotations

import re
from typing import Sequence

from . import poly
from .algebra import Algebra, make_algebra
from .errors import BadParameter
from .rings import RingSpec


def _cube(d: int, ring: RingSpec) -> list:
    return [[[ring.zero] * d for _ in range(d)] for _ in range(d)]


def zn(n: int) -> Algebra:
    ring = RingSpec.modular(n)
    return make_algebra(ring, [[[1]]], [1], name=f"zn{n}")


def field(ring: RingSpec) -> Algebra:
    """The base ring as a rank-one algebra over itself."""
    return make_algebra(ring, [[[ring.one]]], [ring.one], name=f"rank-1 {ring}")


def matrix(n: int, ring: RingSpec) -> Algebra:
    if n < 1:
        raise BadParameter("matrix size must be positive")
    d = n * n
    c = _cube(d, ring)
    for i in range(n):
        for j in range(n):
            for l in range(n):
                c[i * n + j][j * n + l][i * n + l] = ring.one
    one = [ring.zero] * d
    for i in range(n):
        one[i * n + i] = ring.one
    return make_algebra(ring, c, one, name=f"matrix{n} over {ring}")


def upper_triangular(n: int, ring: RingSpec) -> Algebra:
    if n < 1:
        raise BadParameter("matrix size must be positive")
    units = [(i, j) for i in range(n) for j in range(i, n)]
    index = {u: k for k, u in enumerate(units)}
    d = len(units)
    c = _cube(d, ring)
    for (i, j), a in index.items():
        for (k, l), b in index.items():
            if j == k:
                c[a][b][index[(i, l)]] = ring.one
    one = [ring.zero] * d
    for i in range(n):
        one[index[(i, i)]] = ring.one
    return make_algebra(ring, c, one, name=f"ut{n} over {ring}")


def field_poly_quotient(p: int, f: Sequence[int]) -> Algebra:
    """F_p[x]/(f) with ``f`` given by ascending coefficients."""
    ring = RingSpec.prime_field(p)
    f = poly.trim(ring, [ring.normalize(v) for v in f])
    if len(f) < 2:
        raise BadParameter("modulus polynomial must have positive degree")
    d = len(f) - 1
    c = _cube(d, ring)
    for i in range(d):
        for j in range(d):
            _, r = poly.divmod_poly(ring, poly.monomial(ring, i + j), f)
            for k, v in enumerate(r):
                c[i][j][k] = v
    one = [ring.zero] * d
    one[0] = ring.one
    return make_algebra(ring, c, one, name=f"F_{p}[x]/({','.join(map(str, f))})")


def product(algebras: Sequence[Algebra]) -> Algebra:
    if not algebras:
        raise BadParameter("empty product")
    ring = algebras[0].ring
    if any(a.ring != ring for a in algebras):
        raise BadParameter("product factors must share a base ring")
    d = sum(a.dim for a in algebras)
    c = _cube(d, ring)
    one = []
    offset = 0
    for a in algebras:
        for i in range(a.dim):
            for j in range(a.dim):
                for k in range(a.dim):
                    c[offset + i][offset + j][offset + k] = a.structure_constants[i][j][k]
        one.extend(a.one)
        offset += a.dim
    name = " x ".join(a.name or "?" for a in algebras)
    return make_algebra(ring, c, one, name=name)


def dual_numbers(ring: RingSpec) -> Algebra:
    c = _cube(2, ring)
    c[0][0][0] = ring.one
    c[0][1][1] = ring.one
    c[1][0][1] = ring.one
    return make_algebra(ring, c, [ring.one, ring.zero], name=f"dual numbers over {ring}")


def group_algebra_cyclic(ring: RingSpec, k: int) -> Algebra:
    if k < 1:
        raise BadParameter("group order must be positive")
    c = _cube(k, ring)
    for i in range(k):
        for j in range(k):
            c[i][j][(i + j) % k] = ring.one
    one = [ring.zero] * k
    one[0] = ring.one
    return make_algebra(ring, c, one, name=f"{ring}[C{k}]")


_RING_RE = r"(f(?P<p>\d+)|z(?P<n>\d+)|q)"


def parse_ring(token: str) -> RingSpec:
    m = re.fullmatch(_RING_RE, token)
    if not m:
        raise BadParameter(f"unknown ring token {token!r}")
    if m.group("p"):
        return RingSpec.prime_field(int(m.group("p")))
    if m.group("n"):
        return RingSpec.modular(int(m.group("n")))
    return RingSpec.rationals()


def builtin_algebra(name: str) -> Algebra:
    """Resolve a CLI-style builtin name.

    Accepted: ``zn<n>``, ``f<p>``, ``q``, ``matrix<k>_<ring>``, ``ut<k>_<ring>``,
    ``dual_<ring>``, ``group<k>_<ring>``, ``poly_f<p>:<c0>,<c1>,...`` and
    ``prod:<name>,<name>,...`` where ``<ring>`` is ``f<p>``, ``z<n>`` or ``q``.
    """
    name = name.strip()
    if name.startswith("builtin:"):
        name = name[len("builtin:"):]
    if name.startswith("prod:"):
        return product([builtin_algebra(part) for part in name[5:].split(",")])
    if name.startswith("poly_f"):
        head, _, coeffs = name.partition(":")
        p = int(head[len("poly_f"):])
        return field_poly_quotient(p, [int(c) for c in coeffs.split(",")])
    if m := re.fullmatch(r"zn(\d+)", name):
        return zn(int(m.group(1)))
    if re.fullmatch(_RING_RE, name):
        return field(parse_ring(name))
    if m := re.fullmatch(r"(matrix|ut|group)(\d+)_(\w+)", name):
        family, k, ring = m.group(1), int(m.group(2)), parse_ring(m.group(3))
        if family == "matrix":
            return matrix(k, ring)
        if family == "ut":
            return upper_triangular(k, ring)
        return group_algebra_cyclic(ring, k)
    if m := re.fullmatch(r"dual_(\w+)", name):
        return dual_numbers(parse_ring(m.group(1)))
    raise BadParameter(f"unknown builtin algebra {name!r}")
