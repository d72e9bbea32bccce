"""Finite-dimensional unital associative algebras given by structure constants.

``c[i][j][k]`` is the coefficient of ``e_k`` in ``e_i e_j``.  Elements are
coordinate vectors; the raw helpers on :class:`Algebra` take and return plain
tuples of ring values, :class:`Element` is the operator-friendly wrapper.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

from . import linalg
from .errors import AlgebraMismatch, BadUnit, DimensionMismatch, NotAssociative, RingMismatch, TooLarge
from .rings import RawValue, RingSpec, Scalar

DEFAULT_STEP_BUDGET = 10**6


@dataclass(frozen=True, eq=False)
class Algebra:
    ring: RingSpec
    dim: int
    structure_constants: tuple
    one: tuple
    name: str = field(default="")

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.ring == other.ring and self.dim == other.dim
                and self.structure_constants == other.structure_constants and self.one == other.one)

    def __hash__(self):
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.ring, self.dim, self.structure_constants, self.one))

    def __repr__(self):
        label = self.name or f"dim {self.dim}"
        return f"Algebra({label} over {self.ring})"

    @cached_property
    def _terms(self) -> list:
        # nonzero structure constants grouped by (i, j)
        terms = []
        for i in range(self.dim):
            for j in range(self.dim):
                ks = [(k, c) for k, c in enumerate(self.structure_constants[i][j]) if c != 0]
                if ks:
                    terms.append((i, j, ks))
        return terms

    @property
    def zero_vector(self) -> tuple:
        return tuple([self.ring.zero] * self.dim)

    def basis_vector(self, i: int) -> tuple:
        v = [self.ring.zero] * self.dim
        v[i] = self.ring.one
        return tuple(v)

    def size(self) -> Optional[int]:
        if not self.ring.is_finite():
            return None
        return self.ring.modulus ** self.dim

    # raw arithmetic ---------------------------------------------------------

    def mul(self, x: Sequence[RawValue], y: Sequence[RawValue]) -> tuple:
        ring = self.ring
        out = [ring.zero] * self.dim
        for i, j, ks in self._terms:
            xi, yj = x[i], y[j]
            if xi == 0 or yj == 0:
                continue
            f = ring.mul(xi, yj)
            for k, c in ks:
                out[k] = ring.add(out[k], ring.mul(f, c))
        return tuple(out)

    def add(self, x: Sequence[RawValue], y: Sequence[RawValue]) -> tuple:
        return tuple(self.ring.add(a, b) for a, b in zip(x, y))

    def sub(self, x: Sequence[RawValue], y: Sequence[RawValue]) -> tuple:
        return tuple(self.ring.sub(a, b) for a, b in zip(x, y))

    def scale(self, r: RawValue, x: Sequence[RawValue]) -> tuple:
        return tuple(self.ring.mul(r, a) for a in x)

    def power(self, x: Sequence[RawValue], m: int) -> tuple:
        result = self.one
        base = tuple(x)
        while m:
            if m & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            m >>= 1
        return result

    def left_matrix(self, a: Sequence[RawValue]) -> list[list]:
        """Matrix of ``x -> a x`` acting on row vectors."""
        return [list(self.mul(a, self.basis_vector(j))) for j in range(self.dim)]

    def right_matrix(self, a: Sequence[RawValue]) -> list[list]:
        """Matrix of ``x -> x a`` acting on row vectors."""
        return [list(self.mul(self.basis_vector(j), a)) for j in range(self.dim)]

    def coords(self, x) -> tuple:
        """Raw coordinates of an Element or a sequence of scalars."""
        if isinstance(x, Element):
            if x.algebra != self:
                raise AlgebraMismatch("element belongs to a different algebra")
            return x.coords
        x = tuple(self.ring.normalize(v) for v in x)
        if len(x) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(x)}")
        return x

    def element(self, coords) -> Element:
        return Element(self, self.coords(coords))

    def basis(self) -> list[Element]:
        return [Element(self, self.basis_vector(i)) for i in range(self.dim)]

    @property
    def identity(self) -> Element:
        return Element(self, self.one)


def make_algebra(ring: RingSpec, structure_constants, one, name: str = "") -> Algebra:
    """Validate and build an :class:`Algebra`.

    Raises NotAssociative with the first offending basis triple, BadUnit when
    ``one`` fails to act as a two-sided identity on some basis element.
    """
    d = len(structure_constants)

    def norm(v):
        if isinstance(v, Scalar) and v.ring != ring:
            raise RingMismatch(f"{v.ring} vs {ring}")
        return ring.normalize(v)

    consts = []
    for i in range(d):
        if len(structure_constants[i]) != d:
            raise DimensionMismatch("structure constants are not a d x d x d cube")
        plane = []
        for j in range(d):
            if len(structure_constants[i][j]) != d:
                raise DimensionMismatch("structure constants are not a d x d x d cube")
            plane.append(tuple(norm(v) for v in structure_constants[i][j]))
        consts.append(tuple(plane))
    if len(one) != d:
        raise DimensionMismatch(f"identity has {len(one)} coordinates, expected {d}")
    alg = Algebra(ring, d, tuple(consts), tuple(norm(v) for v in one), name)
    for i in range(d):
        e = alg.basis_vector(i)
        if alg.mul(alg.one, e) != e or alg.mul(e, alg.one) != e:
            raise BadUnit(i)
    products = [[alg.mul(alg.basis_vector(i), alg.basis_vector(j)) for j in range(d)] for i in range(d)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = alg.mul(products[i][j], alg.basis_vector(k))
                rhs = alg.mul(alg.basis_vector(i), products[j][k])
                if lhs != rhs:
                    raise NotAssociative(i, j, k)
    return alg


@dataclass(frozen=True)
class Element:
    algebra: Algebra
    coords: tuple

    def _other(self, other) -> tuple:
        if isinstance(other, Element):
            if other.algebra != self.algebra:
                raise AlgebraMismatch("elements of different algebras")
            return other.coords
        return self.algebra.coords(other)

    def __add__(self, other) -> Element:
        return Element(self.algebra, self.algebra.add(self.coords, self._other(other)))

    def __sub__(self, other) -> Element:
        return Element(self.algebra, self.algebra.sub(self.coords, self._other(other)))

    def __neg__(self) -> Element:
        return Element(self.algebra, tuple(self.algebra.ring.neg(v) for v in self.coords))

    def __mul__(self, other) -> Element:
        if isinstance(other, (int, Scalar)):
            return Element(self.algebra, self.algebra.scale(self.algebra.ring.normalize(other), self.coords))
        return Element(self.algebra, self.algebra.mul(self.coords, self._other(other)))

    def __rmul__(self, other) -> Element:
        if isinstance(other, (int, Scalar)):
            return Element(self.algebra, self.algebra.scale(self.algebra.ring.normalize(other), self.coords))
        return NotImplemented

    def __pow__(self, m: int) -> Element:
        return Element(self.algebra, self.algebra.power(self.coords, m))

    def is_zero(self) -> bool:
        return not any(v != 0 for v in self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(self.algebra.ring.format(v) for v in self.coords) + ")"


def multiply(x: Element, y: Element) -> Element:
    if x.algebra != y.algebra:
        raise AlgebraMismatch("elements of different algebras")
    return x * y


def power_span_bound(alg: Algebra, a: Sequence[RawValue]) -> tuple[int, list[tuple]]:
    """First K with span{1..a^K} = span{1..a^(K+1)}, and the powers a^0..a^K."""
    powers = [alg.one]
    basis = linalg.canonical_rows(alg.ring, powers, alg.dim)
    while True:
        nxt = alg.mul(powers[-1], a)
        if linalg.in_span(alg.ring, basis, nxt):
            return len(powers) - 1, powers
        powers.append(nxt)
        basis = linalg.canonical_rows(alg.ring, list(basis) + [nxt], alg.dim)


@dataclass(frozen=True)
class PowerCycle:
    """Eventual periodicity of a^1, a^2, ...

    ``preperiod`` and ``period`` are the minimal rho, pi >= 1 with
    a^(rho+pi) = a^rho; ``powers`` lists a^1 .. a^(rho+pi-1).  Over Q both are
    None and ``powers`` stops at the span-stabilization bound.
    """

    element: Element
    preperiod: Optional[int]
    period: Optional[int]
    powers: tuple
    stabilized_power_span_bound: int

    def power(self, m: int) -> tuple:
        """a^m for m >= 1, folded onto the cycle."""
        if self.preperiod is None:
            return self.element.algebra.power(self.element.coords, m)
        rho, pi = self.preperiod, self.period
        if m >= rho:
            m = rho + (m - rho) % pi
        return self.powers[m - 1]


def _brent(alg: Algebra, a: tuple, budget: int) -> tuple[int, int]:
    """Brent cycle detection on x_0 = a, x_(i+1) = x_i a; returns (mu, lam)."""
    steps = 0
    power = lam = 1
    tortoise = a
    hare = alg.mul(a, a)
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = alg.mul(hare, a)
        lam += 1
        steps += 1
        if steps > budget:
            raise TooLarge("power-cycle multiplications", steps, budget)
    tortoise = hare = a
    for _ in range(lam):
        hare = alg.mul(hare, a)
    mu = 0
    while tortoise != hare:
        tortoise = alg.mul(tortoise, a)
        hare = alg.mul(hare, a)
        mu += 1
        steps += 2
        if steps > budget:
            raise TooLarge("power-cycle multiplications", steps, budget)
    return mu, lam


def power_cycle(a: Element, max_steps: int = DEFAULT_STEP_BUDGET) -> PowerCycle:
    alg = a.algebra
    bound, _ = power_span_bound(alg, a.coords)
    if not alg.ring.is_finite():
        powers = [a.coords]
        for _ in range(bound):
            powers.append(alg.mul(powers[-1], a.coords))
        return PowerCycle(a, None, None, tuple(powers), bound)
    mu, lam = _brent(alg, a.coords, max_steps)
    rho = mu + 1
    powers = [a.coords]
    while len(powers) < rho + lam - 1:
        powers.append(alg.mul(powers[-1], a.coords))
    return PowerCycle(a, rho, lam, tuple(powers), bound)
