"""Submodules of an algebra in canonical form, and the ideal-theoretic operations on them."""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from . import linalg
from .algebra import Algebra, Element, power_span_bound
from .errors import AlgebraMismatch, BadParameter, InfiniteRing, TooLarge

SUBSPACE_ENUMERATION_CAP = 10**4
SUBSPACE_ENUMERATION_MAX_DIM = 4


class MathieuVariant(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    PRE_TWO_SIDED = "pre"
    TWO_SIDED = "two"

    @classmethod
    def parse(cls, text) -> MathieuVariant:
        if isinstance(text, cls):
            return text
        aliases = {"left": cls.LEFT, "right": cls.RIGHT, "pre": cls.PRE_TWO_SIDED,
                   "pre-two-sided": cls.PRE_TWO_SIDED, "two": cls.TWO_SIDED,
                   "two-sided": cls.TWO_SIDED}
        try:
            return aliases[str(text).lower()]
        except KeyError:
            raise BadParameter(f"unknown variant {text!r}") from None

    def constraint(self, b_is_one: bool, c_is_one: bool) -> bool:
        """Whether a pair (b, c) is admissible for this variant."""
        if self is MathieuVariant.LEFT:
            return c_is_one
        if self is MathieuVariant.RIGHT:
            return b_is_one
        if self is MathieuVariant.PRE_TWO_SIDED:
            return b_is_one or c_is_one
        return True


ALL_VARIANTS = tuple(MathieuVariant)


@dataclass(frozen=True)
class Subspace:
    algebra: Algebra
    basis: tuple

    @classmethod
    def from_rows(cls, algebra: Algebra, rows: Iterable[Sequence]) -> Subspace:
        rows = [algebra.coords(r) for r in rows]
        return cls(algebra, linalg.canonical_rows(algebra.ring, rows, algebra.dim))

    @classmethod
    def zero(cls, algebra: Algebra) -> Subspace:
        return cls(algebra, ())

    @classmethod
    def whole(cls, algebra: Algebra) -> Subspace:
        return cls.from_rows(algebra, [algebra.basis_vector(i) for i in range(algebra.dim)])

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def member(self, x) -> bool:
        return linalg.in_span(self.algebra.ring, self.basis, self.algebra.coords(x))

    __contains__ = member

    def _same(self, other: Subspace):
        if other.algebra != self.algebra:
            raise AlgebraMismatch("subspaces of different algebras")

    def contains(self, other: Subspace) -> bool:
        self._same(other)
        return all(self.member(r) for r in other.basis)

    def sum(self, other: Subspace) -> Subspace:
        self._same(other)
        return Subspace.from_rows(self.algebra, list(self.basis) + list(other.basis))

    __add__ = sum

    def intersect(self, other: Subspace) -> Subspace:
        self._same(other)
        return Subspace(self.algebra, linalg.intersect(self.algebra.ring, self.basis, other.basis,
                                                       self.algebra.dim))

    def equals(self, other: Subspace) -> bool:
        return self == other

    def generators(self) -> list[Element]:
        return [Element(self.algebra, r) for r in self.basis]

    @cached_property
    def _elements(self) -> frozenset:
        ring = self.algebra.ring
        if not ring.is_finite():
            raise InfiniteRing("cannot list the elements of a submodule over Q")
        out = set()
        for coeffs in itertools.product(range(ring.modulus), repeat=len(self.basis)):
            out.add(linalg.mat_vec(ring, coeffs, self.basis) if self.basis else self.algebra.zero_vector)
        return frozenset(out)

    def elements(self) -> frozenset:
        """All coordinate tuples in the submodule (finite rings only)."""
        return self._elements

    def size(self) -> int:
        return len(self._elements)

    def to_json(self) -> list:
        ring = self.algebra.ring
        return [[ring.format(v) for v in row] for row in self.basis]

    def __str__(self) -> str:
        rows = ", ".join("(" + ", ".join(self.algebra.ring.format(v) for v in r) + ")" for r in self.basis)
        return "span{" + rows + "}"


def span(algebra: Algebra, generators: Iterable) -> Subspace:
    return Subspace.from_rows(algebra, generators)


def member(V: Subspace, x) -> bool:
    return V.member(x)


def subspace_sum(V: Subspace, W: Subspace) -> Subspace:
    return V.sum(W)


def intersect(V: Subspace, W: Subspace) -> Subspace:
    return V.intersect(W)


def equals(V: Subspace, W: Subspace) -> bool:
    return V.equals(W)


def contains(V: Subspace, W: Subspace) -> bool:
    return V.contains(W)


def image(V: Subspace, matrix: Sequence[Sequence]) -> Subspace:
    """Image of V under the row-vector linear map given by ``matrix``."""
    ring = V.algebra.ring
    return Subspace.from_rows(V.algebra, [linalg.mat_vec(ring, r, matrix) for r in V.basis])


def generated_subalgebra(a) -> Subspace:
    """R[a] = span{1, a, ..., a^K} for the first K where the span stops growing."""
    alg = a.algebra
    _, powers = power_span_bound(alg, a.coords)
    return Subspace.from_rows(alg, powers)


def theta_ideal(a: Element, variant) -> Subspace:
    variant = MathieuVariant.parse(variant)
    alg = a.algebra
    x = a.coords
    basis = [alg.basis_vector(i) for i in range(alg.dim)]
    if variant is MathieuVariant.LEFT:
        gens = [alg.mul(e, x) for e in basis]
    elif variant is MathieuVariant.RIGHT:
        gens = [alg.mul(x, e) for e in basis]
    elif variant is MathieuVariant.PRE_TWO_SIDED:
        gens = [alg.mul(e, x) for e in basis] + [alg.mul(x, e) for e in basis]
    else:
        gens = [alg.mul(alg.mul(e, x), f) for e in basis for f in basis]
    return Subspace.from_rows(alg, gens)


def is_theta_ideal(V: Subspace, variant) -> bool:
    """Closure of V under the multiplications of the variant.

    A pre-two-sided ideal is by convention a two-sided ideal.
    """
    variant = MathieuVariant.parse(variant)
    alg = V.algebra
    basis = [alg.basis_vector(i) for i in range(alg.dim)]
    left = variant in (MathieuVariant.LEFT, MathieuVariant.PRE_TWO_SIDED, MathieuVariant.TWO_SIDED)
    right = variant in (MathieuVariant.RIGHT, MathieuVariant.PRE_TWO_SIDED, MathieuVariant.TWO_SIDED)
    for v in V.basis:
        for e in basis:
            if left and not V.member(alg.mul(e, v)):
                return False
            if right and not V.member(alg.mul(v, e)):
                return False
    return True


def _refine(W: Subspace, matrices: list) -> Subspace:
    ring, d = W.algebra.ring, W.algebra.dim
    rows = W.basis
    for m in matrices:
        if not rows:
            break
        pre = linalg.preimage(ring, m, W.basis, d)
        rows = linalg.intersect(ring, rows, pre, d)
    return Subspace(W.algebra, rows)


def _largest_closed(V: Subspace, left: bool, right: bool) -> Subspace:
    alg = V.algebra
    matrices = []
    for i in range(alg.dim):
        e = alg.basis_vector(i)
        if left:
            matrices.append(alg.left_matrix(e))
        if right:
            matrices.append(alg.right_matrix(e))
    W = V
    while True:
        nxt = _refine(W, matrices)
        if nxt == W:
            return W
        W = nxt


def largest_theta_ideal(V: Subspace, variant) -> Subspace:
    """I_{theta,V}: the largest theta-ideal inside V (pre-two-sided: I_left + I_right)."""
    variant = MathieuVariant.parse(variant)
    if variant is MathieuVariant.LEFT:
        return _largest_closed(V, True, False)
    if variant is MathieuVariant.RIGHT:
        return _largest_closed(V, False, True)
    if variant is MathieuVariant.TWO_SIDED:
        return _largest_closed(V, True, True)
    return _largest_closed(V, True, False).sum(_largest_closed(V, False, True))


def _check_enumeration_caps(algebra: Algebra, cap: int, max_dim: int):
    ring = algebra.ring
    if not ring.is_finite():
        raise InfiniteRing("subspace enumeration needs a finite base ring")
    if algebra.dim > max_dim:
        raise TooLarge("algebra dimension for subspace enumeration", algebra.dim, max_dim)
    size = ring.modulus ** algebra.dim
    if size > cap:
        raise TooLarge("|R|^dim for subspace enumeration", size, cap)


def enumerate_subspaces(algebra: Algebra, cap: int = SUBSPACE_ENUMERATION_CAP,
                        max_dim: int = SUBSPACE_ENUMERATION_MAX_DIM,
                        within: Optional[Subspace] = None) -> list[Subspace]:
    """Every submodule of the algebra (or of ``within``), in a deterministic order.

    Breadth-first closure: each submodule of a finite module is reached by
    adjoining one element at a time, starting from zero.
    """
    _check_enumeration_caps(algebra, cap, max_dim)
    top = within if within is not None else Subspace.whole(algebra)
    candidates = sorted(top.elements())
    zero = Subspace.zero(algebra)
    seen = {zero}
    queue = deque([zero])
    while queue:
        S = queue.popleft()
        members = S.elements()
        for x in candidates:
            if x in members:
                continue
            T = Subspace.from_rows(algebra, list(S.basis) + [x])
            if T not in seen:
                seen.add(T)
                queue.append(T)
    return sorted(seen, key=lambda s: (s.size(), s.basis))
