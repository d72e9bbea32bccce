"""Algebra homomorphisms, quotients by two-sided ideals, images and preimages."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .algebra import Algebra, Element, make_algebra
from .errors import AlgebraMismatch, BadParameter, DimensionMismatch, NotAnIdeal
from .subspace import MathieuVariant, Subspace, is_theta_ideal


@dataclass(frozen=True)
class AlgebraHom:
    """phi(x)_k = sum_j matrix[k][j] x_j; ``matrix`` is target.dim x source.dim."""

    source: Algebra
    target: Algebra
    matrix: tuple
    surjective: bool

    def apply(self, x: Sequence) -> tuple:
        ring = self.target.ring
        out = []
        for row in self.matrix:
            acc = ring.zero
            for m, v in zip(row, x):
                if m != 0 and v != 0:
                    acc = ring.add(acc, ring.mul(m, v))
            out.append(acc)
        return tuple(out)

    def row_matrix(self) -> list[list]:
        """Transpose of ``matrix``: the map acting on row vectors."""
        return [[self.matrix[k][j] for k in range(self.target.dim)] for j in range(self.source.dim)]


def make_hom(source: Algebra, target: Algebra, matrix: Sequence[Sequence]) -> AlgebraHom:
    """Validate phi(1) = 1 and phi(e_i e_j) = phi(e_i) phi(e_j); detect surjectivity."""
    if source.ring != target.ring:
        raise BadParameter("homomorphism between algebras over different rings")
    ring = target.ring
    if len(matrix) != target.dim or any(len(r) != source.dim for r in matrix):
        raise DimensionMismatch("hom matrix must be target.dim x source.dim")
    matrix = tuple(tuple(ring.normalize(v) for v in r) for r in matrix)
    hom = AlgebraHom(source, target, matrix, False)
    if hom.apply(source.one) != target.one:
        raise BadParameter("phi(1) != 1")
    images = [hom.apply(source.basis_vector(i)) for i in range(source.dim)]
    for i in range(source.dim):
        for j in range(source.dim):
            lhs = hom.apply(source.mul(source.basis_vector(i), source.basis_vector(j)))
            if lhs != target.mul(images[i], images[j]):
                raise BadParameter(f"phi(e{i} e{j}) != phi(e{i}) phi(e{j})")
    full = linalg.canonical_rows(ring, [target.basis_vector(k) for k in range(target.dim)], target.dim)
    surjective = linalg.canonical_rows(ring, images, target.dim) == full
    return AlgebraHom(source, target, matrix, surjective)


def hom_image(phi: AlgebraHom, x) -> Element:
    if isinstance(x, Element) and x.algebra != phi.source:
        raise AlgebraMismatch("element is not in the source algebra")
    return Element(phi.target, phi.apply(phi.source.coords(x)))


def hom_preimage_subspace(phi: AlgebraHom, V: Subspace) -> Subspace:
    """All source vectors whose image lies in V."""
    if V.algebra != phi.target:
        raise AlgebraMismatch("subspace is not in the target algebra")
    rows = linalg.preimage(phi.source.ring, phi.row_matrix(), V.basis, phi.target.dim)
    return Subspace(phi.source, rows)


def kernel(phi: AlgebraHom) -> Subspace:
    return hom_preimage_subspace(phi, Subspace.zero(phi.target))


def quotient_algebra(A: Algebra, I: Subspace) -> tuple[Algebra, AlgebraHom]:
    """A/I on the complement basis of non-pivot coordinates, with the canonical surjection.

    Over Z/nZ the quotient module must be free, i.e. every pivot of the Howell
    form of I is 1; otherwise BadParameter is raised.
    """
    if I.algebra != A:
        raise AlgebraMismatch("ideal is not a subspace of this algebra")
    if not is_theta_ideal(I, MathieuVariant.TWO_SIDED):
        raise NotAnIdeal("subspace is not a two-sided ideal")
    ring = A.ring
    pivots = linalg.pivot_columns(I.basis)
    if any(row[c] != ring.one for row, c in zip(I.basis, pivots)):
        raise BadParameter("quotient module is not free over the base ring")
    keep = [j for j in range(A.dim) if j not in pivots]

    def project(x):
        remainder, _ = linalg.reduce_vector(ring, I.basis, x)
        return tuple(remainder[j] for j in keep)

    q = len(keep)
    consts = []
    for a in keep:
        plane = []
        for b in keep:
            plane.append(project(A.mul(A.basis_vector(a), A.basis_vector(b))))
        consts.append(plane)
    name = f"{A.name or 'A'}/I" if I.basis else A.name
    Q = make_algebra(ring, consts, project(A.one), name=name)
    matrix = [[project(A.basis_vector(j))[k] for j in range(A.dim)] for k in range(q)]
    return Q, make_hom(A, Q, matrix)
