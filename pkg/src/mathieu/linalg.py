"""Canonical row forms and row-span solves over the supported base rings.

Over a field the canonical form is the reduced row echelon form.  Over Z/nZ it
is the Howell form: pivots are divisors of ``n``, entries above a pivot are
reduced modulo it, and every row-span element whose first ``k`` entries vanish
is spanned by the rows whose pivot lies at column ``k`` or later.  In both
cases two matrices have the same row span exactly when their canonical forms
coincide, and reduction of a vector against the canonical rows produces a
unique representative of its coset modulo the span.

Kernels and solves go through the canonical form of ``[rows | I]``: the rows
with a vanishing left block carry the left kernel (already canonical), the
others carry the transform that expresses each canonical row in terms of the
input rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .errors import DimensionMismatch, RingMismatch
from .rings import RawValue, RingSpec, Scalar

Row = tuple


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def unit_normalizer(a: int, n: int) -> int:
    """A unit u of Z/nZ with u*a = gcd(a, n) (mod n)."""
    g = gcd(a, n)
    m = n // g
    if m == 1:
        return 1
    u = pow((a // g) % m, -1, m)
    while gcd(u, n) != 1:
        u += m
    return u % n


def _leading(row: Sequence[RawValue]) -> int:
    for idx, v in enumerate(row):
        if v != 0:
            return idx
    return -1


def _rref(ring: RingSpec, rows: list[list], ncols: int) -> list[list]:
    rows = [r for r in rows if any(v != 0 for v in r)]
    out: list[list] = []
    for col in range(ncols):
        pivot = next((r for r in rows if r[col] != 0), None)
        if pivot is None:
            continue
        rows.remove(pivot)
        inv = ring.inverse(pivot[col])
        pivot = [ring.mul(inv, v) for v in pivot]
        for i, r in enumerate(rows):
            if r[col] != 0:
                f = r[col]
                rows[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(r, pivot)]
        for i, r in enumerate(out):
            if r[col] != 0:
                f = r[col]
                out[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(r, pivot)]
        out.append(pivot)
        rows = [r for r in rows if any(v != 0 for v in r)]
    return out


def _howell(n: int, rows: list[list], ncols: int) -> list[list]:
    work = [[v % n for v in r] for r in rows]
    work = [r for r in work if any(r)]
    out: list[list] = []
    pivots: list[int] = []
    for col in range(ncols):
        pivot = None
        rest = []
        for r in work:
            if r[col] == 0:
                rest.append(r)
            elif pivot is None:
                pivot = r
            else:
                # unimodular 2x2 step: [s t; b/g -a/g] has determinant -1
                a, b = pivot[col], r[col]
                g, s, t = _xgcd(a, b)
                ag, bg = a // g, b // g
                pivot, other = (
                    [(s * x + t * y) % n for x, y in zip(pivot, r)],
                    [(bg * x - ag * y) % n for x, y in zip(pivot, r)],
                )
                if any(other):
                    rest.append(other)
        if pivot is None:
            work = rest
            continue
        u = unit_normalizer(pivot[col], n)
        pivot = [u * x % n for x in pivot]
        g = pivot[col]
        ann = [(n // g) * x % n for x in pivot]
        if any(ann):
            rest.append(ann)
        out.append(pivot)
        pivots.append(col)
        work = rest
    # reduce entries above each pivot; later pivots never disturb earlier columns
    for i, col in enumerate(pivots):
        g = out[i][col]
        for j in range(i):
            q = out[j][col] // g
            if q:
                out[j] = [(x - q * y) % n for x, y in zip(out[j], out[i])]
    return out


def canonical_rows(ring: RingSpec, rows: Sequence[Sequence[RawValue]], ncols: int) -> tuple[Row, ...]:
    """Canonical nonzero rows spanning the same row space / row module."""
    rows = [list(r) for r in rows]
    for r in rows:
        if len(r) != ncols:
            raise DimensionMismatch(f"row of length {len(r)}, expected {ncols}")
    if ring.is_field():
        out = _rref(ring, rows, ncols)
    else:
        out = _howell(ring.modulus, rows, ncols)
    return tuple(tuple(r) for r in out)


def pivot_columns(rows: Sequence[Row]) -> list[int]:
    return [_leading(r) for r in rows]


def reduce_vector(ring: RingSpec, basis: Sequence[Row], vector: Sequence[RawValue],
                  track: Optional[list[Sequence[RawValue]]] = None):
    """Reduce ``vector`` against canonical ``basis``.

    Returns ``(remainder, coefficients)``; the remainder is the canonical coset
    representative, zero iff ``vector`` lies in the span.  ``coefficients``
    expresses ``vector - remainder`` in terms of the basis rows, or in terms of
    ``track`` rows when a transform per basis row is supplied.
    """
    r = list(vector)
    width = len(track[0]) if track else len(basis)
    coeffs = [ring.zero] * width
    for i, row in enumerate(basis):
        col = _leading(row)
        if r[col] == 0:
            continue
        if ring.is_field():
            q = r[col]
        else:
            q = r[col] // row[col]
        if q == 0:
            continue
        r = [ring.sub(x, ring.mul(q, y)) for x, y in zip(r, row)]
        if track is None:
            coeffs[i] = ring.add(coeffs[i], q)
        else:
            coeffs = [ring.add(c, ring.mul(q, t)) for c, t in zip(coeffs, track[i])]
    return tuple(r), tuple(coeffs)


def in_span(ring: RingSpec, basis: Sequence[Row], vector: Sequence[RawValue]) -> bool:
    remainder, _ = reduce_vector(ring, basis, vector)
    return not any(v != 0 for v in remainder)


@dataclass(frozen=True)
class Augmented:
    """Canonical form of ``[rows | I]`` split into its two parts."""

    basis: tuple[Row, ...]
    transforms: tuple[Row, ...]
    kernel: tuple[Row, ...]


def augmented_form(ring: RingSpec, rows: Sequence[Sequence[RawValue]], ncols: int) -> Augmented:
    m = len(rows)
    aug = []
    for i, r in enumerate(rows):
        if len(r) != ncols:
            raise DimensionMismatch(f"row of length {len(r)}, expected {ncols}")
        ident = [ring.zero] * m
        ident[i] = ring.one
        aug.append(list(r) + ident)
    canon = canonical_rows(ring, aug, ncols + m)
    basis, transforms, kernel = [], [], []
    for row in canon:
        left, right = row[:ncols], row[ncols:]
        if any(v != 0 for v in left):
            basis.append(left)
            transforms.append(right)
        else:
            kernel.append(right)
    return Augmented(tuple(basis), tuple(transforms), tuple(kernel))


def left_kernel(ring: RingSpec, rows: Sequence[Sequence[RawValue]], ncols: int) -> tuple[Row, ...]:
    """Canonical generators of ``{c : c . rows = 0}``."""
    return augmented_form(ring, rows, ncols).kernel


def solve(ring: RingSpec, rows: Sequence[Sequence[RawValue]], ncols: int,
          target: Sequence[RawValue]) -> Optional[tuple]:
    """Canonical ``c`` with ``c . rows = target``, or None.

    Among all solutions the one returned is reduced modulo the kernel, so the
    answer depends only on the system and not on elimination order.
    """
    if len(target) != ncols:
        raise DimensionMismatch(f"target of length {len(target)}, expected {ncols}")
    if not rows:
        return () if not any(v != 0 for v in target) else None
    aug = augmented_form(ring, rows, ncols)
    remainder, coeffs = reduce_vector(ring, aug.basis, target, track=list(aug.transforms) or None)
    if any(v != 0 for v in remainder):
        return None
    if not aug.transforms:
        coeffs = tuple([ring.zero] * len(rows))
    coeffs, _ = reduce_vector(ring, aug.kernel, coeffs)
    return coeffs


def mat_vec(ring: RingSpec, vector: Sequence[RawValue], matrix: Sequence[Sequence[RawValue]]) -> tuple:
    """Row vector times matrix."""
    ncols = len(matrix[0]) if matrix else 0
    out = [ring.zero] * ncols
    for v, row in zip(vector, matrix):
        if v == 0:
            continue
        out = [ring.add(o, ring.mul(v, x)) for o, x in zip(out, row)]
    return tuple(out)


def preimage(ring: RingSpec, matrix: Sequence[Sequence[RawValue]], target_basis: Sequence[Row],
             ncols: int) -> tuple[Row, ...]:
    """Canonical generators of ``{x : x . matrix in span(target_basis)}``."""
    nsrc = len(matrix)
    stacked = [list(r) for r in matrix] + [[ring.neg(v) for v in r] for r in target_basis]
    kernel = left_kernel(ring, stacked, ncols)
    return canonical_rows(ring, [k[:nsrc] for k in kernel], nsrc)


def intersect(ring: RingSpec, a: Sequence[Row], b: Sequence[Row], ncols: int) -> tuple[Row, ...]:
    if not a or not b:
        return ()
    kernel = left_kernel(ring, list(a) + [[ring.neg(v) for v in r] for r in b], ncols)
    return canonical_rows(ring, [mat_vec(ring, k[:len(a)], a) for k in kernel], ncols)


# public Scalar-level surface ------------------------------------------------

@dataclass(frozen=True)
class ScalarMatrix:
    ring: RingSpec
    rows: int
    cols: int
    entries: tuple[RawValue, ...]

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Sequence[Sequence], cols: Optional[int] = None) -> ScalarMatrix:
        rows = [[ring.normalize(v) for v in r] for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged matrix")
        return cls(ring, len(rows), cols, tuple(v for r in rows for v in r))

    def row_list(self) -> list[tuple]:
        c = self.cols
        return [self.entries[i * c:(i + 1) * c] for i in range(self.rows)]

    def __getitem__(self, idx: tuple[int, int]) -> Scalar:
        i, j = idx
        return Scalar(self.ring, self.entries[i * self.cols + j])


def canonical_form(m: ScalarMatrix) -> ScalarMatrix:
    return ScalarMatrix.from_rows(m.ring, canonical_rows(m.ring, m.row_list(), m.cols), m.cols)


def solve_membership(rows: ScalarMatrix, target: Sequence) -> Optional[list[Scalar]]:
    ring = rows.ring
    for t in target:
        if isinstance(t, Scalar) and t.ring != ring:
            raise RingMismatch(f"{t.ring} vs {ring}")
    values = [ring.normalize(t) for t in target]
    coeffs = solve(ring, rows.row_list(), rows.cols, values)
    if coeffs is None:
        return None
    return [Scalar(ring, c) for c in coeffs]
