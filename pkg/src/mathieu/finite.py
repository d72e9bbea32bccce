"""Exhaustive tables for algebras over finite base rings.

Elements are indexed by their coordinates read as base-``q`` digits, first
coordinate most significant, so index order is lexicographic coordinate order.
The multiplication table, per-element power cycles and submodule membership
masks turn the brute-force deciders into array lookups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import Algebra
from .errors import InfiniteRing, TooLarge
from .subspace import Subspace

DEFAULT_MAX_ELEMENTS = 2**20
DEFAULT_MAX_TABLE = 4096


@dataclass(frozen=True)
class Budget:
    """Explicit caps; exceeding any of them raises TooLarge."""

    max_elements: int = DEFAULT_MAX_ELEMENTS
    max_table: int = DEFAULT_MAX_TABLE
    step_budget: int = 10**6
    brute_force_steps: int = 10**9
    subspace_cap: int = 10**4
    subspace_max_dim: int = 4


DEFAULT_BUDGET = Budget()


class FiniteAlgebra:
    def __init__(self, algebra: Algebra, max_table: int = DEFAULT_MAX_TABLE):
        ring = algebra.ring
        if not ring.is_finite():
            raise InfiniteRing(f"{algebra!r} is over an infinite ring")
        self.algebra = algebra
        self.q = q = ring.modulus
        self.d = d = algebra.dim
        self.size = q**d
        if self.size > max_table:
            raise TooLarge("elements for the multiplication table", self.size, max_table)
        self.weights = np.array([q ** (d - 1 - i) for i in range(d)], dtype=np.int64)
        self.coords = np.array(list(itertools.product(range(q), repeat=d)), dtype=np.int64).reshape(self.size, d)
        consts = np.array(algebra.structure_constants, dtype=np.int64).reshape(d, d, d)
        prod = np.einsum("ai,bj,ijk->abk", self.coords, self.coords, consts) % q
        self.mul = (prod @ self.weights).astype(np.int64) if d else np.zeros((1, 1), dtype=np.int64)
        self.scal = (((np.arange(q)[:, None, None] * self.coords[None, :, :]) % q) @ self.weights
                     if d else np.zeros((q, 1), dtype=np.int64))
        self.one = self.index(algebra.one)
        self.zero = 0
        self.basis_idx = np.array([self.index(algebra.basis_vector(i)) for i in range(d)], dtype=np.int64)
        self._cycles()

    def index(self, coords) -> int:
        return int(sum(int(c) * int(w) for c, w in zip(coords, self.weights)))

    def element(self, idx: int) -> tuple:
        return tuple(int(v) for v in self.coords[idx])

    def _cycles(self):
        n = self.size
        self.preperiod = np.zeros(n, dtype=np.int64)
        self.period = np.zeros(n, dtype=np.int64)
        self.prefix: list[list[int]] = []
        self.window: list[list[int]] = []
        mul = self.mul
        for a in range(n):
            seen: dict[int, int] = {}
            seq = []
            x = a
            m = 1
            while x not in seen:
                seen[x] = m
                seq.append(x)
                x = int(mul[x, a])
                m += 1
            rho = seen[x]
            self.preperiod[a] = rho
            self.period[a] = m - rho
            self.prefix.append(seq[:rho - 1])
            self.window.append(seq[rho - 1:])

    def power(self, a: int, m: int) -> int:
        """a^m for m >= 0."""
        if m == 0:
            return self.one
        rho, pi = int(self.preperiod[a]), int(self.period[a])
        if m < rho:
            return self.prefix[a][m - 1]
        return self.window[a][(m - rho) % pi]

    def mask(self, V: Subspace) -> np.ndarray:
        out = np.zeros(self.size, dtype=bool)
        if not V.basis:
            out[0] = True
            return out
        basis = np.array(V.basis, dtype=np.int64)
        k = len(V.basis)
        combos = np.array(list(itertools.product(range(self.q), repeat=k)), dtype=np.int64)
        vecs = (combos @ basis) % self.q
        out[vecs @ self.weights] = True
        return out

    def radical_mask(self, member: np.ndarray) -> np.ndarray:
        """Elements whose eventual powers all lie in the masked set."""
        return np.array([bool(member[w].all()) for w in self.window], dtype=bool)

    def all_powers_mask(self, member: np.ndarray) -> np.ndarray:
        """Elements with a^m in the masked set for every m >= 1."""
        return np.array([bool(member[w].all()) and bool(member[p].all()) if p else bool(member[w].all())
                         for w, p in zip(self.window, self.prefix)], dtype=bool)

    def idempotents(self) -> np.ndarray:
        idx = np.arange(self.size)
        return idx[self.mul[idx, idx] == idx]

    def units(self) -> np.ndarray:
        hits = self.mul == self.one
        both = hits & hits.T
        return both.any(axis=1)

    def nilpotents(self) -> np.ndarray:
        return np.array([all(x == 0 for x in w) for w in self.window], dtype=bool)

    def theta_generators(self, x: int, variant) -> np.ndarray:
        """Indices spanning (x)_theta: products of x with basis elements."""
        from .subspace import MathieuVariant

        b = self.basis_idx
        if variant is MathieuVariant.LEFT:
            return self.mul[b, x]
        if variant is MathieuVariant.RIGHT:
            return self.mul[x, b]
        if variant is MathieuVariant.PRE_TWO_SIDED:
            return np.concatenate([self.mul[b, x], self.mul[x, b]])
        return self.mul[self.mul[b, x]][:, b].ravel()


@lru_cache(maxsize=64)
def finite_algebra(algebra: Algebra, max_table: int = DEFAULT_MAX_TABLE) -> FiniteAlgebra:
    return FiniteAlgebra(algebra, max_table)
