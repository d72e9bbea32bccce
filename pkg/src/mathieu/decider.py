"""Decide (strong) theta-Mathieu status of submodules of finite algebras.

Two independent routes decide the Mathieu property:

* ``IDEMPOTENT_CRITERION``: V is Mathieu iff (e)_theta lies in V for every
  idempotent e of V.  Valid here because every element of a finite algebra is
  co-integral and R[a] is commutative, so the subalgebra R[a] is friendly
  toward a for every variant.
* ``BRUTE_FORCE``: the definition itself.  For every a whose powers lie in V
  and every admissible pair (b, c), the sequence b a^m c is eventually
  periodic with the period of a, so "m >> 0" is checked over one full period
  starting at the preperiod of a.

Strong Mathieu status is likewise decided twice: directly (some (a^N)_theta
inside V for each a in the radical) and by comparing the radical of V with
the radical of the largest theta-ideal inside V.

Witnesses are re-validated through the linear algebra path before a verdict
is returned.  Scans run in index order, so the reported witness is always the
lexicographically smallest one.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .algebra import Algebra, Element
from .errors import InfiniteRing, PreconditionFailed, SolveFailed, TooLarge
from .finite import DEFAULT_BUDGET, Budget, FiniteAlgebra, finite_algebra
from .radical import ElementKind, classify_element, idempotent_predicates
from .subspace import (MathieuVariant, Subspace, enumerate_subspaces, is_theta_ideal,
                       largest_theta_ideal, span, theta_ideal)


class Method(str, enum.Enum):
    IDEMPOTENT_CRITERION = "idempotent"
    BRUTE_FORCE = "brute"
    DIRECT = "direct"
    RADICAL_EQUALITY = "radical"


@dataclass(frozen=True)
class BadIdempotent:
    e: Element

    def to_json(self) -> dict:
        return {"kind": "BadIdempotent", "e": _fmt(self.e)}


@dataclass(frozen=True)
class BadTail:
    a: Element
    b: Element
    c: Element
    m: int
    period: int

    def to_json(self) -> dict:
        return {"kind": "BadTail", "a": _fmt(self.a), "b": _fmt(self.b), "c": _fmt(self.c),
                "m": self.m, "period": self.period}


def _fmt(x: Element) -> list[str]:
    return [x.algebra.ring.format(v) for v in x.coords]


@dataclass(frozen=True)
class MathieuVerdict:
    subject: Subspace
    variant: MathieuVariant
    is_ideal: bool
    is_mathieu: bool
    is_strong_mathieu: bool
    method: Method
    witness: Optional[object] = None
    seconds: float = field(default=0.0, compare=False)

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "subspace": self.subject.to_json(),
            "variant": self.variant.value,
            "is_ideal": self.is_ideal,
            "is_mathieu": self.is_mathieu,
            "is_strong_mathieu": self.is_strong_mathieu,
            "method": self.method.value,
            "witness": self.witness.to_json() if self.witness else None,
        }
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out


def _table(algebra: Algebra, budget: Budget) -> FiniteAlgebra:
    if not algebra.ring.is_finite():
        raise InfiniteRing("exhaustive decisions need a finite base ring")
    size = algebra.size()
    if size > budget.max_elements:
        raise TooLarge("algebra elements", size, budget.max_elements)
    return finite_algebra(algebra, budget.max_table)


def enumerate_idempotents(A: Algebra, restrict_to: Optional[Subspace] = None,
                          budget: Budget = DEFAULT_BUDGET) -> list[Element]:
    """All e with e^2 = e, in A or in the given submodule, by exhaustive scan."""
    if not A.ring.is_finite():
        raise InfiniteRing("idempotent enumeration needs a finite base ring")
    space = restrict_to if restrict_to is not None else Subspace.whole(A)
    q = A.ring.modulus
    count = q ** space.rank if restrict_to is not None else A.size()
    if count > budget.max_elements:
        raise TooLarge("elements to scan for idempotents", count, budget.max_elements)
    if A.size() <= budget.max_table:
        F = finite_algebra(A, budget.max_table)
        member = F.mask(space)
        return [Element(A, F.element(i)) for i in F.idempotents() if member[i]]
    return [Element(A, x) for x in sorted(space.elements()) if A.mul(x, x) == x]


# -- Mathieu ------------------------------------------------------------------

def _idempotent_route(F: FiniteAlgebra, V: Subspace, member: np.ndarray,
                      variant: MathieuVariant) -> Optional[BadIdempotent]:
    for e in F.idempotents():
        if not member[e]:
            continue
        if not member[F.theta_generators(int(e), variant)].all():
            return BadIdempotent(Element(V.algebra, F.element(int(e))))
    return None


def _brute_route(F: FiniteAlgebra, V: Subspace, member: np.ndarray, variant: MathieuVariant,
                 quantifier: str, budget: Budget) -> Optional[BadTail]:
    if quantifier == "all":
        qualifying = F.all_powers_mask(member)
    elif quantifier == "radical":
        qualifying = F.radical_mask(member)
    else:
        raise ValueError(f"unknown quantifier {quantifier!r}")
    n = F.size
    max_period = int(F.period.max())
    steps = n ** (3 if variant is MathieuVariant.TWO_SIDED else 2) * max_period
    if steps > budget.brute_force_steps:
        raise TooLarge("brute-force steps", steps, budget.brute_force_steps)
    mul = F.mul
    one = F.one
    for a in np.flatnonzero(qualifying):
        a = int(a)
        window = F.window[a]
        rho = int(F.preperiod[a])
        if variant is MathieuVariant.TWO_SIDED:
            hits = np.stack([member[mul[mul[:, x]]] for x in window])  # (m, b, c)
            ok = hits.all(axis=0)
            if not ok.all():
                b, c = np.argwhere(~ok)[0]
                return _tail_witness(F, a, int(b), int(c), hits[:, b, c], rho, len(window))
            continue
        candidates = []
        if variant in (MathieuVariant.LEFT, MathieuVariant.PRE_TWO_SIDED):
            hits = np.stack([member[mul[:, x]] for x in window])  # (m, b), c = 1
            bad = np.flatnonzero(~hits.all(axis=0))
            if bad.size:
                candidates.append((int(bad[0]), one, hits[:, bad[0]]))
        if variant in (MathieuVariant.RIGHT, MathieuVariant.PRE_TWO_SIDED):
            hits = np.stack([member[mul[x, :]] for x in window])  # (m, c), b = 1
            bad = np.flatnonzero(~hits.all(axis=0))
            if bad.size:
                candidates.append((one, int(bad[0]), hits[:, bad[0]]))
        if candidates:
            b, c, column = min(candidates, key=lambda t: (t[0], t[1]))
            return _tail_witness(F, a, b, c, column, rho, len(window))
    return None


def _tail_witness(F: FiniteAlgebra, a: int, b: int, c: int, column, rho: int, period: int) -> BadTail:
    m = rho + int(np.flatnonzero(~np.asarray(column))[0])
    alg = F.algebra
    return BadTail(Element(alg, F.element(a)), Element(alg, F.element(b)), Element(alg, F.element(c)),
                   m, period)


def _revalidate(witness, V: Subspace, variant: MathieuVariant, quantifier: str = "all") -> None:
    alg = V.algebra
    if isinstance(witness, BadIdempotent):
        e = witness.e.coords
        if alg.mul(e, e) != e or not V.member(e) or V.contains(theta_ideal(witness.e, variant)):
            raise SolveFailed(f"invalid idempotent witness {witness}")
        return
    a, b, c = witness.a.coords, witness.b.coords, witness.c.coords
    m, pi = witness.m, witness.period
    powers = range(1, m + pi + 1) if quantifier == "all" else range(m, m + pi)
    if not all(V.member(alg.power(a, k)) for k in powers):
        raise SolveFailed(f"tail witness element has powers outside V: {witness}")
    if not variant.constraint(b == alg.one, c == alg.one):
        raise SolveFailed(f"tail witness violates the variant constraint: {witness}")
    for k in (m, m + pi, m + 2 * pi):
        if V.member(alg.mul(alg.mul(b, alg.power(a, k)), c)):
            raise SolveFailed(f"tail witness does not recur on the cycle: {witness}")


def is_mathieu(V: Subspace, variant, method=Method.IDEMPOTENT_CRITERION,
               budget: Budget = DEFAULT_BUDGET, quantifier: str = "all") -> MathieuVerdict:
    """Decide whether V is a theta-Mathieu submodule.

    ``quantifier`` selects the brute-force hypothesis on ``a``: ``"all"`` asks
    for a^m in V for every m >= 1, ``"radical"`` only for m >> 0.
    """
    start = time.perf_counter()
    variant = MathieuVariant.parse(variant)
    method = Method(method)
    F = _table(V.algebra, budget)
    member = F.mask(V)
    if method is Method.IDEMPOTENT_CRITERION:
        witness = _idempotent_route(F, V, member, variant)
    elif method is Method.BRUTE_FORCE:
        witness = _brute_route(F, V, member, variant, quantifier, budget)
    else:
        raise ValueError(f"{method} does not decide the Mathieu property")
    if witness is not None:
        _revalidate(witness, V, variant, quantifier)
    strong = _strong_direct(F, V, member, variant)
    return MathieuVerdict(V, variant, is_theta_ideal(V, variant), witness is None, strong, method,
                          witness, time.perf_counter() - start)


def check_idempotent_certificate(V: Subspace, variant, idempotents: Sequence) -> Optional[BadIdempotent]:
    """One-sided refutation over any base ring, Q included.

    Returns a witness when some supplied idempotent of V generates a
    theta-ideal not contained in V, which proves V is not Mathieu.  ``None``
    proves nothing unless the list is known to be complete.
    """
    variant = MathieuVariant.parse(variant)
    alg = V.algebra
    for e in idempotents:
        x = alg.coords(e)
        if alg.mul(x, x) != x:
            raise PreconditionFailed(f"{x} is not an idempotent")
        if V.member(x) and not V.contains(theta_ideal(Element(alg, x), variant)):
            return BadIdempotent(Element(alg, x))
    return None


# -- strong Mathieu -------------------------------------------------------------

def _strong_direct(F: FiniteAlgebra, V: Subspace, member: np.ndarray, variant: MathieuVariant) -> bool:
    rad = F.radical_mask(member)
    for a in np.flatnonzero(rad):
        a = int(a)
        top = int(F.preperiod[a] + F.period[a])
        if not any(member[F.theta_generators(F.power(a, N), variant)].all() for N in range(top)):
            return False
    return True


def _strong_radical_equality(F: FiniteAlgebra, V: Subspace, member: np.ndarray,
                             variant: MathieuVariant) -> bool:
    inner = largest_theta_ideal(V, variant)
    return bool((F.radical_mask(member) == F.radical_mask(F.mask(inner))).all())


def is_strong_mathieu(V: Subspace, variant, method=Method.DIRECT, budget: Budget = DEFAULT_BUDGET) -> bool:
    variant = MathieuVariant.parse(variant)
    method = Method(method)
    F = _table(V.algebra, budget)
    member = F.mask(V)
    if method is Method.DIRECT:
        return _strong_direct(F, V, member, variant)
    if method is Method.RADICAL_EQUALITY:
        return _strong_radical_equality(F, V, member, variant)
    raise ValueError(f"{method} does not decide the strong Mathieu property")


def radical_elements(V: Subspace, budget: Budget = DEFAULT_BUDGET) -> list[Element]:
    """r(V) by exhaustive scan."""
    F = _table(V.algebra, budget)
    rad = F.radical_mask(F.mask(V))
    return [Element(V.algebra, F.element(int(i))) for i in np.flatnonzero(rad)]


def nilpotent_elements(A: Algebra, budget: Budget = DEFAULT_BUDGET) -> list[Element]:
    F = _table(A, budget)
    return [Element(A, F.element(int(i))) for i in np.flatnonzero(F.nilpotents())]


def sandwich_check(M: Subspace, variant, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Every V between I_{theta,M} and M is strong Mathieu with r(V) = r(I_{theta,M})."""
    variant = MathieuVariant.parse(variant)
    F = _table(M.algebra, budget)
    member = F.mask(M)
    if not _strong_direct(F, M, member, variant):
        raise PreconditionFailed("M is not a strong Mathieu subspace")
    inner = largest_theta_ideal(M, variant)
    target = F.radical_mask(F.mask(inner))
    for V in enumerate_subspaces(M.algebra, budget.subspace_cap, budget.subspace_max_dim, within=M):
        if not V.contains(inner):
            continue
        mask = F.mask(V)
        if not _strong_direct(F, V, mask, variant) or not (F.radical_mask(mask) == target).all():
            return False
    return True


# -- cyclic submodules, locality, quasi-stability --------------------------------

@dataclass(frozen=True)
class CyclicClassification:
    """The four statements about Ra; they must satisfy 1 => 2 => 3 => 4."""

    cyclic_is_generated_ideal_or_no_semi_idempotent: bool
    strong_mathieu: bool
    mathieu: bool
    ideal_or_not_quasi_idempotent: bool

    @property
    def statements(self) -> tuple[bool, bool, bool, bool]:
        return (self.cyclic_is_generated_ideal_or_no_semi_idempotent, self.strong_mathieu,
                self.mathieu, self.ideal_or_not_quasi_idempotent)

    @property
    def chain_holds(self) -> bool:
        s = self.statements
        return all(not s[i] or s[i + 1] for i in range(3))


def classify_cyclic(a: Element, variant, method=Method.IDEMPOTENT_CRITERION,
                    budget: Budget = DEFAULT_BUDGET) -> CyclicClassification:
    variant = MathieuVariant.parse(variant)
    if a.is_zero():
        raise PreconditionFailed("the cyclic classification needs a nonzero element")
    A = a.algebra
    F = _table(A, budget)
    Ra = span(A, [a])
    member = F.mask(Ra)
    rad = F.radical_mask(member)
    no_semi = True
    for x in np.flatnonzero(rad):
        if int(x) == F.zero:
            continue
        if idempotent_predicates(Element(A, F.element(int(x)))).is_semi_idempotent:
            no_semi = False
            break
    s1 = Ra == theta_ideal(a, variant) or no_semi
    s2 = _strong_direct(F, Ra, member, variant)
    s3 = is_mathieu(Ra, variant, method, budget).is_mathieu
    s4 = is_theta_ideal(Ra, variant) or not idempotent_predicates(a).is_quasi_idempotent
    result = CyclicClassification(s1, s2, s3, s4)
    if not result.chain_holds:
        raise SolveFailed(f"implication chain broken for {a}: {result.statements}")
    return result


def is_local(A: Algebra, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Whether the non-units form a two-sided ideal (closed under + and both multiplications)."""
    F = _table(A, budget)
    if F.d == 0:
        return False
    nonunit = ~F.units()
    idx = np.flatnonzero(nonunit)
    if idx.size == 0:
        return False
    q = F.q
    coords = F.coords[idx]
    sums = ((coords[:, None, :] + coords[None, :, :]) % q) @ F.weights
    if not nonunit[sums].all():
        return False
    return bool(nonunit[F.mul[idx, :]].all() and nonunit[F.mul[:, idx]].all())


@dataclass(frozen=True)
class ChainRecord:
    statements: tuple
    equivalent: bool = False

    @property
    def chain_holds(self) -> bool:
        s = self.statements
        if self.equivalent:
            return len(set(s)) == 1
        return all(not s[i] or s[i + 1] for i in range(len(s) - 1))


def lemma_36_chain(A: Algebra, budget: Budget = DEFAULT_BUDGET) -> ChainRecord:
    """(1) every non-unit nilpotent, (2) local, (3) no nontrivial idempotent; 1 => 2 => 3."""
    F = _table(A, budget)
    units = F.units()
    nil = F.nilpotents()
    s1 = bool((units | nil).all())
    s2 = is_local(A, budget)
    s3 = set(int(e) for e in F.idempotents()) <= {F.zero, F.one}
    record = ChainRecord((s1, s2, s3))
    if not record.chain_holds:
        raise SolveFailed(f"lemma chain broken: {record.statements}")
    return record


def zero_divisor_mask(F: FiniteAlgebra) -> np.ndarray:
    """Left or right zero divisors (0 included)."""
    zero_products = F.mul == F.zero
    zero_products[:, F.zero] = False
    zero_products[F.zero, :] = False
    out = zero_products.any(axis=1) | zero_products.any(axis=0)
    out[F.zero] = True
    return out


@lru_cache(maxsize=16)
def _element_kinds(A: Algebra, budget: Budget) -> tuple:
    F = _table(A, budget)
    return tuple(classify_element(Element(A, F.element(i))).kind for i in range(F.size))


def idempotent_criterion_chain(V: Subspace, budget: Budget = DEFAULT_BUDGET) -> ChainRecord:
    """For r(V): (1) every non-unit nilpotent, (2) every zero divisor nilpotent,
    (3) V holds no nontrivial idempotent.  The three are equivalent.

    Statement (1) is evaluated through the element classifier, (2) through the
    multiplication table, (3) through the idempotent scan.
    """
    A = V.algebra
    F = _table(A, budget)
    member = F.mask(V)
    rad = np.flatnonzero(F.radical_mask(member))
    kinds = _element_kinds(A, budget)
    s1 = all(kinds[int(x)] is not ElementKind.NEITHER for x in rad)
    zd = zero_divisor_mask(F)
    nil = F.nilpotents()
    s2 = all(nil[x] for x in rad if zd[x])
    s3 = all(int(e) in (F.zero, F.one) for e in F.idempotents() if member[e])
    record = ChainRecord((s1, s2, s3), equivalent=True)
    if not record.chain_holds:
        raise SolveFailed(f"equivalence broken on {V}: {record.statements}")
    return record


@dataclass(frozen=True)
class QuasiStability:
    quasi_stable: bool
    witness: Optional[Subspace]
    checked: int
    local: bool
    sufficient_condition: bool
    contains_one: bool

    def to_json(self) -> dict:
        return {"quasi_stable": self.quasi_stable,
                "witness": self.witness.to_json() if self.witness is not None else None,
                "subspaces_checked": self.checked, "local": self.local,
                "sufficient_condition": self.sufficient_condition,
                "subspaces": "containing 1" if self.contains_one else "not containing 1"}


QUASI_STABLE_MAX_RING = 5


def is_quasi_stable(A: Algebra, variant=MathieuVariant.TWO_SIDED, budget: Budget = DEFAULT_BUDGET,
                    contains_one: bool = False) -> QuasiStability:
    """Exhaustively decide whether the relevant submodules are all theta-Mathieu.

    By default the submodules are those *not* containing 1; that is the class
    for which locality is a sufficient condition.  ``contains_one=True``
    checks the submodules containing 1 instead.  Under that reading any V
    with 1 in V is Mathieu only when V = A (take a = 1), so it reduces to
    "span{1} = A or no proper submodule contains 1".
    """
    variant = MathieuVariant.parse(variant)
    if not A.ring.is_finite():
        raise InfiniteRing("quasi-stability check needs a finite base ring")
    if A.ring.modulus > QUASI_STABLE_MAX_RING:
        raise TooLarge("base ring size for quasi-stability", A.ring.modulus, QUASI_STABLE_MAX_RING)
    local = is_local(A, budget)
    checked = 0
    witness = None
    for V in enumerate_subspaces(A, budget.subspace_cap, budget.subspace_max_dim):
        if V.member(A.one) != contains_one:
            continue
        checked += 1
        if witness is None and not is_mathieu(V, variant, Method.IDEMPOTENT_CRITERION, budget).is_mathieu:
            witness = V
    quasi = witness is None
    if local and not quasi and not contains_one:
        raise SolveFailed("local algebra found not quasi-stable")
    return QuasiStability(quasi, witness, checked, local, local, contains_one)
