"""Radical membership, co-integrality indices and the idempotent attached to an element.

For an element ``a`` write M_k = a^k R[a].  The descending chain
M_0 >= M_1 >= ... stabilizes over fields and finite rings; the first index N
with M_N = M_(N+1) is the co-integrality index.  Solving a^N = a^(N+1) g(a)
gives the vanishing polynomial f = t^N (1 - t g).  With h = 1 - t g the
identity

    1 = (1 - h)^N + h * sum_{i<N} (1 - h)^i

shows that p = (1 - h)^N = (t g)^N is an idempotent modulo f lying in t^N R[t],
with t^N = t^N p modulo f.  The certificate records explicit cofactors for both
congruences so they can be re-checked by plain polynomial multiplication.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from . import linalg, poly
from .algebra import Algebra, Element, power_cycle, power_span_bound
from .errors import AlgebraMismatch, PreconditionFailed, SolveFailed
from .subspace import Subspace, generated_subalgebra, image


def evaluate(alg: Algebra, p: Sequence, a: Sequence) -> tuple:
    """p(a) by Horner's rule."""
    result = alg.zero_vector
    for c in reversed(p):
        result = alg.add(alg.mul(result, a), alg.scale(c, alg.one))
    return result


@dataclass(frozen=True)
class TailSpan:
    element: Element
    start: int
    span: Subspace


def tail_span(a: Element) -> TailSpan:
    """span{a^m : m >= M} at the first M where S_M = a S_M."""
    alg = a.algebra
    R_a = generated_subalgebra(a)
    S = image(R_a, alg.left_matrix(a.coords))
    k = 1
    while True:
        nxt = image(S, alg.left_matrix(a.coords))
        if nxt == S:
            return TailSpan(a, k, S)
        S = nxt
        k += 1


def is_in_radical(a: Element, V: Subspace) -> bool:
    if a.algebra != V.algebra:
        raise AlgebraMismatch("element and subspace live in different algebras")
    return V.contains(tail_span(a).span)


@dataclass(frozen=True)
class CointegralCertificate:
    element: Element
    index: int
    chain: tuple
    g_poly: tuple
    h_poly: tuple
    p_poly: tuple
    f_poly: tuple
    idempotent_cofactor: tuple
    absorption_cofactor: tuple

    @property
    def p_of_a(self) -> tuple:
        return evaluate(self.element.algebra, self.p_poly, self.element.coords)

    def to_json(self) -> dict:
        ring = self.element.algebra.ring
        fmt = lambda p: [ring.format(c) for c in p]  # noqa: E731
        return {
            "element": [ring.format(v) for v in self.element.coords],
            "N": self.index,
            "g": fmt(self.g_poly),
            "h": fmt(self.h_poly),
            "f": fmt(self.f_poly),
            "p": fmt(self.p_poly),
            "p_of_a": [ring.format(v) for v in self.p_of_a],
            "chain_ranks": [len(m.basis) for m in self.chain],
        }


def polynomial_congruences_hold(cert: CointegralCertificate) -> dict:
    """The three congruences on p, checked by exact polynomial arithmetic.

    ``p = 0 mod t^N`` is a coefficient check; the two congruences modulo f
    are checked as p^2 - p = f q1 and t^N - t^N p = f q2 with the recorded
    cofactors, and additionally by Euclidean division when lc(f) is a unit.
    """
    ring = cert.element.algebra.ring
    N, p, f = cert.index, cert.p_poly, cert.f_poly
    tN = poly.monomial(ring, N)
    low = all(c == 0 for c in p[:N])
    idem_lhs = poly.sub(ring, poly.mul(ring, p, p), p)
    absorb_lhs = poly.sub(ring, tN, poly.mul(ring, tN, p))
    idem = idem_lhs == poly.mul(ring, f, cert.idempotent_cofactor)
    absorb = absorb_lhs == poly.mul(ring, f, cert.absorption_cofactor)
    if f and ring.is_unit(f[-1]):
        idem = idem and poly.divmod_poly(ring, idem_lhs, f)[1] == ()
        absorb = absorb and poly.divmod_poly(ring, absorb_lhs, f)[1] == ()
    return {"p_zero_mod_tN": low, "p_idempotent_mod_f": idem, "tN_absorbs_p_mod_f": absorb}


def cointegral_certificate(a: Element) -> CointegralCertificate:
    alg = a.algebra
    ring = alg.ring
    x = a.coords
    bound, _ = power_span_bound(alg, x)
    left_a = alg.left_matrix(x)
    chain = [generated_subalgebra(a)]
    chain.append(image(chain[0], left_a))
    while chain[-2] != chain[-1]:
        chain.append(image(chain[-1], left_a))
    N = len(chain) - 2

    # a^N = sum_j g_j a^(N+1+j); a^(N+1) R[a] is spanned by j = 0..bound
    aN = alg.power(x, N)
    rows = [alg.power(x, N + 1 + j) for j in range(bound + 1)]
    g = linalg.solve(ring, rows, alg.dim, aN)
    if g is None:
        raise SolveFailed(f"a^{N} not found in a^{N + 1} R[a]")
    g = poly.trim(ring, g)
    tg = poly.mul(ring, poly.monomial(ring, 1), g)
    h = poly.sub(ring, (ring.one,), tg)
    f = poly.mul(ring, poly.monomial(ring, N), h)
    p = poly.power(ring, tg, N)
    # v = sum_{i<N} (1-h)^i = sum_{i<N} (t g)^i
    v: tuple = ()
    term: tuple = (ring.one,)
    for _ in range(N):
        v = poly.add(ring, v, term)
        term = poly.mul(ring, term, tg)
    # p^2 - p = -f g^N v,  t^N - t^N p = f v
    idem_cof = poly.neg(ring, poly.mul(ring, poly.power(ring, g, N), v))
    cert = CointegralCertificate(a, N, tuple(chain), g, h, p, f, idem_cof, v)
    _verify(cert)
    return cert


def _verify(cert: CointegralCertificate) -> None:
    alg = cert.element.algebra
    x = cert.element.coords
    N = cert.index
    if cert.chain[N] != cert.chain[N + 1] or (N >= 1 and cert.chain[N - 1] == cert.chain[N]):
        raise SolveFailed("chain does not certify the index")
    if not cert.h_poly or cert.h_poly[0] != alg.ring.one:
        raise SolveFailed("h(0) != 1")
    if evaluate(alg, cert.f_poly, x) != alg.zero_vector:
        raise SolveFailed("f(a) != 0")
    checks = polynomial_congruences_hold(cert)
    if not all(checks.values()):
        raise SolveFailed(f"polynomial congruences failed: {checks}")
    e = cert.p_of_a
    aN = alg.power(x, N)
    if alg.mul(e, e) != e or alg.mul(aN, e) != aN or alg.mul(e, aN) != aN:
        raise SolveFailed("p(a) is not an idempotent absorbing a^N")


class ElementKind(str, enum.Enum):
    NILPOTENT = "nilpotent"
    UNIT = "unit"
    NEITHER = "neither"


@dataclass(frozen=True)
class Classification:
    kind: ElementKind
    certificate: CointegralCertificate
    inverse: Optional[Element] = None
    idempotent: Optional[Element] = None


def classify_element(a: Element) -> Classification:
    alg = a.algebra
    cert = cointegral_certificate(a)
    e = cert.p_of_a
    if e == alg.zero_vector:
        return Classification(ElementKind.NILPOTENT, cert)
    if e == alg.one:
        bound, _ = power_span_bound(alg, a.coords)
        rows = [alg.power(a.coords, 1 + j) for j in range(bound + 1)]
        w = linalg.solve(alg.ring, rows, alg.dim, alg.one)
        if w is None:
            raise SolveFailed("1 not in a R[a] although p(a) = 1")
        inv = evaluate(alg, w, a.coords)
        if alg.mul(a.coords, inv) != alg.one or alg.mul(inv, a.coords) != alg.one:
            raise SolveFailed("recovered inverse is wrong")
        return Classification(ElementKind.UNIT, cert, inverse=Element(alg, inv))
    return Classification(ElementKind.NEITHER, cert, idempotent=Element(alg, e))


@dataclass(frozen=True)
class IdempotentPredicates:
    is_idempotent: bool
    is_quasi_idempotent: bool
    is_semi_idempotent: bool
    witness: Optional[object] = None


def idempotent_predicates(a: Element) -> IdempotentPredicates:
    """a = a^2; a = r a^2 with r a unit; a = r a^2 with any r in R."""
    alg = a.algebra
    ring = alg.ring
    x = a.coords
    sq = alg.mul(x, x)
    is_idem = sq == x
    sol = linalg.solve(ring, [sq], alg.dim, x)
    if sol is None:
        return IdempotentPredicates(is_idem, False, False)
    r0 = sol[0]
    if ring.is_field():
        # r0 = 0 only when a = 0, where r = 1 also works
        return IdempotentPredicates(is_idem, True, True, r0 if r0 != 0 else ring.one)
    kernel = linalg.left_kernel(ring, [sq], alg.dim)
    step = kernel[0][0] if kernel else ring.modulus
    for j in range(ring.modulus // step):
        r = (r0 + j * step) % ring.modulus
        if ring.is_unit(r):
            return IdempotentPredicates(is_idem, True, True, r)
    return IdempotentPredicates(is_idem, False, True, r0)


def verify_lemma_lm31(a: Element, b: Element, c: Element, V: Subspace, N: int) -> bool:
    """Check b a^m c in V for every m >= N, given the eventual-membership hypothesis.

    Over finite rings the hypothesis is read off one full cycle of powers and
    the conclusion is checked for m = N .. max(N, rho) + pi.  Over Q the
    hypothesis is b S c in V for the stabilized tail span S, which covers every
    m past its start, and the conclusion is checked for the remaining m.
    """
    alg = a.algebra
    for x in (b, c):
        if x.algebra != alg:
            raise AlgebraMismatch("elements of different algebras")
    if V.algebra != alg:
        raise AlgebraMismatch("subspace lives in a different algebra")
    cert = cointegral_certificate(a)
    if cert.index > N:
        raise PreconditionFailed(f"co-integrality index {cert.index} exceeds N = {N}")

    def sandwich(m: int) -> tuple:
        return alg.mul(alg.mul(b.coords, alg.power(a.coords, m)), c.coords)

    if alg.ring.is_finite():
        cyc = power_cycle(a)
        rho, pi = cyc.preperiod, cyc.period
        window = range(rho, rho + pi)
        if not all(V.member(alg.mul(alg.mul(b.coords, cyc.power(m)), c.coords)) for m in window):
            raise PreconditionFailed("b a^m c is not eventually in V")
        upper = max(N, rho) + pi
    else:
        tail = tail_span(a)
        if not all(V.member(alg.mul(alg.mul(b.coords, s), c.coords)) for s in tail.span.basis):
            raise PreconditionFailed("b S c is not contained in V for the tail span S")
        upper = max(N, tail.start)
    return all(V.member(sandwich(m)) for m in range(N, upper + 1))
