from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mathieu import poly
from mathieu.algebra import Element, power_cycle
from mathieu.builtins import builtin_algebra, zn
from mathieu.errors import PreconditionFailed
from mathieu.finite import finite_algebra
from mathieu.radical import (ElementKind, classify_element, cointegral_certificate, evaluate, idempotent_predicates,
                             is_in_radical, polynomial_congruences_hold, tail_span, verify_lemma_lm31)
from mathieu.subspace import Subspace, span


def z(n, v):
    return Element(zn(n), (v,))


def test_tail_span_examples(ut2):
    e11, e12, _ = ut2.basis()
    assert tail_span(e12).span.is_zero()
    t = tail_span(e11)
    assert t.span == span(ut2, [e11.coords]) and t.start == 1
    t = tail_span(z(12, 2))
    assert t.span == span(zn(12), [(4,)]) and t.start == 2
    assert t.span.elements() == {(0,), (4,), (8,)}


@pytest.mark.parametrize("name", ["zn12", "ut2_f2", "matrix2_f3", "dual_f3", "group3_f2"])
def test_tail_span_stability(name):
    A = builtin_algebra(name)
    F = finite_algebra(A)
    for i in range(F.size):
        a = Element(A, F.element(i))
        t = tail_span(a)
        image = Subspace.from_rows(A, [A.mul(a.coords, v) for v in t.span.basis])
        assert image == t.span
        assert t.span.member(A.power(a.coords, t.start)) and t.span.member(A.power(a.coords, t.start + 1))
        # agrees with the span of one full cycle of powers
        window = [F.element(x) for x in F.window[i]]
        assert t.span == Subspace.from_rows(A, window)


def test_radical_membership_examples(ut2):
    e12 = ut2.basis()[1]
    assert is_in_radical(e12, Subspace.zero(ut2))
    assert not is_in_radical(ut2.identity, span(ut2, [(0, 1, 0)]))
    assert is_in_radical(z(12, 2), span(zn(12), [(4,)]))


@pytest.mark.parametrize("value,N,g,p_of_a", [(2, 2, (2,), 4), (3, 1, None, 9), (5, 0, None, 1), (6, 2, None, 0)])
def test_certificate_examples(value, N, g, p_of_a):
    cert = cointegral_certificate(z(12, value))
    assert cert.index == N
    assert cert.p_of_a == (p_of_a,)
    if g is not None:
        assert cert.g_poly == g


def test_examples_rederived_by_arithmetic():
    # independent mod-12 arithmetic, no library code
    assert (2 * 2) ** 2 % 12 == 4 and 4 * 4 % 12 == 4
    assert 9 * 9 % 12 == 9
    assert 5 * 5 % 12 == 1
    assert 6 * 6 % 12 == 0


@pytest.mark.parametrize("n", [4, 6, 8, 9, 12, 16, 30])
def test_congruences_on_zn(n):
    for v in range(n):
        cert = cointegral_certificate(z(n, v))
        assert all(polynomial_congruences_hold(cert).values())
        f = cert.f_poly
        assert evaluate(zn(n), f, (v,)) == (0,)
        assert cert.h_poly[0] == 1


@pytest.mark.parametrize("name", ["ut2_f2", "matrix2_f3", "group3_f2", "dual_f3", "poly_f2:1,1,0,1", "ut3_f2"])
def test_certificate_invariants(name):
    A = builtin_algebra(name)
    F = finite_algebra(A)
    for i in range(F.size):
        a = Element(A, F.element(i))
        cert = cointegral_certificate(a)
        N = cert.index
        M = cert.chain
        assert M[N] == M[N + 1]
        assert N == 0 or M[N - 1] != M[N]
        e = cert.p_of_a
        aN = A.power(a.coords, N)
        assert A.mul(e, e) == e and A.mul(aN, e) == aN == A.mul(e, aN)
        assert all(c == 0 for c in cert.p_poly[:N])


def test_classification_examples():
    assert classify_element(z(12, 6)).kind is ElementKind.NILPOTENT
    c = classify_element(z(12, 5))
    assert c.kind is ElementKind.UNIT and c.inverse.coords == (5,)
    c = classify_element(z(12, 2))
    assert c.kind is ElementKind.NEITHER and c.idempotent.coords == (4,)


@pytest.mark.parametrize("name", ["zn12", "ut2_f2", "matrix2_f3", "dual_f3", "group3_f2"])
def test_classification_against_tables(name):
    A = builtin_algebra(name)
    F = finite_algebra(A)
    units = F.units()
    nil = F.nilpotents()
    for i in range(F.size):
        kind = classify_element(Element(A, F.element(i))).kind
        assert (kind is ElementKind.UNIT) == bool(units[i])
        assert (kind is ElementKind.NILPOTENT) == bool(nil[i])


def test_idempotent_predicate_examples():
    p = idempotent_predicates(z(12, 4))
    assert p.is_idempotent and p.is_quasi_idempotent and p.is_semi_idempotent
    p = idempotent_predicates(z(12, 3))
    assert not p.is_idempotent and p.is_quasi_idempotent and p.is_semi_idempotent
    p = idempotent_predicates(z(12, 2))
    assert not (p.is_idempotent or p.is_quasi_idempotent or p.is_semi_idempotent)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 40), st.data())
def test_idempotent_predicates_match_enumeration(n, data):
    v = data.draw(st.integers(0, n - 1))
    p = idempotent_predicates(z(n, v))
    sols = [r for r in range(n) if r * v * v % n == v]
    assert p.is_idempotent == (v * v % n == v)
    assert p.is_semi_idempotent == bool(sols)
    assert p.is_quasi_idempotent == any(r in sols for r in range(n) if pow_unit(r, n))


def pow_unit(r: int, n: int) -> bool:
    return any(r * s % n == 1 for s in range(n))


def test_semi_idempotent_in_radical_has_all_powers_inside():
    for name in ["zn12", "ut2_f2", "dual_f3", "group3_f2", "matrix2_f2"]:
        A = builtin_algebra(name)
        F = finite_algebra(A)
        from mathieu.subspace import enumerate_subspaces
        for V in enumerate_subspaces(A):
            mask = F.mask(V)
            rad = F.radical_mask(mask)
            full = F.all_powers_mask(mask)
            for i in range(F.size):
                if rad[i] and idempotent_predicates(Element(A, F.element(i))).is_semi_idempotent:
                    assert full[i]


def test_lemma_lm31_examples(ut2):
    e11 = ut2.basis()[0]
    one = ut2.identity
    V = span(ut2, [e11.coords])
    assert verify_lemma_lm31(e11, one, one, V, 1)
    Z = zn(12)
    a, u = Element(Z, (2,)), Element(Z, (1,))
    assert verify_lemma_lm31(a, u, u, span(Z, [(4,)]), 2)
    with pytest.raises(PreconditionFailed):
        verify_lemma_lm31(a, u, u, span(Z, [(4,)]), 1)
    five = Element(Z, (5,))
    assert verify_lemma_lm31(five, u, u, Subspace.whole(Z), 0)


def test_lemma_lm31_property():
    from mathieu.subspace import enumerate_subspaces
    A = builtin_algebra("ut2_f2")
    F = finite_algebra(A)
    elements = [Element(A, F.element(i)) for i in range(F.size)]
    for V in enumerate_subspaces(A):
        for a in elements:
            N = cointegral_certificate(a).index
            cyc = power_cycle(a)
            for b in elements:
                for c in elements:
                    window = range(cyc.preperiod, cyc.preperiod + cyc.period)
                    if all(V.member(A.mul(A.mul(b.coords, cyc.power(m)), c.coords)) for m in window):
                        assert verify_lemma_lm31(a, b, c, V, N)


def test_lemma_lm31_over_rationals():
    A = builtin_algebra("matrix2_q")
    e11 = Element(A, (1, 0, 0, 0))
    one = A.identity
    assert verify_lemma_lm31(e11, one, one, span(A, [e11.coords]), 1)


def test_polynomial_division():
    ring = zn(12).ring
    q, r = poly.divmod_poly(ring, (1, 0, 0, 1), (1, 1))
    assert poly.add(ring, poly.mul(ring, q, (1, 1)), r) == (1, 0, 0, 1)
