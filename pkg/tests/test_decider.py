from __future__ import annotations

import pytest

from mathieu import corpus
from mathieu.algebra import Element
from mathieu.builtins import builtin_algebra
from mathieu.decider import (BadIdempotent, BadTail, Budget, Method, check_idempotent_certificate, classify_cyclic,
                             enumerate_idempotents, is_local, is_mathieu, is_quasi_stable, is_strong_mathieu,
                             lemma_36_chain, nilpotent_elements, radical_elements, sandwich_check)
from mathieu.errors import InfiniteRing, PreconditionFailed, TooLarge
from mathieu.finite import finite_algebra
from mathieu.formats import trace_zero
from mathieu.subspace import (ALL_VARIANTS, Subspace, enumerate_subspaces, is_theta_ideal, largest_theta_ideal, span,
                              theta_ideal)


def coords(elements):
    return sorted(e.coords for e in elements)


def test_idempotent_enumeration_examples(f2xf2, z12, m2f3):
    assert coords(enumerate_idempotents(f2xf2)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert coords(enumerate_idempotents(z12)) == [(0,), (1,), (4,), (9,)]
    assert coords(enumerate_idempotents(m2f3, trace_zero(m2f3))) == [(0, 0, 0, 0)]


def test_idempotent_enumeration_limits(m2f3):
    with pytest.raises(TooLarge):
        enumerate_idempotents(m2f3, budget=Budget(max_elements=80))
    with pytest.raises(InfiniteRing):
        enumerate_idempotents(builtin_algebra("matrix2_q"))


def test_idempotent_enumeration_without_table():
    A = builtin_algebra("matrix3_f2")  # 512 elements, forced past the table
    found = enumerate_idempotents(A, budget=Budget(max_table=100))
    F = finite_algebra(A)
    assert len(found) == len(F.idempotents())


@pytest.mark.parametrize("method", [Method.IDEMPOTENT_CRITERION, Method.BRUTE_FORCE])
def test_mathieu_examples(method, f2xf2, m2f3, ut2):
    v = is_mathieu(span(f2xf2, [(1, 1)]), "two", method)
    assert not v.is_mathieu
    if method is Method.IDEMPOTENT_CRITERION:
        assert v.witness == BadIdempotent(Element(f2xf2, (1, 1)))
    assert is_mathieu(span(f2xf2, [(1, 0)]), "two", method).is_mathieu
    v = is_mathieu(trace_zero(m2f3), "two", method)
    assert v.is_mathieu and not v.is_ideal
    v = is_mathieu(span(ut2, [(1, 0, 0)]), "two", method)
    assert not v.is_mathieu


def test_bad_tail_witness(ut2):
    v = is_mathieu(span(ut2, [(1, 0, 0)]), "two", Method.BRUTE_FORCE)
    w = v.witness
    assert isinstance(w, BadTail)
    assert w.a.coords == (1, 0, 0)
    # smallest (b, c): b = e11, c = e12 gives e11 e11 e12 = e12 outside V
    assert not span(ut2, [(1, 0, 0)]).member(ut2.mul(ut2.mul(w.b.coords, w.a.coords), w.c.coords))


def test_brute_force_budget(m2f3):
    with pytest.raises(TooLarge):
        is_mathieu(trace_zero(m2f3), "two", Method.BRUTE_FORCE, Budget(brute_force_steps=1000))


def test_infinite_ring_refused():
    A = builtin_algebra("matrix2_q")
    with pytest.raises(InfiniteRing):
        is_mathieu(Subspace.zero(A), "two")


def test_certificate_check_over_rationals():
    A = builtin_algebra("matrix2_q")
    V = span(A, [(1, 0, 0, 0)])
    w = check_idempotent_certificate(V, "two", [(1, 0, 0, 0)])
    assert isinstance(w, BadIdempotent)
    assert isinstance(check_idempotent_certificate(V, "left", [(1, 0, 0, 0)]), BadIdempotent)
    column = span(A, [(1, 0, 0, 0), (0, 0, 1, 0)])  # A e11
    assert check_idempotent_certificate(column, "left", [(1, 0, 0, 0), (0, 0, 0, 0)]) is None
    with pytest.raises(PreconditionFailed):
        check_idempotent_certificate(V, "two", [(0, 1, 0, 0)])


def test_strong_examples(f2xf2, m2f3, ut2):
    assert not is_strong_mathieu(span(f2xf2, [(1, 1)]), "two")
    T = trace_zero(m2f3)
    for method in (Method.DIRECT, Method.RADICAL_EQUALITY):
        assert is_strong_mathieu(T, "two", method)
    assert largest_theta_ideal(T, "two").is_zero()
    assert coords(radical_elements(T)) == coords(nilpotent_elements(m2f3))
    I = span(ut2, [(0, 1, 0)])
    assert all(is_strong_mathieu(I, th, m) for th in ALL_VARIANTS for m in (Method.DIRECT, Method.RADICAL_EQUALITY))


def test_radical_equality_counterexample_for_pre_variant(ut2):
    """I_pre = I_left + I_right need not generate (a^N)_pre, so equal radicals do not imply strong."""
    V = span(ut2, [(1, 0, 0)])
    assert largest_theta_ideal(V, "pre") == V
    assert is_strong_mathieu(V, "pre", Method.RADICAL_EQUALITY)
    assert not is_strong_mathieu(V, "pre", Method.DIRECT)
    e11 = Element(ut2, (1, 0, 0))
    assert not V.contains(theta_ideal(e11, "pre"))


@pytest.mark.parametrize("name", ["ut2_f2", "matrix2_f2", "matrix2_f3", "zn12", "group3_f2"])
def test_pre_radical_equality_with_two_sided_ideal(name):
    """Using the largest two-sided ideal restores agreement for the pre variant."""
    A = builtin_algebra(name)
    F = finite_algebra(A)
    for V in enumerate_subspaces(A):
        I = largest_theta_ideal(V, "two")
        same = bool((F.radical_mask(F.mask(V)) == F.radical_mask(F.mask(I))).all())
        assert same == is_strong_mathieu(V, "pre", Method.DIRECT)


def test_sandwich(m2f3, ut2):
    assert sandwich_check(trace_zero(m2f3), "two")
    assert sandwich_check(span(ut2, [(0, 1, 0)]), "two")
    assert sandwich_check(Subspace.zero(ut2), "two")
    with pytest.raises(PreconditionFailed):
        sandwich_check(span(ut2, [(1, 0, 0)]), "two")


def test_cyclic_examples(ut2):
    e11 = Element(ut2, (1, 0, 0))
    rec = classify_cyclic(e11, "two")
    assert rec.statements[2] is False and rec.statements[3] is False and rec.chain_holds
    assert classify_cyclic(e11, "left").statements == (True, True, True, True)
    with pytest.raises(PreconditionFailed):
        classify_cyclic(Element(ut2, (0, 0, 0)), "two")


def test_locality_examples():
    dual = builtin_algebra("dual_f3")
    assert is_local(dual) and lemma_36_chain(dual).statements == (True, True, True)
    f = builtin_algebra("prod:f2,f2")
    assert not is_local(f) and lemma_36_chain(f).statements[2] is False
    m = builtin_algebra("matrix2_f2")
    assert not is_local(m) and lemma_36_chain(m).statements[2] is False


def test_quasi_stability():
    dual = builtin_algebra("dual_f3")
    rep = is_quasi_stable(dual)
    assert rep.quasi_stable and rep.local and rep.sufficient_condition
    f3 = builtin_algebra("f3")
    assert is_quasi_stable(f3).quasi_stable
    f = builtin_algebra("prod:f2,f2")
    literal = is_quasi_stable(f, contains_one=True)
    assert not literal.quasi_stable and literal.witness == span(f, [(1, 1)])
    # with 1 in V and a = 1, V must be all of A; so any dim >= 2 algebra fails the literal reading
    assert not is_quasi_stable(dual, contains_one=True).quasi_stable
    with pytest.raises(TooLarge):
        is_quasi_stable(builtin_algebra("dual_f7"))


def test_ideals_are_mathieu():
    for cid, A in corpus.corpus_algebras():
        for V in corpus.corpus_subspaces(cid):
            for th in ALL_VARIANTS:
                v = is_mathieu(V, th)
                assert not v.is_ideal or v.is_mathieu
                assert v.is_ideal == is_theta_ideal(V, th)


def test_intersection_closure():
    for cid, A in corpus.corpus_algebras(max_size=16):
        subs = corpus.corpus_subspaces(cid)
        for th in ALL_VARIANTS:
            good = [V for V in subs if is_mathieu(V, th).is_mathieu]
            for i, V in enumerate(good):
                for W in good[i:]:
                    assert is_mathieu(V.intersect(W), th).is_mathieu


def test_zero_largest_ideal_means_no_idempotent():
    for cid, A in corpus.corpus_algebras():
        for V in corpus.corpus_subspaces(cid):
            for th in ALL_VARIANTS:
                if largest_theta_ideal(V, th).is_zero():
                    only_zero = all(e.is_zero() for e in enumerate_idempotents(A, V))
                    assert is_mathieu(V, th).is_mathieu == only_zero


def test_witnesses_are_smallest(ut2):
    V = span(ut2, [(1, 0, 1)])
    v = is_mathieu(V, "left", Method.IDEMPOTENT_CRITERION)
    F = finite_algebra(ut2)
    bad = [int(e) for e in F.idempotents() if F.mask(V)[e] and not V.contains(theta_ideal(Element(ut2, F.element(int(e))), "left"))]
    assert v.witness.e.coords == F.element(min(bad))


@pytest.mark.parametrize("suite", ["radical-quantifier", "quotient-transfer", "radical-index", "cyclic-chain",
                                   "chains", "largest-ideal", "quasi-stability", "transfer", "certificates"])
def test_corpus_suites(suite):
    result = corpus.SUITES[suite]()
    assert result.passed, result.to_json()
