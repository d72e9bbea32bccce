from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mathieu.algebra import Element, make_algebra, multiply, power_cycle
from mathieu.builtins import builtin_algebra, field_poly_quotient, matrix, product, upper_triangular, zn
from mathieu.errors import AlgebraMismatch, BadParameter, BadUnit, NotAnIdeal, NotAssociative
from mathieu.finite import finite_algebra
from mathieu.homs import hom_image, hom_preimage_subspace, kernel, make_hom, quotient_algebra
from mathieu.rings import RingSpec
from mathieu.subspace import Subspace, generated_subalgebra, span

F2 = RingSpec.prime_field(2)
F3 = RingSpec.prime_field(3)

ALGEBRAS = ["zn12", "prod:f2,f2", "ut2_f2", "dual_f3", "matrix2_f2", "matrix2_f3", "group3_f2",
            "poly_f2:1,1,1", "ut3_f2", "zn8"]


def test_rank_one_ring():
    A = make_algebra(RingSpec.modular(12), [[[1]]], [1])
    assert A.dim == 1 and A.mul((5,), (7,)) == (11,)


def test_matrix_units_valid():
    A = matrix(2, F3)
    e = A.basis()
    assert (e[1] * e[2]).coords == e[0].coords  # e12 e21 = e11
    assert (e[2] * e[1]).coords == e[3].coords  # e21 e12 = e22


def test_bad_unit():
    with pytest.raises(BadUnit):
        make_algebra(F2, [[[1]]], [0])


def test_not_associative():
    # e0 is the identity; e1 e1 = e2, e1 e2 = e0, e2 e1 = e1 breaks (e1 e1) e1 = e1 (e1 e1)
    c = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for i in range(3):
        c[0][i][i] = 1
        c[i][0][i] = 1
    c[1][1][2] = 1
    c[1][2][0] = 1
    c[2][1][1] = 1
    with pytest.raises(NotAssociative) as info:
        make_algebra(F2, c, [1, 0, 0])
    assert len(info.value.triple) == 3


@pytest.mark.parametrize("name", ALGEBRAS)
def test_builtin_axioms(name):
    A = builtin_algebra(name)
    one = A.one
    for x in A.basis():
        assert A.mul(one, x.coords) == x.coords == A.mul(x.coords, one)


def test_builtin_shapes():
    assert zn(12).dim == 1
    assert upper_triangular(2, F2).dim == 3
    P = product([builtin_algebra("f2"), builtin_algebra("f2")])
    assert P.dim == 2 and P.mul((1, 0), (0, 1)) == (0, 0)
    Fx = field_poly_quotient(2, [1, 1, 1])
    assert Fx.dim == 2
    with pytest.raises(BadParameter):
        builtin_algebra("nonsense")
    with pytest.raises(BadParameter):
        matrix(0, F2)


def test_multiply_examples(ut2, z12):
    e11, e12, _ = ut2.basis()
    assert multiply(e12, e11).is_zero()
    x = Element(ut2, (1, 1, 0))
    assert multiply(ut2.identity, x) == x
    assert multiply(Element(z12, (2,)), Element(z12, (2,))).coords == (4,)
    with pytest.raises(AlgebraMismatch):
        multiply(e11, Element(z12, (1,)))


def test_power_cycle_examples(ut2, z12):
    c = power_cycle(Element(z12, (2,)))
    assert (c.preperiod, c.period) == (2, 2)
    e11, e12, _ = ut2.basis()
    assert (power_cycle(e11).preperiod, power_cycle(e11).period) == (1, 1)
    c = power_cycle(e12)
    assert (c.preperiod, c.period) == (2, 1)


@pytest.mark.parametrize("name", ["zn12", "ut3_f2", "matrix2_f3", "group3_f2", "poly_f2:1,0,0,1"])
def test_power_cycle_matches_tabulation(name):
    A = builtin_algebra(name)
    F = finite_algebra(A)
    for i in range(F.size):
        a = Element(A, F.element(i))
        c = power_cycle(a)
        assert (c.preperiod, c.period) == (int(F.preperiod[i]), int(F.period[i]))
        rho, pi = c.preperiod, c.period
        for j in range(pi):
            assert A.power(a.coords, rho + pi + j) == A.power(a.coords, rho + j)
        # minimality
        assert rho == 1 or A.power(a.coords, rho - 1 + pi) != A.power(a.coords, rho - 1)
        assert all(A.power(a.coords, rho + p) != A.power(a.coords, rho) for p in range(1, pi))


def test_power_cycle_over_rationals():
    A = builtin_algebra("matrix2_q")
    a = Element(A, (1, 1, 0, 1))
    c = power_cycle(a)
    assert c.preperiod is None and c.period is None
    assert c.stabilized_power_span_bound == 1  # a^2 = 2a - 1


def test_generated_subalgebra_examples(ut2, z12):
    assert generated_subalgebra(ut2.identity).rank == 1
    assert generated_subalgebra(Element(z12, (2,))).member((1,))
    e12 = ut2.basis()[1]
    assert generated_subalgebra(e12) == span(ut2, [ut2.one, e12.coords])


@pytest.mark.parametrize("name", ["zn12", "ut2_f2", "matrix2_f3", "dual_f3"])
def test_generated_subalgebra_closed(name):
    A = builtin_algebra(name)
    F = finite_algebra(A)
    for i in range(F.size):
        a = Element(A, F.element(i))
        S = generated_subalgebra(a)
        assert S.member(A.one)
        assert all(S.member(A.mul(a.coords, v)) for v in S.basis)


def test_quotient_examples(ut2):
    I = span(ut2, [ut2.basis()[1]])
    Q, phi = quotient_algebra(ut2, I)
    assert Q.dim == 2 and phi.surjective
    # diagonal structure constants: F2 x F2
    for i in range(2):
        for j in range(2):
            expected = [1 if i == j == k else 0 for k in range(2)]
            assert list(Q.structure_constants[i][j]) == expected
    Q0, phi0 = quotient_algebra(ut2, Subspace.zero(ut2))
    assert Q0 == ut2 and all(phi0.apply(x.coords) == x.coords for x in ut2.basis())
    Qa, _ = quotient_algebra(ut2, Subspace.whole(ut2))
    assert Qa.dim == 0
    with pytest.raises(NotAnIdeal):
        quotient_algebra(ut2, span(ut2, [ut2.basis()[0]]))


def test_quotient_over_zn_requires_free_module():
    z12 = builtin_algebra("zn12")
    with pytest.raises(BadParameter):
        quotient_algebra(z12, span(z12, [(4,)]))


@pytest.mark.parametrize("name", ["ut2_f2", "ut3_f2", "matrix2_f2", "dual_f3", "group3_f2", "ut2_f3"])
def test_quotient_then_kernel(name):
    from mathieu.subspace import enumerate_subspaces, is_theta_ideal
    A = builtin_algebra(name)
    for I in enumerate_subspaces(A, cap=10**4, max_dim=6):
        if is_theta_ideal(I, "two"):
            _, phi = quotient_algebra(A, I)
            assert kernel(phi) == I


def test_preimage_examples(ut2, f2xf2):
    phi = make_hom(ut2, f2xf2, [[1, 0, 0], [0, 0, 1]])
    assert phi.surjective
    V = span(f2xf2, [(1, 0)])
    pre = hom_preimage_subspace(phi, V)
    assert pre == span(ut2, [(1, 0, 0), (0, 1, 0)])
    # oracle: all 8 source vectors
    assert {x for x in Subspace.whole(ut2).elements() if V.member(phi.apply(x))} == set(pre.elements())
    assert hom_preimage_subspace(phi, Subspace.whole(f2xf2)) == Subspace.whole(ut2)
    assert hom_preimage_subspace(phi, Subspace.zero(f2xf2)) == kernel(phi) == span(ut2, [(0, 1, 0)])
    assert hom_image(phi, ut2.identity).coords == (1, 1)


def test_bad_hom_rejected(ut2, f2xf2):
    with pytest.raises(BadParameter):
        make_hom(ut2, f2xf2, [[1, 1, 0], [0, 0, 1]])


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_hom_is_multiplicative_on_random_elements(data):
    A = builtin_algebra("ut3_f3")
    I = span(A, [A.basis()[1], A.basis()[2], A.basis()[4]])  # strictly upper triangular part
    _, phi = quotient_algebra(A, I)
    x = tuple(data.draw(st.integers(0, 2)) for _ in range(A.dim))
    y = tuple(data.draw(st.integers(0, 2)) for _ in range(A.dim))
    Q = phi.target
    assert phi.apply(A.mul(x, y)) == Q.mul(phi.apply(x), phi.apply(y))
