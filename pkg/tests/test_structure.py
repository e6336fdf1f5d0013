import pytest

import oracles
from hopfcross.crossed import build_crossed_product
from hopfcross.errors import NotAnIntegral, NotCocommutative, PreconditionFailed
from hopfcross.exactfield import Field
from hopfcross.hopfcore import cyclic_group_algebra, is_commutative, sweedler_h4, tensor_hopf
from hopfcross.presets import c2c2_cocycle_system, corpus, h4_c3_system, s3_group_algebra
from hopfcross.structure import (
    commutativity_criterion,
    integrals,
    involutory_criterion_cocomm,
    is_integral,
    is_involutory,
    is_semisimple,
    product_integral,
    project_integral,
)
from hopfcross.tensorlinalg import FinVector

CORPUS = corpus()


def as_dict(v: FinVector) -> dict:
    return dict(v.support())


def proportional(v: FinVector, w: FinVector) -> bool:
    i = next(k for k, c in w.support().items())
    return v * w[i] == w * v[i]


@pytest.mark.parametrize("side", ["right", "left"])
def test_h4_integrals_against_oracle(side):
    H = sweedler_h4()
    space = integrals(H, side)
    assert space.dim == 1
    t = space.basis[0]
    check = oracles.is_right_integral if side == "right" else oracles.is_left_integral
    assert check(oracles.H4_MULT, oracles.H4_COUNIT, as_dict(t))
    # right: x - gx, left: x + gx (up to scale)
    want = FinVector([0, 0, 1, -1]) if side == "right" else FinVector([0, 0, 1, 1])
    assert proportional(t, want)
    assert space.epsilon_values == [0]


def test_group_algebra_integral_is_the_group_sum():
    C3 = cyclic_group_algebra(3)
    for side in ("right", "left"):
        (t,) = integrals(C3, side).basis
        assert proportional(t, FinVector([1, 1, 1]))
    res = is_semisimple(C3)
    assert res and res.epsilon != 0


def test_oracle_rejects_a_non_integral():
    assert not oracles.is_right_integral(oracles.H4_MULT, oracles.H4_COUNIT, {2: 1, 3: 1})
    assert not is_integral(sweedler_h4(), FinVector([0, 0, 1, 1]), "right")[0]


def test_product_integrals_of_h4_c3():
    S = h4_c3_system()
    E = build_crossed_product(S)
    right = integrals(E, "right")
    assert right.dim == 1 and integrals(E, "left").dim == 1
    tA, tH = integrals(S.A).basis[0], integrals(S.H).basis[0]
    t = product_integral(S, tA, tH, E)
    assert proportional(t, right.basis[0])
    proj = project_integral(S, t, "right", E)
    # eps(x - gx) = 0, so the right projection is the zero integral
    assert proj.degenerate
    left = project_integral(S, integrals(E, "left").basis[0], "left", E)
    assert not left.degenerate and is_integral(S.A, left.vector, "left")[0]
    assert not is_semisimple(E)


def test_product_integral_rejects_non_integrals():
    S = h4_c3_system()
    with pytest.raises(NotAnIntegral):
        product_integral(S, S.A.vec("x"), integrals(S.H).basis[0])
    with pytest.raises(NotAnIntegral):
        project_integral(S, build_crossed_product(S).unit)
    with pytest.raises(ValueError):
        integrals(S.A, "middle")


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_semisimplicity_is_the_conjunction(name):
    S = CORPUS[name]
    E = build_crossed_product(S)
    assert bool(is_semisimple(E)) == (bool(is_semisimple(S.A)) and bool(is_semisimple(S.H)))


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_commutativity_and_involutivity_criteria(name):
    S = CORPUS[name]
    E = build_crossed_product(S)
    assert commutativity_criterion(S).ok == is_commutative(E)
    try:
        rep = involutory_criterion_cocomm(S)
    except NotCocommutative:
        return
    assert rep.ok == is_involutory(E)


def test_named_examples():
    E = build_crossed_product(h4_c3_system())
    assert not is_commutative(E) and not is_involutory(E)
    C = c2c2_cocycle_system(Field())
    EC = build_crossed_product(C)
    assert commutativity_criterion(C).ok and involutory_criterion_cocomm(C).ok
    assert is_commutative(EC) and is_involutory(EC)
    assert is_involutory(s3_group_algebra()) and not is_involutory(sweedler_h4())
    assert is_involutory(tensor_hopf(cyclic_group_algebra(2), cyclic_group_algebra(3)))


def test_criteria_require_certified_systems():
    S = h4_c3_system(certified=False)
    with pytest.raises(PreconditionFailed):
        commutativity_criterion(S)
    with pytest.raises(PreconditionFailed):
        involutory_criterion_cocomm(S)
