import json
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from hopfcross.errors import NoAntipode, NotAGroup, ShapeMismatch
from hopfcross.exactfield import Field
from hopfcross.hopfcore import (
    AxiomReport,
    cyclic_group_algebra,
    derive_antipode,
    group_algebra,
    is_cocommutative,
    is_commutative,
    is_grouplike,
    make_hopf,
    map_predicates,
    sweedler_expand,
    sweedler_h4,
    tensor_hopf,
    trivial_hopf,
    verify_coalgebra,
    verify_hopf,
)
from hopfcross.presets import s3_group_algebra
from hopfcross.serial import hopf_from_doc
from hopfcross.tensorlinalg import FinVector, LinMap, TExpr


@pytest.mark.parametrize(
    "H",
    [
        trivial_hopf(),
        sweedler_h4(),
        sweedler_h4(Field(3)),
        cyclic_group_algebra(3),
        cyclic_group_algebra(4, "c"),
        s3_group_algebra(),
        tensor_hopf(sweedler_h4(), cyclic_group_algebra(2, "s")),
    ],
    ids=lambda H: H.name,
)
def test_presets_are_hopf_algebras(H):
    rep = verify_hopf(H)
    assert rep.ok, rep.format()
    assert derive_antipode(H) == H.antipode


def test_h4_tables_match_hand_written_oracle():
    H = sweedler_h4()
    for i, j in product(range(4), repeat=2):
        got = {k: c for k, c in H.mult.apply_basis(i, j).support().items()}
        assert got == oracles.H4_MULT[(i, j)]
    for i in range(4):
        got = {divmod(k, 4): c for k, c in H.comult.apply_basis(i).support().items()}
        assert got == oracles.H4_COMULT[i]
        assert H.counit.entry(0, i) == oracles.H4_COUNIT[i]


def test_h4_antipode_and_order():
    H = sweedler_h4()
    S = H.antipode
    assert S(H.vec("x")) == -H.vec("gx")
    assert S(H.vec("gx")) == H.vec("x")
    S4 = S
    for _ in range(3):
        S4 = S4 @ S
    assert S4 == LinMap.identity((4,))
    assert S @ S != LinMap.identity((4,))


def test_h4_structure_flags():
    H = sweedler_h4()
    assert not is_commutative(H) and not is_cocommutative(H)
    assert is_grouplike(H, H.vec("g"))
    assert not is_grouplike(H, H.vec("x"))
    assert is_commutative(cyclic_group_algebra(5)) and is_cocommutative(s3_group_algebra())
    assert not is_commutative(s3_group_algebra())


def test_sweedler_expand_is_coassociative_on_h4():
    H = sweedler_h4()
    for i in range(4):
        e = H.basis(i)
        assert sweedler_expand(H.coalgebra, e, 3, "right") == sweedler_expand(H.coalgebra, e, 3, "left")
    # Delta^(2)(x) = g (x) g (x) x + g (x) x (x) 1 + x (x) 1 (x) 1
    assert sweedler_expand(H.coalgebra, H.vec("x"), 3).terms == {(1, 1, 2): 1, (1, 2, 0): 1, (2, 0, 0): 1}


@given(st.integers(1, 7))
def test_cyclic_group_algebras(n):
    H = cyclic_group_algebra(n)
    assert verify_hopf(H).ok
    assert all(is_grouplike(H, H.basis(i)) for i in range(n))


def test_group_algebra_rejects_non_groups():
    with pytest.raises(NotAGroup):
        group_algebra([[0, 1], [1, 1]])
    with pytest.raises(NotAGroup):
        group_algebra([[0, 1], [0]])
    with pytest.raises(NotAGroup):
        group_algebra([[1, 0], [0, 1]], inverse=[1, 1])


def test_bialgebra_without_antipode():
    # the monoid {1, e} with e^2 = e gives a bialgebra with no antipode
    one = Field().one
    mult = LinMap((2, 2), (2,), {(0, 0): one, (1, 1): one, (1, 2): one, (1, 3): one})
    comult = LinMap((2,), (2, 2), {(0, 0): one, (3, 1): one})
    counit = LinMap((2,), (), {(0, 0): one, (0, 1): one})
    with pytest.raises(NoAntipode):
        make_hopf(mult, FinVector([1, 0]), comult, counit)


def test_map_predicates_on_flip_of_tensor_product():
    A, B = cyclic_group_algebra(2, "t"), cyclic_group_algebra(3, "a")
    AB, BA = tensor_hopf(A, B), tensor_hopf(B, A)
    flip = LinMap.from_function((2, 3), (3, 2), lambda i: {(i[1], i[0]): 1}).reshape((6,), (6,))
    assert map_predicates(flip, AB, BA, ("hopf", "iso")).ok
    half = LinMap((6,), (6,), {(0, 0): 1})
    rep = map_predicates(half, AB, BA, "algebra")
    assert not rep.ok and rep.failed()[0].name == "multiplicative"
    with pytest.raises(ShapeMismatch):
        map_predicates(LinMap.identity((2,)), AB, BA)
    with pytest.raises(ValueError):
        map_predicates(flip, AB, BA, "ring")


def test_report_formats():
    rep = AxiomReport()
    rep.add("ok_thing", True)
    rep.add("bad_thing", False, (1, 2), "lhs=1 rhs=0")
    assert not rep.ok and "bad_thing" in rep and rep["bad_thing"].witness == (1, 2)
    text = rep.format()
    assert "PASS  ok_thing" in text and "FAIL  bad_thing  witness=(1, 2)" in text
    doc = json.loads(json.dumps(rep.to_json()))
    assert doc["entries"][1] == {"axiom": "bad_thing", "passed": False, "witness": [1, 2], "detail": "lhs=1 rhs=0"}


def test_report_check_gives_first_witness():
    rep = AxiomReport()
    rep.check("even", (5,), lambda i: TExpr.scalar(i % 2), lambda i: TExpr.scalar(0))
    assert rep["even"].witness == (1,)


def test_corrupted_coproduct_breaks_coassociativity_only_in_coalgebra_report(bundled):
    H = hopf_from_doc(str(bundled("faults/h4_coassociativity.json")))
    rep = verify_coalgebra(H.coalgebra)
    assert [e.name for e in rep.failed()] == ["coassociativity"]
    assert rep["coassociativity"].witness == (2,)  # x
    assert not verify_hopf(H)["coassociativity"].passed
