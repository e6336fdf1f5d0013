from itertools import product

import pytest

import oracles
from hopfcross.crossed import (
    CrossedSystemData,
    build_crossed_product,
    canonical_maps,
    certify,
    check_lazy_cocycle,
    coboundary_system,
    crossed_product_group,
    factorize,
    linearize_group_crossed_system,
    normality_check,
    smash_system,
    transform_by_lazy_cocycle,
    transform_isomorphism,
    trivial_action,
    trivial_system,
    universal_map_in,
    universal_map_out,
    verify_crossed_system,
)
from hopfcross.errors import (
    GroupAxiomFailure,
    LazyCheckFailed,
    NotBijective,
    NotCocommutative,
    NotNormal,
    PreconditionFailed,
    ShapeMismatch,
    SystemNotCertified,
)
from hopfcross.exactfield import Field
from hopfcross.hopfcore import (
    cyclic_group_algebra,
    is_commutative,
    is_grouplike,
    map_predicates,
    sweedler_h4,
    tensor_hopf,
    verify_hopf,
)
from hopfcross.presets import (
    c2c2_cocycle_system,
    corpus,
    h4_c2_coboundary,
    h4_c3_system,
    s3_c2_coboundary,
    s3_group_algebra,
)
from hopfcross.serial import system_from_doc
from hopfcross.tensorlinalg import LinMap

CORPUS = corpus()


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_corpus_products_are_hopf_algebras(name):
    S = CORPUS[name]
    assert verify_crossed_system(S).ok
    E = build_crossed_product(S)
    assert E.dim == S.A.dim * S.H.dim
    assert verify_hopf(E).ok


def test_h4_c3_product_multiplication_against_hand_expansion():
    # (a # h)(c # g) = a (h |> c) f(h, g) # hg for grouplike h, g in k[C3]
    E = build_crossed_product(h4_c3_system())
    act_sign = lambda h, c: -1 if (h and c >= 2) else 1  # noqa: E731
    f = lambda h, g: 1 if (h, g) in ((1, 1), (2, 2)) else 0  # noqa: E731  (index of f(h, g) in H4)
    for a, h, c, g in product(range(4), range(3), range(4), range(3)):
        left = oracles.vec_mul(oracles.H4_MULT, {a: 1}, {c: act_sign(h, c)})
        left = oracles.vec_mul(oracles.H4_MULT, left, {f(h, g): 1})
        expected = {x * 3 + (h + g) % 3: v for x, v in left.items()}
        got = E.mult.apply_basis(a * 3 + h, c * 3 + g).support()
        assert got == expected, (a, h, c, g)


def test_uncertified_system_cannot_be_built():
    S = h4_c3_system(certified=False)
    with pytest.raises(SystemNotCertified):
        build_crossed_product(S)
    assert certify(S).certified


def test_shape_checks_on_system():
    A, H = sweedler_h4(), cyclic_group_algebra(3)
    with pytest.raises(ShapeMismatch):
        CrossedSystemData(A, H, trivial_action(H, A), trivial_action(A, H))


def test_trivial_system_builds_the_tensor_product():
    A, H = cyclic_group_algebra(2, "t"), cyclic_group_algebra(3)
    E = build_crossed_product(trivial_system(A, H))
    T = tensor_hopf(A, H)
    assert (E.mult, E.comult, E.counit, E.antipode, E.unit) == (T.mult, T.comult, T.counit, T.antipode, T.unit)


def test_c2c2_product_is_cyclic_of_order_four():
    E = build_crossed_product(c2c2_cocycle_system())
    assert is_commutative(E)
    z = E.vec("1#s")
    powers = [E.unit]
    for _ in range(4):
        powers.append(E.mul(powers[-1], z))
    assert powers[4] == E.unit and all(p != E.unit for p in powers[1:4])
    assert all(is_grouplike(E, p) for p in powers)
    assert E.mul(z, z) == E.vec("t#1")


def test_group_crossed_product_table():
    c2 = [[0, 1], [1, 0]]
    table = crossed_product_group(c2, c2, [[0, 0], [0, 1]], [[0, 1], [0, 1]])
    # element 1 = (1, s) generates: s^2 = (t, 1) = 2
    assert table[1][1] == 2 and table[2][2] == 0 and table[1][table[1][1]] == 3


def test_linearize_rejects_bad_group_data():
    c2 = [[0, 1], [1, 0]]
    with pytest.raises(GroupAxiomFailure):
        linearize_group_crossed_system(c2, c2, [[0, 1], [0, 1]], [[0, 1], [0, 1]])
    with pytest.raises(GroupAxiomFailure):
        linearize_group_crossed_system(c2, c2, [[0, 0], [0, 1]], [[0, 1], [1, 0]])


# ---- factorization


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_factorize_round_trip(name):
    S = CORPUS[name]
    E = build_crossed_product(S)
    maps = canonical_maps(S)
    w = factorize(E, maps.i_A, maps.i_H, S.A, S.H)
    assert w.recovered == S
    assert w.report.ok
    assert w.report["left_normal"].passed and w.report["right_normal"].passed
    assert w.report["left_action_trivial"].passed


def test_factorize_k_c4_gives_the_c2_cocycle_system():
    C4 = cyclic_group_algebra(4, "c")
    aE = LinMap((2,), (4,), {(0, 0): 1, (2, 1): 1})
    hE = LinMap((2,), (4,), {(0, 0): 1, (1, 1): 1})
    A, H = cyclic_group_algebra(2, "t"), cyclic_group_algebra(2, "s")
    rec = factorize(C4, aE, hE, A, H).recovered
    ref = c2c2_cocycle_system(Field())
    assert (rec.act, rec.cocycle) == (ref.act, ref.cocycle)
    assert rec.f(1, 1) == A.vec("t")


def test_factorize_rejects_non_normal_subgroup():
    S3 = s3_group_algebra()
    aE = LinMap((2,), (6,), {(0, 0): 1, (1, 1): 1})
    hE = LinMap((3,), (6,), {(0, 0): 1, (4, 1): 1, (5, 2): 1})
    assert not normality_check(S3, aE).ok
    with pytest.raises(NotNormal) as info:
        factorize(S3, aE, hE)
    assert info.value.report["left_normal"].witness is not None


def test_factorize_rejects_wrong_dimensions_and_non_subalgebras():
    C4 = cyclic_group_algebra(4, "c")
    with pytest.raises(NotBijective):
        factorize(C4, LinMap((1,), (4,), {(0, 0): 1}), LinMap((2,), (4,), {(0, 0): 1, (1, 1): 1}))
    with pytest.raises(NotBijective):
        factorize(C4, LinMap((2,), (4,), {(0, 0): 1, (2, 1): 1}), LinMap((2,), (4,), {(0, 0): 1, (2, 1): 1}))
    H4 = sweedler_h4()
    # span{1, x} is a subcoalgebra-free subspace closed under nothing useful
    with pytest.raises(PreconditionFailed):
        factorize(H4, LinMap((2,), (4,), {(0, 0): 1, (2, 1): 1}), LinMap((2,), (4,), {(0, 0): 1, (1, 1): 1}))


# ---- coboundaries and lazy cocycles


@pytest.mark.parametrize("make", [h4_c2_coboundary, s3_c2_coboundary])
def test_coboundary_system_is_isomorphic_to_tensor_product(make):
    S, phi, gamma = make()
    assert map_predicates(phi, build_crossed_product(S), tensor_hopf(S.A, S.H), ("iso", "hopf")).ok
    assert check_lazy_cocycle(S.A, S.H, gamma).ok
    assert transform_by_lazy_cocycle(S, gamma) == trivial_system(S.A, S.H)


def test_transform_isomorphism_properties():
    S, _, gamma = h4_c2_coboundary()
    psi, rep = transform_isomorphism(S, gamma)
    assert rep.ok, rep.format()
    assert {"left_A_linear", "right_H_colinear", "bijective", "multiplicative"} <= set(rep.names())


def test_coboundary_needs_cocommutative_h():
    with pytest.raises(NotCocommutative):
        coboundary_system(cyclic_group_algebra(2), sweedler_h4(), LinMap((4,), (2,), {(0, 0): 1, (0, 1): 1}))


def test_non_lazy_map_is_refused():
    S = h4_c3_system()
    # u(a^i) = g^i is not even a coalgebra map from k[C3] (g has order 2)
    u = LinMap((3,), (4,), {(0, 0): 1, (1, 1): 1, (0, 2): 1, (1, 2): 0})
    rep = check_lazy_cocycle(S.A, S.H, u)
    assert rep.ok  # grouplike images: this one is fine
    bad = LinMap((3,), (4,), {(0, 0): 1, (2, 1): 1, (0, 2): 1})
    with pytest.raises(LazyCheckFailed):
        transform_by_lazy_cocycle(S, bad)


# ---- universal properties


def test_universal_maps_for_k_c4():
    S = c2c2_cocycle_system(Field())
    X = cyclic_group_algebra(4, "c")
    u = LinMap((2,), (4,), {(0, 0): 1, (2, 1): 1})  # t -> c^2
    v = LinMap((2,), (4,), {(0, 0): 1, (1, 1): 1})  # s -> c
    w = universal_map_out(S, X, u, v)
    assert map_predicates(w, build_crossed_product(S), X, ("hopf", "iso")).ok
    u_in = LinMap((4,), (2,), {(0, 0): 1, (0, 1): 1, (1, 2): 1, (1, 3): 1})  # c^k -> t^(k // 2)
    v_in = LinMap((4,), (2,), {(0, 0): 1, (1, 1): 1, (0, 2): 1, (1, 3): 1})  # c^k -> s^(k % 2)
    w_in = universal_map_in(S, X, u_in, v_in)
    assert map_predicates(w_in, X, build_crossed_product(S), ("hopf", "iso")).ok
    with pytest.raises(PreconditionFailed):
        universal_map_out(S, X, u, LinMap((2,), (4,), {(0, 0): 1, (3, 1): 1, (1, 1): 1}))


# ---- fault fixtures


@pytest.mark.parametrize(
    "path, entry, witness",
    [
        ("faults/system_twisted_module.json", "twisted_module", (1, 1, 1)),
        ("faults/system_cocycle_condition.json", "cocycle_condition", (1, 1, 2)),
        ("faults/system_co_condition_action.json", "co_condition_action", (2, 1)),
        ("faults/system_co_condition_cocycle.json", "co_condition_cocycle", (1, 2)),
    ],
)
def test_crossed_fault_fixtures_fail_exactly_one_entry(bundled, path, entry, witness):
    S = system_from_doc(str(bundled(path)))
    rep = verify_crossed_system(S)
    assert [(e.name, e.witness) for e in rep.failed()] == [(entry, witness)]
    with pytest.raises(SystemNotCertified):
        certify(S)


def test_smash_product_checks_action_axioms():
    A, H = sweedler_h4(), cyclic_group_algebra(2, "s")
    act = LinMap((2, 4), (4,), {(b, b): 1 for b in range(4)} | {(b, 4 + b): 1 for b in range(4)} | {(2, 6): 2})
    with pytest.raises(SystemNotCertified):
        smash_system(A, H, act)
