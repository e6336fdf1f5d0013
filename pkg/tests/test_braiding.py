from itertools import product

import pytest

import oracles
from braidings import braiding_corpus
from hopfcross.braiding import (
    BraidingQuadruple,
    PairingData,
    assemble_sigma,
    certify_quadruple,
    check_braiding,
    check_compatibilities,
    check_pf_right_skew,
    corollary_checks,
    counit_pairing,
    cyclic_bicharacter_braiding,
    cyclic_cocycle,
    cyclic_pf_right_skew,
    decompose_sigma,
    h4_c3_quadruple,
    search_braidings,
    sigma_table,
)
from hopfcross.crossed import build_crossed_product, trivial_system
from hopfcross.errors import (
    AlphaNotSymmetric,
    NotABraiding,
    NotRootOfUnity,
    QuadrupleNotCertified,
    SearchSpaceTooLarge,
    ShapeMismatch,
    ShapeNotSpecial,
    UpsilonConditionFailed,
)
from hopfcross.exactfield import Field, parse_scalar, render, zeta
from hopfcross.fixtures import FAULTS
from hopfcross.hopfcore import cyclic_group_algebra
from hopfcross.presets import h4_c3_system
from hopfcross.serial import quadruple_from_doc, system_from_doc

F3 = Field(3)
Z = zeta(3)
CORPUS = braiding_corpus()

# the x-row / gx-column block where the published quadruple and table disagree
PUBLISHED_DIFF = [(x, y) for x in ("x#1", "x#a", "x#a^2") for y in ("gx#1", "gx#a", "gx#a^2")]


def oracle_tsv(alpha, variant):
    table = oracles.h4_c3_sigma(alpha, Z, variant)
    labels = oracles.product_labels()
    lines = ["\t".join(["sigma", *labels])]
    for i, lab in enumerate(labels):
        lines.append("\t".join([lab, *(render(F3(table[(i, j)])) for j in range(12))]))
    return "\n".join(lines) + "\n"


def symbolic_table(golden, alpha, gamma):
    rows = [line.split("\t") for line in golden("h4_c3_sigma_symbolic.tsv").read_text().strip().split("\n")]
    env = {"alpha": F3(alpha), "gamma": gamma}
    return rows[0][1:], {(r[0], rows[0][j + 1]): parse_scalar(v, 3, env) for r in rows[1:] for j, v in enumerate(r[1:])}


@pytest.mark.parametrize("variant, alpha", list(product(["corrected", "paper"], [1, 2])))
def test_golden_tables_match_the_oracle(golden, variant, alpha):
    assert golden(f"h4_c3_sigma_{variant}_quadruple_a{alpha}.tsv").read_text() == oracle_tsv(alpha, variant)


@pytest.mark.parametrize("variant, alpha", list(product(["corrected", "paper"], [1, 2])))
def test_assembled_tables_match_golden(golden, variant, alpha):
    S = h4_c3_system(F3)
    quad = h4_c3_quadruple(alpha, Z, F3, variant)
    sigma = assemble_sigma(S, quad, check=(variant == "corrected"))
    got = sigma_table(build_crossed_product(S), sigma)
    assert got == golden(f"h4_c3_sigma_{variant}_quadruple_a{alpha}.tsv").read_text()


@pytest.mark.parametrize("alpha", [1, 2])
def test_published_quadruple_disagrees_with_published_table_on_one_block(golden, alpha):
    S = h4_c3_system(F3)
    sigma = assemble_sigma(S, h4_c3_quadruple(alpha, Z, F3, "paper"), check=False)
    labels, table = symbolic_table(golden, alpha, Z)
    diff = [(x, y) for i, x in enumerate(labels) for j, y in enumerate(labels) if sigma(i, j) != table[(x, y)]]
    assert diff == PUBLISHED_DIFF
    named = {("1#a", "1#a"): Z, ("g#1", "g#1"): -1, ("x#a", "x#a"): -alpha * Z, ("gx#a^2", "gx#a^2"): alpha * Z}
    for (x, y), want in named.items():
        assert sigma(labels.index(x), labels.index(y)) == want == table[(x, y)]


def test_published_table_is_not_a_braiding(golden):
    S = h4_c3_system(F3)
    P = build_crossed_product(S)
    for alpha in (1, 2):
        labels, table = symbolic_table(golden, alpha, Z)
        sigma = PairingData.from_function(12, 12, lambda i, j: table[(labels[i], labels[j])])
        rep = check_braiding(P, sigma)
        assert not rep["BR1"].passed and not rep["BR3"].passed


def test_published_quadruple_fails_certification():
    S = h4_c3_system(F3)
    rep = certify_quadruple(S, h4_c3_quadruple(1, Z, F3, "paper"))
    assert rep["p:BR1"].witness == (1, 2, 2)  # (g, x, x)
    assert not rep["tau:SBR1"].passed and not rep["tau:SBR3"].passed
    with pytest.raises(QuadrupleNotCertified):
        assemble_sigma(S, h4_c3_quadruple(1, Z, F3, "paper"))


@pytest.mark.parametrize("label, S, quad", CORPUS, ids=[c[0] for c in CORPUS])
def test_assemble_decompose_round_trips(label, S, quad):
    assert certify_quadruple(S, quad).ok
    sigma = assemble_sigma(S, quad)
    P = build_crossed_product(S)
    assert check_braiding(P, sigma).ok
    assert decompose_sigma(S, sigma) == quad
    assert assemble_sigma(S, decompose_sigma(S, sigma)) == sigma


def test_decompose_rejects_non_braidings():
    S = h4_c3_system(F3)
    bad = PairingData.from_function(12, 12, lambda i, j: 1)
    with pytest.raises(NotABraiding):
        decompose_sigma(S, bad)
    with pytest.raises(ShapeMismatch):
        check_braiding(S.A, bad)


def test_sigma_matches_oracle_formula_on_corpus():
    for label, S, quad in CORPUS[-6:]:
        alpha, gamma = quad.params["alpha"], quad.params["gamma"]
        want = oracles.h4_c3_sigma(alpha, gamma, "corrected")
        sigma = assemble_sigma(S, quad, check=False)
        assert all(sigma(i, j) == want[(i, j)] for i, j in product(range(12), repeat=2)), label


def test_search_finds_the_corrected_family():
    S = h4_c3_system(F3)
    roots = [zeta(6, k) for k in range(6)]
    found = search_braidings(S, {"alpha": [1, 2], "gamma": roots}, lambda alpha, gamma: h4_c3_quadruple(alpha, gamma, F3 if gamma.order == 3 else Field(6), "corrected"))
    got = sorted((int(q.params["alpha"]), render(q.params["gamma"])) for q in found)
    cubes = sorted(render(zeta(6, k)) for k in (0, 2, 4))
    assert got == sorted((a, g) for a in (1, 2) for g in cubes)
    none = search_braidings(S, {"alpha": [1, 2], "gamma": [zeta(3, k) for k in range(3)]}, lambda alpha, gamma: h4_c3_quadruple(alpha, gamma, F3, "paper"))
    assert none == []
    with pytest.raises(SearchSpaceTooLarge):
        search_braidings(S, {"a": range(200), "b": range(200)}, None, cap=100)


def test_counit_quadruple_and_corollaries():
    A, H = cyclic_group_algebra(2, "t"), cyclic_group_algebra(2, "s")
    S = trivial_system(A, H)
    quad = BraidingQuadruple(counit_pairing(A, A), cyclic_bicharacter_braiding(2, -1), counit_pairing(A, H), counit_pairing(H, A))
    rep = corollary_checks(S, quad)
    assert rep.ok and rep.notes["general_certified"]
    assert {"u_families_agree", "sigma_reduces_to_tau", "tensor:C1"} <= set(rep.names())
    with pytest.raises(ShapeNotSpecial):
        corollary_checks(h4_c3_system(F3), h4_c3_quadruple(1, Z, F3, "corrected"))


def test_quadruple_shape_check():
    S = h4_c3_system(F3)
    q = h4_c3_quadruple(1, Z, F3, "corrected")
    bad = BraidingQuadruple(q.tau, q.p, q.u, q.v)
    with pytest.raises(ShapeMismatch):
        certify_quadruple(S, bad)


# ---- cyclic groups


def test_bicharacter_braiding():
    A = cyclic_group_algebra(3, field=F3)
    assert check_braiding(A, cyclic_bicharacter_braiding(3, Z)).ok
    with pytest.raises(NotRootOfUnity):
        cyclic_bicharacter_braiding(3, -1)


def test_cyclic_pf_right_skew_preconditions():
    alpha = [[0, 0], [0, 0]]
    u = cyclic_pf_right_skew(2, 2, alpha, -1, -1)
    assert [[u(a, b) for b in range(2)] for a in range(2)] == [[1, 1], [1, -1]]
    with pytest.raises(UpsilonConditionFailed):
        cyclic_pf_right_skew(2, 2, [[0, 0], [0, 1]], -1, 1)
    with pytest.raises(AlphaNotSymmetric):
        cyclic_pf_right_skew(2, 3, [[0, 0, 0], [0, 0, 1], [0, 0, 0]], 1, 1)
    with pytest.raises(NotRootOfUnity):
        cyclic_pf_right_skew(2, 2, alpha, Z, 1)


def test_cyclic_c2_c2_agrees_with_brute_force():
    # (2, 2) is the size where the closed form and RS1-RS4 coincide
    A, H = cyclic_group_algebra(2, "t"), cyclic_group_algebra(2, "g")
    for alpha in oracles.normalized_symmetric_alphas(2, 2):
        f = cyclic_cocycle(2, 2, alpha)
        for tau, ups in product((1, -1), repeat=2):
            accepted = oracles.stated_condition(2, 2, alpha, tau, ups)
            table = oracles.stated_table(2, 2, alpha, tau, ups)
            assert accepted == oracles.rs_holds(2, 2, alpha, tau, table)
            if accepted:
                u = cyclic_pf_right_skew(2, 2, alpha, tau, ups)
                assert check_pf_right_skew(A, H, f, cyclic_bicharacter_braiding(2, tau), u).ok


# ---- fault fixtures


QUAD_FAULTS = [f for f in FAULTS if f.check in ("quadruple", "compat")]


@pytest.mark.parametrize("fault", QUAD_FAULTS, ids=[f.axiom for f in QUAD_FAULTS])
def test_quadruple_fault_fixtures(bundled, fault):
    S = system_from_doc(str(bundled(fault.files[0])))
    quad = quadruple_from_doc(str(bundled(fault.files[1])), S)
    rep = certify_quadruple(S, quad) if fault.check == "quadruple" else check_compatibilities(S, quad)
    entry = rep[fault.entry]
    assert not entry.passed and entry.witness is not None


def test_compat_c3_fault_is_isolated(bundled):
    S = system_from_doc(str(bundled("faults/system_compat_cocycle.json")))
    quad = quadruple_from_doc(str(bundled("quad_corrected_a1.json")), S)
    assert [e.name for e in check_compatibilities(S, quad).failed()] == ["C3"]
