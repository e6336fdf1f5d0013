"""Bundled JSON fixtures: where they live, how they are built, what they break.

The files under ``hopfcross/data`` are produced by :func:`build_fixture_documents`
(see ``tools/make_fixtures.py``).  ``FAULTS`` lists the corrupted fixtures;
each one names the report entry it is designed to break and the check that
produces that report.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .braiding import BraidingQuadruple, PairingData, counit_pairing, h4_c3_quadruple
from .crossed import CrossedSystemData, canonical_maps, certify, build_crossed_product, trivial_action, trivial_cocycle, trivial_system
from .exactfield import Field
from .hopfcore import HopfData, cyclic_group_algebra, make_hopf, sweedler_h4, tensor_hopf, trivial_hopf
from .presets import (
    c2c2_cocycle_system,
    h4_c2_coboundary,
    h4_c2_smash_system,
    h4_c3_system,
    s3_c2_coboundary,
    s3_group_algebra,
)
from .serial import hopf_to_doc, linmap_to_doc, quadruple_to_doc, system_to_doc
from .tensorlinalg import LinMap

__all__ = ["FAULTS", "Fault", "build_fixture_documents", "data_path"]


def data_path(name: str = "") -> Path:
    """Filesystem path of a bundled fixture (or of the data directory)."""
    root = Path(str(resources.files("hopfcross") / "data"))
    return root / name if name else root


@dataclass(frozen=True)
class Fault:
    axiom: str  # the named axiom from the fault catalogue
    entry: str  # report entry that must fail
    check: str  # "hopf", "crossed", "quadruple", "compat"
    files: tuple[str, ...]  # (hopf,) | (system,) | (system, quadruple)


FAULTS = (
    Fault("coassociativity", "coassociativity", "hopf", ("faults/h4_coassociativity.json",)),
    Fault("twisted module", "twisted_module", "crossed", ("faults/system_twisted_module.json",)),
    Fault("cocycle condition", "cocycle_condition", "crossed", ("faults/system_cocycle_condition.json",)),
    Fault("co-condition (action)", "co_condition_action", "crossed", ("faults/system_co_condition_action.json",)),
    Fault("co-condition (cocycle)", "co_condition_cocycle", "crossed", ("faults/system_co_condition_cocycle.json",)),
    Fault("RS3", "u:RS3", "quadruple", ("h4_c3_system.json", "faults/quad_rs3.json")),
    Fault("LS1", "v:LS1", "quadruple", ("h4_c3_system.json", "faults/quad_ls1.json")),
    Fault("SBR5", "tau:SBR5", "quadruple", ("faults/system_k_h4.json", "faults/quad_sbr5.json")),
    Fault("C1", "C1", "compat", ("faults/system_compat_action_sign.json", "quad_corrected_a1.json")),
    Fault("C2", "C2", "compat", ("faults/system_compat_action_sign.json", "quad_corrected_a1.json")),
    Fault("C3", "C3", "compat", ("faults/system_compat_cocycle.json", "quad_corrected_a1.json")),
    Fault("C4", "C4", "compat", ("faults/system_compat_action_sign.json", "quad_corrected_a1.json")),
    Fault("C5", "C5", "compat", ("faults/system_compat_action_zero.json", "quad_corrected_a1.json")),
    Fault("C6", "C6", "compat", ("faults/system_compat_action_sign.json", "quad_corrected_a1.json")),
    Fault("C7", "C7", "compat", ("faults/system_compat_action_zero.json", "quad_corrected_a1.json")),
)


def _set_column(M: LinMap, col: int, values: dict) -> LinMap:
    ents = {k: v for k, v in M.entries.items() if k[1] != col}
    ents.update({(r, col): v for r, v in values.items()})
    return LinMap(M.domain_dims, M.codomain_dims, ents)


def _with_entry(q: PairingData, i: int, j: int, value) -> PairingData:
    ents = dict(q.entries())
    ents[(i, j)] = value
    return PairingData.from_sparse(q.left_dim, q.right_dim, {k: v for k, v in ents.items() if v != 0})


def _system_doc(S: CrossedSystemData, a_ref=None, h_ref=None) -> dict:
    doc = system_to_doc(S)
    if a_ref is not None:
        doc["A"] = a_ref
    if h_ref is not None:
        doc["H"] = h_ref
    return doc


def _bad_coassoc_h4(F: Field) -> HopfData:
    # Delta(x) = g (x) x + x (x) 1 + x (x) x keeps both counit laws
    H = sweedler_h4(F)
    comult = _set_column(H.comult.reshape((4,), (16,)), 2, {1 * 4 + 2: F.one, 2 * 4 + 0: F.one, 2 * 4 + 2: F.one})
    return make_hopf(H.mult, H.unit, comult, H.counit, H.antipode, H.labels, "H4 (corrupted coproduct)", F)


def build_fixture_documents() -> dict[str, dict]:
    Q, F3 = Field(1), Field(3)
    docs: dict[str, dict] = {}

    h4, c2, c2s, c3 = sweedler_h4(Q), cyclic_group_algebra(2, "t", Q), cyclic_group_algebra(2, "s", Q), cyclic_group_algebra(3, "a", Q)
    c4, s3 = cyclic_group_algebra(4, "c", Q), s3_group_algebra(Q)
    for name, H in (("h4", h4), ("c2", c2), ("c2s", c2s), ("c3", c3), ("c4", c4), ("s3", s3)):
        docs[f"{name}.json"] = hopf_to_doc(H)

    # H4 # k[C3] and its quadruples
    S = h4_c3_system(F3)
    sys_doc = _system_doc(S, "h4.json", "c3.json")
    docs["h4_c3_system.json"] = sys_doc
    for variant in ("paper", "corrected"):
        for alpha in (1, 2):
            docs[f"quad_{variant}_a{alpha}.json"] = quadruple_to_doc(h4_c3_quadruple(alpha, F3.zeta(), F3, variant))
    docs["quad_corrected_a1_gamma1.json"] = quadruple_to_doc(h4_c3_quadruple(1, 1, F3, "corrected"))

    # trivial system and the tensor product it should build
    T = trivial_system(c2, c3)
    docs["trivial_system.json"] = _system_doc(T, "c2.json", "c3.json")
    docs["tensor_c2_c3.json"] = hopf_to_doc(tensor_hopf(c2, c3))

    docs["smash_system.json"] = _system_doc(h4_c2_smash_system(Q), "h4.json", "c2s.json")
    docs["c2c2_system.json"] = _system_doc(c2c2_cocycle_system(Q))
    Sb, _, gamma = h4_c2_coboundary(Q)
    docs["coboundary_h4_c2.json"] = _system_doc(Sb, "h4.json", "c2s.json")
    docs["coboundary_h4_c2_gamma.json"] = linmap_to_doc(gamma)
    Sb3, _, gamma3 = s3_c2_coboundary(Q)
    docs["coboundary_s3_c2.json"] = _system_doc(Sb3, "s3.json", "c2s.json")
    docs["coboundary_s3_c2_gamma.json"] = linmap_to_doc(gamma3)

    # factorizations
    C = c2c2_cocycle_system(Q)
    P = build_crossed_product(C)
    docs["c2c2_product.json"] = hopf_to_doc(P)
    maps = canonical_maps(C)
    docs["c2c2_a_embed.json"] = linmap_to_doc(maps.i_A)
    docs["c2c2_h_embed.json"] = linmap_to_doc(maps.i_H)
    # k[C4] = <c>: A = {1, c^2}, H = {1, c}
    docs["c4_a_embed.json"] = linmap_to_doc(LinMap((2,), (4,), {(0, 0): Q.one, (2, 1): Q.one}))
    docs["c4_h_embed.json"] = linmap_to_doc(LinMap((2,), (4,), {(0, 0): Q.one, (1, 1): Q.one}))
    # k[S3]: A = {e, (12)} is not normal; H = {e, (123), (132)}
    docs["s3_a_embed.json"] = linmap_to_doc(LinMap((2,), (6,), {(0, 0): Q.one, (1, 1): Q.one}))
    docs["s3_h_embed.json"] = linmap_to_doc(LinMap((3,), (6,), {(0, 0): Q.one, (4, 1): Q.one, (5, 2): Q.one}))

    # ---- corrupted fixtures
    docs["faults/h4_coassociativity.json"] = hopf_to_doc(_bad_coassoc_h4(Q))

    T0 = trivial_system(c2, c3)
    bad = CrossedSystemData(T0.A, T0.H, _set_column(T0.act, 3, {0: Q.one}), T0.cocycle, "twisted module fault")
    docs["faults/system_twisted_module.json"] = _system_doc(bad, "../c2.json", "../c3.json")
    bad = CrossedSystemData(T0.A, T0.H, T0.act, _set_column(T0.cocycle, 4, {1: Q.one}), "cocycle condition fault")
    docs["faults/system_cocycle_condition.json"] = _system_doc(bad, "../c2.json", "../c3.json")
    T1 = trivial_system(c2, h4)
    bad = CrossedSystemData(T1.A, T1.H, T1.act, _set_column(T1.cocycle, 5, {1: Q.one}), "co-condition (cocycle) fault")
    docs["faults/system_co_condition_cocycle.json"] = _system_doc(bad, "../c2.json", "../h4.json")
    # k[C3] with g acting by inversion and x, gx acting by zero
    act = {}
    for b in range(3):
        act[(b, 0 * 3 + b)] = Q.one
        act[((-b) % 3, 1 * 3 + b)] = Q.one
    bad = CrossedSystemData(c3, h4, LinMap((4, 3), (3,), act), trivial_cocycle(c3, h4), "co-condition (action) fault")
    docs["faults/system_co_condition_action.json"] = _system_doc(bad, "../c3.json", "../h4.json")

    base = h4_c3_quadruple(1, F3.zeta(), F3, "corrected")
    q = BraidingQuadruple(base.p, base.tau, _with_entry(base.u, 1, 1, F3.one), base.v, {"fault": "u(g, a) = 1"})
    docs["faults/quad_rs3.json"] = quadruple_to_doc(q)
    q = BraidingQuadruple(base.p, base.tau, base.u, _with_entry(base.v, 1, 1, F3.one), {"fault": "v(a, g) = 1"})
    docs["faults/quad_ls1.json"] = quadruple_to_doc(q)

    # k (x) H4: tau = eps (x) eps fails (SBR5) because H4 is not commutative
    k = trivial_hopf(Q)
    K = certify(CrossedSystemData(k, h4, trivial_action(k, h4), trivial_cocycle(k, h4), "k(x)H4"))
    docs["faults/system_k_h4.json"] = _system_doc(K, None, "../h4.json")
    q = BraidingQuadruple(counit_pairing(k, k), counit_pairing(h4, h4), counit_pairing(k, h4), counit_pairing(h4, k), {"fault": "tau = eps (x) eps"})
    docs["faults/quad_sbr5.json"] = quadruple_to_doc(q)

    # compatibility faults: corrupt the action or cocycle of H4 # k[C3], keep the quadruple
    S3 = h4_c3_system(F3, certified=False)
    bad = CrossedSystemData(S3.A, S3.H, _set_column(S3.act, 0, {0: F3.one, 2: -F3.one}), S3.cocycle, "action fault (sign)")
    docs["faults/system_compat_action_sign.json"] = _system_doc(bad, "../h4.json", "../c3.json")
    bad = CrossedSystemData(S3.A, S3.H, _set_column(S3.act, 0, {}), S3.cocycle, "action fault (zero)")
    docs["faults/system_compat_action_zero.json"] = _system_doc(bad, "../h4.json", "../c3.json")
    bad = CrossedSystemData(S3.A, S3.H, S3.act, _set_column(S3.cocycle, 1, {}), "cocycle fault")
    docs["faults/system_compat_cocycle.json"] = _system_doc(bad, "../h4.json", "../c3.json")
    return docs
