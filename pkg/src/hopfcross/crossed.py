"""Crossed systems ``(A, H, act, f)`` and crossed products ``A # H``.

Basis of the product: ``a_i # h_j`` at flat index ``i * dim(H) + j``.

Leg conventions for the structure maps:

* ``act``: ``(dim H, dim A) -> (dim A,)``, ``act(h, a) = h |> a``
* ``cocycle``: ``(dim H, dim H) -> (dim A,)``
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import product
from typing import Sequence

from .errors import (
    GroupAxiomFailure,
    LazyCheckFailed,
    LeftActionNotTrivial,
    NoAntipode,
    NotBijective,
    NotCoalgebraMap,
    NotCocommutative,
    NotConvInvertible,
    NotNormal,
    PreconditionFailed,
    ShapeMismatch,
    Singular,
    SystemNotCertified,
)
from .hopfcore import (
    AxiomReport,
    HopfData,
    group_algebra,
    is_cocommutative,
    make_hopf,
    map_predicates,
    tensor_hopf,
)
from .tensorlinalg import (
    FinVector,
    LinMap,
    TExpr,
    compose,
    convolution_inverse,
    invert,
    left_inverse,
    tensor_map,
)

__all__ = [
    "CanonicalMaps",
    "CrossedSystemData",
    "FactorizationWitness",
    "build_crossed_product",
    "canonical_maps",
    "certify",
    "check_lazy_cocycle",
    "coboundary_system",
    "crossed_product_group",
    "factorize",
    "linearize_group_crossed_system",
    "normality_check",
    "smash_system",
    "transform_by_lazy_cocycle",
    "transform_isomorphism",
    "trivial_action",
    "trivial_cocycle",
    "trivial_system",
    "universal_map_in",
    "universal_map_out",
    "verify_crossed_system",
]


@dataclass(frozen=True)
class CrossedSystemData:
    A: HopfData
    H: HopfData
    act: LinMap
    cocycle: LinMap
    name: str = field(default="", compare=False)
    certified: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        dA, dH = self.A.dim, self.H.dim
        if self.act.domain_dim != dH * dA or self.act.codomain_dim != dA:
            raise ShapeMismatch("action must map H (x) A -> A")
        if self.cocycle.domain_dim != dH * dH or self.cocycle.codomain_dim != dA:
            raise ShapeMismatch("cocycle must map H (x) H -> A")
        object.__setattr__(self, "act", self.act.reshape((dH, dA), (dA,)))
        object.__setattr__(self, "cocycle", self.cocycle.reshape((dH, dH), (dA,)))

    @property
    def field(self):
        return self.A.field.join(self.H.field)

    def act_on(self, h: int, a: int) -> FinVector:
        return self.act.apply_basis(h, a)

    def f(self, h: int, g: int) -> FinVector:
        return self.cocycle.apply_basis(h, g)


def trivial_action(A: HopfData, H: HopfData) -> LinMap:
    """h |> a = eps(h) a."""
    return LinMap.from_function(
        (H.dim, A.dim), (A.dim,), lambda i: {(i[1],): H.counit.entry(0, i[0])}
    )


def trivial_cocycle(A: HopfData, H: HopfData) -> LinMap:
    """f(h, g) = eps(h) eps(g) 1_A."""
    unit = A.unit.support()
    return LinMap.from_function(
        (H.dim, H.dim),
        (A.dim,),
        lambda i: {(k,): H.counit.entry(0, i[0]) * H.counit.entry(0, i[1]) * c for k, c in unit.items()},
    )


# ---------------------------------------------------------------------------
# verification


def _check_coalgebra_map(rep: AxiomReport, name: str, phi: LinMap, dom: list[HopfData], cod: HopfData) -> None:
    """phi: D1 (x) ... (x) Dk -> cod with the tensor coalgebra on the domain."""
    k = len(dom)
    ranges = [D.dim for D in dom]
    for t in product(*[range(n) for n in ranges]):
        x = TExpr.basis(*t)
        lhs = x.ap(phi, 0).ap(cod.comult, 0)
        # split every leg, then gather first halves before second halves
        y = x
        for j, D in enumerate(dom):
            y = y.ap(D.comult, 2 * j)
        y = y.perm(*[2 * j for j in range(k)], *[2 * j + 1 for j in range(k)])
        rhs = y.ap(phi, 0).ap(phi, 1)
        if lhs != rhs:
            rep.add(name, False, t, "comultiplication not preserved")
            return
        el = x.ap(phi, 0).ap(cod.counit, 0)
        er = x
        for D in dom:
            er = er.ap(D.counit, 0)
        if el != er:
            rep.add(name, False, t, "counit not preserved")
            return
    rep.add(name, True)


def verify_crossed_system(S: CrossedSystemData) -> AxiomReport:
    A, H, act, f = S.A, S.H, S.act, S.cocycle
    dA, dH = A.dim, H.dim
    mA, mH, DA, DH = A.mult, H.mult, A.comult, H.comult
    epsH = H.counit
    oneA = A.unit_expr()
    oneH = H.unit_expr()
    B = TExpr.basis
    rep = AxiomReport()

    _check_coalgebra_map(rep, "action_coalgebra_map", act, [H, A], A)
    _check_coalgebra_map(rep, "cocycle_coalgebra_map", f, [H, H], A)
    rep.check("action_unit", (dH,), lambda h: B(h).tensor(oneA).ap(act, 0), lambda h: B(h).ap(epsH, 0).tensor(oneA))
    rep.check("action_identity", (dA,), lambda a: oneH.tensor(B(a)).ap(act, 0), lambda a: B(a))
    rep.check(
        "action_multiplicative",
        (dH, dA, dA),
        lambda h, a, b: B(h, a, b).ap(mA, 1).ap(act, 0),
        lambda h, a, b: B(h, a, b).ap(DH, 0).perm(0, 2, 1, 3).ap(act, 0).ap(act, 1).ap(mA, 0),
    )

    def norm_lhs(h):
        return B(h).tensor(oneH).ap(f, 0).tensor(oneH.tensor(B(h)).ap(f, 0))

    def norm_rhs(h):
        e = B(h).ap(epsH, 0).tensor(oneA)
        return e.tensor(e)

    rep.check("cocycle_normalized", (dH,), norm_lhs, norm_rhs)
    rep.check(
        "twisted_module",
        (dH, dH, dA),
        lambda g, h, a: B(g, h, a)
        .ap(DH, 0)
        .ap(DH, 2)
        .perm(0, 2, 4, 1, 3)
        .ap(act, 1)
        .ap(act, 0)
        .ap(f, 1)
        .ap(mA, 0),
        lambda g, h, a: B(g, h, a)
        .ap(DH, 0)
        .ap(DH, 2)
        .perm(0, 2, 1, 3, 4)
        .ap(f, 0)
        .ap(mH, 1)
        .ap(act, 1)
        .ap(mA, 0),
    )
    rep.check(
        "cocycle_condition",
        (dH, dH, dH),
        lambda g, h, l: B(g, h, l)
        .ap(DH, 0)
        .ap(DH, 2)
        .ap(DH, 4)
        .perm(0, 2, 4, 1, 3, 5)
        .ap(f, 1)
        .ap(act, 0)
        .ap(mH, 2)
        .ap(f, 1)
        .ap(mA, 0),
        lambda g, h, l: B(g, h, l)
        .ap(DH, 0)
        .ap(DH, 2)
        .perm(0, 2, 1, 3, 4)
        .ap(f, 0)
        .ap(mH, 1)
        .ap(f, 1)
        .ap(mA, 0),
    )
    rep.check(
        "co_condition_action",
        (dH, dA),
        lambda g, a: B(g, a).ap(DH, 0).ap(act, 1),
        lambda g, a: B(g, a).ap(DH, 0).perm(1, 0, 2).ap(act, 1),
    )
    rep.check(
        "co_condition_cocycle",
        (dH, dH),
        lambda g, h: B(g, h).ap(DH, 0).ap(DH, 2).perm(0, 2, 1, 3).ap(mH, 0).ap(f, 1),
        lambda g, h: B(g, h).ap(DH, 0).ap(DH, 2).perm(1, 3, 0, 2).ap(mH, 0).ap(f, 1),
    )
    return rep


def certify(S: CrossedSystemData) -> CrossedSystemData:
    """Return ``S`` marked certified, or raise SystemNotCertified with the report."""
    rep = verify_crossed_system(S)
    if not rep.ok:
        bad = rep.failed()[0]
        raise SystemNotCertified(f"crossed system fails {bad.name} at {bad.witness}", rep)
    return replace(S, certified=True)


# ---------------------------------------------------------------------------
# the product


def product_mult(S: CrossedSystemData) -> LinMap:
    """(a # h)(c # g) = a (h1 |> c) f(h2, g1) # h3 g2, as (dA, dH, dA, dH) -> (dA, dH)."""
    A, H = S.A, S.H
    dA, dH = A.dim, H.dim
    DH = H.comult

    def col(idx):
        t = (
            TExpr.basis(*idx)
            .ap(DH, 1)
            .ap(DH, 2)
            .ap(DH, 5)
            .perm(0, 1, 4, 2, 5, 3, 6)
            .ap(S.act, 1)
            .ap(S.cocycle, 2)
            .ap(A.mult, 0)
            .ap(A.mult, 0)
            .ap(H.mult, 1)
        )
        return t.terms

    return LinMap.from_function((dA, dH, dA, dH), (dA, dH), col)


def build_crossed_product(S: CrossedSystemData, name: str | None = None) -> HopfData:
    if not S.certified:
        raise SystemNotCertified("crossed product requires a certified system; call certify() first")
    A, H = S.A, S.H
    dA, dH = A.dim, H.dim
    d = dA * dH
    F = S.field
    one = F.one
    mult4 = product_mult(S)
    comult = compose(
        LinMap.permutation((dA, dA, dH, dH), (0, 2, 1, 3), one), tensor_map(A.comult, H.comult)
    ).reshape((d,), (d, d))
    counit = tensor_map(A.counit, H.counit).reshape((d,), ())
    unit = FinVector(a * h for a in A.unit for h in H.unit)

    # S(a # g) = (S_A[f(S_H(g2), g3)] # S_H(g1)) (S_A(a) # 1)
    oneH = H.unit_expr()

    def anti(idx):
        a, g = idx
        left = (
            TExpr.basis(g)
            .ap(H.comult, 0)
            .ap(H.comult, 1)
            .ap(H.antipode, 1)
            .ap(S.cocycle, 1)
            .ap(A.antipode, 1)
            .ap(H.antipode, 0)
            .perm(1, 0)
        )
        right = TExpr.basis(a).ap(A.antipode, 0).tensor(oneH)
        return left.tensor(right).ap(mult4, 0).terms

    antipode = LinMap.from_function((dA, dH), (dA, dH), anti).reshape((d,), (d,))
    labels = [f"{a}#{h}" for a in A.labels for h in H.labels]
    nm = name if name is not None else (S.name or f"{A.name}#{H.name}")
    return make_hopf(mult4.reshape((d, d), (d,)), unit, comult, counit, antipode, labels, nm, F)


@dataclass(frozen=True)
class CanonicalMaps:
    i_A: LinMap
    i_H: LinMap
    pi_A: LinMap
    pi_H: LinMap

    def __iter__(self):
        return iter((self.i_A, self.i_H, self.pi_A, self.pi_H))


def canonical_maps(S: CrossedSystemData) -> CanonicalMaps:
    A, H = S.A, S.H
    dA, dH = A.dim, H.dim
    d = dA * dH
    uH, uA = H.unit.support(), A.unit.support()
    i_A = LinMap.from_function((dA,), (dA, dH), lambda i: {(i[0], k): c for k, c in uH.items()})
    i_H = LinMap.from_function((dH,), (dA, dH), lambda i: {(k, i[0]): c for k, c in uA.items()})
    pi_A = LinMap.from_function((dA, dH), (dA,), lambda i: {(i[0],): H.counit.entry(0, i[1])})
    pi_H = LinMap.from_function((dA, dH), (dH,), lambda i: {(i[1],): A.counit.entry(0, i[0])})
    return CanonicalMaps(i_A.reshape((dA,), (d,)), i_H.reshape((dH,), (d,)), pi_A.reshape((d,), (dA,)), pi_H.reshape((d,), (dH,)))


# ---------------------------------------------------------------------------
# constructors


def trivial_system(A: HopfData, H: HopfData) -> CrossedSystemData:
    return certify(CrossedSystemData(A, H, trivial_action(A, H), trivial_cocycle(A, H), f"{A.name}(x){H.name}"))


def smash_system(A: HopfData, H: HopfData, act: LinMap, name: str = "") -> CrossedSystemData:
    """Crossed system with the trivial cocycle."""
    return certify(CrossedSystemData(A, H, act, trivial_cocycle(A, H), name or f"{A.name}#{H.name}"))


def _check_group(table, what):
    n = len(table)
    if any(len(r) != n for r in table):
        raise GroupAxiomFailure(f"{what} table is not square")


def crossed_product_group(H_table, G_table, f_table, act_table) -> list[list[int]]:
    """Cayley table of H x G with (h, g)(h', g') = (h (g |> h') f(g, g'), g g').

    Elements are numbered ``h * |G| + g``.
    """
    nH, nG = len(H_table), len(G_table)
    out = [[0] * (nH * nG) for _ in range(nH * nG)]
    for h, g, h2, g2 in product(range(nH), range(nG), range(nH), range(nG)):
        x = H_table[H_table[h][act_table[g][h2]]][f_table[g][g2]]
        out[h * nG + g][h2 * nG + g2] = x * nG + G_table[g][g2]
    return out


def linearize_group_crossed_system(
    H_table: Sequence[Sequence[int]],
    G_table: Sequence[Sequence[int]],
    f_table: Sequence[Sequence[int]],
    act_table: Sequence[Sequence[int]],
    H_labels: Sequence[str] | None = None,
    G_labels: Sequence[str] | None = None,
    field=None,
    name: str = "",
) -> CrossedSystemData:
    """(kH, kG, f~, act~) from a normalized crossed system of groups.

    ``f_table[g][g']`` is an element of H, ``act_table[g][h]`` is ``g |> h``.
    The identity of each group must be element 0.
    """
    _check_group(H_table, "H")
    _check_group(G_table, "G")
    nH, nG = len(H_table), len(G_table)
    mulH = lambda x, y: H_table[x][y]  # noqa: E731
    mulG = lambda x, y: G_table[x][y]  # noqa: E731
    for g in range(nG):
        if f_table[0][g] != 0 or f_table[g][0] != 0:
            raise GroupAxiomFailure(f"cocycle not normalized at {g}")
        if act_table[g][0] != 0:
            raise GroupAxiomFailure(f"action does not fix the identity at {g}")
        for h, k in product(range(nH), repeat=2):
            if act_table[g][mulH(h, k)] != mulH(act_table[g][h], act_table[g][k]):
                raise GroupAxiomFailure(f"action not by automorphisms at {(g, h, k)}")
    for h in range(nH):
        if act_table[0][h] != h:
            raise GroupAxiomFailure(f"identity acts nontrivially on {h}")
    for g, g2, h in product(range(nG), range(nG), range(nH)):
        lhs = mulH(act_table[g][act_table[g2][h]], f_table[g][g2])
        rhs = mulH(f_table[g][g2], act_table[mulG(g, g2)][h])
        if lhs != rhs:
            raise GroupAxiomFailure(f"twisted module condition fails at {(g, g2, h)}")
    for g, g2, g3 in product(range(nG), repeat=3):
        lhs = mulH(act_table[g][f_table[g2][g3]], f_table[g][mulG(g2, g3)])
        rhs = mulH(f_table[g][g2], f_table[mulG(g, g2)][g3])
        if lhs != rhs:
            raise GroupAxiomFailure(f"cocycle condition fails at {(g, g2, g3)}")
    try:
        kH = group_algebra(H_table, None, H_labels, "kH", field)
        kG = group_algebra(G_table, None, G_labels, "kG", field)
    except Exception as exc:
        raise GroupAxiomFailure(str(exc)) from exc
    one = kH.one
    act = LinMap.from_function((nG, nH), (nH,), lambda i: {(act_table[i[0]][i[1]],): one})
    f = LinMap.from_function((nG, nG), (nH,), lambda i: {(f_table[i[0]][i[1]],): one})
    return certify(CrossedSystemData(kH, kG, act, f, name or "group crossed system"))


def coboundary_system(A: HopfData, H: HopfData, gamma: LinMap, name: str = "") -> tuple[CrossedSystemData, LinMap]:
    """System (|>_gamma, f_gamma) and the isomorphism A #_gamma H -> A (x) H.

    h |> a = gamma(h1) a gamma^-1(h2), f(h, g) = gamma(h1) gamma(g1) gamma^-1(h2 g2),
    phi(a # h) = a gamma(h1) (x) h2.
    """
    if not is_cocommutative(H):
        raise NotCocommutative(f"{H.name or 'H'} is not cocommutative")
    gamma = gamma.reshape((H.dim,), (A.dim,))
    rep = map_predicates(gamma, H, A, "coalgebra")
    if not rep.ok:
        raise NotCoalgebraMap("gamma is not a coalgebra map", rep)
    if gamma(H.unit) != A.unit:
        raise NotCoalgebraMap("gamma is not unitary")
    ginv = compose(A.antipode, gamma)
    dA, dH = A.dim, H.dim
    mA = A.mult

    def act_col(idx):
        h, a = idx
        t = TExpr.basis(h).ap(H.comult, 0).ap(gamma, 0).ap(ginv, 1)  # (G1, Gi2)
        t = t.tensor(TExpr.basis(a)).perm(0, 2, 1).ap(mA, 0).ap(mA, 0)
        return t.terms

    def f_col(idx):
        h, g = idx
        t = TExpr.basis(h, g).ap(H.comult, 0).ap(H.comult, 2).perm(0, 2, 1, 3)
        t = t.ap(gamma, 0).ap(gamma, 1).ap(H.mult, 2).ap(ginv, 2).ap(mA, 0).ap(mA, 0)
        return t.terms

    act = LinMap.from_function((dH, dA), (dA,), act_col)
    f = LinMap.from_function((dH, dH), (dA,), f_col)
    S = certify(CrossedSystemData(A, H, act, f, name or f"coboundary {A.name}/{H.name}"))
    phi = LinMap.from_function(
        (dA, dH),
        (dA, dH),
        lambda i: TExpr.basis(*i).ap(H.comult, 1).ap(gamma, 1).ap(mA, 0).terms,
    ).reshape((dA * dH,), (dA * dH,))
    return S, phi


# ---------------------------------------------------------------------------
# lazy cocycles


def check_lazy_cocycle(A: HopfData, H: HopfData, u: LinMap) -> AxiomReport:
    u = u.reshape((H.dim,), (A.dim,))
    rep = AxiomReport()
    cm = map_predicates(u, H, A, "coalgebra")
    bad = cm.failed()
    rep.add("coalgebra_map", not bad, bad[0].witness if bad else None, bad[0].name if bad else "")
    rep.check("unitary", (), lambda: H.unit_expr().ap(u, 0), lambda: A.unit_expr())
    rep.check(
        "lazy",
        (H.dim,),
        lambda h: TExpr.basis(h).ap(H.comult, 0).ap(u, 1),
        lambda h: TExpr.basis(h).ap(H.comult, 0).perm(1, 0).ap(u, 1),
    )
    try:
        convolution_inverse(u, H.coalgebra, A.algebra, A.zero)
        rep.add("convolution_invertible", True)
    except NotConvInvertible:
        rep.add("convolution_invertible", False, (), "no convolution inverse")
    return rep


def transform_by_lazy_cocycle(S: CrossedSystemData, u: LinMap) -> CrossedSystemData:
    """The cohomologous system (|>', f') induced by a lazy 1-cocycle u: H -> A.

    h |>' a = u^-1(h1) (h2 |> a) u(h3)
    f'(h, k) = u^-1(h1) (h2 |> u^-1(k1)) f(h3, k2) u(h4 k3)
    """
    A, H = S.A, S.H
    u = u.reshape((H.dim,), (A.dim,))
    rep = check_lazy_cocycle(A, H, u)
    if not rep.ok:
        bad = rep.failed()[0]
        raise LazyCheckFailed(f"u fails {bad.name}", rep)
    uinv = convolution_inverse(u, H.coalgebra, A.algebra, A.zero)
    DH, mA = H.comult, A.mult
    dA, dH = A.dim, H.dim

    def act_col(idx):
        h, a = idx
        t = TExpr.basis(h, a).ap(DH, 0).ap(DH, 1)  # h1 h2 h3 a
        t = t.perm(0, 1, 3, 2).ap(uinv, 0).ap(S.act, 1).ap(u, 2)
        return t.ap(mA, 0).ap(mA, 0).terms

    def f_col(idx):
        h, k = idx
        t = TExpr.basis(h, k).ap(DH, 0).ap(DH, 1).ap(DH, 2)  # h1 h2 h3 h4 k
        t = t.ap(DH, 4).ap(DH, 5)  # h1 h2 h3 h4 k1 k2 k3
        t = t.perm(0, 1, 4, 2, 5, 3, 6)  # h1 h2 k1 h3 k2 h4 k3
        t = t.ap(uinv, 0).ap(uinv, 2).ap(S.act, 1).ap(S.cocycle, 2).ap(H.mult, 3).ap(u, 3)
        return t.ap(mA, 0).ap(mA, 0).ap(mA, 0).terms

    act = LinMap.from_function((dH, dA), (dA,), act_col)
    f = LinMap.from_function((dH, dH), (dA,), f_col)
    return certify(CrossedSystemData(A, H, act, f, S.name))


def transform_isomorphism(S: CrossedSystemData, u: LinMap) -> tuple[LinMap, AxiomReport]:
    """psi(a # h) = a u(h1) # h2 from A #_S H to the product of the transformed system.

    The report checks that psi is a Hopf isomorphism, left A-linear and right
    H-colinear.
    """
    A, H = S.A, S.H
    u = u.reshape((H.dim,), (A.dim,))
    T = transform_by_lazy_cocycle(S, u)
    P, Q = build_crossed_product(S), build_crossed_product(T)
    dA, dH = A.dim, H.dim
    psi = LinMap.from_function(
        (dA, dH), (dA, dH), lambda i: TExpr.basis(*i).ap(H.comult, 1).ap(u, 1).ap(A.mult, 0).terms
    ).reshape((dA * dH,), (dA * dH,))
    rep = map_predicates(psi, P, Q, ("hopf", "iso"))
    iA = canonical_maps(S).i_A
    psi4 = psi.reshape((dA, dH), (dA, dH))
    rep.check(
        "left_A_linear",
        (dA, dA, dH),
        lambda b, a, h: TExpr.basis(b).ap(iA.reshape((dA,), (dA, dH)), 0).tensor(TExpr.basis(a, h)).ap(P.mult.reshape((dA, dH, dA, dH), (dA, dH)), 0).ap(psi4, 0),
        lambda b, a, h: TExpr.basis(b).ap(iA.reshape((dA,), (dA, dH)), 0).tensor(TExpr.basis(a, h).ap(psi4, 0)).ap(Q.mult.reshape((dA, dH, dA, dH), (dA, dH)), 0),
    )
    # right H-coaction on A # H: a # h -> (a # h1) (x) h2
    rho = LinMap.from_function((dA, dH), (dA, dH, dH), lambda i: TExpr.basis(*i).ap(H.comult, 1).terms)
    rep.check(
        "right_H_colinear",
        (dA, dH),
        lambda a, h: TExpr.basis(a, h).ap(psi4, 0).ap(rho, 0),
        lambda a, h: TExpr.basis(a, h).ap(rho, 0).ap(psi4, 0),
    )
    return psi, rep


# ---------------------------------------------------------------------------
# factorization


@dataclass(frozen=True)
class FactorizationWitness:
    E: HopfData
    a_embed: LinMap
    h_embed: LinMap
    u_map: LinMap
    recovered: CrossedSystemData
    iso: LinMap
    report: AxiomReport = field(compare=False, default_factory=AxiomReport)


def _pullback_algebra_hopf(E: HopfData, emb: LinMap, L: LinMap, labels, name) -> HopfData:
    """Hopf structure on the domain of an embedding whose image is a Hopf subalgebra."""
    d = emb.domain_dim
    mult = compose(L, compose(E.mult, tensor_map(emb, emb))).reshape((d, d), (d,))
    comult = compose(tensor_map(L, L), compose(E.comult, emb)).reshape((d,), (d, d))
    counit = compose(E.counit, emb).reshape((d,), ())
    S = compose(L, compose(E.antipode, emb)).reshape((d,), (d,))
    unit = L(E.unit)
    return make_hopf(mult, unit, comult, counit, S, labels, name, E.field)


def normality_check(E: HopfData, a_embed: LinMap) -> AxiomReport:
    """x1 a S(x2) and S(x1) a x2 lie in the image of a_embed for all basis x, a."""
    dE = E.dim
    dA = a_embed.domain_dim
    a_embed = a_embed.reshape((dA,), (dE,))
    L = left_inverse(a_embed, E.one)
    proj = compose(a_embed, L)
    rep = AxiomReport()

    def inside(t: TExpr) -> bool:
        v = t.to_vector((dE,))
        return proj(v) == v

    def run(name, expr):
        for x, a in product(range(dE), range(dA)):
            t = expr(x, a)
            if not inside(t):
                rep.add(name, False, (x, a), "element leaves the subalgebra")
                return
        rep.add(name, True)

    emb = a_embed
    run(
        "left_normal",
        lambda x, a: TExpr.basis(x, a).ap(E.comult, 0).perm(0, 2, 1).ap(emb, 1).ap(E.antipode, 2).ap(E.mult, 0).ap(E.mult, 0),
    )
    run(
        "right_normal",
        lambda x, a: TExpr.basis(x, a).ap(E.comult, 0).perm(0, 2, 1).ap(emb, 1).ap(E.antipode, 0).ap(E.mult, 0).ap(E.mult, 0),
    )
    return rep


def factorize(
    E: HopfData,
    a_embed: LinMap,
    h_embed: LinMap,
    A: HopfData | None = None,
    H: HopfData | None = None,
) -> FactorizationWitness:
    """Recover a crossed system from a factorization E = A . H.

    ``a_embed`` must embed a normal Hopf subalgebra, ``h_embed`` a subcoalgebra
    containing 1_E.  ``A``/``H`` may be supplied to fix labels; their structure
    must agree with the one induced from E.
    """
    dE = E.dim
    dA, dH = a_embed.domain_dim, h_embed.domain_dim
    a_embed = a_embed.reshape((dA,), (dE,))
    h_embed = h_embed.reshape((dH,), (dE,))
    one = E.one
    if dA * dH != dE:
        raise NotBijective(f"dim A * dim H = {dA * dH} differs from dim E = {dE}")
    u_map = compose(E.mult, tensor_map(a_embed, h_embed)).reshape((dA, dH), (dE,))
    try:
        u_inv = invert(u_map.reshape((dA * dH,), (dE,)), one).reshape((dE,), (dA, dH))
    except Singular as exc:
        raise NotBijective("multiplication map A (x) H -> E is not bijective") from exc
    try:
        LA = left_inverse(a_embed, one)
        LH = left_inverse(h_embed, one)
    except Singular as exc:
        raise NotBijective("embedding is not injective") from exc

    # A: Hopf subalgebra
    projA = compose(a_embed, LA)
    pre = AxiomReport()
    for name, maps in (
        ("A_closed_under_mult", compose(E.mult, tensor_map(a_embed, a_embed))),
        ("A_contains_unit", LinMap.from_vector(E.unit)),
        ("A_closed_under_antipode", compose(E.antipode, a_embed)),
    ):
        bad = compose(projA, maps).first_difference(maps)
        pre.add(name, bad is None, bad)
    DA_img = compose(E.comult, a_embed)
    bad = compose(tensor_map(projA, projA), DA_img).first_difference(DA_img)
    pre.add("A_subcoalgebra", bad is None, bad)
    # H: subcoalgebra containing 1
    projH = compose(h_embed, LH)
    DH_img = compose(E.comult, h_embed)
    bad = compose(tensor_map(projH, projH), DH_img).first_difference(DH_img)
    pre.add("H_subcoalgebra", bad is None, bad)
    unitv = E.unit
    pre.add("H_contains_unit", projH(unitv) == unitv, ())
    if not pre.ok:
        e = pre.failed()[0]
        raise PreconditionFailed(f"factorization precondition {e.name} fails at {e.witness}", pre)

    A_ind = _pullback_algebra_hopf(E, a_embed, LA, A.labels if A else [f"a{i}" for i in range(dA)], A.name if A else "A")
    # H coalgebra and unit pulled back; product from nu
    comH = compose(tensor_map(LH, LH), DH_img).reshape((dH,), (dH, dH))
    counH = compose(E.counit, h_embed).reshape((dH,), ())
    unitH = LH(unitv)
    nu = compose(u_inv, compose(E.mult, tensor_map(h_embed, h_embed))).reshape((dH, dH), (dA, dH))
    mu = compose(u_inv, compose(E.mult, tensor_map(h_embed, a_embed))).reshape((dH, dA), (dA, dH))
    epsA = A_ind.counit.reshape((dA,), ())
    epsH = counH
    multH = compose(tensor_map(epsA, LinMap.identity((dH,), one)), nu).reshape((dH, dH), (dH,))
    f = compose(tensor_map(LinMap.identity((dA,), one), epsH), nu).reshape((dH, dH), (dA,))
    act = compose(tensor_map(LinMap.identity((dA,), one), epsH), mu).reshape((dH, dA), (dA,))
    right = compose(tensor_map(epsA, LinMap.identity((dH,), one)), mu).reshape((dH, dA), (dH,))

    norm = normality_check(E, a_embed)
    if not norm.ok:
        e = norm.failed()[0]
        raise NotNormal(f"A is not normal in E: {e.name} at {e.witness}", norm)
    triv = LinMap.from_function((dH, dA), (dH,), lambda i: {(i[0],): epsA.entry(0, i[1])})
    act_witness = right.first_difference(triv)
    if act_witness is not None:
        raise LeftActionNotTrivial(f"induced right action is not trivial at {act_witness}")

    try:
        H_ind = make_hopf(multH, unitH, comH, counH, None, H.labels if H else [f"h{i}" for i in range(dH)], H.name if H else "H", E.field)
    except NoAntipode as exc:
        raise PreconditionFailed("induced structure on H has no antipode") from exc
    if A is not None:
        if (A.mult, A.unit, A.comult, A.counit, A.antipode) != (A_ind.mult, A_ind.unit, A_ind.comult, A_ind.counit, A_ind.antipode):
            raise PreconditionFailed("supplied A differs from the structure induced by E")
        A_ind = A
    if H is not None:
        if (H.mult, H.unit, H.comult, H.counit, H.antipode) != (H_ind.mult, H_ind.unit, H_ind.comult, H_ind.counit, H_ind.antipode):
            raise PreconditionFailed("supplied H differs from the structure induced by E")
        H_ind = H
    recovered = certify(CrossedSystemData(A_ind, H_ind, act, f, f"factorization of {E.name}"))
    P = build_crossed_product(recovered)
    iso = u_inv.reshape((dE,), (dA * dH,))
    rep = AxiomReport()
    rep.extend(pre)
    rep.extend(norm)
    rep.add("left_action_trivial", act_witness is None, act_witness)
    rep.extend(map_predicates(iso, E, P, ("hopf", "iso")), prefix="iso_")
    return FactorizationWitness(E, a_embed, h_embed, u_map.reshape((dA * dH,), (dE,)), recovered, iso, rep)


# ---------------------------------------------------------------------------
# universal properties


def _raise_first(rep: AxiomReport, what: str) -> None:
    if not rep.ok:
        e = rep.failed()[0]
        raise PreconditionFailed(f"{what}: {e.name} fails at {e.witness}", rep)


def universal_map_out(S: CrossedSystemData, X: HopfData, u: LinMap, v: LinMap) -> LinMap:
    """w(a # h) = u(a) v(h) for a Hopf map u: A -> X and coalgebra map v: H -> X.

    Requires (u1) u(f(h1, g1)) v(h2 g2) = v(h) v(g) and
    (u2) u(h1 |> b) v(h2) = v(h) u(b).
    """
    A, H = S.A, S.H
    dA, dH = A.dim, H.dim
    u = u.reshape((dA,), (X.dim,))
    v = v.reshape((dH,), (X.dim,))
    mX = X.mult
    pre = AxiomReport()
    pre.extend(map_predicates(u, A, X, "hopf"), prefix="u_")
    pre.extend(map_predicates(v, H, X, "coalgebra"), prefix="v_")
    pre.check(
        "u1",
        (dH, dH),
        lambda h, g: TExpr.basis(h, g).ap(H.comult, 0).ap(H.comult, 2).perm(0, 2, 1, 3).ap(S.cocycle, 0).ap(u, 0).ap(H.mult, 1).ap(v, 1).ap(mX, 0),
        lambda h, g: TExpr.basis(h, g).ap(v, 0).ap(v, 1).ap(mX, 0),
    )
    pre.check(
        "u2",
        (dH, dA),
        lambda h, b: TExpr.basis(h, b).ap(H.comult, 0).perm(0, 2, 1).ap(S.act, 0).ap(u, 0).ap(v, 1).ap(mX, 0),
        lambda h, b: TExpr.basis(h, b).ap(v, 0).ap(u, 1).ap(mX, 0),
    )
    _raise_first(pre, "universal_map_out precondition")
    w = compose(mX, tensor_map(u, v)).reshape((dA * dH,), (X.dim,))
    P = build_crossed_product(S)
    post = map_predicates(w, P, X, "hopf")
    cm = canonical_maps(S)
    post.add("restricts_to_u", compose(w, cm.i_A) == u)
    post.add("restricts_to_v", compose(w, cm.i_H) == v)
    if not post.ok:
        raise PreconditionFailed("constructed map fails the universal property", post)
    return w


def universal_map_in(S: CrossedSystemData, X: HopfData, u: LinMap, v: LinMap) -> LinMap:
    """w(x) = u(x1) # v(x2) for a coalgebra map u: X -> A and Hopf map v: X -> H.

    Requires (u3) u(x1) (x) v(x2) = u(x2) (x) v(x1) and
    (u4) u(xy) = u(x1) [v(x2) |> u(y1)] f(v(x3), v(y2)).
    """
    A, H = S.A, S.H
    dA, dH, dX = A.dim, H.dim, X.dim
    u = u.reshape((dX,), (dA,))
    v = v.reshape((dX,), (dH,))
    DX, mA = X.comult, A.mult
    pre = AxiomReport()
    pre.extend(map_predicates(v, X, H, "hopf"), prefix="v_")
    pre.extend(map_predicates(u, X, A, "coalgebra"), prefix="u_")
    pre.check(
        "u3",
        (dX,),
        lambda x: TExpr.basis(x).ap(DX, 0).ap(u, 0).ap(v, 1),
        lambda x: TExpr.basis(x).ap(DX, 0).perm(1, 0).ap(u, 0).ap(v, 1),
    )
    pre.check(
        "u4",
        (dX, dX),
        lambda x, y: TExpr.basis(x, y).ap(X.mult, 0).ap(u, 0),
        lambda x, y: TExpr.basis(x, y)
        .ap(DX, 0)
        .ap(DX, 1)
        .ap(DX, 3)
        .ap(u, 0)
        .ap(v, 1)
        .ap(u, 3)
        .ap(v, 2)
        .ap(v, 4)
        .perm(0, 1, 3, 2, 4)
        .ap(S.act, 1)
        .ap(S.cocycle, 2)
        .ap(mA, 0)
        .ap(mA, 0),
    )
    _raise_first(pre, "universal_map_in precondition")
    w = compose(tensor_map(u, v), DX).reshape((dX,), (dA * dH,))
    P = build_crossed_product(S)
    post = map_predicates(w, X, P, "hopf")
    cm = canonical_maps(S)
    post.add("projects_to_v", compose(cm.pi_H, w) == v)
    post.add("projects_to_u", compose(cm.pi_A, w) == u)
    if not post.ok:
        raise PreconditionFailed("constructed map fails the universal property", post)
    return w
