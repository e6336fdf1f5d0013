"""Braided (coquasitriangular) structures on crossed products.

A pairing ``q: L (x) R -> k`` is stored as a :class:`PairingData` whose
``form`` is a LinMap ``(dim L, dim R) -> ()``.  The four components of a
braiding on ``A # H`` are

* ``p``   on ``A (x) A``   (a braiding of A)
* ``u``   on ``A (x) H``   ((p, f)-right skew pairing)
* ``v``   on ``H (x) A``   ((p, f)-left skew pairing)
* ``tau`` on ``H (x) H``   ((u, v)-skew braiding)

and the braiding of the product is

    sigma(a # h, b # g) = u(a1, g1) p(a2, b1) tau(h1, g2) v(h2, b2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence

from .crossed import CrossedSystemData, build_crossed_product
from .errors import (
    AlphaNotSymmetric,
    NotABraiding,
    NotRootOfUnity,
    QuadrupleNotCertified,
    SearchSpaceTooLarge,
    ShapeMismatch,
    ShapeNotSpecial,
    UpsilonConditionFailed,
)
from .exactfield import Field, render
from .hopfcore import AxiomReport, HopfData, cyclic_group_algebra, is_cocommutative, is_commutative
from .tensorlinalg import LinMap, TExpr

__all__ = [
    "BraidingQuadruple",
    "PairingData",
    "assemble_sigma",
    "certify_quadruple",
    "check_braiding",
    "check_compatibilities",
    "check_pf_left_skew",
    "check_pf_right_skew",
    "check_skew_pairing",
    "check_uv_skew_braiding",
    "corollary_checks",
    "counit_pairing",
    "cyclic_bicharacter_braiding",
    "cyclic_cocycle",
    "cyclic_pf_right_skew",
    "cyclic_pf_right_skew_table",
    "decompose_sigma",
    "H4_C3_VARIANTS",
    "h4_c3_quadruple",
    "search_braidings",
    "sigma_table",
]


@dataclass(frozen=True)
class PairingData:
    left_dim: int
    right_dim: int
    form: LinMap

    def __post_init__(self) -> None:
        if self.form.domain_dim != self.left_dim * self.right_dim or self.form.codomain_dim != 1:
            raise ShapeMismatch("pairing form has the wrong shape")
        object.__setattr__(self, "form", self.form.reshape((self.left_dim, self.right_dim), ()))

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence]) -> "PairingData":
        nl, nr = len(rows), len(rows[0]) if rows else 0
        if any(len(r) != nr for r in rows):
            raise ShapeMismatch("ragged pairing matrix")
        ents = {(0, i * nr + j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v != 0}
        return cls(nl, nr, LinMap((nl, nr), (), ents))

    @classmethod
    def from_function(cls, nl: int, nr: int, fn: Callable[[int, int], object]) -> "PairingData":
        return cls.from_matrix([[fn(i, j) for j in range(nr)] for i in range(nl)])

    @classmethod
    def from_sparse(cls, nl: int, nr: int, entries: Mapping[tuple[int, int], object]) -> "PairingData":
        return cls(nl, nr, LinMap((nl, nr), (), {(0, i * nr + j): v for (i, j), v in entries.items()}))

    def __call__(self, i: int, j: int):
        return self.form.entry(0, i * self.right_dim + j)

    @property
    def matrix(self) -> list[list]:
        return [[self(i, j) for j in range(self.right_dim)] for i in range(self.left_dim)]

    def entries(self) -> dict[tuple[int, int], object]:
        return {divmod(c, self.right_dim): v for (_, c), v in self.form.entries.items()}


def counit_pairing(L: HopfData, R: HopfData) -> PairingData:
    """eps (x) eps."""
    return PairingData.from_function(L.dim, R.dim, lambda i, j: L.counit.entry(0, i) * R.counit.entry(0, j))


@dataclass(frozen=True)
class BraidingQuadruple:
    p: PairingData
    tau: PairingData
    u: PairingData
    v: PairingData
    params: dict = field(default_factory=dict, compare=False)

    def check_shapes(self, A: HopfData, H: HopfData) -> None:
        want = {"p": (A.dim, A.dim), "tau": (H.dim, H.dim), "u": (A.dim, H.dim), "v": (H.dim, A.dim)}
        for name, shape in want.items():
            q = getattr(self, name)
            if (q.left_dim, q.right_dim) != shape:
                raise ShapeMismatch(f"{name} has shape {(q.left_dim, q.right_dim)}, expected {shape}")


# ---------------------------------------------------------------------------
# axiom families

B = TExpr.basis


def _eps(X: HopfData, i: int) -> TExpr:
    return B(i).ap(X.counit, 0)


def _skew_form_checks(rep: AxiomReport, L: HopfData, R: HopfData, q: LinMap, names=("BR1", "BR2", "BR3", "BR4")) -> None:
    """The four skew pairing identities for q: L (x) R -> k."""
    dl, dr = L.dim, R.dim
    rep.check(
        names[0],
        (dl, dl, dr),
        lambda x, y, z: B(x, y, z).ap(L.mult, 0).ap(q, 0),
        lambda x, y, z: B(x, y, z).ap(R.comult, 2).perm(0, 2, 1, 3).ap(q, 0).ap(q, 0),
    )
    rep.check(names[1], (dr,), lambda x: L.unit_expr().tensor(B(x)).ap(q, 0), lambda x: _eps(R, x))
    rep.check(
        names[2],
        (dl, dr, dr),
        lambda x, y, z: B(x, y, z).ap(R.mult, 1).ap(q, 0),
        lambda x, y, z: B(x, y, z).ap(L.comult, 0).perm(0, 3, 1, 2).ap(q, 0).ap(q, 0),
    )
    rep.check(names[3], (dl,), lambda y: B(y).tensor(R.unit_expr()).ap(q, 0), lambda y: _eps(L, y))


def _br5(rep: AxiomReport, name: str, H: HopfData, q: LinMap) -> None:
    d = H.dim
    rep.check(
        name,
        (d, d),
        lambda x, y: B(x, y).ap(H.comult, 0).ap(H.comult, 2).perm(0, 2, 1, 3).ap(q, 0).ap(H.mult, 0),
        lambda x, y: B(x, y).ap(H.comult, 0).ap(H.comult, 2).perm(2, 0, 1, 3).ap(H.mult, 0).ap(q, 1),
    )


def check_braiding(H: HopfData, p: PairingData) -> AxiomReport:
    if (p.left_dim, p.right_dim) != (H.dim, H.dim):
        raise ShapeMismatch("braiding must be a pairing on H (x) H")
    rep = AxiomReport()
    _skew_form_checks(rep, H, H, p.form)
    _br5(rep, "BR5", H, p.form)
    return rep


def check_skew_pairing(A: HopfData, H: HopfData, q: PairingData) -> AxiomReport:
    if (q.left_dim, q.right_dim) != (A.dim, H.dim):
        raise ShapeMismatch("skew pairing must live on A (x) H")
    rep = AxiomReport()
    _skew_form_checks(rep, A, H, q.form)
    return rep


def check_pf_right_skew(A: HopfData, H: HopfData, f: LinMap, p: PairingData, u: PairingData) -> AxiomReport:
    dA, dH = A.dim, H.dim
    f = f.reshape((dH, dH), (dA,))
    P, U = p.form, u.form
    rep = AxiomReport()
    rep.check(
        "RS1",
        (dA, dA, dH),
        lambda a, b, t: B(a, b, t).ap(A.mult, 0).ap(U, 0),
        lambda a, b, t: B(a, b, t).ap(H.comult, 2).perm(0, 2, 1, 3).ap(U, 0).ap(U, 0),
    )
    rep.check("RS2", (dH,), lambda h: A.unit_expr().tensor(B(h)).ap(U, 0), lambda h: _eps(H, h))
    rep.check(
        "RS3",
        (dA, dH, dH),
        lambda a, g, t: B(a, g, t)
        .ap(A.comult, 0)
        .ap(H.comult, 2)
        .ap(H.comult, 4)
        .perm(0, 3, 5, 1, 2, 4)
        .ap(H.mult, 1)
        .ap(U, 0)
        .ap(f, 1)
        .ap(P, 0),
        lambda a, g, t: B(a, g, t).ap(A.comult, 0).perm(0, 3, 1, 2).ap(U, 0).ap(U, 0),
    )
    rep.check("RS4", (dA,), lambda a: B(a).tensor(H.unit_expr()).ap(U, 0), lambda a: _eps(A, a))
    return rep


def check_pf_left_skew(H: HopfData, A: HopfData, f: LinMap, p: PairingData, v: PairingData) -> AxiomReport:
    dA, dH = A.dim, H.dim
    f = f.reshape((dH, dH), (dA,))
    P, V = p.form, v.form
    rep = AxiomReport()
    rep.check(
        "LS1",
        (dH, dH, dA),
        lambda h, g, c: B(h, g, c)
        .ap(H.comult, 0)
        .ap(H.comult, 2)
        .ap(A.comult, 4)
        .perm(0, 2, 4, 1, 3, 5)
        .ap(f, 0)
        .ap(P, 0)
        .ap(H.mult, 0)
        .ap(V, 0),
        lambda h, g, c: B(h, g, c).ap(A.comult, 2).perm(0, 2, 1, 3).ap(V, 0).ap(V, 0),
    )
    rep.check("LS2", (dA,), lambda a: H.unit_expr().tensor(B(a)).ap(V, 0), lambda a: _eps(A, a))
    rep.check(
        "LS3",
        (dH, dA, dA),
        lambda h, b, c: B(h, b, c).ap(A.mult, 1).ap(V, 0),
        lambda h, b, c: B(h, b, c).ap(H.comult, 0).perm(0, 3, 1, 2).ap(V, 0).ap(V, 0),
    )
    rep.check("LS4", (dH,), lambda h: B(h).tensor(A.unit_expr()).ap(V, 0), lambda h: _eps(H, h))
    return rep


def check_uv_skew_braiding(
    H: HopfData, f: LinMap, u: PairingData, v: PairingData, tau: PairingData, A: HopfData | None = None
) -> AxiomReport:
    dH = H.dim
    dA = u.left_dim
    f = f.reshape((dH, dH), (dA,))
    T, U, V = tau.form, u.form, v.form
    rep = AxiomReport()
    rep.check(
        "SBR1",
        (dH, dH, dH),
        lambda h, g, t: B(h, g, t)
        .ap(H.comult, 0)
        .ap(H.comult, 2)
        .ap(H.comult, 4)
        .perm(0, 2, 4, 1, 3, 5)
        .ap(f, 0)
        .ap(U, 0)
        .ap(H.mult, 0)
        .ap(T, 0),
        lambda h, g, t: B(h, g, t).ap(H.comult, 2).perm(0, 2, 1, 3).ap(T, 0).ap(T, 0),
    )
    rep.check("SBR2", (dH,), lambda h: H.unit_expr().tensor(B(h)).ap(T, 0), lambda h: _eps(H, h))
    rep.check(
        "SBR3",
        (dH, dH, dH),
        lambda h, g, t: B(h, g, t)
        .ap(H.comult, 0)
        .ap(H.comult, 2)
        .ap(H.comult, 4)
        .perm(0, 3, 5, 1, 2, 4)
        .ap(H.mult, 1)
        .ap(T, 0)
        .ap(f, 1)
        .ap(V, 0),
        lambda h, g, t: B(h, g, t).ap(H.comult, 0).perm(0, 3, 1, 2).ap(T, 0).ap(T, 0),
    )
    rep.check("SBR4", (dH,), lambda g: B(g).tensor(H.unit_expr()).ap(T, 0), lambda g: _eps(H, g))
    _br5(rep, "SBR5", H, T)
    return rep


def check_compatibilities(S: CrossedSystemData, quad: BraidingQuadruple) -> AxiomReport:
    """C1-C7 tie the four pairings to the action and cocycle.

    C1/C2 move v and u across the action, C3 moves tau across f, C4-C7 mix
    p, tau, u, v with the action.  ``v_flip`` and ``u_flip`` are the scalar
    symmetries they imply.
    """
    A, H, act = S.A, S.H, S.act
    dA, dH = A.dim, H.dim
    quad.check_shapes(A, H)
    P, T, U, V = quad.p.form, quad.tau.form, quad.u.form, quad.v.form
    f = S.cocycle
    DA, DH = A.comult, H.comult
    rep = AxiomReport()
    rep.check(
        "C1",
        (dH, dA),
        lambda h, b: B(h, b).ap(DH, 0).ap(DH, 1).ap(DA, 3).perm(0, 3, 1, 4, 2).ap(V, 0).ap(act, 0),
        lambda h, b: B(h, b).ap(DH, 0).ap(DA, 2).perm(2, 0, 1, 3).ap(V, 2),
    )
    rep.check(
        "C2",
        (dH, dA),
        lambda g, a: B(g, a).ap(DH, 0).ap(DH, 1).ap(DA, 3).perm(0, 3, 1, 4, 2).ap(act, 0).ap(U, 2),
        lambda g, a: B(g, a).ap(DH, 0).ap(DA, 2).perm(2, 0, 3, 1).ap(U, 0),
    )
    rep.check(
        "C3",
        (dH, dH),
        lambda h, g: B(h, g).ap(DH, 0).ap(DH, 2).perm(0, 2, 1, 3).ap(T, 0).ap(f, 0),
        lambda h, g: B(h, g).ap(DH, 0).ap(DH, 2).perm(2, 0, 1, 3).ap(f, 0).ap(T, 1),
    )
    rep.check(
        "C4",
        (dA, dH, dA),
        lambda a, g, c: B(a, g, c).ap(DA, 0).ap(DH, 2).perm(0, 3, 1, 2, 4).ap(U, 0).ap(act, 1).ap(P, 0),
        lambda a, g, c: B(a, g, c).ap(DA, 0).perm(0, 3, 1, 2).ap(P, 0).ap(U, 0),
    )
    rep.check(
        "C5",
        (dH, dH, dA),
        lambda h, g, c: B(h, g, c).ap(DH, 0).ap(DH, 2).perm(0, 3, 1, 2, 4).ap(T, 0).ap(act, 1).ap(V, 0),
        lambda h, g, c: B(h, g, c).ap(DH, 0).perm(0, 3, 1, 2).ap(V, 0).ap(T, 0),
    )
    rep.check(
        "C6",
        (dH, dA, dA),
        lambda h, b, c: B(h, b, c).ap(DH, 0).ap(DA, 3).perm(0, 2, 3, 1, 4).ap(act, 0).ap(P, 0).ap(V, 0),
        lambda h, b, c: B(h, b, c).ap(DA, 2).perm(0, 2, 1, 3).ap(V, 0).ap(P, 0),
    )
    rep.check(
        "C7",
        (dH, dA, dH),
        lambda h, b, t: B(h, b, t).ap(DH, 0).ap(DH, 3).perm(0, 2, 3, 1, 4).ap(act, 0).ap(U, 0).ap(T, 0),
        lambda h, b, t: B(h, b, t).ap(DH, 2).perm(0, 2, 1, 3).ap(T, 0).ap(U, 0),
    )
    # scalar consequences used in the proof of the converse
    rep.check(
        "v_flip",
        (dH, dA),
        lambda h, b: B(h, b).ap(DH, 0).perm(0, 2, 1).ap(V, 0),
        lambda h, b: B(h, b).ap(DH, 0).ap(V, 1),
    )
    rep.check(
        "u_flip",
        (dA, dH),
        lambda a, g: B(a, g).ap(DH, 1).perm(1, 0, 2).ap(U, 1),
        lambda a, g: B(a, g).ap(DH, 1).ap(U, 0),
    )
    return rep


def certify_quadruple(S: CrossedSystemData, quad: BraidingQuadruple) -> AxiomReport:
    """Every hypothesis on the four components, in one report."""
    A, H, f = S.A, S.H, S.cocycle
    quad.check_shapes(A, H)
    rep = AxiomReport()
    rep.extend(check_braiding(A, quad.p), prefix="p:")
    rep.extend(check_pf_right_skew(A, H, f, quad.p, quad.u), prefix="u:")
    rep.extend(check_pf_left_skew(H, A, f, quad.p, quad.v), prefix="v:")
    rep.extend(check_uv_skew_braiding(H, f, quad.u, quad.v, quad.tau), prefix="tau:")
    rep.extend(check_compatibilities(S, quad), prefix="compat:")
    return rep


# ---------------------------------------------------------------------------
# assembly / decomposition


def assemble_sigma(S: CrossedSystemData, quad: BraidingQuadruple, check: bool = True) -> PairingData:
    """sigma(a # h, b # g) = u(a1, g1) p(a2, b1) tau(h1, g2) v(h2, b2)."""
    A, H = S.A, S.H
    if check:
        rep = certify_quadruple(S, quad)
        if not rep.ok:
            bad = rep.failed()[0]
            raise QuadrupleNotCertified(f"quadruple fails {bad.name} at {bad.witness}", rep)
    dA, dH = A.dim, H.dim
    P, T, U, V = quad.p.form, quad.tau.form, quad.u.form, quad.v.form

    def col(idx):
        t = (
            B(*idx)
            .ap(A.comult, 0)
            .ap(H.comult, 2)
            .ap(A.comult, 4)
            .ap(H.comult, 6)
            .perm(0, 6, 1, 4, 2, 7, 3, 5)
            .ap(U, 0)
            .ap(P, 0)
            .ap(T, 0)
            .ap(V, 0)
        )
        return t.terms

    d = dA * dH
    form = LinMap.from_function((dA, dH, dA, dH), (), col).reshape((d, d), ())
    return PairingData(d, d, form)


def decompose_sigma(S: CrossedSystemData, sigma: PairingData, check: bool = True) -> BraidingQuadruple:
    """Restrict sigma to A # 1 and 1 # H in each slot."""
    A, H = S.A, S.H
    dA, dH = A.dim, H.dim
    if check:
        P = build_crossed_product(S)
        rep = check_braiding(P, sigma)
        if not rep.ok:
            bad = rep.failed()[0]
            raise NotABraiding(f"sigma fails {bad.name} at {bad.witness}", rep)
    uA = A.unit.support()
    uH = H.unit.support()

    def a_slot(a):
        return {a * dH + k: c for k, c in uH.items()}

    def h_slot(h):
        return {k * dH + h: c for k, c in uA.items()}

    def restrict(left, right, nl, nr):
        def val(i, j):
            s = 0
            for x, cx in left(i).items():
                for y, cy in right(j).items():
                    s = s + cx * cy * sigma(x, y)
            return s

        return PairingData.from_function(nl, nr, val)

    return BraidingQuadruple(
        p=restrict(a_slot, a_slot, dA, dA),
        tau=restrict(h_slot, h_slot, dH, dH),
        u=restrict(a_slot, h_slot, dA, dH),
        v=restrict(h_slot, a_slot, dH, dA),
    )


def sigma_table(P: HopfData, sigma: PairingData) -> str:
    """TSV with basis labels on the first row and column."""
    lines = ["\t".join(["sigma", *P.labels])]
    for i, lab in enumerate(P.labels):
        lines.append("\t".join([lab, *(render(sigma(i, j)) for j in range(P.dim))]))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# cyclic groups


def _is_root(x, n: int) -> bool:
    return x**n == 1


def cyclic_bicharacter_braiding(n: int, tau_scalar, field: Field | None = None) -> PairingData:
    """p(t^a, t^b) = tau^(ab) on k[C_n]."""
    if not _is_root(tau_scalar, n):
        raise NotRootOfUnity(f"{render(tau_scalar)} is not an {n}-th root of unity")
    return PairingData.from_function(n, n, lambda a, b: tau_scalar ** (a * b))


def cyclic_cocycle(n: int, m: int, alpha: Sequence[Sequence[int]], field: Field | None = None) -> LinMap:
    """f(g^i, g^j) = t^alpha(i, j) as a map k[C_m] (x) k[C_m] -> k[C_n]."""
    F = field or Field()
    return LinMap((m, m), (n,), {(alpha[i][j] % n, i * m + j): F.one for i in range(m) for j in range(m)})


def cyclic_pf_right_skew_table(n: int, m: int, alpha, tau_scalar, upsilon) -> PairingData:
    """u(t^a, g^b) = upsilon^(ab) tau^(-alpha(1, b-1)), indices of alpha taken mod m."""
    return PairingData.from_function(
        n, m, lambda a, b: upsilon ** (a * b) * tau_scalar ** (-alpha[1 % m][(b - 1) % m])
    )


def cyclic_pf_right_skew(n: int, m: int, alpha, tau_scalar, upsilon, field: Field | None = None) -> PairingData:
    """The closed-form right skew pairing for k[C_n], k[C_m] and f from alpha.

    Preconditions enforced: alpha symmetric, upsilon^n = 1 and
    upsilon^m = tau^alpha(1, m-1).  The returned table is not re-verified;
    use :func:`check_pf_right_skew` for that.
    """
    if any(alpha[i][j] != alpha[j][i] for i in range(m) for j in range(m)):
        raise AlphaNotSymmetric("alpha is not symmetric")
    if not _is_root(tau_scalar, n):
        raise NotRootOfUnity(f"{render(tau_scalar)} is not an {n}-th root of unity")
    if upsilon**n != 1:
        raise UpsilonConditionFailed("upsilon^n != 1")
    if upsilon**m != tau_scalar ** alpha[1 % m][(m - 1) % m]:
        raise UpsilonConditionFailed("upsilon^m != tau^alpha(1, m-1)")
    return cyclic_pf_right_skew_table(n, m, alpha, tau_scalar, upsilon)


# ---------------------------------------------------------------------------
# presets


H4_C3_VARIANTS = ("paper", "corrected")


def h4_c3_quadruple(alpha, gamma, field: Field | None = None, variant: str = "paper") -> BraidingQuadruple:
    """p, tau, u, v for H4 # k[C3] on the bases (1, g, x, gx) and (1, a, a^2).

    ``variant="paper"`` transcribes the published tables.  Those fail (BR1)
    for p and (SBR1)/(SBR3) for tau, so ``variant="corrected"`` is provided:
    it flips the sign of p(gx, x) and uses tau(a, a) = tau(a^2, a^2) = -gamma,
    tau(a, a^2) = tau(a^2, a) = -gamma^2.  For gamma^3 = 1 the corrected
    quadruples certify; u and v are shared by both variants.
    """
    if variant not in H4_C3_VARIANTS:
        raise ValueError(f"variant must be one of {H4_C3_VARIANTS}")
    F = field or Field(3)
    al, ga = F(alpha), F(gamma)
    one = F.one
    s = -one if variant == "corrected" else one
    p = PairingData.from_matrix(
        [
            [one, one, 0, 0],
            [one, -one, 0, 0],
            [0, 0, al, al],
            [0, 0, s * al, al],
        ]
    )
    if variant == "paper":
        t_aa, t_ab, t_bb = ga, -(ga**2), -ga
    else:
        t_aa, t_ab, t_bb = -ga, -(ga**2), -ga
    tau = PairingData.from_matrix(
        [
            [one, one, one],
            [one, t_aa, t_ab],
            [one, t_ab, t_bb],
        ]
    )
    u = PairingData.from_matrix([[one, one, one], [one, -one, -one], [0, 0, 0], [0, 0, 0]])
    v = PairingData.from_matrix([[one, one, 0, 0], [one, -one, 0, 0], [one, -one, 0, 0]])
    return BraidingQuadruple(p, tau, u, v, {"alpha": al, "gamma": ga, "variant": variant})


# ---------------------------------------------------------------------------
# search


def search_braidings(
    S: CrossedSystemData,
    candidates: Mapping[str, Iterable],
    builder: Callable[..., BraidingQuadruple],
    cap: int = 10000,
) -> list[BraidingQuadruple]:
    """Every assignment of the named unknowns whose quadruple certifies.

    ``builder(**assignment)`` produces the quadruple for one assignment.
    Results are ordered by the position of each value in its candidate list.
    """
    names = sorted(candidates)
    pools = [list(candidates[k]) for k in names]
    total = 1
    for pool in pools:
        total *= len(pool)
    if total > cap:
        raise SearchSpaceTooLarge(f"{total} assignments exceed the cap of {cap}")
    if total == 0:
        return []
    out = []
    for values in product(*pools):
        assignment = dict(zip(names, values))
        quad = builder(**assignment)
        if certify_quadruple(S, quad).ok:
            out.append(BraidingQuadruple(quad.p, quad.tau, quad.u, quad.v, assignment))
    return out


# ---------------------------------------------------------------------------
# corollaries


def _f_trivial(S: CrossedSystemData) -> bool:
    A, H = S.A, S.H
    return all(
        S.f(h, g) == A.unit * (H.counit.entry(0, h) * H.counit.entry(0, g)) for h in range(H.dim) for g in range(H.dim)
    )


def _act_trivial(S: CrossedSystemData) -> bool:
    A, H = S.A, S.H
    return all(
        S.act_on(h, a) == A.basis(a) * H.counit.entry(0, h) for h in range(H.dim) for a in range(A.dim)
    )


def corollary_checks(S: CrossedSystemData, quad: BraidingQuadruple) -> AxiomReport:
    """Specialised hypotheses for trivial cocycle and/or trivial action.

    * trivial f: u and v must be ordinary skew pairings and tau an ordinary
      braiding, and these must agree with the general families;
    * trivial action, commutative A and p = eps (x) eps:
      sigma(a # h, b # g) = eps(a) eps(b) tau(h, g);
    * tensor product of cocommutative Hopf algebras: the compatibilities C1-C7 hold.
    """
    A, H = S.A, S.H
    ftriv, atriv = _f_trivial(S), _act_trivial(S)
    if not (ftriv or atriv):
        raise ShapeNotSpecial("neither the cocycle nor the action is trivial")
    rep = AxiomReport()
    general = certify_quadruple(S, quad)
    if ftriv:
        rs = check_skew_pairing(A, H, quad.u)
        ls = check_skew_pairing(H, A, quad.v)
        tb = check_braiding(H, quad.tau)
        rep.extend(rs, prefix="u_skew:")
        rep.extend(ls, prefix="v_skew:")
        rep.extend(tb, prefix="tau_braiding:")
        families = {
            "u": all(general[f"u:RS{i}"].passed for i in range(1, 5)),
            "v": all(general[f"v:LS{i}"].passed for i in range(1, 5)),
            "tau": all(general[f"tau:SBR{i}"].passed for i in range(1, 6)),
        }
        rep.add("u_families_agree", families["u"] == rs.ok)
        rep.add("v_families_agree", families["v"] == ls.ok)
        rep.add("tau_families_agree", families["tau"] == tb.ok)
    if atriv and is_commutative(A) and quad.p == counit_pairing(A, A):
        sigma = assemble_sigma(S, quad, check=False)
        dA, dH = A.dim, H.dim
        ok, wit = True, None
        for a, h, b, g in product(range(dA), range(dH), range(dA), range(dH)):
            want = A.counit.entry(0, a) * A.counit.entry(0, b) * quad.tau(h, g)
            if sigma(a * dH + h, b * dH + g) != want:
                ok, wit = False, (a, h, b, g)
                break
        rep.add("sigma_reduces_to_tau", ok, wit)
    if ftriv and atriv and is_cocommutative(A) and is_cocommutative(H):
        comp = check_compatibilities(S, quad)
        rep.extend(comp, prefix="tensor:")
    rep.notes["general_certified"] = general.ok
    return rep
