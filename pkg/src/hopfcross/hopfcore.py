"""Finite-dimensional Hopf algebras given by structure constants.

Structure maps are :class:`LinMap` objects on the basis ``e_0 .. e_{d-1}``:

* ``mult``: ``(d, d) -> (d,)``      ``e_i e_j = sum_k mult[k, (i, j)] e_k``
* ``comult``: ``(d,) -> (d, d)``    ``Delta(e_i) = sum mult[(j, k), i] e_j (x) e_k``
* ``counit``: ``(d,) -> ()``
* ``antipode``: ``(d,) -> (d,)``

Verification never trusts the data: every identity is evaluated on all basis
tuples and the first failing tuple is recorded as a witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Sequence

from .errors import NoAntipode, NotAGroup, NotConvInvertible, ShapeMismatch, Singular
from .exactfield import Field, render
from .tensorlinalg import FinVector, LinMap, TExpr, compose, convolution_inverse, invert, tensor_map

__all__ = [
    "AlgebraData",
    "AxiomEntry",
    "AxiomReport",
    "CoalgebraData",
    "HopfData",
    "cyclic_group_algebra",
    "derive_antipode",
    "group_algebra",
    "is_cocommutative",
    "is_commutative",
    "is_grouplike",
    "make_hopf",
    "map_predicates",
    "sweedler_expand",
    "sweedler_h4",
    "tensor_hopf",
    "trivial_hopf",
    "verify_algebra",
    "verify_coalgebra",
    "verify_hopf",
]


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class AxiomEntry:
    name: str
    passed: bool
    witness: tuple | None = None
    detail: str = ""

    def to_json(self) -> dict:
        return {"axiom": self.name, "passed": self.passed, "witness": list(self.witness) if self.witness is not None else None, "detail": self.detail}


@dataclass
class AxiomReport:
    """Ordered pass/fail list, one entry per checked identity."""

    entries: list[AxiomEntry] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def __bool__(self) -> bool:
        return self.ok

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def __getitem__(self, name: str) -> AxiomEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(e.name == name for e in self.entries)

    def failed(self) -> list[AxiomEntry]:
        return [e for e in self.entries if not e.passed]

    def add(self, name: str, passed: bool, witness=None, detail: str = "") -> AxiomEntry:
        e = AxiomEntry(name, bool(passed), None if passed else tuple(witness) if witness is not None else (), detail)
        self.entries.append(e)
        return e

    def extend(self, other: "AxiomReport", prefix: str = "") -> "AxiomReport":
        for e in other.entries:
            self.entries.append(replace(e, name=prefix + e.name))
        self.notes.update(other.notes)
        return self

    def check(
        self,
        name: str,
        ranges: Sequence[int],
        lhs: Callable[..., TExpr],
        rhs: Callable[..., TExpr],
    ) -> AxiomEntry:
        """Compare ``lhs(*t)`` and ``rhs(*t)`` on every basis tuple ``t``."""
        for t in product(*[range(n) for n in ranges]):
            a, b = lhs(*t), rhs(*t)
            if a != b:
                return self.add(name, False, t, f"lhs={_brief(a)} rhs={_brief(b)}")
        return self.add(name, True)

    def to_json(self) -> dict:
        return {"ok": self.ok, "entries": [e.to_json() for e in self.entries]}

    def format(self) -> str:
        lines = []
        for e in self.entries:
            status = "PASS" if e.passed else "FAIL"
            line = f"{status}  {e.name}"
            if not e.passed:
                line += f"  witness={e.witness}"
                if e.detail:
                    line += f"  {e.detail}"
            lines.append(line)
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.format()


def _brief(t: TExpr, limit: int = 6) -> str:
    items = sorted(t.terms.items())
    if not items:
        return "0"
    body = ", ".join(f"{k}:{render(v)}" for k, v in items[:limit])
    if len(items) > limit:
        body += ", ..."
    return "{" + body + "}"


# ---------------------------------------------------------------------------
# data


@dataclass(frozen=True)
class AlgebraData:
    dim: int
    mult: LinMap
    unit: FinVector

    @property
    def unit_map(self) -> LinMap:
        return LinMap.from_vector(self.unit)


@dataclass(frozen=True)
class CoalgebraData:
    dim: int
    comult: LinMap
    counit: LinMap


@dataclass(frozen=True)
class HopfData:
    algebra: AlgebraData
    coalgebra: CoalgebraData
    antipode: LinMap
    basis_labels: tuple[str, ...]
    name: str = field(default="", compare=False)
    field: Field = field(default_factory=Field)

    # shortcuts used throughout the package
    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def mult(self) -> LinMap:
        return self.algebra.mult

    @property
    def unit(self) -> FinVector:
        return self.algebra.unit

    @property
    def comult(self) -> LinMap:
        return self.coalgebra.comult

    @property
    def counit(self) -> LinMap:
        return self.coalgebra.counit

    @property
    def S(self) -> LinMap:
        return self.antipode

    @property
    def labels(self) -> tuple[str, ...]:
        return self.basis_labels

    @property
    def one(self):
        return self.field.one

    @property
    def zero(self):
        return self.field.zero

    def basis(self, i: int) -> FinVector:
        return FinVector.basis(self.dim, i, self.one, self.zero)

    def index(self, label: str) -> int:
        return self.basis_labels.index(label)

    def vec(self, spec: dict | str) -> FinVector:
        """Vector from ``{label: scalar}`` or a single basis label."""
        if isinstance(spec, str):
            spec = {spec: 1}
        c = [self.zero] * self.dim
        for lab, s in spec.items():
            c[self.index(lab)] = c[self.index(lab)] + self.field(s)
        return FinVector(c)

    def mul(self, x: FinVector, y: FinVector) -> FinVector:
        t = TExpr({(i, j): a * b for i, a in x.support().items() for j, b in y.support().items()})
        return t.ap(self.mult, 0).to_vector((self.dim,))

    def eps(self, x: FinVector):
        return self.counit(x)[0]

    def unit_expr(self) -> TExpr:
        return TExpr.from_vector(self.unit)

    def with_antipode(self, S: LinMap) -> "HopfData":
        return replace(self, antipode=S)

    def with_name(self, name: str) -> "HopfData":
        return replace(self, name=name)

    def __repr__(self) -> str:
        return f"HopfData({self.name or 'anonymous'}, dim={self.dim}, {self.field!r})"


def make_hopf(
    mult: LinMap,
    unit: FinVector,
    comult: LinMap,
    counit: LinMap,
    antipode: LinMap | None = None,
    basis_labels: Sequence[str] | None = None,
    name: str = "",
    field: Field | None = None,
) -> HopfData:
    """Assemble HopfData; a missing antipode is derived by convolution inversion."""
    d = unit.dim
    mult = mult.reshape((d, d), (d,))
    comult = comult.reshape((d,), (d, d))
    counit = counit.reshape((d,), ())
    labels = tuple(basis_labels) if basis_labels is not None else tuple(f"e{i}" for i in range(d))
    if len(labels) != d:
        raise ShapeMismatch("basis_labels length differs from dim")
    H = HopfData(AlgebraData(d, mult, unit), CoalgebraData(d, comult, counit), LinMap.identity((d,)), labels, name, field or Field())
    if antipode is None:
        antipode = derive_antipode(H)
    return replace(H, antipode=antipode.reshape((d,), (d,)))


# ---------------------------------------------------------------------------
# verification


def verify_algebra(A: AlgebraData) -> AxiomReport:
    d, m = A.dim, A.mult
    one = TExpr.from_vector(A.unit)
    rep = AxiomReport()
    rep.check(
        "associativity",
        (d, d, d),
        lambda x, y, z: TExpr.basis(x, y, z).ap(m, 0).ap(m, 0),
        lambda x, y, z: TExpr.basis(x, y, z).ap(m, 1).ap(m, 0),
    )
    rep.check("left_unit", (d,), lambda x: one.tensor(TExpr.basis(x)).ap(m, 0), lambda x: TExpr.basis(x))
    rep.check("right_unit", (d,), lambda x: TExpr.basis(x).tensor(one).ap(m, 0), lambda x: TExpr.basis(x))
    return rep


def verify_coalgebra(C: CoalgebraData) -> AxiomReport:
    d, D, e = C.dim, C.comult, C.counit
    rep = AxiomReport()
    rep.check(
        "coassociativity",
        (d,),
        lambda x: TExpr.basis(x).ap(D, 0).ap(D, 0),
        lambda x: TExpr.basis(x).ap(D, 0).ap(D, 1),
    )
    rep.check("left_counit", (d,), lambda x: TExpr.basis(x).ap(D, 0).ap(e, 0), lambda x: TExpr.basis(x))
    rep.check("right_counit", (d,), lambda x: TExpr.basis(x).ap(D, 0).ap(e, 1), lambda x: TExpr.basis(x))
    return rep


def verify_hopf(H: HopfData) -> AxiomReport:
    rep = AxiomReport()
    rep.extend(verify_algebra(H.algebra))
    rep.extend(verify_coalgebra(H.coalgebra))
    d, m, D, e, S = H.dim, H.mult, H.comult, H.counit, H.antipode
    one = H.unit_expr()
    rep.check(
        "comult_multiplicative",
        (d, d),
        lambda x, y: TExpr.basis(x, y).ap(m, 0).ap(D, 0),
        lambda x, y: TExpr.basis(x, y).ap(D, 0).ap(D, 2).perm(0, 2, 1, 3).ap(m, 0).ap(m, 1),
    )
    rep.check("comult_unital", (), lambda: one.ap(D, 0), lambda: one.tensor(one))
    rep.check(
        "counit_multiplicative",
        (d, d),
        lambda x, y: TExpr.basis(x, y).ap(m, 0).ap(e, 0),
        lambda x, y: TExpr.basis(x, y).ap(e, 0).ap(e, 0),
    )
    rep.check("counit_unital", (), lambda: one.ap(e, 0), lambda: TExpr.scalar(H.one))
    rep.check(
        "antipode_left",
        (d,),
        lambda x: TExpr.basis(x).ap(D, 0).ap(S, 0).ap(m, 0),
        lambda x: TExpr.basis(x).ap(e, 0).tensor(one),
    )
    rep.check(
        "antipode_right",
        (d,),
        lambda x: TExpr.basis(x).ap(D, 0).ap(S, 1).ap(m, 0),
        lambda x: TExpr.basis(x).ap(e, 0).tensor(one),
    )
    return rep


def derive_antipode(H: HopfData) -> LinMap:
    """Convolution inverse of the identity map."""
    ident = LinMap.identity((H.dim,), H.one)
    try:
        return convolution_inverse(ident, H.coalgebra, H.algebra, H.zero)
    except NotConvInvertible as exc:
        raise NoAntipode(f"{H.name or 'bialgebra'} has no antipode") from exc


def sweedler_expand(C: CoalgebraData, x: FinVector, legs: int, association: str = "right") -> TExpr:
    """Coefficients of the (legs-1)-fold coproduct of ``x``."""
    if legs < 1:
        raise ValueError("legs must be >= 1")
    t = TExpr.from_vector(x)
    for k in range(legs - 1):
        t = t.ap(C.comult, k if association == "right" else 0)
    return t


def is_grouplike(H: HopfData, z: FinVector) -> bool:
    t = TExpr.from_vector(z)
    return t.ap(H.comult, 0) == t.tensor(t) and H.eps(z) == 1


def is_commutative(H: HopfData) -> bool:
    d = H.dim
    return all(
        TExpr.basis(x, y).ap(H.mult, 0) == TExpr.basis(y, x).ap(H.mult, 0) for x in range(d) for y in range(x + 1, d)
    )


def is_cocommutative(H: HopfData) -> bool:
    return all(TExpr.basis(x).ap(H.comult, 0).perm(1, 0) == TExpr.basis(x).ap(H.comult, 0) for x in range(H.dim))


def _check_map(phi: LinMap, dom: int, cod: int) -> None:
    if phi.domain_dim != dom or phi.codomain_dim != cod:
        raise ShapeMismatch(f"map is {phi.domain_dim}->{phi.codomain_dim}, expected {dom}->{cod}")


def map_predicates(phi: LinMap, A: HopfData, B: HopfData, kind: str | Iterable[str] = "hopf") -> AxiomReport:
    """Structure-preservation checks for ``phi: A -> B``.

    ``kind`` is one of algebra, coalgebra, hopf, iso, or a collection of them.
    """
    kinds = {kind} if isinstance(kind, str) else set(kind)
    unknown = kinds - {"algebra", "coalgebra", "hopf", "iso"}
    if unknown:
        raise ValueError(f"unknown predicate kinds {sorted(unknown)}")
    _check_map(phi, A.dim, B.dim)
    phi = phi.reshape((A.dim,), (B.dim,))
    rep = AxiomReport()
    da = A.dim
    if kinds & {"algebra", "hopf"}:
        rep.check(
            "multiplicative",
            (da, da),
            lambda x, y: TExpr.basis(x, y).ap(A.mult, 0).ap(phi, 0),
            lambda x, y: TExpr.basis(x, y).ap(phi, 0).ap(phi, 1).ap(B.mult, 0),
        )
        rep.check("unital", (), lambda: A.unit_expr().ap(phi, 0), lambda: B.unit_expr())
    if kinds & {"coalgebra", "hopf"}:
        rep.check(
            "comultiplicative",
            (da,),
            lambda x: TExpr.basis(x).ap(phi, 0).ap(B.comult, 0),
            lambda x: TExpr.basis(x).ap(A.comult, 0).ap(phi, 0).ap(phi, 1),
        )
        rep.check(
            "counital",
            (da,),
            lambda x: TExpr.basis(x).ap(phi, 0).ap(B.counit, 0),
            lambda x: TExpr.basis(x).ap(A.counit, 0),
        )
    if "hopf" in kinds:
        rep.check(
            "antipode_compatible",
            (da,),
            lambda x: TExpr.basis(x).ap(A.antipode, 0).ap(phi, 0),
            lambda x: TExpr.basis(x).ap(phi, 0).ap(B.antipode, 0),
        )
    if "iso" in kinds:
        try:
            invert(phi, A.one) if A.dim == B.dim else None
            rep.add("bijective", A.dim == B.dim, (), "" if A.dim == B.dim else "dimensions differ")
        except Singular:
            rep.add("bijective", False, (), "map is singular")
    return rep


# ---------------------------------------------------------------------------
# presets


def trivial_hopf(field: Field | None = None) -> HopfData:
    """The ground field k as a one-dimensional Hopf algebra."""
    F = field or Field()
    one = F.one
    return make_hopf(
        LinMap((1, 1), (1,), {(0, 0): one}),
        FinVector([one]),
        LinMap((1,), (1, 1), {(0, 0): one}),
        LinMap((1,), (), {(0, 0): one}),
        LinMap((1,), (1,), {(0, 0): one}),
        ("1",),
        "k",
        F,
    )


def group_algebra(
    cayley: Sequence[Sequence[int]],
    inverse: Sequence[int] | None = None,
    labels: Sequence[str] | None = None,
    name: str = "",
    field: Field | None = None,
) -> HopfData:
    """k[G] from a multiplication table ``cayley[i][j] = index of g_i g_j``."""
    F = field or Field()
    n = len(cayley)
    if n == 0 or any(len(row) != n for row in cayley):
        raise NotAGroup("Cayley table must be square and non-empty")
    if any(not (0 <= v < n) for row in cayley for v in row):
        raise NotAGroup("Cayley table entries out of range")
    for a, b, c in product(range(n), repeat=3):
        if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]]:
            raise NotAGroup(f"not associative at {(a, b, c)}")
    ids = [e for e in range(n) if all(cayley[e][x] == x and cayley[x][e] == x for x in range(n))]
    if not ids:
        raise NotAGroup("no identity element")
    e = ids[0]
    if inverse is None:
        inverse = []
        for x in range(n):
            inv = [y for y in range(n) if cayley[x][y] == e]
            if not inv:
                raise NotAGroup(f"element {x} has no inverse")
            inverse.append(inv[0])
    for x in range(n):
        if cayley[x][inverse[x]] != e or cayley[inverse[x]][x] != e:
            raise NotAGroup(f"inverse table wrong at {x}")
    one = F.one
    mult = LinMap((n, n), (n,), {(cayley[i][j], i * n + j): one for i in range(n) for j in range(n)})
    comult = LinMap((n,), (n, n), {(i * n + i, i): one for i in range(n)})
    counit = LinMap((n,), (), {(0, i): one for i in range(n)})
    S = LinMap((n,), (n,), {(inverse[i], i): one for i in range(n)})
    unit = FinVector.basis(n, e, one, F.zero)
    return make_hopf(mult, unit, comult, counit, S, labels or [f"g{i}" for i in range(n)], name, F)


def cyclic_labels(n: int, gen: str = "a") -> list[str]:
    return ["1" if k == 0 else gen if k == 1 else f"{gen}^{k}" for k in range(n)]


def cyclic_group_algebra(n: int, gen: str = "a", field: Field | None = None) -> HopfData:
    """k[C_n] on the basis 1, a, ..., a^(n-1)."""
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    inv = [(-i) % n for i in range(n)]
    return group_algebra(table, inv, cyclic_labels(n, gen), f"k[C{n}]", field)


def sweedler_h4(field: Field | None = None) -> HopfData:
    """Sweedler's four-dimensional Hopf algebra on the basis 1, g, x, gx."""
    F = field or Field()
    one = F.one
    # basis 0=1, 1=g, 2=x, 3=gx
    table = {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
        (1, 0): {1: 1}, (1, 1): {0: 1}, (1, 2): {3: 1}, (1, 3): {2: 1},
        (2, 0): {2: 1}, (2, 1): {3: -1}, (2, 2): {}, (2, 3): {},
        (3, 0): {3: 1}, (3, 1): {2: -1}, (3, 2): {}, (3, 3): {},
    }  # fmt: skip
    mult = LinMap((4, 4), (4,), {(k, i * 4 + j): F(v) for (i, j), out in table.items() for k, v in out.items()})
    co = {0: {(0, 0): 1}, 1: {(1, 1): 1}, 2: {(1, 2): 1, (2, 0): 1}, 3: {(0, 3): 1, (3, 1): 1}}
    comult = LinMap((4,), (4, 4), {(a * 4 + b, i): F(v) for i, out in co.items() for (a, b), v in out.items()})
    counit = LinMap((4,), (), {(0, 0): one, (0, 1): one})
    S = LinMap((4,), (4,), {(0, 0): one, (1, 1): one, (3, 2): -one, (2, 3): one})
    return make_hopf(mult, FinVector.basis(4, 0, one, F.zero), comult, counit, S, ("1", "g", "x", "gx"), "H4", F)


def tensor_hopf(A: HopfData, H: HopfData) -> HopfData:
    """A (x) H with componentwise structure; basis labels ``a#h``."""
    F = A.field.join(H.field)
    dA, dH = A.dim, H.dim
    d = dA * dH
    # (a (x) h)(b (x) g) = ab (x) hg
    mult = compose(
        tensor_map(A.mult, H.mult), LinMap.permutation((dA, dH, dA, dH), (0, 2, 1, 3), F.one)
    ).reshape((d, d), (d,))
    comult = compose(
        LinMap.permutation((dA, dA, dH, dH), (0, 2, 1, 3), F.one), tensor_map(A.comult, H.comult)
    ).reshape((d,), (d, d))
    counit = tensor_map(A.counit, H.counit).reshape((d,), ())
    S = tensor_map(A.antipode, H.antipode).reshape((d,), (d,))
    unit = FinVector(a * h for a in A.unit for h in H.unit)
    labels = [f"{a}#{h}" for a in A.labels for h in H.labels]
    return make_hopf(mult, unit, comult, counit, S, labels, f"{A.name}(x){H.name}", F)
