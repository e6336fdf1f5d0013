"""Braidings on k[X] (x) k[X] computed lazily on monomials.

``k[X]`` is infinite dimensional, so nothing here builds structure-constant
tables.  Elements are finitely supported maps from degrees to scalars and
every formula is evaluated on monomials directly.

Each scalar ``s`` induces the pairing ``phi_s(X^i, X^j) = delta_ij i! s^i``.
The four scalars ``s_p, s_tau, s_u, s_v`` induce ``p, tau, u, v`` in that
order, i.e. the "alpha, beta, gamma, tau" of the original example.  Two
independent routes to ``sigma`` are provided: the closed-form sum and a
direct expansion of ``u(a1, g1) p(a2, b1) tau(h1, g2) v(h2, b2)`` through
the coproduct.  The second route is the oracle for the first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Callable, Iterable, Mapping

from .hopfcore import AxiomReport

__all__ = [
    "GradedVector",
    "PolySigmaParams",
    "assembled_sigma_poly",
    "br_axioms_bounded",
    "closed_form_sigma",
    "oracle_mismatches",
    "phi_pairing",
    "poly_coproduct",
    "poly_counit",
    "poly_product",
]

Coproduct = Callable[[int], list]


@dataclass(frozen=True)
class GradedVector:
    """Finitely supported degree -> coefficient map; zeros are never stored."""

    terms: Mapping[int, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for k, v in dict(self.terms).items():
            if k < 0:
                raise ValueError("degrees are non-negative")
            if v != 0:
                clean[k] = v
        object.__setattr__(self, "terms", clean)

    @classmethod
    def monomial(cls, n: int, c=1) -> "GradedVector":
        return cls({n: c})

    def __add__(self, other: "GradedVector") -> "GradedVector":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return GradedVector(out)

    def __mul__(self, other: "GradedVector") -> "GradedVector":
        return poly_product(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedVector) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))


@dataclass(frozen=True)
class PolySigmaParams:
    s_p: object
    s_tau: object
    s_u: object
    s_v: object

    @classmethod
    def parse(cls, values: Iterable) -> "PolySigmaParams":
        vals = list(values)
        if len(vals) != 4:
            raise ValueError("expected four scalars s_p, s_tau, s_u, s_v")
        return cls(*vals)


def binom(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def poly_product(x: GradedVector, y: GradedVector) -> GradedVector:
    out: dict[int, object] = {}
    for i, a in x.terms.items():
        for j, b in y.terms.items():
            out[i + j] = out.get(i + j, 0) + a * b
    return GradedVector(out)


def poly_coproduct(n: int) -> list[tuple[int, int, int]]:
    """Delta(X^n) = sum_i C(n, i) X^i (x) X^(n-i)."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    return [(i, n - i, comb(n, i)) for i in range(n + 1)]


def poly_counit(n: int) -> int:
    return 1 if n == 0 else 0


def phi_pairing(alpha, i: int, j: int):
    if i != j:
        return 0
    return factorial(i) * alpha**i


def closed_form_sigma(params: PolySigmaParams, a: int, b: int, c: int, d: int):
    """The closed-form sum for sigma(X^a (x) X^b, X^c (x) X^d)."""
    if a + b != c + d:
        return 0
    al, be, ga, ta = params.s_p, params.s_tau, params.s_u, params.s_v
    total = 0
    for i in range(max(0, a - c), min(a, d) + 1):
        k = c - a + i
        if k < 0:
            continue
        coef = (
            binom(a, i) * binom(b, d - i) * binom(c, a - i) * binom(d, i)
            * factorial(k) * factorial(a - i) * factorial(d - i) * factorial(i)
        )
        if coef:
            total = total + coef * al ** (a - i) * be ** (d - i) * ga**i * ta**k
    return total


def assembled_sigma_poly(params: PolySigmaParams, a: int, b: int, c: int, d: int, coproduct: Coproduct = poly_coproduct):
    """sigma(X^a # X^b, X^c # X^d) by expanding every coproduct and contracting."""
    P, T, U, V = params.s_p, params.s_tau, params.s_u, params.s_v
    total = 0
    # a -> (a1, a2), b (=h) -> (h1, h2), c (=b) -> (b1, b2), d (=g) -> (g1, g2)
    for a1, a2, ca in coproduct(a):
        for h1, h2, ch in coproduct(b):
            for b1, b2, cb in coproduct(c):
                for g1, g2, cg in coproduct(d):
                    w = phi_pairing(U, a1, g1)
                    if w == 0:
                        continue
                    w = w * phi_pairing(P, a2, b1)
                    if w == 0:
                        continue
                    w = w * phi_pairing(T, h1, g2) * phi_pairing(V, h2, b2)
                    if w != 0:
                        total = total + ca * ch * cb * cg * w
    return total


# ---------------------------------------------------------------------------
# bounded axiom checks on P = k[X] (x) k[X]; monomials are pairs (a, b)


def _monomials(D: int) -> list[tuple[int, int]]:
    return [(a, n - a) for n in range(D + 1) for a in range(n + 1)]


def br_axioms_bounded(
    params: PolySigmaParams,
    D: int,
    coproduct: Coproduct = poly_coproduct,
) -> AxiomReport:
    """(BR1)-(BR5) for the assembled sigma on monomials of total degree <= D."""
    if D < 1:
        raise ValueError("D must be >= 1")

    @lru_cache(maxsize=None)
    def sigma(x: tuple[int, int], y: tuple[int, int]):
        return assembled_sigma_poly(params, x[0], x[1], y[0], y[1], coproduct)

    @lru_cache(maxsize=None)
    def delta(x: tuple[int, int]):
        return [((a1, b1), (a2, b2), ca * cb) for (a1, a2, ca), (b1, b2, cb) in product(coproduct(x[0]), coproduct(x[1]))]

    def mul(x, y):
        return (x[0] + y[0], x[1] + y[1])

    def eps(x):
        return poly_counit(x[0]) * poly_counit(x[1])

    mons = _monomials(D)
    unit = (0, 0)
    rep = AxiomReport()

    def first_failure(tuples, lhs, rhs):
        for t in tuples:
            left, right = lhs(*t), rhs(*t)
            if left != right:
                return t, left, right
        return None

    def record(name, tuples, lhs, rhs):
        bad = first_failure(tuples, lhs, rhs)
        if bad is None:
            rep.add(name, True)
        else:
            rep.add(name, False, bad[0], f"lhs={bad[1]} rhs={bad[2]}")

    triples = list(product(mons, repeat=3))
    # sigma(xy, z) = sigma(x, z1) sigma(y, z2)
    record(
        "BR1",
        triples,
        lambda x, y, z: sigma(mul(x, y), z),
        lambda x, y, z: sum((c * sigma(x, z1) * sigma(y, z2) for z1, z2, c in delta(z)), 0),
    )
    record("BR2", [(x,) for x in mons], lambda x: sigma(unit, x), eps)
    # sigma(x, yz) = sigma(x1, z) sigma(x2, y)
    record(
        "BR3",
        triples,
        lambda x, y, z: sigma(x, mul(y, z)),
        lambda x, y, z: sum((c * sigma(x1, z) * sigma(x2, y) for x1, x2, c in delta(x)), 0),
    )
    record("BR4", [(x,) for x in mons], lambda x: sigma(x, unit), eps)

    # sigma(x1, y1) x2 y2 = y1 x1 sigma(x2, y2) as finitely supported vectors
    def br5_left(x, y):
        out: dict = {}
        for x1, x2, cx in delta(x):
            for y1, y2, cy in delta(y):
                s = sigma(x1, y1)
                if s != 0:
                    k = mul(x2, y2)
                    out[k] = out.get(k, 0) + cx * cy * s
        return {k: v for k, v in out.items() if v != 0}

    def br5_right(x, y):
        out: dict = {}
        for x1, x2, cx in delta(x):
            for y1, y2, cy in delta(y):
                s = sigma(x2, y2)
                if s != 0:
                    k = mul(y1, x1)
                    out[k] = out.get(k, 0) + cx * cy * s
        return {k: v for k, v in out.items() if v != 0}

    record("BR5", list(product(mons, repeat=2)), br5_left, br5_right)
    rep.notes["degree_bound"] = D
    rep.notes["exhaustiveness"] = "unchecked: whether every braiding of k[X] (x) k[X] has this form"
    return rep


def oracle_mismatches(params: PolySigmaParams, max_total: int) -> list[tuple[int, int, int, int]]:
    """Degree tuples with a+b = c+d <= max_total where the two routes disagree."""
    bad = []
    for n in range(max_total + 1):
        for a in range(n + 1):
            for c in range(n + 1):
                if closed_form_sigma(params, a, n - a, c, n - c) != assembled_sigma_poly(params, a, n - a, c, n - c):
                    bad.append((a, n - a, c, n - c))
    return bad

