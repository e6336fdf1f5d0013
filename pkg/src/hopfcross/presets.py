"""Ready-made Hopf algebras and crossed systems used by tests and the CLI."""

from __future__ import annotations

from .crossed import (
    CrossedSystemData,
    certify,
    coboundary_system,
    linearize_group_crossed_system,
    smash_system,
    trivial_system,
)
from .exactfield import Field
from .hopfcore import cyclic_group_algebra, group_algebra, sweedler_h4
from .tensorlinalg import LinMap

__all__ = [
    "c2c2_cocycle_system",
    "corpus",
    "h4_c2_coboundary",
    "h4_c2_smash_system",
    "h4_c3_action",
    "h4_c3_cocycle",
    "h4_c3_system",
    "s3_c2_coboundary",
    "s3_group_algebra",
]


def h4_c3_action(field: Field | None = None) -> LinMap:
    """a^i |> g = g, a^i |> x = -x, a^i |> gx = -gx for i = 1, 2; 1 acts trivially."""
    F = field or Field()
    ents = {}
    for i in range(3):
        for b in range(4):
            sign = -1 if (i > 0 and b >= 2) else 1
            ents[(b, i * 4 + b)] = F(sign)
    return LinMap((3, 4), (4,), ents)


def h4_c3_cocycle(field: Field | None = None, value: int = 1) -> LinMap:
    """f(a, a) = f(a^2, a^2) = g (index ``value``), every other value 1."""
    F = field or Field()
    ents = {}
    for i in range(3):
        for j in range(3):
            out = value if (i, j) in ((1, 1), (2, 2)) else 0
            ents[(out, i * 3 + j)] = F(1)
    return LinMap((3, 3), (4,), ents)


def h4_c3_system(field: Field | None = None, certified: bool = True) -> CrossedSystemData:
    F = field or Field()
    A = sweedler_h4(F)
    H = cyclic_group_algebra(3, "a", F)
    S = CrossedSystemData(A, H, h4_c3_action(F), h4_c3_cocycle(F), "H4#k[C3]")
    return certify(S) if certified else S


def c2c2_cocycle_system(field: Field | None = None) -> CrossedSystemData:
    """kC2 # kC2 with trivial action and f(s, s) = t; the product is k[C4]."""
    c2 = [[0, 1], [1, 0]]
    return linearize_group_crossed_system(
        c2, c2, [[0, 0], [0, 1]], [[0, 1], [0, 1]], ["1", "t"], ["1", "s"], field, "C2/C2 cocycle"
    )


S3_ELEMENTS = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
S3_LABELS = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]


def s3_group_algebra(field: Field | None = None):
    """k[S3]; element order e, (12), (13), (23), (123), (132); product = composition."""
    el = S3_ELEMENTS
    comp = lambda p, q: tuple(p[q[i]] for i in range(3))  # noqa: E731
    table = [[el.index(comp(p, q)) for q in el] for p in el]
    return group_algebra(table, None, S3_LABELS, "k[S3]", field)


def k2_sign_action(A, H2, signs) -> LinMap:
    """The generator of k[C2] acts diagonally on A with the given signs."""
    F = A.field
    d = A.dim
    ents = {(b, b): F.one for b in range(d)}
    ents.update({(b, d + b): F(signs[b]) for b in range(d)})
    return LinMap((2, d), (d,), ents)


def h4_c2_smash_system(field: Field | None = None) -> CrossedSystemData:
    """H4 # k[C2] where the generator s acts by g -> g, x -> -x."""
    F = field or Field()
    A = sweedler_h4(F)
    H = cyclic_group_algebra(2, "s", F)
    return smash_system(A, H, k2_sign_action(A, H, [1, 1, -1, -1]), "H4#k[C2]")


def h4_c2_coboundary(field: Field | None = None):
    """Coboundary system on (H4, k[C2]) from gamma(s) = g; returns (S, phi, gamma)."""
    F = field or Field()
    A = sweedler_h4(F)
    H = cyclic_group_algebra(2, "s", F)
    gamma = LinMap((2,), (4,), {(0, 0): F.one, (1, 1): F.one})
    S, phi = coboundary_system(A, H, gamma, "coboundary H4/k[C2]")
    return S, phi, gamma


def s3_c2_coboundary(field: Field | None = None):
    """Coboundary system on (k[S3], k[C2]) from gamma(s) = (12)."""
    F = field or Field()
    A = s3_group_algebra(F)
    H = cyclic_group_algebra(2, "s", F)
    gamma = LinMap((2,), (6,), {(0, 0): F.one, (1, 1): F.one})
    S, phi = coboundary_system(A, H, gamma, "coboundary k[S3]/k[C2]")
    return S, phi, gamma


def corpus(field: Field | None = None) -> dict[str, CrossedSystemData]:
    """Certified systems exercised by the acceptance suite, by short name."""
    F = field or Field(3)
    return {
        "trivial": trivial_system(cyclic_group_algebra(2, "t", F), cyclic_group_algebra(3, "a", F)),
        "smash": h4_c2_smash_system(F),
        "c2c2": c2c2_cocycle_system(F),
        "coboundary": h4_c2_coboundary(F)[0],
        "coboundary_s3": s3_c2_coboundary(F)[0],
        "h4_c3": h4_c3_system(F),
    }
