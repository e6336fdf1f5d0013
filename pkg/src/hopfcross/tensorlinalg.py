"""Exact linear algebra on tensor products of finite-dimensional spaces.

Flattening convention (used everywhere): a multi-index ``(i_1, ..., i_k)``
over factor dimensions ``(d_1, ..., d_k)`` is flattened row-major, the
leftmost factor being most significant.  A :class:`LinMap` with
``domain_dims=(d1, d2)`` therefore acts on ``V1 (x) V2`` with basis vector
``e_i (x) e_j`` at flat position ``i * d2 + j``.  Empty dims ``()`` denote the
ground field (dimension 1), so a counit is a map ``(d,) -> ()``.

:class:`TExpr` is a sparse tensor of several legs used to spell out Sweedler
identities leg by leg: apply a map to consecutive legs, permute legs, compare.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import prod
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import NotConvInvertible, ShapeMismatch, Singular

__all__ = [
    "FinVector",
    "LinMap",
    "SolveResult",
    "TExpr",
    "compose",
    "convolution",
    "convolution_inverse",
    "flatten_index",
    "invert",
    "left_inverse",
    "nullspace",
    "rref",
    "solve",
    "span_coordinates",
    "tensor_map",
    "unflatten_index",
]


def flatten_index(idx: Sequence[int], dims: Sequence[int]) -> int:
    flat = 0
    for i, d in zip(idx, dims):
        flat = flat * d + i
    return flat


def unflatten_index(flat: int, dims: Sequence[int]) -> tuple[int, ...]:
    out = []
    for d in reversed(dims):
        flat, r = divmod(flat, d)
        out.append(r)
    return tuple(reversed(out))


# ---------------------------------------------------------------------------
# vectors


class FinVector:
    """Dense coordinate vector."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable) -> None:
        self.coords = tuple(coords)

    @classmethod
    def zeros(cls, dim: int, zero=Fraction(0)) -> "FinVector":
        return cls([zero] * dim)

    @classmethod
    def basis(cls, dim: int, i: int, one=Fraction(1), zero=Fraction(0)) -> "FinVector":
        c = [zero] * dim
        c[i] = one
        return cls(c)

    @classmethod
    def from_sparse(cls, dim: int, entries: Mapping[int, object], zero=Fraction(0)) -> "FinVector":
        c = [zero] * dim
        for i, v in entries.items():
            c[i] = c[i] + v
        return cls(c)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def support(self) -> dict[int, object]:
        return {i: c for i, c in enumerate(self.coords) if c != 0}

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator:
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: "FinVector") -> None:
        if other.dim != self.dim:
            raise ShapeMismatch(f"vector dims {self.dim} != {other.dim}")

    def __add__(self, other: "FinVector") -> "FinVector":
        self._check(other)
        return FinVector(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "FinVector") -> "FinVector":
        self._check(other)
        return FinVector(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "FinVector":
        return FinVector(-a for a in self.coords)

    def __mul__(self, s) -> "FinVector":
        return FinVector(a * s for a in self.coords)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, FinVector):
            return self.dim == other.dim and all(a == b for a, b in zip(self.coords, other.coords))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        from .exactfield import render

        return "FinVector([" + ", ".join(render(c) for c in self.coords) + "])"


# ---------------------------------------------------------------------------
# linear maps


class LinMap:
    """Linear map between tensor products, stored sparsely by (row, col).

    Rows index the flattened codomain, columns the flattened domain.
    """

    __slots__ = ("domain_dims", "codomain_dims", "_entries", "_cols", "_colmulti", "_hash")

    def __init__(
        self,
        domain_dims: Sequence[int],
        codomain_dims: Sequence[int],
        entries: Mapping[tuple[int, int], object] | None = None,
    ) -> None:
        self.domain_dims = tuple(int(d) for d in domain_dims)
        self.codomain_dims = tuple(int(d) for d in codomain_dims)
        if any(d <= 0 for d in self.domain_dims + self.codomain_dims):
            raise ShapeMismatch("tensor factor dimensions must be positive")
        rows, cols = self.codomain_dim, self.domain_dim
        clean: dict[tuple[int, int], object] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise ShapeMismatch(f"entry ({r}, {c}) outside {rows}x{cols}")
            if v != 0:
                clean[(r, c)] = v
        self._entries = clean
        self._cols: list[dict[int, object]] | None = None
        self._colmulti: dict[int, list] = {}
        self._hash = None

    # -- constructors ------------------------------------------------------
    @classmethod
    def from_matrix(cls, domain_dims, codomain_dims, rows: Sequence[Sequence]) -> "LinMap":
        ents = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v != 0:
                    ents[(r, c)] = v
        m = cls(domain_dims, codomain_dims, ents)
        if len(rows) != m.codomain_dim or any(len(row) != m.domain_dim for row in rows):
            raise ShapeMismatch("matrix shape does not match dims")
        return m

    @classmethod
    def from_function(
        cls,
        domain_dims: Sequence[int],
        codomain_dims: Sequence[int],
        fn: Callable[[tuple[int, ...]], Mapping[tuple[int, ...], object]],
    ) -> "LinMap":
        """Build from ``fn(domain multi-index) -> {codomain multi-index: coef}``."""
        ents: dict[tuple[int, int], object] = {}
        for c, idx in enumerate(product(*[range(d) for d in domain_dims])):
            for out, v in fn(idx).items():
                if v != 0:
                    r = flatten_index(out, codomain_dims)
                    ents[(r, c)] = ents.get((r, c), 0) + v
        return cls(domain_dims, codomain_dims, ents)

    @classmethod
    def from_columns(cls, domain_dims, codomain_dims, columns: Sequence[FinVector]) -> "LinMap":
        ents = {}
        for c, vec in enumerate(columns):
            for r, v in vec.support().items():
                ents[(r, c)] = v
        return cls(domain_dims, codomain_dims, ents)

    @classmethod
    def identity(cls, dims: Sequence[int], one=Fraction(1)) -> "LinMap":
        n = prod(dims)
        return cls(dims, dims, {(i, i): one for i in range(n)})

    @classmethod
    def zero(cls, domain_dims, codomain_dims) -> "LinMap":
        return cls(domain_dims, codomain_dims, {})

    @classmethod
    def flip(cls, d1: int, d2: int, one=Fraction(1)) -> "LinMap":
        """V1 (x) V2 -> V2 (x) V1."""
        return cls((d1, d2), (d2, d1), {(j * d1 + i, i * d2 + j): one for i in range(d1) for j in range(d2)})

    @classmethod
    def permutation(cls, dims: Sequence[int], order: Sequence[int], one=Fraction(1)) -> "LinMap":
        """Leg permutation: output leg k is input leg ``order[k]``."""
        dims = tuple(dims)
        out_dims = tuple(dims[o] for o in order)
        ents = {}
        for c, idx in enumerate(product(*[range(d) for d in dims])):
            r = flatten_index([idx[o] for o in order], out_dims)
            ents[(r, c)] = one
        return cls(dims, out_dims, ents)

    @classmethod
    def from_vector(cls, vec: FinVector) -> "LinMap":
        """The map k -> V sending 1 to ``vec``."""
        return cls((), (vec.dim,), {(r, 0): v for r, v in vec.support().items()})

    # -- shape -------------------------------------------------------------
    @property
    def domain_dim(self) -> int:
        return prod(self.domain_dims)

    @property
    def codomain_dim(self) -> int:
        return prod(self.codomain_dims)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.codomain_dim, self.domain_dim)

    def reshape(self, domain_dims=None, codomain_dims=None) -> "LinMap":
        dd = self.domain_dims if domain_dims is None else tuple(domain_dims)
        cd = self.codomain_dims if codomain_dims is None else tuple(codomain_dims)
        if prod(dd) != self.domain_dim or prod(cd) != self.codomain_dim:
            raise ShapeMismatch("reshape must preserve flattened dimensions")
        return LinMap(dd, cd, self._entries)

    # -- access ------------------------------------------------------------
    @property
    def entries(self) -> dict[tuple[int, int], object]:
        return dict(self._entries)

    def entry(self, r: int, c: int, zero=0):
        return self._entries.get((r, c), zero)

    @property
    def matrix(self) -> list[list]:
        m = [[Fraction(0)] * self.domain_dim for _ in range(self.codomain_dim)]
        for (r, c), v in self._entries.items():
            m[r][c] = v
        return m

    def columns(self) -> list[dict[int, object]]:
        if self._cols is None:
            cols: list[dict[int, object]] = [dict() for _ in range(self.domain_dim)]
            for (r, c), v in self._entries.items():
                cols[c][r] = v
            self._cols = cols
        return self._cols

    def column(self, c: int) -> dict[int, object]:
        return self.columns()[c]

    def column_multi(self, idx: tuple[int, ...]) -> list[tuple[tuple[int, ...], object]]:
        """Image of the basis tensor ``idx`` as (codomain multi-index, coef) pairs."""
        c = flatten_index(idx, self.domain_dims)
        hit = self._colmulti.get(c)
        if hit is None:
            hit = [(unflatten_index(r, self.codomain_dims), v) for r, v in sorted(self.column(c).items())]
            self._colmulti[c] = hit
        return hit

    def __call__(self, vec: FinVector) -> FinVector:
        if vec.dim != self.domain_dim:
            raise ShapeMismatch(f"map domain {self.domain_dim} != vector dim {vec.dim}")
        out: list = [Fraction(0)] * self.codomain_dim
        cols = self.columns()
        for c, x in enumerate(vec.coords):
            if x != 0:
                for r, v in cols[c].items():
                    out[r] = out[r] + v * x
        return FinVector(out)

    def apply_basis(self, *idx: int) -> FinVector:
        c = flatten_index(idx, self.domain_dims)
        return FinVector.from_sparse(self.codomain_dim, self.column(c))

    # -- algebra -----------------------------------------------------------
    def __matmul__(self, other: "LinMap") -> "LinMap":
        return compose(self, other)

    def __add__(self, other: "LinMap") -> "LinMap":
        if other.shape != self.shape:
            raise ShapeMismatch("cannot add maps of different shapes")
        ents = dict(self._entries)
        for k, v in other._entries.items():
            ents[k] = ents.get(k, 0) + v
        return LinMap(self.domain_dims, self.codomain_dims, ents)

    def __neg__(self) -> "LinMap":
        return LinMap(self.domain_dims, self.codomain_dims, {k: -v for k, v in self._entries.items()})

    def __sub__(self, other: "LinMap") -> "LinMap":
        return self + (-other)

    def scale(self, s) -> "LinMap":
        return LinMap(self.domain_dims, self.codomain_dims, {k: v * s for k, v in self._entries.items()})

    def transpose(self) -> "LinMap":
        return LinMap(self.codomain_dims, self.domain_dims, {(c, r): v for (r, c), v in self._entries.items()})

    def map_entries(self, fn) -> "LinMap":
        return LinMap(self.domain_dims, self.codomain_dims, {k: fn(v) for k, v in self._entries.items()})

    def first_difference(self, other: "LinMap") -> tuple[int, ...] | None:
        """Domain multi-index of the first column where the maps differ."""
        if other.shape != self.shape:
            raise ShapeMismatch(f"shapes {self.shape} and {other.shape} differ")
        a, b = self.columns(), other.columns()
        for c in range(self.domain_dim):
            ca, cb = a[c], b[c]
            if any(ca.get(r, 0) != cb.get(r, 0) for r in set(ca) | set(cb)):
                return unflatten_index(c, self.domain_dims)
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        if self.shape != other.shape:
            return False
        keys = set(self._entries) | set(other._entries)
        return all(self._entries.get(k, 0) == other._entries.get(k, 0) for k in keys)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, frozenset(self._entries.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LinMap({self.domain_dims} -> {self.codomain_dims}, nnz={len(self._entries)})"


def compose(g: LinMap, f: LinMap) -> LinMap:
    """g o f; flattened dimensions must agree."""
    if g.domain_dim != f.codomain_dim:
        raise ShapeMismatch(f"cannot compose: {g.domain_dim} != {f.codomain_dim}")
    gcols = g.columns()
    ents: dict[tuple[int, int], object] = {}
    for (mid, c), v in f._entries.items():
        for r, w in gcols[mid].items():
            key = (r, c)
            ents[key] = ents.get(key, 0) + w * v
    return LinMap(f.domain_dims, g.codomain_dims, ents)


def tensor_map(f: LinMap, g: LinMap) -> LinMap:
    """Kronecker product f (x) g in the row-major convention."""
    gr, gc = g.shape
    ents = {}
    for (r1, c1), v in f._entries.items():
        for (r2, c2), w in g._entries.items():
            ents[(r1 * gr + r2, c1 * gc + c2)] = v * w
    return LinMap(f.domain_dims + g.domain_dims, f.codomain_dims + g.codomain_dims, ents)


# ---------------------------------------------------------------------------
# multi-leg sparse tensors


class TExpr:
    """Finitely supported tensor: ``{(i_1, ..., i_k): coefficient}``.

    Leg ``j`` carries a basis index of whatever space the caller has in mind;
    maps are applied to runs of consecutive legs with :meth:`ap`.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, object] | None = None) -> None:
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def basis(cls, *idx: int) -> "TExpr":
        return cls({tuple(idx): Fraction(1)})

    @classmethod
    def scalar(cls, s) -> "TExpr":
        return cls({(): s})

    @classmethod
    def from_vector(cls, vec: FinVector) -> "TExpr":
        return cls({(i,): c for i, c in vec.support().items()})

    def ap(self, m: LinMap, at: int) -> "TExpr":
        """Apply ``m`` to legs ``at .. at + len(m.domain_dims) - 1``."""
        k = len(m.domain_dims)
        out: dict[tuple, object] = {}
        for idx, c in self.terms.items():
            head, mid, tail = idx[:at], idx[at : at + k], idx[at + k :]
            if len(mid) != k:
                raise ShapeMismatch(f"map needs {k} legs at position {at}, tensor has {len(idx)}")
            for outidx, v in m.column_multi(mid):
                key = head + outidx + tail
                out[key] = out.get(key, 0) + c * v
        return TExpr(out)

    def perm(self, *order: int) -> "TExpr":
        """New leg ``k`` is old leg ``order[k]``."""
        out: dict[tuple, object] = {}
        for idx, c in self.terms.items():
            key = tuple(idx[o] for o in order)
            out[key] = out.get(key, 0) + c
        return TExpr(out)

    def tensor(self, other: "TExpr") -> "TExpr":
        out: dict[tuple, object] = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return TExpr(out)

    def __add__(self, other: "TExpr") -> "TExpr":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return TExpr(out)

    def __sub__(self, other: "TExpr") -> "TExpr":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) - v
        return TExpr(out)

    def __mul__(self, s) -> "TExpr":
        return TExpr({k: v * s for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TExpr):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(self.terms.get(k, 0) == other.terms.get(k, 0) for k in keys)

    __hash__ = None  # type: ignore[assignment]

    def coefficient(self, *idx: int):
        return self.terms.get(tuple(idx), 0)

    def value(self):
        """The scalar of a zero-leg tensor."""
        return self.terms.get((), Fraction(0))

    def to_vector(self, dims: Sequence[int]) -> FinVector:
        return FinVector.from_sparse(prod(dims), {flatten_index(k, dims): v for k, v in self.terms.items()})

    def __repr__(self) -> str:
        from .exactfield import render

        body = ", ".join(f"{k}: {render(v)}" for k, v in sorted(self.terms.items()))
        return f"TExpr({{{body}}})"


# ---------------------------------------------------------------------------
# elimination


@dataclass
class SolveResult:
    particular: FinVector | None
    nullspace_basis: list[FinVector] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.particular is not None


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form.

    Forward pass is fraction-free (Bareiss): every update is
    ``(pivot * a_ij - a_ic * a_rj) / previous_pivot``, an exact division.  The
    backward pass normalises pivots and clears above them.  Returns the
    nonzero rows and their pivot columns.
    """
    A = [list(r) for r in rows]
    m = len(A)
    prev = Fraction(1)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= m:
            break
        p = next((i for i in range(r, m) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        prow = A[r]
        piv = prow[c]
        nz = [j for j in range(c + 1, ncols) if prow[j] != 0]
        for i in range(r + 1, m):
            row = A[i]
            aic = row[c]
            if aic != 0:
                for j in range(c + 1, ncols):
                    x = row[j]
                    if x != 0:
                        row[j] = (piv * x) / prev
                for j in nz:
                    row[j] = row[j] - (aic * prow[j]) / prev
                row[c] = 0
            else:
                for j in range(c + 1, ncols):
                    x = row[j]
                    if x != 0:
                        row[j] = (piv * x) / prev
        prev = piv
        pivots.append(c)
        r += 1
    A = A[:r]
    # backward pass
    for k in range(r - 1, -1, -1):
        c = pivots[k]
        row = A[k]
        piv = row[c]
        if piv != 1:
            inv = 1 / piv
            for j in range(c, ncols):
                if row[j] != 0:
                    row[j] = row[j] * inv
        for i in range(k):
            above = A[i]
            f = above[c]
            if f != 0:
                for j in range(c, ncols):
                    if row[j] != 0:
                        above[j] = above[j] - f * row[j]
    return A, pivots


def _solve_rows(rows: list[list], ncols: int, rhs: list | None, zero) -> SolveResult:
    aug = [list(r) + ([rhs[i]] if rhs is not None else [zero]) for i, r in enumerate(rows)]
    R, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        particular = None
    else:
        x = [zero] * ncols
        for k, c in enumerate(pivots):
            x[c] = R[k][ncols]
        particular = FinVector(x)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    one = zero + 1
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for k, c in enumerate(pivots):
            if c < ncols and R[k][fc] != 0:
                v[c] = -R[k][fc]
        basis.append(FinVector(v))
    return SolveResult(particular, basis)


def solve(M: LinMap, b: FinVector | None = None, zero=Fraction(0)) -> SolveResult:
    """All x with M x = b (b = 0 when omitted)."""
    if b is not None and b.dim != M.codomain_dim:
        raise ShapeMismatch(f"rhs dim {b.dim} != codomain dim {M.codomain_dim}")
    rows = [[zero] * M.domain_dim for _ in range(M.codomain_dim)]
    for (r, c), v in M._entries.items():
        rows[r][c] = v
    rhs = list(b.coords) if b is not None else None
    return _solve_rows(rows, M.domain_dim, rhs, zero)


def nullspace(M: LinMap, zero=Fraction(0)) -> list[FinVector]:
    return solve(M, None, zero).nullspace_basis


def invert(M: LinMap, one=Fraction(1)) -> LinMap:
    n, k = M.shape
    if n != k:
        raise ShapeMismatch(f"cannot invert a {n}x{k} map")
    zero = one - one
    rows = [[zero] * (2 * n) for _ in range(n)]
    for (r, c), v in M._entries.items():
        rows[r][c] = v
    for i in range(n):
        rows[i][n + i] = one
    R, pivots = rref(rows, 2 * n)
    if len(pivots) < n or pivots[n - 1] >= n:
        raise Singular("map is not invertible")
    ents = {}
    for i in range(n):
        for j in range(n):
            v = R[i][n + j]
            if v != 0:
                ents[(i, j)] = v
    return LinMap(M.codomain_dims, M.domain_dims, ents)


def left_inverse(M: LinMap, one=Fraction(1)) -> LinMap:
    """Some L with L o M = id, for M injective; raises Singular otherwise."""
    n, k = M.shape
    zero = one - one
    rows = [[zero] * n for _ in range(k)]
    for (r, c), v in M._entries.items():
        rows[c][r] = v
    _, piv = rref(rows, n)
    if len(piv) < k:
        raise Singular("map is not injective")
    sub = LinMap((k,), (k,), {(i, c): M.entry(r, c) for i, r in enumerate(piv) for c in range(k) if M.entry(r, c) != 0})
    inv = invert(sub, one)
    sel = LinMap(M.codomain_dims, (k,), {(i, r): one for i, r in enumerate(piv)})
    return compose(inv, sel).reshape(M.codomain_dims, M.domain_dims)


def span_coordinates(columns: Sequence[FinVector], target: FinVector, zero=Fraction(0)) -> FinVector | None:
    """Coordinates of ``target`` in the span of ``columns`` or None if outside."""
    if not columns:
        return FinVector([]) if target.is_zero() else None
    dim = target.dim
    M = LinMap.from_columns((len(columns),), (dim,), columns)
    res = solve(M, target, zero)
    return res.particular


# ---------------------------------------------------------------------------
# convolution


def _unit_counit(C, A) -> LinMap:
    unit = A.unit if isinstance(A.unit, LinMap) else LinMap.from_vector(A.unit)
    return compose(unit, C.counit).reshape((C.dim,), (A.dim,))


def convolution(f: LinMap, g: LinMap, C, A) -> LinMap:
    """(f * g)(c) = f(c_1) g(c_2) for maps C -> A."""
    for h in (f, g):
        if h.domain_dim != C.dim or h.codomain_dim != A.dim:
            raise ShapeMismatch("convolution factors must map C -> A")
    out = compose(A.mult, compose(tensor_map(f, g), C.comult))
    return out.reshape((C.dim,), (A.dim,))


def convolution_inverse(f: LinMap, C, A, zero=Fraction(0)) -> LinMap:
    """Solve f * g = unit o counit for g, then confirm g * f as well."""
    if f.domain_dim != C.dim or f.codomain_dim != A.dim:
        raise ShapeMismatch("map must go C -> A")
    dA, dC = A.dim, C.dim
    target = _unit_counit(C, A)
    # unknown g[a2, c2] at column a2 * dC + c2; equation row a * dC + c
    nunk = dA * dC
    rows = [[zero] * nunk for _ in range(dA * dC)]
    fcols = f.columns()
    for c in range(dC):
        for (c1, c2), w in C.comult.column_multi((c,)):
            for a1, fv in fcols[c1].items():
                for a2 in range(dA):
                    for (a,), mv in A.mult.column_multi((a1, a2)):
                        r = a * dC + c
                        rows[r][a2 * dC + c2] = rows[r][a2 * dC + c2] + w * fv * mv
    rhs = [target.entry(a, c) for a in range(dA) for c in range(dC)]
    rhs = [zero + x for x in rhs]
    res = _solve_rows(rows, nunk, rhs, zero)
    if res.particular is None or res.nullspace_basis:
        raise NotConvInvertible("map has no convolution inverse")
    x = res.particular.coords
    g = LinMap((dC,), (dA,), {(a, c): x[a * dC + c] for a in range(dA) for c in range(dC)})
    if convolution(g, f, C, A) != target:
        raise NotConvInvertible("one-sided convolution inverse is not two-sided")
    return g
