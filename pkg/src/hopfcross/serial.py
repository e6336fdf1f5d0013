"""JSON documents for Hopf algebras, crossed systems, pairings and maps.

Scalars are always stored as canonical text (see :func:`render`), so files
diff cleanly and round-trip exactly.  A sub-document may be given inline or
as a path string, resolved relative to the file that references it.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .braiding import BraidingQuadruple, PairingData
from .crossed import CrossedSystemData
from .exactfield import Field, FieldMismatch, ParseError, field_of, render
from .hopfcore import HopfData, make_hopf
from .tensorlinalg import FinVector, LinMap

__all__ = [
    "DocumentError",
    "dump_json",
    "field_from_spec",
    "hopf_from_doc",
    "hopf_to_doc",
    "linmap_from_doc",
    "linmap_to_doc",
    "load_document",
    "pairing_from_doc",
    "pairing_to_doc",
    "quadruple_from_doc",
    "quadruple_to_doc",
    "system_from_doc",
    "system_to_doc",
]


class DocumentError(ValueError):
    """Malformed or unreadable input document."""


def field_from_spec(spec: str | None) -> Field | None:
    """Parse a --field value: ``rational``, ``Q``, ``cyclotomic:N`` or ``N``."""
    if spec is None:
        return None
    s = spec.strip().lower()
    if s in ("rational", "q"):
        return Field(1)
    if s.startswith("cyclotomic:"):
        s = s.split(":", 1)[1]
    try:
        return Field(int(s))
    except ValueError as exc:
        raise DocumentError(f"unrecognised field {spec!r}") from exc


def dump_json(doc: Any) -> str:
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def load_document(path: str | Path) -> tuple[Any, Path]:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {p}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text), p.parent
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{p} is not valid JSON: {exc}") from exc


def _resolve(ref, base: Path | None) -> tuple[Any, Path | None]:
    if isinstance(ref, str):
        path = Path(ref)
        if base is not None and not path.is_absolute():
            path = base / path
        return load_document(path)
    return ref, base


def _scalar(F: Field, x):
    try:
        if isinstance(x, str):
            return F.parse(x)
        if isinstance(x, int) and not isinstance(x, bool):
            return F(x)
    except (ParseError, ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"bad scalar {x!r}: {exc}") from exc
    raise DocumentError(f"scalars must be strings or integers, got {x!r}")


def _need(doc: dict, key: str):
    if not isinstance(doc, dict) or key not in doc:
        raise DocumentError(f"document lacks required field {key!r}")
    return doc[key]


def _index(i, bound: int, what: str) -> int:
    if not isinstance(i, int) or not 0 <= i < bound:
        raise DocumentError(f"{what} index {i!r} out of range 0..{bound - 1}")
    return i


def _doc_field(doc: dict, session: Field | None) -> Field:
    try:
        F = Field.from_json(doc.get("field"))
    except (ParseError, KeyError, ValueError, TypeError, AttributeError) as exc:
        raise DocumentError(f"bad field specification: {exc}") from exc
    if session is None:
        return F
    try:
        return session.join(F)
    except FieldMismatch as exc:
        raise DocumentError(str(exc)) from exc


# ---------------------------------------------------------------------------
# Hopf algebras


def hopf_to_doc(H: HopfData) -> dict:
    d = H.dim
    mult = [[i, j, k, render(c)] for (k, col), c in sorted(H.mult.entries.items(), key=lambda t: (t[0][1], t[0][0])) for i, j in [divmod(col, d)]]
    comult = [[i, j, k, render(c)] for (row, i), c in sorted(H.comult.entries.items(), key=lambda t: (t[0][1], t[0][0])) for j, k in [divmod(row, d)]]
    anti = [[i, j, render(c)] for (j, i), c in sorted(H.antipode.entries.items(), key=lambda t: (t[0][1], t[0][0]))]
    return {
        "name": H.name,
        "field": H.field.to_json(),
        "dim": d,
        "basis_labels": list(H.labels),
        "unit": [render(c) for c in H.unit],
        "counit": [render(H.counit.entry(0, i, 0)) for i in range(d)],
        "mult": mult,
        "comult": comult,
        "antipode": anti,
    }


def hopf_from_doc(doc, base: Path | None = None, field: Field | None = None) -> HopfData:
    doc, base = _resolve(doc, base)
    F = _doc_field(doc, field)
    d = _need(doc, "dim")
    if not isinstance(d, int) or d < 1:
        raise DocumentError("dim must be a positive integer")
    labels = doc.get("basis_labels") or [f"e{i}" for i in range(d)]
    if len(labels) != d:
        raise DocumentError("basis_labels has the wrong length")
    unit, counit = _need(doc, "unit"), _need(doc, "counit")
    if len(unit) != d or len(counit) != d:
        raise DocumentError("unit and counit must be dense lists of length dim")
    mult: dict = {}
    for ent in _need(doc, "mult"):
        if len(ent) != 4:
            raise DocumentError(f"mult entry {ent!r} is not [i, j, k, scalar]")
        i, j, k = (_index(x, d, "mult") for x in ent[:3])
        mult[(k, i * d + j)] = mult.get((k, i * d + j), F.zero) + _scalar(F, ent[3])
    comult: dict = {}
    for ent in _need(doc, "comult"):
        if len(ent) != 4:
            raise DocumentError(f"comult entry {ent!r} is not [i, j, k, scalar]")
        i, j, k = (_index(x, d, "comult") for x in ent[:3])
        comult[(j * d + k, i)] = comult.get((j * d + k, i), F.zero) + _scalar(F, ent[3])
    anti = None
    if doc.get("antipode") is not None:
        ents: dict = {}
        for ent in doc["antipode"]:
            if len(ent) != 3:
                raise DocumentError(f"antipode entry {ent!r} is not [i, j, scalar]")
            i, j = (_index(x, d, "antipode") for x in ent[:2])
            ents[(j, i)] = ents.get((j, i), F.zero) + _scalar(F, ent[2])
        anti = LinMap((d,), (d,), ents)
    return make_hopf(
        LinMap((d, d), (d,), mult),
        FinVector(_scalar(F, c) for c in unit),
        LinMap((d,), (d, d), comult),
        LinMap((d,), (), {(0, i): _scalar(F, c) for i, c in enumerate(counit)}),
        anti,
        labels,
        doc.get("name", ""),
        F,
    )


# ---------------------------------------------------------------------------
# crossed systems


def system_to_doc(S: CrossedSystemData) -> dict:
    dA = S.A.dim
    act = [[h, a, k, render(c)] for (k, col), c in sorted(S.act.entries.items(), key=lambda t: (t[0][1], t[0][0])) for h, a in [divmod(col, dA)]]
    dH = S.H.dim
    coc = [[h, g, k, render(c)] for (k, col), c in sorted(S.cocycle.entries.items(), key=lambda t: (t[0][1], t[0][0])) for h, g in [divmod(col, dH)]]
    return {"name": S.name, "field": S.field.to_json(), "A": hopf_to_doc(S.A), "H": hopf_to_doc(S.H), "action": act, "cocycle": coc}


def system_from_doc(doc, base: Path | None = None, field: Field | None = None) -> CrossedSystemData:
    doc, base = _resolve(doc, base)
    a_doc, a_base = _resolve(_need(doc, "A"), base)
    h_doc, h_base = _resolve(_need(doc, "H"), base)
    F = _doc_field(a_doc, _doc_field(h_doc, field))
    if doc.get("field") is not None:
        F = _doc_field(doc, F)
    A = hopf_from_doc(a_doc, a_base, F)
    H = hopf_from_doc(h_doc, h_base, F)
    dA, dH = A.dim, H.dim

    def sparse3(key, n1, n2, what):
        ents: dict = {}
        for ent in _need(doc, key):
            if len(ent) != 4:
                raise DocumentError(f"{key} entry {ent!r} is not [i, j, k, scalar]")
            i, j, k = _index(ent[0], dH, what), _index(ent[1], n2, what), _index(ent[2], dA, what)
            ents[(k, i * n2 + j)] = ents.get((k, i * n2 + j), F.zero) + _scalar(F, ent[3])
        return ents

    act = LinMap((dH, dA), (dA,), sparse3("action", dH, dA, "action"))
    coc = LinMap((dH, dH), (dA,), sparse3("cocycle", dH, dH, "cocycle"))
    return CrossedSystemData(A, H, act, coc, doc.get("name", ""))


# ---------------------------------------------------------------------------
# pairings and quadruples


def pairing_to_doc(q: PairingData, left: Any = None, right: Any = None) -> dict:
    ents = [[i, j, render(c)] for (i, j), c in sorted(q.entries().items())]
    return {"left": left, "right": right, "shape": [q.left_dim, q.right_dim], "entries": ents}


def _ref_dim(ref, base, field, roles: dict) -> int | None:
    if ref is None:
        return None
    if isinstance(ref, str) and ref in roles:
        return roles[ref].dim
    return hopf_from_doc(ref, base, field).dim


def pairing_from_doc(doc, base: Path | None = None, field: Field | None = None, roles: dict | None = None) -> PairingData:
    doc, base = _resolve(doc, base)
    roles = roles or {}
    F = field or Field()
    shape = doc.get("shape")
    nl = _ref_dim(doc.get("left"), base, field, roles)
    nr = _ref_dim(doc.get("right"), base, field, roles)
    if shape is not None:
        if (nl is not None and nl != shape[0]) or (nr is not None and nr != shape[1]):
            raise DocumentError("pairing shape disagrees with its left/right algebras")
        nl, nr = shape
    if nl is None or nr is None:
        raise DocumentError("pairing needs left/right algebras or an explicit shape")
    ents: dict = {}
    for ent in _need(doc, "entries"):
        if len(ent) != 3:
            raise DocumentError(f"pairing entry {ent!r} is not [i, j, scalar]")
        i, j = _index(ent[0], nl, "pairing row"), _index(ent[1], nr, "pairing column")
        ents[(i, j)] = ents.get((i, j), F.zero) + _scalar(F, ent[2])
    return PairingData.from_sparse(nl, nr, {k: v for k, v in ents.items() if v != 0})


_QUAD_ROLES = {"p": ("A", "A"), "tau": ("H", "H"), "u": ("A", "H"), "v": ("H", "A")}


def quadruple_to_doc(quad: BraidingQuadruple) -> dict:
    doc = {name: pairing_to_doc(getattr(quad, name), *roles) for name, roles in _QUAD_ROLES.items()}
    doc["params"] = {k: (render(v) if not isinstance(v, str) else v) for k, v in quad.params.items()}
    return doc


def quadruple_from_doc(doc, S: CrossedSystemData, base: Path | None = None) -> BraidingQuadruple:
    doc, base = _resolve(doc, base)
    F = S.field
    roles = {"A": S.A, "H": S.H}
    parts = {}
    for name in _QUAD_ROLES:
        sub = _need(doc, name)
        parts[name] = pairing_from_doc(sub, base, F, roles)
    quad = BraidingQuadruple(parts["p"], parts["tau"], parts["u"], parts["v"], dict(doc.get("params", {})))
    try:
        quad.check_shapes(S.A, S.H)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    return quad


# ---------------------------------------------------------------------------
# linear maps (embeddings, isomorphisms)


def linmap_to_doc(M: LinMap) -> dict:
    """Columns as sparse [i, j, scalar]: e_i maps onto scalar e_j."""
    ents = [[c, r, render(v)] for (r, c), v in sorted(M.entries.items(), key=lambda t: (t[0][1], t[0][0]))]
    n = 1
    for v in M.entries.values():
        n = max(n, field_of(v))
    return {"field": Field(n).to_json(), "domain_dim": M.domain_dim, "codomain_dim": M.codomain_dim, "entries": ents}


def linmap_from_doc(doc, base: Path | None = None, field: Field | None = None) -> LinMap:
    doc, base = _resolve(doc, base)
    F = _doc_field(doc, field)
    n, m = _need(doc, "domain_dim"), _need(doc, "codomain_dim")
    ents: dict = {}
    for ent in _need(doc, "entries"):
        if len(ent) != 3:
            raise DocumentError(f"map entry {ent!r} is not [i, j, scalar]")
        i, j = _index(ent[0], n, "domain"), _index(ent[1], m, "codomain")
        ents[(j, i)] = ents.get((j, i), F.zero) + _scalar(F, ent[2])
    return LinMap((n,), (m,), {k: v for k, v in ents.items() if v != 0})

