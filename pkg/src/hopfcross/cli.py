"""Command-line interface: ``hopfcross <group> <command> ...``.

Exit codes: 0 when every check passes, 1 on a mathematical failure (the
report names the failing identity and a witness), 2 on unreadable or
malformed input.  Commands that produce a document (a product, a sigma, a
recovered system) write it to ``--out`` or to stdout; their status line goes
to stderr so stdout stays machine-readable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import braiding, crossed, hopfcore, polybraid, structure
from .errors import (
    HopfError,
    LeftActionNotTrivial,
    NotABraiding,
    NotBijective,
    NotNormal,
    PreconditionFailed,
    SearchSpaceTooLarge,
    ShapeMismatch,
)
from .exactfield import Field, FieldMismatch, ParseError, render
from .hopfcore import AxiomReport
from .serial import (
    DocumentError,
    dump_json,
    field_from_spec,
    hopf_from_doc,
    hopf_to_doc,
    linmap_from_doc,
    linmap_to_doc,
    pairing_from_doc,
    pairing_to_doc,
    quadruple_from_doc,
    quadruple_to_doc,
    system_from_doc,
    system_to_doc,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Bad command-line input that is not a document problem."""


# ---------------------------------------------------------------------------
# session plumbing


def threads_from_env(environ=None) -> int:
    """HOPF_THREADS as a positive int (default 1). Work currently runs serially."""
    raw = (environ if environ is not None else os.environ).get("HOPF_THREADS")
    if raw is None or raw.strip() == "":
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f"HOPF_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise InputError(f"HOPF_THREADS must be a positive integer, got {raw!r}")
    return n


def _field(args) -> Field | None:
    return field_from_spec(args.field)


def _emit_document(args, doc_text: str) -> None:
    if args.out:
        try:
            Path(args.out).write_text(doc_text)
        except OSError as exc:
            raise DocumentError(f"cannot write {args.out}: {exc.strerror or exc}") from exc
    else:
        sys.stdout.write(doc_text)


def _emit_report(args, rep: AxiomReport, title: str, stream=None) -> int:
    stream = stream or sys.stdout
    if args.json:
        doc = {"command": title, **rep.to_json()}
        if rep.notes:
            doc["notes"] = {k: (v if isinstance(v, (int, str, bool)) else str(v)) for k, v in rep.notes.items()}
        stream.write(dump_json(doc))
    else:
        stream.write(f"{title}\n{rep.format()}\n")
        failed = len(rep.failed())
        stream.write("OK\n" if failed == 0 else f"FAILED: {failed} of {len(rep.entries)} entries\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


def _status(msg: str) -> None:
    sys.stderr.write(msg + "\n")


def _load_system(args, path):
    return system_from_doc(str(path), None, _field(args))


def _certified(S):
    return S if S.certified else crossed.certify(S)


# ---------------------------------------------------------------------------
# hopf


def cmd_hopf_check(args) -> int:
    H = hopf_from_doc(str(args.path), None, _field(args))
    return _emit_report(args, hopfcore.verify_hopf(H), f"hopf check {H.name or args.path}")


def cmd_hopf_antipode(args) -> int:
    H = hopf_from_doc(str(args.path), None, _field(args))
    S = hopfcore.derive_antipode(H)
    agrees = S == H.antipode
    if args.json:
        _emit_document(args, dump_json({"antipode": linmap_to_doc(S), "matches_declared": agrees}))
    else:
        lines = []
        for i, lab in enumerate(H.labels):
            col = S.column(i)
            terms = " + ".join(f"({render(c)}){H.labels[r]}" for r, c in sorted(col.items())) or "0"
            lines.append(f"S({lab}) = {terms}")
        lines.append("matches declared antipode" if agrees else "DIFFERS from declared antipode")
        _emit_document(args, "\n".join(lines) + "\n")
    return EXIT_OK if agrees else EXIT_FAIL


def _vector_text(H, v) -> str:
    terms = [f"({render(c)}){H.labels[i]}" for i, c in sorted(v.support().items())]
    return " + ".join(terms) or "0"


def cmd_hopf_integrals(args) -> int:
    H = hopf_from_doc(str(args.path), None, _field(args))
    sides = ("left", "right") if args.side == "both" else (args.side,)
    out = {}
    for side in sides:
        sp = structure.integrals(H, side)
        out[side] = {
            "dim": sp.dim,
            "basis": [[render(c) for c in t] for t in sp.basis],
            "epsilon": [render(e) for e in sp.epsilon_values],
        }
    if args.json:
        _emit_document(args, dump_json(out))
    else:
        lines = []
        for side in sides:
            sp = structure.integrals(H, side)
            lines.append(f"{side} integrals: dim {sp.dim}")
            for t, e in zip(sp.basis, sp.epsilon_values):
                lines.append(f"  {_vector_text(H, t)}   eps = {render(e)}")
        _emit_document(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_hopf_semisimple(args) -> int:
    H = hopf_from_doc(str(args.path), None, _field(args))
    res = structure.is_semisimple(H)
    wit = [render(c) for c in res.witness] if res.witness is not None else None
    if args.json:
        _emit_document(args, dump_json({"semisimple": res.semisimple, "integral": wit, "epsilon": render(res.epsilon)}))
    else:
        verdict = "semisimple" if res.semisimple else "not semisimple"
        body = _vector_text(H, res.witness) if res.witness is not None else "none"
        _emit_document(args, f"{H.name or args.path}: {verdict}\nright integral: {body}\neps = {render(res.epsilon)}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# crossed


def cmd_crossed_check(args) -> int:
    S = _load_system(args, args.system)
    return _emit_report(args, crossed.verify_crossed_system(S), f"crossed check {S.name or args.system}")


def _certify_or_report(args, S, what: str):
    rep = crossed.verify_crossed_system(S)
    if rep.ok:
        return crossed.certify(S), None
    _emit_report(args, rep, f"{what}: system not certified", sys.stderr)
    return None, EXIT_FAIL


def cmd_crossed_build(args) -> int:
    S, code = _certify_or_report(args, _load_system(args, args.system), "crossed build")
    if S is None:
        return code
    P = crossed.build_crossed_product(S)
    _emit_document(args, dump_json(hopf_to_doc(P)))
    _status(f"built {P.name} (dim {P.dim})")
    return EXIT_OK


def cmd_crossed_factorize(args) -> int:
    F = _field(args)
    E = hopf_from_doc(str(args.E), None, F)
    F = E.field if F is None else F.join(E.field)
    a_emb = linmap_from_doc(str(args.a_embed), None, F)
    h_emb = linmap_from_doc(str(args.h_embed), None, F)
    A = hopf_from_doc(str(args.A), None, F) if args.A else None
    H = hopf_from_doc(str(args.H), None, F) if args.H else None
    try:
        w = crossed.factorize(E, a_emb, h_emb, A, H)
    except (NotBijective, NotNormal, LeftActionNotTrivial, PreconditionFailed) as exc:
        _status(f"factorize failed: {type(exc).__name__}: {exc}")
        return EXIT_FAIL
    doc = {"system": system_to_doc(w.recovered), "isomorphism": linmap_to_doc(w.iso)}
    _emit_document(args, dump_json(doc))
    _status("factorization recovered a certified crossed system")
    return EXIT_OK


def cmd_crossed_transform(args) -> int:
    S = _load_system(args, args.system)
    u = linmap_from_doc(str(args.u), None, S.field)
    S = _certified(S)
    rep = crossed.check_lazy_cocycle(S.A, S.H, u)
    if not rep.ok:
        _emit_report(args, rep, "crossed transform: u is not a lazy 1-cocycle", sys.stderr)
        return EXIT_FAIL
    T = crossed.transform_by_lazy_cocycle(S, u)
    psi, iso_rep = crossed.transform_isomorphism(S, u)
    doc = {"system": system_to_doc(T), "isomorphism": linmap_to_doc(psi), "report": iso_rep.to_json()}
    _emit_document(args, dump_json(doc))
    _status("transformed system certified; isomorphism " + ("verified" if iso_rep.ok else "FAILED"))
    return EXIT_OK if iso_rep.ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# braid


def _system_and_quad(args):
    S = _load_system(args, args.system)
    return S, quadruple_from_doc(str(args.quad), S)


def cmd_braid_check(args) -> int:
    S, q = _system_and_quad(args)
    return _emit_report(args, braiding.certify_quadruple(S, q), f"braid check {args.quad}")


def _sigma(args):
    S, q = _system_and_quad(args)
    S2, code = _certify_or_report(args, S, "braid")
    if S2 is None:
        return None, None, code
    if not args.no_check:
        rep = braiding.certify_quadruple(S2, q)
        if not rep.ok:
            _emit_report(args, rep, "quadruple not certified", sys.stderr)
            return None, None, EXIT_FAIL
    return S2, braiding.assemble_sigma(S2, q, check=False), EXIT_OK


def cmd_braid_assemble(args) -> int:
    S, sigma, code = _sigma(args)
    if sigma is None:
        return code
    _emit_document(args, dump_json(pairing_to_doc(sigma)))
    return EXIT_OK


def cmd_braid_table(args) -> int:
    S, sigma, code = _sigma(args)
    if sigma is None:
        return code
    P = crossed.build_crossed_product(S)
    _emit_document(args, braiding.sigma_table(P, sigma))
    return EXIT_OK


def cmd_braid_decompose(args) -> int:
    S, code = _certify_or_report(args, _load_system(args, args.system), "braid decompose")
    if S is None:
        return code
    d = S.A.dim * S.H.dim
    sigma = pairing_from_doc(str(args.sigma), None, S.field)
    if (sigma.left_dim, sigma.right_dim) != (d, d):
        raise ShapeMismatch(f"sigma has shape {(sigma.left_dim, sigma.right_dim)}, expected {(d, d)}")
    try:
        q = braiding.decompose_sigma(S, sigma, check=not args.no_check)
    except NotABraiding as exc:
        _emit_report(args, exc.report, "sigma is not a braiding of the product", sys.stderr)
        return EXIT_FAIL
    _emit_document(args, dump_json(quadruple_to_doc(q)))
    return EXIT_OK


def _scalar_list(F: Field, text: str) -> list:
    try:
        return [F.parse(t.strip()) for t in text.split(",") if t.strip()]
    except (ParseError, ZeroDivisionError) as exc:
        raise InputError(f"bad scalar list {text!r}: {exc}") from exc


def _roots_of_unity(F: Field) -> list:
    """All roots of unity in Q(zeta_n): the 2n-th roots for odd n, else the n-th."""
    n = F.order
    roots = [F.zeta(k) for k in range(n)]
    if n % 2:
        roots += [-r for r in roots]
    return roots


def cmd_braid_search(args) -> int:
    S = _certified(_load_system(args, args.system))
    F = S.field
    if F.is_rational:
        raise InputError("the H4/k[C3] search needs a cyclotomic field (use --field 3)")
    gammas = _scalar_list(F, args.gamma) if args.gamma else _roots_of_unity(F)
    alphas = _scalar_list(F, args.alpha)
    variant = args.variant

    def build(alpha, gamma):
        return braiding.h4_c3_quadruple(alpha, gamma, F, variant)

    try:
        found = braiding.search_braidings(S, {"alpha": alphas, "gamma": gammas}, build, args.max_search)
    except SearchSpaceTooLarge as exc:
        _status(str(exc))
        return EXIT_FAIL
    rows = [{"alpha": render(q.params["alpha"]), "gamma": render(q.params["gamma"])} for q in found]
    doc = {"variant": variant, "searched": len(alphas) * len(gammas), "certified": rows}
    if args.json:
        _emit_document(args, dump_json(doc))
    else:
        lines = [f"searched {doc['searched']} assignments ({variant} tables); {len(rows)} certified"]
        lines += [f"  alpha={r['alpha']}  gamma={r['gamma']}" for r in rows]
        _emit_document(args, "\n".join(lines) + "\n")
    return EXIT_OK if rows else EXIT_FAIL


# ---------------------------------------------------------------------------
# poly


def _poly_params(args) -> polybraid.PolySigmaParams:
    F = _field(args) or Field(1)
    try:
        return polybraid.PolySigmaParams.parse(_scalar_list(F, args.params))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_poly_sigma(args) -> int:
    params = _poly_params(args)
    for k in ("a", "b", "c", "d"):
        if getattr(args, k) < 0:
            raise InputError("degrees must be non-negative")
    fn = polybraid.closed_form_sigma if args.route == "closed" else polybraid.assembled_sigma_poly
    value = fn(params, args.a, args.b, args.c, args.d)
    if args.json:
        _emit_document(args, dump_json({"a": args.a, "b": args.b, "c": args.c, "d": args.d, "route": args.route, "sigma": render(value)}))
    else:
        _emit_document(args, render(value) + "\n")
    return EXIT_OK


def cmd_poly_verify(args) -> int:
    params = _poly_params(args)
    if args.degree < 1:
        raise InputError("--degree must be >= 1")
    rep = polybraid.br_axioms_bounded(params, args.degree)
    bad = polybraid.oracle_mismatches(params, args.oracle)
    rep.add("closed_form_oracle", not bad, bad[0] if bad else None, f"{len(bad)} mismatching tuples" if bad else "")
    rep.notes["oracle_max_total"] = args.oracle
    return _emit_report(args, rep, f"poly verify (D = {args.degree})")


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="scalar field: rational | cyclotomic:N | N (joined with the documents' fields)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", help="write the produced document here instead of stdout")

    parser = argparse.ArgumentParser(prog="hopfcross", description="Exact crossed products of Hopf algebras and their braidings.")
    groups = parser.add_subparsers(dest="group", required=True)

    def sub(group, name, fn, help_):
        p = group.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    hopf = groups.add_parser("hopf", help="single Hopf algebras").add_subparsers(dest="cmd", required=True)
    for name, fn, h in (
        ("check", cmd_hopf_check, "verify every Hopf algebra axiom"),
        ("antipode", cmd_hopf_antipode, "derive the antipode by convolution inversion"),
        ("integrals", cmd_hopf_integrals, "left/right integrals by linear solve"),
        ("semisimple", cmd_hopf_semisimple, "Maschke test via a right integral"),
    ):
        p = sub(hopf, name, fn, h)
        p.add_argument("path")
        if name == "integrals":
            p.add_argument("--side", choices=("left", "right", "both"), default="both")

    cr = groups.add_parser("crossed", help="crossed systems and products").add_subparsers(dest="cmd", required=True)
    sub(cr, "check", cmd_crossed_check, "verify a crossed system").add_argument("system")
    sub(cr, "build", cmd_crossed_build, "write the crossed product as a Hopf document").add_argument("system")
    p = sub(cr, "factorize", cmd_crossed_factorize, "recover a crossed system from E = A H")
    p.add_argument("E")
    p.add_argument("a_embed")
    p.add_argument("h_embed")
    p.add_argument("--A", help="Hopf document fixing A's labels")
    p.add_argument("--H", help="Hopf document fixing H's labels")
    p = sub(cr, "transform", cmd_crossed_transform, "transform by a lazy 1-cocycle u: H -> A")
    p.add_argument("system")
    p.add_argument("u")

    br = groups.add_parser("braid", help="braidings on crossed products").add_subparsers(dest="cmd", required=True)
    for name, fn, h in (
        ("check", cmd_braid_check, "certify a quadruple (p, tau, u, v)"),
        ("assemble", cmd_braid_assemble, "assemble sigma from a quadruple"),
        ("table", cmd_braid_table, "sigma as a TSV table on the product basis"),
    ):
        p = sub(br, name, fn, h)
        p.add_argument("system")
        p.add_argument("quad")
        if name != "check":
            p.add_argument("--no-check", action="store_true", help="skip certification of the quadruple")
    p = sub(br, "decompose", cmd_braid_decompose, "split sigma into (p, tau, u, v)")
    p.add_argument("system")
    p.add_argument("sigma")
    p.add_argument("--no-check", action="store_true", help="skip the (BR1)-(BR5) check of sigma")
    p = sub(br, "search", cmd_braid_search, "search alpha, gamma for certified H4/k[C3] quadruples")
    p.add_argument("system")
    p.add_argument("--alpha", default="1,2", help="comma-separated candidates (default 1,2)")
    p.add_argument("--gamma", help="comma-separated candidates (default: all roots of unity in the field)")
    p.add_argument("--variant", choices=braiding.H4_C3_VARIANTS, default="corrected")
    p.add_argument("--max-search", type=int, default=10000, dest="max_search")

    po = groups.add_parser("poly", help="braidings on k[X] (x) k[X]").add_subparsers(dest="cmd", required=True)
    p = sub(po, "sigma", cmd_poly_sigma, "one value of sigma")
    for k in ("a", "b", "c", "d"):
        p.add_argument(f"--{k}", type=int, required=True)
    p.add_argument("--params", required=True, help="s_p,s_tau,s_u,s_v")
    p.add_argument("--route", choices=("closed", "assembled"), default="closed")
    p = sub(po, "verify", cmd_poly_verify, "bounded (BR1)-(BR5) and the closed-form oracle")
    p.add_argument("--params", required=True, help="s_p,s_tau,s_u,s_v")
    p.add_argument("--degree", type=int, default=4, help="total degree bound D")
    p.add_argument("--oracle", type=int, default=8, help="max a+b for the closed-form comparison")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        threads_from_env()
        return args.func(args)
    except (DocumentError, InputError, ParseError, FieldMismatch, ShapeMismatch, json.JSONDecodeError) as exc:
        _status(f"error: {exc}")
        return EXIT_INPUT
    except HopfError as exc:
        _status(f"{type(exc).__name__}: {exc}")
        if exc.report is not None:
            _status(exc.report.format())
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
