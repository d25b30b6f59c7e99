"""``lieherm`` command-line interface.

Each subcommand prints one JSON document on stdout. Exit status is 0 on
success, 1 for invalid input (including unknown commands) and 2 when the
input is valid but the requested operation does not apply to it.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .connections import (
    connection_from_torsion,
    gauduchon_torsion,
    hermitian_torsion,
    trivial_alpha,
)
from .curvature import flat_t_values, gauduchon_curvature, gauduchon_curvature_poly, skt_status
from .errors import MathPreconditionError, ValidationError
from .hermitian import (
    AlmostHermitianAlgebra,
    d_omega,
    d_omega_plus,
    is_integrable,
    nijenhuis,
    nijenhuis_is_totally_skew,
)
from .lie_core import catalog, is_product_form, jacobi_defect, product_with_abelian
from .rational import format_rational, parse_rational
from .suite import verify_suite

EXIT_OK, EXIT_VALIDATION, EXIT_PRECONDITION = 0, 1, 2


class _UsageError(ValidationError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{message}\n{self.format_usage().strip()}")


def _hermitian(path) -> AlmostHermitianAlgebra:
    return AlmostHermitianAlgebra(formats.load_algebra(path))


def _connection_torsion(args, A):
    """The torsion selected by ``--alpha`` or ``--t``, with a label for the payload."""
    if args.alpha is not None:
        alpha = formats.load_alpha(args.alpha)
        return hermitian_torsion(A, alpha), {"alpha": str(args.alpha)}
    t = parse_rational(args.t)
    return gauduchon_torsion(A, t), {"t": format_rational(t)}


def _write_or_return(doc, out):
    if out is None:
        return doc
    Path(out).write_text(formats.dumps(doc))
    return {"written": str(out)}


def cmd_validate(args):
    L = formats.load_algebra(args.algebra)
    defect = formats.components(jacobi_defect(L))
    payload = {"name": L.name or "", "dim": L.dim, "jacobi": not defect,
               "jacobi_defect": defect, "product_form": is_product_form(L)}
    if defect:
        return EXIT_VALIDATION, payload
    return EXIT_OK, payload


def cmd_catalog(args):
    return EXIT_OK, _write_or_return(formats.algebra_to_doc(catalog(args.name)), args.output)


def cmd_product_abelian(args):
    L = product_with_abelian(formats.load_algebra(args.algebra))
    return EXIT_OK, _write_or_return(formats.algebra_to_doc(L), args.output)


def cmd_nijenhuis(args):
    A = _hermitian(args.algebra)
    payload = {"integrable": is_integrable(A), "components": formats.components(nijenhuis(A))}
    if args.check_skew:
        payload["totally_skew"] = nijenhuis_is_totally_skew(A)
    return EXIT_OK, payload


def cmd_domega(args):
    A = _hermitian(args.algebra)
    form = d_omega_plus(A) if args.plus else d_omega(A)
    return EXIT_OK, {"plus": args.plus, "components": formats.components(form)}


def cmd_torsion(args):
    A = _hermitian(args.algebra)
    T, label = _connection_torsion(args, A)
    return EXIT_OK, {**label, "components": formats.components(T)}


def cmd_connection(args):
    A = _hermitian(args.algebra)
    T, label = _connection_torsion(args, A)
    return EXIT_OK, {**label, "components": formats.components(connection_from_torsion(A, T))}


def cmd_curvature(args):
    A = _hermitian(args.algebra)
    t = parse_rational(args.t)
    payload = {"t": format_rational(t),
               "components": formats.components(gauduchon_curvature(A, t))}
    if args.poly:
        payload["polynomials"] = formats.poly_components(gauduchon_curvature_poly(A))
    return EXIT_OK, payload


def cmd_flat_scan(args):
    report = flat_t_values(_hermitian(args.algebra))
    return EXIT_OK, {
        "identically_flat": report.identically_flat,
        "rational_roots": [format_rational(t) for t in report.rational_roots],
        "unresolved_quadratics": [[format_rational(c) for c in q]
                                  for q in report.unresolved_quadratics],
    }


def cmd_trivial_alpha(args):
    return EXIT_OK, formats.alpha_to_doc(trivial_alpha(_hermitian(args.algebra)))


def cmd_skt(args):
    skt, witness = skt_status(_hermitian(args.algebra))
    payload = {"skt": skt}
    if witness is not None:
        payload["witness"] = list(witness)
    return EXIT_OK, payload


def cmd_verify(args):
    A = _hermitian(args.algebra)
    if args.alpha is not None:
        checks = verify_suite(A, alpha=formats.load_alpha(args.alpha))
    else:
        checks = verify_suite(A, t=parse_rational(args.t))
    rows = []
    for c in checks:
        row = {"check": c.name, "pass": c.passed}
        if c.witness is not None:
            row["witness"] = list(c.witness)
        rows.append(row)
    return EXIT_OK, {"all_pass": all(c.passed for c in checks), "checks": rows}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lieherm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    def source(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--alpha", metavar="ALPHA_JSON")
        group.add_argument("--t", metavar="RATIONAL")

    add("validate", cmd_validate, "check antisymmetry and the Jacobi identity").add_argument("algebra")
    p = add("catalog", cmd_catalog, "emit a named algebra")
    p.add_argument("name")
    p.add_argument("-o", "--output")
    p = add("product-abelian", cmd_product_abelian, "form h + R^n")
    p.add_argument("algebra")
    p.add_argument("-o", "--output")
    p = add("nijenhuis", cmd_nijenhuis, "Nijenhuis tensor")
    p.add_argument("algebra")
    p.add_argument("--check-skew", action="store_true")
    p = add("domega", cmd_domega, "d omega or its (2,1)+(1,2) part")
    p.add_argument("algebra")
    p.add_argument("--plus", action="store_true")
    for name, func, text in (("torsion", cmd_torsion, "torsion of a Hermitian connection"),
                             ("connection", cmd_connection, "connection coefficients"),
                             ("verify", cmd_verify, "run every Hermitian check")):
        p = add(name, func, text)
        source(p)
        p.add_argument("algebra")
    p = add("curvature", cmd_curvature, "curvature of a Gauduchon connection")
    p.add_argument("--t", required=True, metavar="RATIONAL")
    p.add_argument("algebra")
    p.add_argument("--poly", action="store_true")
    add("flat-scan", cmd_flat_scan, "flat parameters on the Gauduchon line").add_argument("algebra")
    add("trivial-alpha", cmd_trivial_alpha, "alpha of the trivial connection").add_argument("algebra")
    add("skt", cmd_skt, "closed torsion 3-form test").add_argument("algebra")
    return parser


def _attach_t(argv):
    """Rewrite ``--t -1/3`` as ``--t=-1/3``; argparse would read ``-1/3`` as an option."""
    out, it = [], iter(argv)
    for tok in it:
        if tok == "--t":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--t={nxt}")
        else:
            out.append(tok)
    return out


def run(argv) -> tuple[int, dict]:
    """Dispatch ``argv``; returns the exit code and the output document."""
    try:
        args = build_parser().parse_args(_attach_t(list(argv)))
        code, payload = args.func(args)
        status = "ok" if code == EXIT_OK else "validation_error"
        return code, {"status": status, "command": args.command, **payload}
    except ValidationError as exc:
        return EXIT_VALIDATION, _error_doc("validation_error", exc)
    except MathPreconditionError as exc:
        return EXIT_PRECONDITION, _error_doc("math_precondition_error", exc)


def _error_doc(status, exc) -> dict:
    name = "UsageError" if isinstance(exc, _UsageError) else type(exc).__name__
    return {"status": status, "error": name, "message": str(exc)}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    code, doc = run(argv)
    if code != EXIT_OK:
        print(f"lieherm: {doc.get('message', 'check failed')}", file=sys.stderr)
    sys.stdout.write(formats.dumps(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
