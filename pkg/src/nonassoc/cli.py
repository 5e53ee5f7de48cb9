"""Command-line front end.

Exit status: 0 when the run succeeds and the queried property holds, 1 when
the run succeeds but the property fails, 2 on unusable input.  Reports go to
stdout (human text, or JSON with ``--json``); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fixtures as fx
from .algebra import Algebra, Subspace, is_idempotent, load, parse_element
from .axes import decompose, detect_axis, enumerate_axes
from .errors import (AlgebraError, AlgebraFormatError, BadCharacteristic, BadParameters,
                     FieldError, FieldNotFinite, SearchSpaceTooLarge)
from .field import QQ, GF
from .identities import CHECKS, is_flexible_idempotent
from .pairs import Outcome, classify_pair
from .peirce import Side, albert_decomposition, eigen_data

OK, FAILS, BAD_INPUT = 0, 1, 2

# errors that mean "the input cannot be analysed at all"
_INPUT_ERRORS = (AlgebraFormatError, BadParameters, FieldError, FieldNotFinite,
                 SearchSpaceTooLarge, BadCharacteristic, KeyError, ValueError, OSError)


class UsageError(Exception):
    pass


def _emit(doc, text: str, as_json: bool):
    if as_json:
        print(json.dumps(doc, indent=2, sort_keys=False))
    else:
        print(text)


def _element(A: Algebra, expr: str):
    try:
        return parse_element(A, expr)
    except KeyError as exc:
        raise UsageError(f"{expr!r}: {exc.args[0]}") from None
    except ValueError as exc:
        raise UsageError(f"{expr!r}: {exc}") from None


def _field(spec: str):
    if spec in ("Q", "QQ"):
        return QQ
    try:
        return GF(int(spec))
    except ValueError:
        raise UsageError(f"field must be Q or a prime, got {spec!r}") from None


def _summary(A: Algebra) -> dict:
    identities = {}
    for name, check in CHECKS.items():
        try:
            identities[name] = check(A).holds
        except BadCharacteristic:
            identities[name] = None
    return {"field": A.field.to_json(), "dim": A.dim, "basis": list(A.basis_names),
            "nonzero_products": len(A.to_json()["products"]), "identities": identities}


def _summary_text(doc: dict) -> str:
    field = "Q" if doc["field"] == "Q" else f"GF({doc['field']['prime']})"
    lines = [f"algebra over {field}, dim {doc['dim']}, basis {', '.join(doc['basis'])}",
             f"nonzero basis products: {doc['nonzero_products']}"]
    for name, holds in doc["identities"].items():
        state = "n/a" if holds is None else ("holds" if holds else "fails")
        lines.append(f"  {name}: {state}")
    return "\n".join(lines)


def _space_text(label: str, s: Subspace) -> str:
    return f"{label} = {s}"


# -- subcommands ------------------------------------------------------------------

def cmd_validate(args) -> int:
    A = load(args.file)
    doc = _summary(A)
    _emit(doc, _summary_text(doc), args.json)
    return OK


def cmd_check(args) -> int:
    A = load(args.file)
    reports = []
    for name in args.identities:
        if name == "flexible-idempotent":
            if args.at is None:
                raise UsageError("flexible-idempotent needs --at ELEMENT")
            reports.append(is_flexible_idempotent(A, _element(A, args.at)))
        elif name in CHECKS:
            reports.append(CHECKS[name](A))
        else:
            raise UsageError(f"unknown identity {name!r}; choose from "
                             f"{', '.join([*CHECKS, 'flexible-idempotent'])}")
    lines = []
    for rep in reports:
        line = f"{rep.identity.value}: {'holds' if rep.holds else 'fails'}"
        if not rep.holds:
            wit = ", ".join(f"{k} = {v}" for k, v in rep.witness.items())
            line += f" (basis indices {list(rep.counterexample)}; witness {wit})"
        lines.append(line)
    _emit({"reports": [r.to_json() for r in reports]}, "\n".join(lines), args.json)
    return OK if all(r.holds for r in reports) else FAILS


def cmd_analyze(args) -> int:
    A = load(args.file)
    a = _element(A, args.element)
    F = A.field
    if a.is_zero() or not is_idempotent(a):
        doc = {"element": a.to_json(), "idempotent": a.is_zero() or is_idempotent(a),
               "zero": a.is_zero()}
        _emit(doc, f"{a} is {'zero' if a.is_zero() else 'not idempotent'}", args.json)
        return FAILS
    doc = {"element": a.to_json(), "idempotent": True}
    lines = [f"idempotent {a}"]
    for side in Side:
        data = eigen_data(a, side)
        doc[f"{side.value}_eigen"] = data.to_json()
        op = "L" if side is Side.LEFT else "R"
        for lam in data.eigenvalues:
            lines.append(_space_text(f"  A_{F.format(lam)}({op}_a)", data.space(lam)))
        if data.residual.degree > 0:
            lines.append(f"  {op}_a: irreducible factor {data.residual}")
    if F.characteristic != 3:
        rep = albert_decomposition(A, a)
        doc["albert"] = rep.to_json()
        lines.append("circle decomposition: " + ", ".join(
            f"{k} dim {v}" for k, v in zip(["A_{1,1}", "A_{0,0}", "A°_1/2"], rep.dims))
            + f"; direct sum {'yes' if rep.direct_sum else 'no'}")
    axis = detect_axis(A, a)
    doc["axis"] = axis.to_json()
    lines.extend(_axis_lines(axis))
    _emit(doc, "\n".join(lines), args.json)
    return OK


def _axis_lines(rep) -> list[str]:
    F = rep.element.algebra.field
    if not rep.two_sided:
        why = ", ".join(r.value for r in rep.reasons) or "fails"
        return [f"{rep.element}: not an axis ({why})"]
    lam = "*" if rep.left.type is None else F.format(rep.left.type)
    delta = "*" if rep.right.type is None else F.format(rep.right.type)
    head = f"{rep.element}: axis of {'Jordan ' if rep.jordan else ''}type ({lam},{delta})"
    if rep.degenerate:
        head += " [degenerate]"
    out = [head, f"  grading: {rep.grading_verified.value}"]
    for label, space in rep.components.items():
        label = label.replace("lam", lam).replace("delta", delta)
        out.append(_space_text(f"  {label}", space))
    return out


def cmd_axes(args) -> int:
    A = load(args.file)
    if args.enumerate:
        reports = enumerate_axes(A, args.cap)
        doc = {"axes": [r.to_json() for r in reports]}
        lines = [f"{len(reports)} nonzero axis" + ("" if len(reports) == 1 else "es")]
        for r in reports:
            lines.extend(_axis_lines(r))
        _emit(doc, "\n".join(lines), args.json)
        return OK
    if args.element is None:
        raise UsageError("give an element or --enumerate")
    rep = detect_axis(A, _element(A, args.element))
    _emit(rep.to_json(), "\n".join(_axis_lines(rep)), args.json)
    return OK if rep.two_sided else FAILS


def cmd_classify_pair(args) -> int:
    A = load(args.file)
    res = classify_pair(A, _element(A, args.a), _element(A, args.b))
    lines = [str(res)]
    if res.witness is not None:
        model = fx.build(res.model, A.field, lam=res.lam).algebra
        for name, col in zip(model.basis_names, res.witness.columns()):
            lines.append(f"  {name} -> {A.element(col)}")
    _emit(res.to_json(), "\n".join(lines), args.json)
    return FAILS if res.outcome is Outcome.NOT_COVERED else OK


def cmd_decompose(args) -> int:
    A = load(args.file)
    rep = detect_axis(A, _element(A, args.axis)).require()
    dec = decompose(rep, _element(A, args.x))
    lines = [f"alpha = {A.field.format(dec.alpha)}"]
    lines += [f"  {k} = {v}" for k, v in dec.parts.items()]
    lines += [f"  check {k}: {'ok' if v else 'FAILS'}" for k, v in dec.checks.items()]
    _emit(dec.to_json(), "\n".join(lines), args.json)
    return OK if dec.certified else FAILS


def cmd_fixture(args) -> int:
    F = _field(args.field)
    params = {}
    for item in args.param:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects KEY=VALUE, got {item!r}")
        params[key.strip()] = int(value) if key.strip() == "size" else F.parse(value.strip())
    A = fx.build(args.name, F, **params).algebra
    if args.export:
        text = A.dumps() + "\n"
        if args.export == "-":
            sys.stdout.write(text)
            return OK
        with open(args.export, "w", encoding="utf-8") as fh:
            fh.write(text)
    doc = _summary(A)
    _emit(doc, _summary_text(doc), args.json)
    return OK


def cmd_fixtures(args) -> int:
    infos = list(fx.FIXTURES.values())
    doc = {"fixtures": [{"name": i.name, "params": list(i.params), "constraints": i.constraints}
                        for i in infos]}
    width = max(len(i.name) for i in infos)
    text = "\n".join(f"{i.name.ljust(width)}  params: {', '.join(i.params)}  ({i.constraints})"
                     for i in infos)
    _emit(doc, text, args.json)
    return OK


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON reports")

    p = argparse.ArgumentParser(prog="nonassoc",
                                description="Idempotents, axes and identities of "
                                            "finite-dimensional algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="load an algebra file and summarize it")
    s.add_argument("file")
    s.set_defaults(run=cmd_validate)

    s = sub.add_parser("check", parents=[common], help="test polynomial identities")
    s.add_argument("file")
    s.add_argument("identities", nargs="+", metavar="IDENTITY")
    s.add_argument("--at", help="idempotent for flexible-idempotent")
    s.set_defaults(run=cmd_check)

    s = sub.add_parser("analyze", parents=[common], help="eigenspaces and axis report of an element")
    s.add_argument("file")
    s.add_argument("element")
    s.set_defaults(run=cmd_analyze)

    s = sub.add_parser("axes", parents=[common], help="axis detection")
    s.add_argument("file")
    s.add_argument("element", nargs="?")
    s.add_argument("--enumerate", action="store_true", help="scan all idempotents (finite fields)")
    s.add_argument("--cap", type=int, default=10**7)
    s.set_defaults(run=cmd_axes)

    s = sub.add_parser("classify-pair", parents=[common], help="classify a pair of axes")
    s.add_argument("file")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(run=cmd_classify_pair)

    s = sub.add_parser("decompose", parents=[common], help="split an element along an axis")
    s.add_argument("file")
    s.add_argument("axis")
    s.add_argument("x")
    s.set_defaults(run=cmd_decompose)

    s = sub.add_parser("fixture", parents=[common], help="build a named example algebra")
    s.add_argument("name")
    s.add_argument("--field", default="Q", help="Q or a prime (default Q)")
    s.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    s.add_argument("--export", metavar="FILE", help="write the algebra JSON ('-' for stdout)")
    s.set_defaults(run=cmd_fixture)

    s = sub.add_parser("fixtures", parents=[common], help="list the named example algebras")
    s.add_argument("action", choices=["list"])
    s.set_defaults(run=cmd_fixtures)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except _INPUT_ERRORS as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return BAD_INPUT
    except AlgebraError as exc:
        # a precondition of the requested analysis is false for this input
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return FAILS


if __name__ == "__main__":
    sys.exit(main())
