"""Command-line front end: ``bihom <command> ...``.

Exit status is 0 when everything passed, 1 when some identity failed or the
audit found a contradiction, and 2 for unusable input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import io
from .catalog import CATALOG, build
from .errors import BiHomError
from .identities import FAIL, audit_rules, check, classify
from .linear import LinearMap
from .structures import (
    AkivisAlgebra,
    BiHomAkivisAlgebra,
    BiHomAlgebra,
    akivis_to_bihom,
    associated_akivis,
    twist_bihom_akivis,
    validate_bihom,
    yau_twist,
)

OK, FAILED, INPUT_ERROR = 0, 1, 2


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # report usage problems through the same exit path as bad files
    def error(self, message):
        raise _Usage(f"{self.format_usage()}{self.prog}: error: {message}")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from exc


def _load(path: str, want=None):
    obj = io.parse(_read(path))
    if want is not None and not isinstance(obj, want):
        names = " or ".join(w.kind if hasattr(w, "kind") else "linear-map" for w in _tuple(want))
        got = getattr(obj, "kind", "linear-map")
        raise _Usage(f"{path}: expected {names}, got {got}")
    return obj


def _tuple(x):
    return x if isinstance(x, tuple) else (x,)


def _write(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)


def _param(text: str):
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise _Usage(f"--param expects key=value, got {text!r}")
    try:
        return key, Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise _Usage(f"--param {key}: {value!r} is not a rational number") from exc


# ---------------------------------------------------------------- commands


def cmd_validate(args) -> int:
    s = _load(args.file)
    lines = [f"{s.kind}, dim {s.dim}: well-formed"]
    status = OK
    if isinstance(s, BiHomAlgebra):
        rep = validate_bihom(s)
        lines.append(f"regular={rep.regular} multiplicative={rep.multiplicative}")
        lines += [f"  {k}: {w}" for k, w in rep.witnesses.items()]
    elif isinstance(s, BiHomAkivisAlgebra):
        r = check(s, "I9")
        lines.append(f"regular={s.regular} multiplicative={s.multiplicative}")
        lines.append(f"BiHom-Akivis identity: {r.verdict}" + (f" at {r.witness}" if r.verdict == FAIL else ""))
        status = FAILED if r.verdict == FAIL else OK
    elif not isinstance(s, AkivisAlgebra):
        lines.append("linear map")
    sys.stdout.write("\n".join(lines) + "\n")
    return status


def cmd_classify(args) -> int:
    s = _load(args.file, (BiHomAlgebra, AkivisAlgebra, BiHomAkivisAlgebra))
    ids = None
    if args.identities:
        ids = [i.strip() for i in args.identities.split(",") if i.strip()]
    c = classify(s, ids)
    _write(io.serialize_report(c) if args.format == "json" else io.format_report_text(c), None)
    return FAILED if any(r.verdict == FAIL for r in c.reports.values()) else OK


def cmd_construct(args) -> int:
    s = _load(args.file, BiHomAlgebra)
    _write(io.serialize(associated_akivis(s)), args.output)
    return OK


def cmd_twist(args) -> int:
    s = _load(args.file, (BiHomAlgebra, AkivisAlgebra))
    alpha = _load(args.alpha, LinearMap)
    beta = _load(args.beta, LinearMap)
    if isinstance(s, BiHomAlgebra):
        if not (s.alpha.is_identity and s.beta.is_identity):
            raise _Usage("twist expects an untwisted algebra (identity maps); use twist-akivis for BiHom-Akivis")
        result = yau_twist(s.mu, alpha, beta)
    else:
        result = akivis_to_bihom(s, alpha, beta)
    _write(io.serialize(result), args.output)
    return OK


def cmd_twist_akivis(args) -> int:
    s = _load(args.file, BiHomAkivisAlgebra)
    phi = _load(args.phi, LinearMap)
    psi = _load(args.psi, LinearMap)
    _write(io.serialize(twist_bihom_akivis(s, phi, psi)), args.output)
    return OK


def cmd_example(args) -> int:
    if args.list:
        for name, entry in CATALOG.items():
            params = ", ".join(f"{k}={v}" for k, v in entry.params.items())
            sys.stdout.write(f"{name:<20} {entry.description}" + (f" [{params}]" if params else "") + "\n")
        return OK
    if not args.name:
        raise _Usage("example: a catalog name is required (see --list)")
    params = dict(_param(p) for p in args.param)
    _write(io.serialize(build(args.name, **params)), args.output)
    return OK


def cmd_audit(args) -> int:
    s = _load(args.file, (BiHomAlgebra, AkivisAlgebra, BiHomAkivisAlgebra))
    outcomes = audit_rules(classify(s), s)
    violated = [o for o in outcomes if o.status == "violated"]
    if args.format == "json":
        text = json.dumps(io.audit_to_dict(outcomes), indent=2, ensure_ascii=False) + "\n"
    else:
        text = "".join(f"{o.rule:<4} {o.status}" + (f"  {o.message}" if o.message else "") + "\n" for o in outcomes)
        text += f"violations: {len(violated)}\n"
    _write(text, None)
    return FAILED if violated else OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bihom", description="Exact checks for BiHom-algebras and BiHom-Akivis algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("validate", help="parse a file and report its structural flags")
    v.add_argument("file")
    v.set_defaults(run=cmd_validate)

    c = sub.add_parser("classify", help="decide every identity (or a chosen subset)")
    c.add_argument("file")
    c.add_argument("--identities", help="comma-separated ids or names, e.g. I2,I9")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(run=cmd_classify)

    con = sub.add_parser("construct", help="derived structures")
    con.add_argument("what", choices=("associated-akivis",))
    con.add_argument("file")
    con.add_argument("-o", "--output")
    con.set_defaults(run=cmd_construct)

    t = sub.add_parser("twist", help="twist an untwisted algebra or an Akivis algebra by two maps")
    t.add_argument("file")
    t.add_argument("--alpha", required=True)
    t.add_argument("--beta", required=True)
    t.add_argument("-o", "--output")
    t.set_defaults(run=cmd_twist)

    ta = sub.add_parser("twist-akivis", help="twist a BiHom-Akivis algebra by a pair of morphisms")
    ta.add_argument("file")
    ta.add_argument("--phi", required=True)
    ta.add_argument("--psi", required=True)
    ta.add_argument("-o", "--output")
    ta.set_defaults(run=cmd_twist_akivis)

    e = sub.add_parser("example", help="write a catalog structure or map")
    e.add_argument("name", nargs="?")
    e.add_argument("--param", action="append", default=[], metavar="K=V")
    e.add_argument("--list", action="store_true", help="list catalog entries")
    e.add_argument("-o", "--output")
    e.set_defaults(run=cmd_example)

    a = sub.add_parser("audit", help="cross-check verdicts against the implication rules")
    a.add_argument("file")
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.set_defaults(run=cmd_audit)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.run(args)
    except _Usage as exc:
        sys.stderr.write(f"{exc}\n")
        return INPUT_ERROR
    except (BiHomError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return INPUT_ERROR


cli_main = main

if __name__ == "__main__":
    sys.exit(main())
