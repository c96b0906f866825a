"""JSON documents for algebras, linear maps, check reports and audits.

Rationals are strings (``"p/q"``, or ``"p"`` when q = 1), indices are
zero-based, sparse tables are sorted, and matrices are lists of rows with
``"convention": "column"`` (column c is the image of e_c).
"""
from __future__ import annotations

import json
from fractions import Fraction

from .errors import DimensionMismatch, DocumentSyntaxError, InvariantError, NotCommuting, SchemaError
from .identities import FAIL, NA, CheckReport, Classification, RuleOutcome
from .linear import MAX_DIM, LinearMap, MultilinearMap, Vector, format_rational
from .structures import AkivisAlgebra, BiHomAkivisAlgebra, BiHomAlgebra

KINDS = {
    "bihom-algebra": ({"mu": 2}, True),
    "akivis-algebra": ({"bracket": 2, "triple": 3}, False),
    "bihom-akivis-algebra": ({"bracket": 2, "triple": 3}, True),
}
_SLOT_KEYS = ("i", "j", "k", "l")


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _matrix_doc(f: LinearMap):
    return [[format_rational(v) for v in row] for row in f.rows]


def _table_doc(m: MultilinearMap):
    rows = []
    for inputs, image in sorted(m.table.items()):
        row = dict(zip(_SLOT_KEYS, inputs))
        row["coeffs"] = {str(o): format_rational(v) for o, v in sorted(image.items())}
        rows.append(row)
    return rows


def algebra_to_dict(structure, basis=None) -> dict:
    doc = {"kind": structure.kind, "dim": structure.dim}
    if basis is not None:
        doc["basis"] = list(basis)
    tables, has_maps = KINDS[structure.kind]
    if has_maps:
        doc["convention"] = "column"
    for name in tables:
        doc[name] = _table_doc(getattr(structure, name))
    if has_maps:
        doc["alpha"] = _matrix_doc(structure.alpha)
        doc["beta"] = _matrix_doc(structure.beta)
    return doc


def linear_map_to_dict(f: LinearMap) -> dict:
    return {"kind": "linear-map", "dim": f.dim, "convention": "column", "matrix": _matrix_doc(f)}


def serialize(obj, basis=None) -> str:
    if isinstance(obj, LinearMap):
        return _dump(linear_map_to_dict(obj))
    return _dump(algebra_to_dict(obj, basis))


serialize_algebra = serialize


# ---------------------------------------------------------------- parsing


def _rational(value, where) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise SchemaError(f"expected a rational string, got {type(value).__name__}", where)
    try:
        return Fraction(value.strip()) if isinstance(value, str) else Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"invalid rational {value!r}", where) from exc


def _index(value, dim, where) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError("expected an integer index", where)
    if not 0 <= value < dim:
        raise SchemaError(f"index {value} outside [0, {dim})", where)
    return value


def _fields(doc, required, optional, where=""):
    if not isinstance(doc, dict):
        raise SchemaError("expected an object", where or "document")
    missing = [k for k in required if k not in doc]
    if missing:
        raise SchemaError(f"missing field(s) {missing}", where or "document")
    extra = [k for k in doc if k not in required and k not in optional]
    if extra:
        raise SchemaError(f"unexpected field(s) {extra}", where or "document")


def _parse_matrix(doc, dim, where) -> LinearMap:
    if not isinstance(doc, list) or len(doc) != dim:
        raise SchemaError(f"expected {dim} rows", where)
    rows = []
    for r, row in enumerate(doc):
        if not isinstance(row, list) or len(row) != dim:
            raise SchemaError(f"expected {dim} entries", f"{where}[{r}]")
        rows.append([_rational(v, f"{where}[{r}][{c}]") for c, v in enumerate(row)])
    return LinearMap(tuple(tuple(r) for r in rows))


def _parse_table(doc, dim, arity, where) -> MultilinearMap:
    if not isinstance(doc, list):
        raise SchemaError("expected a list of entries", where)
    keys = _SLOT_KEYS[:arity]
    entries, seen = [], set()
    for n, row in enumerate(doc):
        loc = f"{where}[{n}]"
        _fields(row, keys + ("coeffs",), (), loc)
        inputs = tuple(_index(row[k], dim, f"{loc}.{k}") for k in keys)
        if inputs in seen:
            raise SchemaError(f"duplicate entry for {inputs}", loc)
        seen.add(inputs)
        coeffs = row["coeffs"]
        if not isinstance(coeffs, dict):
            raise SchemaError("coeffs must be an object", f"{loc}.coeffs")
        for key, value in coeffs.items():
            try:
                out = int(key)
            except ValueError as exc:
                raise SchemaError(f"output index {key!r} is not an integer", f"{loc}.coeffs") from exc
            _index(out, dim, f"{loc}.coeffs[{key!r}]")
            entries.append((inputs, out, _rational(value, f"{loc}.coeffs[{key!r}]")))
    return MultilinearMap(dim, arity, tuple(entries))


def parse(text: str):
    """Parse an algebra or linear-map document into a validated object."""
    if not text or not text.strip():
        raise DocumentSyntaxError("empty document", "line 1")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object", "document")
    kind = doc.get("kind")
    dim = doc.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise SchemaError("dim must be a positive integer", "dim")
    if kind == "linear-map":
        _fields(doc, ("kind", "dim", "convention", "matrix"), ())
        _convention(doc)
        _max_dim(dim)
        return _parse_matrix(doc["matrix"], dim, "matrix")
    if kind not in KINDS:
        raise SchemaError(f"unknown kind {kind!r}", "kind")
    _max_dim(dim)
    tables, has_maps = KINDS[kind]
    required = ("kind", "dim") + tuple(tables) + (("alpha", "beta", "convention") if has_maps else ())
    _fields(doc, required, ("basis",) if has_maps else ("basis", "convention"))
    if "basis" in doc:
        basis = doc["basis"]
        if not isinstance(basis, list) or len(basis) != dim or not all(isinstance(b, str) for b in basis):
            raise SchemaError(f"basis must be {dim} strings", "basis")
    if "convention" in doc:
        _convention(doc)
    parsed = {name: _parse_table(doc[name], dim, arity, name) for name, arity in tables.items()}
    if has_maps:
        parsed["alpha"] = _parse_matrix(doc["alpha"], dim, "alpha")
        parsed["beta"] = _parse_matrix(doc["beta"], dim, "beta")
    cls = {"bihom-algebra": BiHomAlgebra, "akivis-algebra": AkivisAlgebra, "bihom-akivis-algebra": BiHomAkivisAlgebra}[kind]
    try:
        return cls(**parsed)
    except InvariantError as exc:
        where = "alpha, beta" if isinstance(exc, NotCommuting) else ("triple" if "identity" in str(exc) else "bracket")
        raise type(exc)(str(exc), where) from None
    except DimensionMismatch as exc:
        raise SchemaError(str(exc), "dim") from None


def _max_dim(dim):
    if dim > MAX_DIM:
        raise SchemaError(f"dimension {dim} exceeds the supported maximum {MAX_DIM}", "dim")


def _convention(doc):
    if doc["convention"] != "column":
        raise SchemaError("only the 'column' convention is supported", "convention")


parse_algebra = parse


# ---------------------------------------------------------------- reports


def report_to_dict(report: CheckReport) -> dict:
    d = {"id": report.identity, "name": report.name, "verdict": report.verdict}
    if report.verdict == FAIL:
        d["witness"] = list(report.witness)
        d["residual"] = [format_rational(c) for c in report.residual.coords]
    if report.verdict == NA:
        d["reason"] = report.notes
    elif report.notes:
        d["notes"] = report.notes
    return d


def classification_to_dict(c: Classification) -> dict:
    return {
        "kind": c.kind,
        "dim": c.dim,
        "regular": c.regular,
        "multiplicative": c.multiplicative,
        "reports": [report_to_dict(r) for r in c.reports.values()],
        "flags": dict(c.flags),
    }


def serialize_report(reports) -> str:
    """JSON text for a Classification, a single CheckReport or a list of them."""
    if isinstance(reports, Classification):
        return _dump(classification_to_dict(reports))
    if isinstance(reports, CheckReport):
        reports = [reports]
    return _dump({"reports": [report_to_dict(r) for r in reports]})


def format_report_text(c: Classification) -> str:
    lines = [f"{c.kind}, dim {c.dim}, regular={c.regular}, multiplicative={c.multiplicative}"]
    for r in c.reports.values():
        line = f"{r.identity:<5} {r.name:<26} {r.verdict}"
        if r.verdict == FAIL:
            res = ", ".join(format_rational(v) for v in r.residual.coords)
            line += f"  witness={tuple(r.witness)} residual=[{res}]"
        if r.notes:
            line += f"  ({r.notes})"
        lines.append(line)
    flags = ", ".join(f"{k}={v}" for k, v in c.flags.items())
    lines.append(f"flags: {flags}")
    return "\n".join(lines) + "\n"


def audit_to_dict(outcomes: list[RuleOutcome]) -> dict:
    return {
        "violations": [{"rule": o.rule, "message": o.message} for o in outcomes if o.status == "violated"],
        "rules": [{"rule": o.rule, "status": o.status, **({"message": o.message} if o.message else {})}
                  for o in outcomes],
    }


def vector_to_list(v: Vector) -> list[str]:
    return [format_rational(c) for c in v.coords]
