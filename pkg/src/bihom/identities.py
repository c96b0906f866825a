"""Registry of identities and the exact decision procedure.

Each identity is one or more *parts*; a part is a formula that is linear in
each of its occurrence slots.  Slots labelled with the same variable are
polarized: the formula is summed over every way of assigning the slot
vectors to that variable's occurrences.  Over a field of characteristic 0
the polarized form vanishes on all basis tuples iff the identity holds for
all vectors, so a check is one batched evaluation over every basis tuple
followed by a sum of axis permutations.

Sign convention: the Jacobiator is J(x,y,z) = ⟳[β²(x), [β(y), α(z)]].  For
the BiHom-commutator / BiHom-associator algebra the Akivis relation then reads
J(x,y,z) + ⟳[x,y,z] − ⟳[y,x,z] = 0, and on alternative algebras
J(x,y,z) + 6[x,y,z] = 0.  Octonions with identity maps pin this down.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Callable

import numpy as np

from ._kernels import Batch, basis_batches
from .errors import DimensionMismatch, NotRegular, UnknownIdentity
from .linear import LinearMap, MultilinearMap, Vector
from .ops import Ops, apply, cyclic

PASS, FAIL, NA = "pass", "fail", "not-applicable"


@dataclass(frozen=True)
class Part:
    label: str
    occurrences: tuple[str, ...]
    evaluate: Callable


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    name: str
    requires: frozenset
    description: str
    parts: Callable[[Ops], list[Part]]

    def variables(self, ops: Ops) -> tuple[str, ...]:
        seen: list[str] = []
        for part in self.parts(ops):
            for v in part.occurrences:
                if v not in seen:
                    seen.append(v)
        return tuple(seen)


@dataclass
class CheckReport:
    identity: str
    name: str
    verdict: str
    witness: tuple[int, ...] | None = None
    residual: Vector | None = None
    notes: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == PASS


# ---------------------------------------------------------------- formulas


def _single(label, occ, fn):
    part = Part(label, tuple(occ), fn)
    return lambda ops: [part]


def _akivis_residual(o: Ops, x, y, z):
    return o.jac(x, y, z) + o.cyc_triple(x, y, z) - o.cyc_triple(y, x, z)


def _i1(o, x, y, z):
    return _akivis_residual(o.untwisted(), x, y, z)


def _i2(o, x, y, z):
    return o.ass(x, y, z)


def _i3(o, x, y, z):
    return o.ass(o.b(x), o.a(y), z) + o.ass(o.b(y), o.a(x), z)


def _i4(o, x, y, z):
    return o.ass(x, o.b(y), o.a(z)) + o.ass(x, o.b(z), o.a(y))


def _i5(o, x, y, z):
    return o.ass(o.tw(0, 2, x), o.tw(1, 1, y), o.tw(2, 0, z)) + o.ass(o.tw(0, 2, z), o.tw(1, 1, y), o.tw(2, 0, x))


def _i6(o, x, y):
    return o.br(o.b(x), o.a(y)) + o.br(o.b(y), o.a(x))


def _i7(o, x, y, z):
    return o.jac(x, y, z)


def _i8(o, x1, y, x2, z):
    lhs = o.jac(o.tw(1, 1, x1), o.tw(1, 1, y), o.br(o.b(x2), o.a(z)))
    rhs = o.br(o.jac(o.b(x1), o.b(y), o.b(z)), o.tw(2, 2, x2))
    return lhs - rhs


def _i10(o, x, y, z):
    return o.tri(o.a(x), o.a(y), o.a(z)) + o.tri(o.a(z), o.a(y), o.a(x))


def _i11(o, x, y, z):
    return o.tri(o.tw(2, 0, x), o.tw(2, 0, y), o.b(z)) + o.tri(o.tw(2, 0, y), o.tw(2, 0, x), o.b(z))


def _i12(o, x, y, z):
    return o.tri(o.a(x), o.tw(0, 2, y), o.tw(0, 2, z)) + o.tri(o.a(x), o.tw(0, 2, z), o.tw(0, 2, y))


def _composite(o, x, y, z):
    return o.ass(o.tw(0, 2, x), o.tw(1, 1, y), o.tw(2, 0, z))


def _bk(o, w, x, y, z):
    return o.bk(w, x, y, z)


def _i15(o, x1, y, x2, z):
    lhs = o.ass(o.tw(0, 3, x1), o.tw(1, 2, y), o.mul(o.tw(1, 1, x2), o.tw(2, 0, z)))
    rhs = o.mul(o.ass(o.tw(-1, 3, x1), o.tw(0, 2, y), o.tw(1, 1, z)), o.tw(2, 2, x2))
    return lhs - rhs


def _i16(o, x1, y, z, x2):
    lhs = o.ass(o.tw(0, 3, x1), o.tw(1, 2, y), o.mul(o.tw(1, 1, z), o.tw(2, 0, x2)))
    rhs = o.mul(o.tw(1, 3, x1), o.ass(o.tw(0, 2, x2), o.tw(1, 1, y), o.tw(2, 0, z)))
    return lhs - rhs


def _i17(o, x1, y, x2, z):
    lhs = o.ass(o.tw(0, 3, x1), o.tw(1, 2, y), o.comm(o.tw(1, 1, x2), o.tw(2, 0, z)))
    rhs = o.comm(o.ass(o.tw(-1, 3, x1), o.tw(0, 2, y), o.tw(1, 1, z)), o.tw(2, 2, x2))
    return lhs - rhs


def _i18(o, x, y, z):
    return o.jac(x, y, z) + 6 * o.tri(x, y, z)


def _i19(o, x, y, z):
    return o.cyc_triple(x, y, z)


def _short_left(o, x1, x2, z):
    return o.ass(o.b(x1), o.a(x2), z)


def _short_right(o, x, y1, y2):
    return o.ass(x, o.b(y1), o.a(y2))


def _short_flex(o, x1, y, x2):
    return o.ass(o.tw(0, 2, x1), o.tw(1, 1, y), o.tw(2, 0, x2))


def alternating_parts(evaluate, arity: int, label="alternating") -> list[Part]:
    """Vanishing whenever two adjacent arguments coincide, one part per pair.

    Polarizing a repeated adjacent pair gives antisymmetry under that
    transposition; adjacent transpositions generate all permutations, so the
    parts together decide alternation (in characteristic 0, a repeated basis
    index is covered because the polarized value there is twice the raw one).
    """
    names = [f"v{i}" for i in range(arity)]
    parts = []
    for i in range(arity - 1):
        occ = list(names)
        occ[i + 1] = names[i]
        parts.append(Part(f"{label}: slots {i},{i + 1}", tuple(occ), evaluate))
    return parts


def _mult_parts(ops: Ops) -> list[Part]:
    def endo(m, p, q, arity):
        def ev(o, *xs):
            return o.tw(p, q, apply(m, *xs)) - apply(m, *(o.tw(p, q, x) for x in xs))

        return ev

    names = ("x", "y", "z")
    targets = [("mu", ops.mu, 2)] if ops.mu is not None else [("bracket", ops.bracket, 2), ("triple", ops.triple, 3)]
    parts = []
    for tname, m, arity in targets:
        for mname, p, q in (("alpha", 1, 0), ("beta", 0, 1)):
            parts.append(Part(f"{mname}∘{tname} = {tname}∘{mname}^⊗{arity}", names[:arity], endo(m, p, q, arity)))
    return parts


def _spec(id, name, requires, description, parts):
    return IdentitySpec(id, name, frozenset(requires), description, parts)


XYZ = ("x", "y", "z")

REGISTRY: dict[str, IdentitySpec] = {
    s.id: s
    for s in [
        _spec("I1", "akivis", {"bracket", "triple"},
              "⟳[x,[y,z]] + ⟳[x,y,z] − ⟳[y,x,z] = 0 with the twisting maps ignored",
              _single("akivis", XYZ, _i1)),
        _spec("I2", "bihom-associative", {"mu"}, "as(x,y,z) = 0", _single("associator", XYZ, _i2)),
        _spec("I3", "left-bihom-alternative", {"mu"}, "as(β(x),α(y),z) + as(β(y),α(x),z) = 0",
              _single("left", XYZ, _i3)),
        _spec("I4", "right-bihom-alternative", {"mu"}, "as(x,β(y),α(z)) + as(x,β(z),α(y)) = 0",
              _single("right", XYZ, _i4)),
        _spec("I5", "bihom-flexible", {"mu"}, "as(β²x,αβy,α²z) + as(β²z,αβy,α²x) = 0",
              _single("flexible", XYZ, _i5)),
        _spec("I6", "bihom-skew-symmetry", {"bracket"}, "[β(x),α(y)] + [β(y),α(x)] = 0",
              _single("skew", ("x", "y"), _i6)),
        _spec("I7", "bihom-jacobi", {"bracket"}, "J(x,y,z) = 0", _single("jacobi", XYZ, _i7)),
        _spec("I8", "bihom-malcev", {"bracket"},
              "J(αβx, αβy, [βx, αz]) = [J(βx,βy,βz), α²β²x]", _single("malcev", ("x", "y", "x", "z"), _i8)),
        _spec("I9", "bihom-akivis", {"bracket", "triple"}, "J(x,y,z) + ⟳[x,y,z] − ⟳[y,x,z] = 0",
              _single("akivis", XYZ, _akivis_residual)),
        _spec("I10", "akivis-flexible", {"triple"}, "[αx,αy,αz] + [αz,αy,αx] = 0",
              _single("flexible", XYZ, _i10)),
        _spec("I11", "akivis-left-alternative", {"triple"}, "[α²x,α²y,βz] + [α²y,α²x,βz] = 0",
              _single("left", XYZ, _i11)),
        _spec("I12", "akivis-right-alternative", {"triple"}, "[αx,β²y,β²z] + [αx,β²z,β²y] = 0",
              _single("right", XYZ, _i12)),
        _spec("I13", "alternating-composite", {"mu"}, "as∘(β²⊗αβ⊗α²) is alternating",
              lambda ops: alternating_parts(_composite, 3)),
        _spec("I14", "bk-alternating", {"mu", "regular"}, "the Bruck–Kleinfeld function is alternating",
              lambda ops: alternating_parts(_bk, 4)),
        _spec("I15", "eq-f1", {"mu", "regular"},
              "as(β³x, αβ²y, αβ(x)α²(z)) = as(α⁻¹β³x, β²y, αβz)·α²β²x",
              _single("f1", ("x", "y", "x", "z"), _i15)),
        _spec("I16", "eq-f2", {"mu", "regular"},
              "as(β³x, αβ²y, αβ(z)α²(x)) = αβ³x·as(β²x, αβy, α²z)",
              _single("f2", ("x", "y", "z", "x"), _i16)),
        _spec("I17", "eq-f3", {"mu", "regular"},
              "as(β³x, αβ²y, [αβx, α²z]) = [as(α⁻¹β³x, β²y, αβz), α²β²x] with the BiHom-commutator",
              _single("f3", ("x", "y", "x", "z"), _i17)),
        _spec("I18", "six-associator", {"bracket", "triple"}, "J(x,y,z) + 6[x,y,z] = 0",
              _single("six", XYZ, _i18)),
        _spec("I19", "cyclic-triple-zero", {"triple"}, "⟳[x,y,z] = 0", _single("cyclic", XYZ, _i19)),
        _spec("I20", "multiplicativity", set(), "α and β are endomorphisms of every product", _mult_parts),
        _spec("I21a", "short-left-alt", {"mu"}, "as(βx, αx, z) = 0", _single("short-left", ("x", "x", "z"), _short_left)),
        _spec("I21b", "short-right-alt", {"mu"}, "as(x, βy, αy) = 0",
              _single("short-right", ("x", "y", "y"), _short_right)),
        _spec("I21c", "short-flexible", {"mu"}, "as(β²x, αβy, α²x) = 0",
              _single("short-flexible", ("x", "y", "x"), _short_flex)),
    ]
}

_BY_NAME = {s.name: s.id for s in REGISTRY.values()}


def get_identity(key: str) -> IdentitySpec:
    key = key.strip()
    if key in REGISTRY:
        return REGISTRY[key]
    if key in _BY_NAME:
        return REGISTRY[_BY_NAME[key]]
    raise UnknownIdentity(f"unknown identity {key!r}")


# ---------------------------------------------------------------- engine


def capabilities(structure) -> set[str]:
    ops = structure.ops()
    caps = {name for name in ("mu", "bracket", "triple") if getattr(ops, name) is not None}
    if structure.regular:
        caps.add("regular")
    if structure.multiplicative:
        caps.add("multiplicative")
    return caps


def _polarize(arr, occurrences):
    """Sum ``arr`` (axis 0 = output coordinate) over same-variable slot swaps."""
    groups = {}
    for pos, v in enumerate(occurrences):
        groups.setdefault(v, []).append(pos)
    groups = [g for g in groups.values() if len(g) > 1]
    if not groups:
        return arr
    k = len(occurrences)
    total = None
    for choice in product(*(permutations(g) for g in groups)):
        axes = list(range(k))
        for g, perm in zip(groups, choice):
            for src, dst in zip(g, perm):
                axes[src] = dst
        term = np.transpose(arr, [0] + [a + 1 for a in axes])
        total = term if total is None else total + term
    return total


def run_parts(parts: list[Part], ops: Ops, dim: int):
    """First failure over all parts as (part, witness, residual), or None."""
    cache = {}
    for part in parts:
        k = len(part.occurrences)
        key = (part.evaluate, k)
        if key not in cache:
            cache[key] = part.evaluate(ops, *basis_batches(dim, k))
        result = cache[key]
        arr = _polarize(result.num.reshape((dim,) + (dim,) * k), part.occurrences)
        flat = arr.reshape(dim, -1)
        cols = flat.any(axis=0).nonzero()[0]
        if len(cols):
            col = int(cols[0])
            witness = tuple(int(i) for i in np.unravel_index(col, (dim,) * k))
            residual = Vector(tuple(Fraction(int(v), result.den) for v in flat[:, col]))
            return part, witness, residual
    return None


def _report(spec_id, name, parts, ops, dim) -> CheckReport:
    failure = run_parts(parts, ops, dim)
    if failure is None:
        return CheckReport(spec_id, name, PASS)
    part, witness, residual = failure
    notes = part.label if len(parts) > 1 else ""
    return CheckReport(spec_id, name, FAIL, witness, residual, notes)


def check(structure, identity: str) -> CheckReport:
    spec = get_identity(identity)
    missing = sorted(spec.requires - capabilities(structure))
    if missing:
        return CheckReport(spec.id, spec.name, NA, notes="missing: " + ", ".join(missing))
    ops = structure.ops()
    try:
        return _report(spec.id, spec.name, spec.parts(ops), ops, structure.dim)
    except NotRegular as exc:
        return CheckReport(spec.id, spec.name, NA, notes=f"missing: regular ({exc})")


def check_alternating(m: MultilinearMap, maps=None) -> CheckReport:
    """Whether ``m∘(f_1⊗..⊗f_k)`` is alternating; ``maps`` may hold None for
    slots without a precomposed map."""
    if m.arity < 2:
        raise DimensionMismatch("alternation needs arity at least 2")
    maps = list(maps) if maps is not None else [None] * m.arity
    if len(maps) != m.arity:
        raise DimensionMismatch(f"{len(maps)} slot maps for arity {m.arity}")
    for f in maps:
        if f is not None and f.dim != m.dim:
            raise DimensionMismatch("slot map dimension differs from the tensor's")

    def composite(o, *xs):
        return apply(m, *(x if f is None else apply(f, x) for f, x in zip(maps, xs)))

    eye = LinearMap.identity(m.dim)
    return _report("alternating", "alternating", alternating_parts(composite, m.arity), Ops(m.dim, eye, eye), m.dim)


def residual(structure, identity: str, values) -> Vector:
    """Raw (unpolarized) residual at concrete vectors, with Fraction arithmetic.

    ``values`` maps variable names to vectors, or lists them in the order of
    :meth:`IdentitySpec.variables`.  Multi-part identities concatenate the
    residuals of their parts.
    """
    spec = get_identity(identity)
    ops = structure.ops()
    if not isinstance(values, dict):
        values = dict(zip(spec.variables(ops), values))
    coords: list[Fraction] = []
    for part in spec.parts(ops):
        out = part.evaluate(ops, *(values[v] for v in part.occurrences))
        coords.extend(out.coords)
    return Vector(tuple(coords))


def sample_failures(structure, identity: str, samples) -> list[int]:
    """Indices of samples (dicts variable -> Vector) with a nonzero raw
    residual, evaluated in one batch per part."""
    spec = get_identity(identity)
    ops = structure.ops()
    bad = np.zeros(len(samples), dtype=bool)
    for part in spec.parts(ops):
        args = [Batch.from_vectors([s[v] for s in samples]) for v in part.occurrences]
        bad |= part.evaluate(ops, *args).num.any(axis=0)
    return [int(i) for i in bad.nonzero()[0]]


# ---------------------------------------------------------------- classify

FLAG_IDS = {
    "bihom-associative": ("I2",),
    "left-bihom-alternative": ("I3",),
    "right-bihom-alternative": ("I4",),
    "bihom-alternative": ("I3", "I4"),
    "bihom-flexible": ("I5",),
    "bihom-lie": ("I6", "I7"),
    "bihom-malcev": ("I6", "I8"),
    "bihom-akivis": ("I9",),
    "akivis-flexible": ("I10",),
    "akivis-left-alt": ("I11",),
    "akivis-right-alt": ("I12",),
}


@dataclass
class Classification:
    kind: str
    dim: int
    regular: bool
    multiplicative: bool
    reports: dict[str, CheckReport]
    flags: dict[str, bool | None] = field(default_factory=dict)

    def verdict(self, identity: str) -> str | None:
        r = self.reports.get(identity)
        return None if r is None else r.verdict


def derive_flags(reports: dict[str, CheckReport]) -> dict[str, bool | None]:
    flags = {}
    for flag, ids in FLAG_IDS.items():
        verdicts = [reports[i].verdict if i in reports else NA for i in ids]
        if FAIL in verdicts:
            flags[flag] = False
        elif all(v == PASS for v in verdicts):
            flags[flag] = True
        else:
            flags[flag] = None
    return flags


def classify(structure, identities=None) -> Classification:
    ids = list(REGISTRY) if identities is None else [get_identity(i).id for i in identities]
    reports = {i: check(structure, i) for i in ids}
    return Classification(
        structure.kind, structure.dim, bool(structure.regular), bool(structure.multiplicative), reports,
        derive_flags(reports),
    )


# ---------------------------------------------------------------- morphisms


def check_morphism(f: LinearMap, source, target) -> CheckReport:
    """Whether ``f`` intertwines the maps and every product of two structures
    of the same kind (map conditions are skipped for plain Akivis algebras)."""
    if source.kind != target.kind:
        raise DimensionMismatch(f"cannot compare a {source.kind} with a {target.kind}")
    if not (f.dim == source.dim == target.dim):
        raise DimensionMismatch("morphism, source and target dimensions differ")
    so, to = source.ops(), target.ops()
    parts = []
    if source.kind != "akivis-algebra":
        parts.append(Part("f∘α = α̃∘f", ("x",), lambda o, x: apply(f, so.a(x)) - to.a(apply(f, x))))
        parts.append(Part("f∘β = β̃∘f", ("x",), lambda o, x: apply(f, so.b(x)) - to.b(apply(f, x))))
    if so.mu is not None:
        pairs = [("product", so.mu, to.mu)]
    else:
        pairs = [("bracket", so.bracket, to.bracket), ("triple", so.triple, to.triple)]
    for label, m, mt in pairs:
        def ev(o, *xs, m=m, mt=mt):
            return apply(f, apply(m, *xs)) - apply(mt, *(apply(f, x) for x in xs))

        parts.append(Part(f"f preserves the {label}", ("x", "y", "z")[: m.arity], ev))
    eye = LinearMap.identity(f.dim)
    return _report("morphism", "morphism", parts, Ops(f.dim, eye, eye), f.dim)


# ---------------------------------------------------------------- audit


@dataclass
class RuleOutcome:
    rule: str
    status: str  # confirmed | violated | vacuous
    message: str = ""


class _Verdicts:
    """Verdict lookup that prefers the supplied classification."""

    def __init__(self, structure, classification=None):
        self.structure = structure
        self.reports = dict(classification.reports) if classification is not None else {}

    def __call__(self, identity):
        if identity not in self.reports:
            self.reports[identity] = check(self.structure, identity)
        return self.reports[identity].verdict


def _implication(rule, premises, conclusions, label=""):
    """premises/conclusions: lists of (name, verdict); not-applicable never
    counts as pass, and only a failing conclusion is a contradiction."""
    if not all(v == PASS for _, v in premises):
        return RuleOutcome(rule, "vacuous", label)
    failed = [n for n, v in conclusions if v == FAIL]
    if failed:
        held = " ∧ ".join(n for n, _ in premises) or "hypotheses"
        return RuleOutcome(rule, "violated", f"{label}{held} hold but {', '.join(failed)} fail".strip())
    if any(v != PASS for _, v in conclusions):
        return RuleOutcome(rule, "vacuous", label + "conclusion not applicable")
    return RuleOutcome(rule, "confirmed", label)


def _equivalence(rule, left, right, label=""):
    lv = [v for _, v in left]
    rv = [v for _, v in right]
    if any(v not in (PASS, FAIL) for v in lv + rv):
        return RuleOutcome(rule, "vacuous", label)
    lhs, rhs = all(v == PASS for v in lv), all(v == PASS for v in rv)
    if lhs != rhs:
        names = lambda side: " ∧ ".join(n for n, _ in side)  # noqa: E731
        return RuleOutcome(rule, "violated", f"{label}{names(left)} is {lhs} but {names(right)} is {rhs}")
    return RuleOutcome(rule, "confirmed", label)


def _merge(rule, outcomes):
    for o in outcomes:
        if o.status == "violated":
            return RuleOutcome(rule, "violated", o.message)
    if any(o.status == "confirmed" for o in outcomes):
        return RuleOutcome(rule, "confirmed")
    return RuleOutcome(rule, "vacuous")


def _named(prefix, verdicts, ids):
    return [(f"{prefix}{i}", verdicts(i)) for i in ids]


def audit_rules(classification: Classification, structure) -> list[RuleOutcome]:
    """Evaluate every implication rule that applies to the structure's kind."""
    from .structures import _associated, commutator_algebra

    v = _Verdicts(structure, classification)
    reg = [("regular", PASS if structure.regular else FAIL)]
    out: list[RuleOutcome] = []
    if structure.kind == "bihom-algebra":
        out.append(_implication("R1", reg + _named("", v, ["I3", "I4"]), _named("", v, ["I5"])))
        out.append(_implication("R2", reg + _named("", v, ["I3", "I5"]), _named("", v, ["I4"])))
        out.append(_implication("R3", reg + _named("", v, ["I4", "I5"]), _named("", v, ["I3"])))
        out.append(_implication("R4", _named("", v, ["I2"]), _named("", v, ["I3", "I4", "I5"])))
        if structure.regular:
            out.append(_equivalence("R5", _named("", v, ["I3", "I4"]), _named("", v, ["I13"])))
        else:
            out.append(RuleOutcome("R5", "vacuous", "not regular"))
    if structure.kind in ("bihom-algebra", "bihom-akivis-algebra", "akivis-algebra"):
        out.append(_implication("R6", _named("", v, ["I6", "I7"]), _named("", v, ["I8"])))
    if structure.kind == "bihom-algebra":
        if structure.regular and structure.multiplicative:
            k = _Verdicts(_associated(structure))
            out.append(
                _merge("R7", [
                    _implication("R7", _named("", v, ["I5"]), _named("K.", k, ["I10"])),
                    _implication("R7", _named("", v, ["I3", "I4"]), _named("K.", k, ["I11", "I12"])),
                ])
            )
        else:
            k = None
            out.append(RuleOutcome("R7", "vacuous", "associated algebra needs a regular multiplicative input"))
    if structure.kind in ("bihom-akivis-algebra", "akivis-algebra"):
        if structure.regular and v("I9") == PASS and v("I10") == PASS:
            out.append(_equivalence("R8", _named("", v, ["I7"]), _named("", v, ["I19"])))
        else:
            out.append(RuleOutcome("R8", "vacuous"))
    if structure.kind == "bihom-algebra":
        premises = reg + _named("", v, ["I3", "I4"])
        if all(p == PASS for _, p in premises):
            c = _Verdicts(commutator_algebra(structure))
            conclusions = _named("", v, ["I14", "I15", "I16", "I17"]) + _named("[,].", c, ["I6", "I8"])
            if k is not None:
                conclusions += _named("K.", k, ["I18"])
            out.append(_implication("R9", premises, conclusions))
        else:
            out.append(RuleOutcome("R9", "vacuous"))
        if k is not None:
            out.append(_implication("R10", reg + [("multiplicative", PASS)], _named("K.", k, ["I9", "I6", "I20"])))
        else:
            out.append(RuleOutcome("R10", "vacuous"))
    return out


def audit(classification: Classification, structure) -> list[RuleOutcome]:
    """Rules contradicted by the classification; empty when consistent."""
    return [o for o in audit_rules(classification, structure) if o.status == "violated"]
