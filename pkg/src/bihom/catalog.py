"""Generators for the worked examples and the classical test algebras.

Indices are zero-based: a one-based basis e_1, e_2 is ``e_0, e_1`` here.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import BadParameter
from .linear import LinearMap, MultilinearMap, to_rational
from .structures import AkivisAlgebra, BiHomAlgebra, associated_akivis, akivis_to_bihom, yau_twist


def ex1_base() -> MultilinearMap:
    """2-d algebra with e0·e1 = e1·e1 = e0, all other products zero."""
    return MultilinearMap(2, 2, (((0, 1), 0, 1), ((1, 1), 0, 1)))


def _check_lambda(lam) -> Fraction:
    lam = to_rational(lam)
    if lam == -1:
        raise BadParameter("lambda = -1 is excluded (the twisting maps degenerate)")
    return lam


def alpha_lambda(lam) -> LinearMap:
    lam = _check_lambda(lam)
    return LinearMap.from_columns([(lam + 1, 0), (lam, 1)])


def beta_lambda(lam) -> LinearMap:
    lam = _check_lambda(lam)
    return LinearMap.from_columns([(1 / (lam + 1), 0), (-lam / (lam + 1), 1)])


def make_ex1(lam) -> BiHomAlgebra:
    """Non-BiHom-associative regular family, twisted by (α_λ, β_λ = α_λ⁻¹)."""
    lam = _check_lambda(lam)
    return yau_twist(ex1_base(), alpha_lambda(lam), beta_lambda(lam))


def make_akivis2d() -> AkivisAlgebra:
    """[e0,e1] = [e0,e1,e1] = [e1,e1,e1] = e0, with [e1,e0] = −e0 added by
    skew-symmetry."""
    bracket = MultilinearMap(2, 2, (((0, 1), 0, 1), ((1, 0), 0, -1)))
    triple = MultilinearMap(2, 3, (((0, 1, 1), 0, 1), ((1, 1, 1), 0, 1)))
    return AkivisAlgebra(bracket, triple)


def make_r_map(r) -> LinearMap:
    r = to_rational(r)
    return LinearMap.from_columns([(r + 1, 0), (r, 1)])


make_s_map = make_r_map


# quaternion units 1, i, j, k: (left, right) -> (sign, result)
_QUAT = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def _qmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            s, k = _QUAT[(i, j)]
            out[k] = out.get(k, 0) + s * x * y
    return out


def _qconj(a: dict) -> dict:
    return {i: (x if i == 0 else -x) for i, x in a.items()}


def _qsub(a: dict, b: dict) -> dict:
    out = dict(a)
    for i, y in b.items():
        out[i] = out.get(i, 0) - y
    return out


def _qadd(a: dict, b: dict) -> dict:
    return _qsub(a, {i: -y for i, y in b.items()})


def octonion_table() -> MultilinearMap:
    """Cayley–Dickson double of the quaternions, (a,b)(c,d) = (ac − d̄b, da + bc̄),
    on the basis 1, i, j, k, ℓ, iℓ, jℓ, kℓ."""
    entries = []
    for p in range(8):
        for q in range(8):
            a, b = ({p: 1}, {}) if p < 4 else ({}, {p - 4: 1})
            c, d = ({q: 1}, {}) if q < 4 else ({}, {q - 4: 1})
            first = _qsub(_qmul(a, c), _qmul(_qconj(d), b))
            second = _qadd(_qmul(d, a), _qmul(b, _qconj(c)))
            image = {i: v for i, v in first.items() if v}
            image.update({i + 4: v for i, v in second.items() if v})
            entries.extend(((p, q), o, v) for o, v in image.items())
    return MultilinearMap(8, 2, tuple(entries))


def make_octonions() -> BiHomAlgebra:
    eye = LinearMap.identity(8)
    return BiHomAlgebra(octonion_table(), eye, eye)


def make_octonion_involution() -> LinearMap:
    """(a, b) -> (a, −b): fixes e0..e3 and negates e4..e7."""
    return LinearMap.diagonal([1, 1, 1, 1, -1, -1, -1, -1])


def make_octonion_rotation() -> LinearMap:
    """Rotation by the 3-4-5 angle in the (i, j) plane of both quaternion halves;
    an automorphism of infinite order commuting with the involution."""
    cols = [[Fraction(int(r == c)) for r in range(8)] for c in range(8)]
    for off in (0, 4):
        a, b = 1 + off, 2 + off
        cols[a][a], cols[a][b] = Fraction(3, 5), Fraction(4, 5)
        cols[b][a], cols[b][b] = Fraction(-4, 5), Fraction(3, 5)
    return LinearMap.from_columns(cols)


def cross3_table() -> MultilinearMap:
    return MultilinearMap(3, 2, (
        ((0, 1), 2, 1), ((1, 0), 2, -1),
        ((1, 2), 0, 1), ((2, 1), 0, -1),
        ((2, 0), 1, 1), ((0, 2), 1, -1),
    ))


def make_cross3() -> BiHomAlgebra:
    eye = LinearMap.identity(3)
    return BiHomAlgebra(cross3_table(), eye, eye)


def make_rot_z() -> LinearMap:
    return LinearMap.from_columns([
        (Fraction(3, 5), Fraction(4, 5), 0),
        (Fraction(-4, 5), Fraction(3, 5), 0),
        (0, 0, 1),
    ])


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: dict  # name -> default value
    generator: Callable
    description: str

    def build(self, **params):
        unknown = set(params) - set(self.params)
        if unknown:
            raise BadParameter(f"{self.name} takes no parameter(s) {sorted(unknown)}")
        values = {k: to_rational(params.get(k, default)) for k, default in self.params.items()}
        return self.generator(**values)


def _rot_twist():
    rot = make_rot_z()
    return yau_twist(cross3_table(), rot, rot.transpose())


CATALOG: dict[str, CatalogEntry] = {
    e.name: e
    for e in [
        CatalogEntry("ex1", {"lambda": 1}, lambda **p: make_ex1(p["lambda"]),
                     "2-d non-BiHom-associative family twisted by (α_λ, β_λ), λ ≠ −1"),
        CatalogEntry("ex1-akivis", {"lambda": 1}, lambda **p: associated_akivis(make_ex1(p["lambda"])),
                     "associated BiHom-Akivis algebra of ex1"),
        CatalogEntry("akivis2d", {}, make_akivis2d, "2-d Akivis algebra [e0,e1] = [e0,e1,e1] = [e1,e1,e1] = e0"),
        CatalogEntry("akivis2d-twist", {"r": 1, "s": 2},
                     lambda r, s: akivis_to_bihom(make_akivis2d(), make_r_map(r), make_s_map(s)),
                     "akivis2d twisted by the commuting endomorphisms (α_r, β_s)"),
        CatalogEntry("octonions", {}, make_octonions, "octonions with identity maps"),
        CatalogEntry("octonions-hom", {}, lambda: yau_twist(octonion_table(), make_octonion_involution(),
                                                            make_octonion_involution()),
                     "octonions twisted by (φ, φ), φ the Cayley–Dickson involution"),
        CatalogEntry("octonions-bihom", {}, lambda: yau_twist(octonion_table(), make_octonion_involution(),
                                                              make_octonion_rotation()),
                     "octonions twisted by (φ, ρ), ρ a rational rotation automorphism"),
        CatalogEntry("cross3", {}, make_cross3, "cross product on 3-space, identity maps"),
        CatalogEntry("cross3-twist", {}, _rot_twist, "cross product twisted by (R, R⁻¹), R a rational rotation"),
        CatalogEntry("alpha-lambda", {"lambda": 1}, lambda **p: alpha_lambda(p["lambda"]), "map α_λ"),
        CatalogEntry("beta-lambda", {"lambda": 1}, lambda **p: beta_lambda(p["lambda"]), "map β_λ"),
        CatalogEntry("r-map", {"r": 1}, lambda r: make_r_map(r), "map α_r of akivis2d"),
        CatalogEntry("s-map", {"s": 2}, lambda s: make_s_map(s), "map β_s of akivis2d"),
        CatalogEntry("octonion-involution", {}, make_octonion_involution, "Cayley–Dickson involution φ"),
        CatalogEntry("octonion-rotation", {}, make_octonion_rotation, "rotation automorphism ρ of the octonions"),
        CatalogEntry("rot-z", {}, make_rot_z, "3-4-5 rotation about e2"),
    ]
}


def build(name: str, **params):
    if name not in CATALOG:
        raise BadParameter(f"unknown catalog entry {name!r}; known: {', '.join(sorted(CATALOG))}")
    return CATALOG[name].build(**params)
