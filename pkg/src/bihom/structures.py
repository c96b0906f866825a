"""BiHom-algebras, Akivis and BiHom-Akivis algebras and the constructions
between them.

Every construction materializes its result as structure constants, so
results are serializable and can be fed to further constructions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from ._kernels import basis_batches, materialize
from .errors import (
    DimensionMismatch,
    InvariantError,
    NotCommuting,
    NotEndomorphism,
    NotMorphism,
    NotMultiplicative,
    NotRegular,
)
from .linear import MAX_DIM, LinearMap, MultilinearMap, lm_compose
from .ops import Ops, apply


def _first_nonzero(batch, dim, nslots):
    """Lexicographically first basis tuple where ``batch`` is nonzero."""
    cols = batch.num.any(axis=0).nonzero()[0]
    if len(cols) == 0:
        return None
    b = int(cols[0])
    digits = []
    for _ in range(nslots):
        b, r = divmod(b, dim)
        digits.append(r)
    return tuple(reversed(digits))


def _first_noncommuting(f: LinearMap, g: LinearMap):
    fg, gf = lm_compose(f, g), lm_compose(g, f)
    for r, c in product(range(f.dim), repeat=2):
        if fg.rows[r][c] != gf.rows[r][c]:
            return (r, c)
    return None


def _is_invertible(f: LinearMap) -> bool:
    return f.determinant() != 0


def _check_common(dim, maps, tensors):
    if not 1 <= dim <= MAX_DIM:
        raise DimensionMismatch(f"dimension {dim} outside [1, {MAX_DIM}]")
    for name, m in maps.items():
        if m.dim != dim:
            raise DimensionMismatch(f"{name} has dim {m.dim}, algebra has dim {dim}")
    for name, (t, arity) in tensors.items():
        if t.dim != dim or t.arity != arity:
            raise DimensionMismatch(f"{name} must be {arity}-linear on dimension {dim}")


def _endomorphism_witness(f: LinearMap, t: MultilinearMap):
    """First basis tuple where f∘t ≠ t∘f^{⊗k}, or None."""
    xs = basis_batches(t.dim, t.arity)
    ops = Ops(t.dim, f, f)
    lhs = ops.a(apply(t, *xs))
    rhs = apply(t, *(ops.a(x) for x in xs))
    return _first_nonzero(lhs - rhs, t.dim, t.arity)


@dataclass(frozen=True)
class BiHomAlgebra:
    """(A, μ, α, β) with αβ = βα, checked at construction."""

    mu: MultilinearMap
    alpha: LinearMap
    beta: LinearMap
    kind = "bihom-algebra"

    def __post_init__(self):
        _check_common(self.mu.dim, {"alpha": self.alpha, "beta": self.beta}, {"mu": (self.mu, 2)})
        w = _first_noncommuting(self.alpha, self.beta)
        if w is not None:
            raise NotCommuting(f"alpha and beta do not commute (entry {w} of αβ − βα is nonzero)")

    @property
    def dim(self) -> int:
        return self.mu.dim

    @cached_property
    def regular(self) -> bool:
        return _is_invertible(self.alpha) and _is_invertible(self.beta)

    @cached_property
    def multiplicative(self) -> bool:
        return _endomorphism_witness(self.alpha, self.mu) is None and _endomorphism_witness(self.beta, self.mu) is None

    def ops(self) -> Ops:
        # the product doubles as the bracket for bracket-only identities
        return Ops(self.dim, self.alpha, self.beta, mu=self.mu, bracket=self.mu)


@dataclass(frozen=True)
class AkivisAlgebra:
    """(A, {-,-}, {-,-,-}); skew-symmetry and the Akivis identity are enforced."""

    bracket: MultilinearMap
    triple: MultilinearMap
    kind = "akivis-algebra"

    def __post_init__(self):
        _check_common(self.bracket.dim, {}, {"bracket": (self.bracket, 2), "triple": (self.triple, 3)})
        if self.triple.dim != self.bracket.dim:
            raise DimensionMismatch("bracket and triple differ in dimension")
        for i, j in product(range(self.dim), repeat=2):
            if self.bracket.image(i, j) != -self.bracket.image(j, i):
                raise InvariantError(f"bracket is not skew-symmetric at (e_{i}, e_{j})")
        from .identities import check

        report = check(self, "I1")
        if report.verdict != "pass":
            raise InvariantError(f"Akivis identity fails at basis triple {report.witness}")

    @property
    def dim(self) -> int:
        return self.bracket.dim

    @property
    def alpha(self) -> LinearMap:
        return LinearMap.identity(self.dim)

    beta = alpha
    regular = True
    multiplicative = True

    def ops(self) -> Ops:
        eye = LinearMap.identity(self.dim)
        return Ops(self.dim, eye, eye, bracket=self.bracket, triple=self.triple)


@dataclass(frozen=True)
class BiHomAkivisAlgebra:
    """(V, [-,-], [-,-,-], α, β) with commuting maps and BiHom-skew-symmetry.

    The defining identity itself is left to the identity engine so that
    candidate structures can be built and then tested.
    """

    bracket: MultilinearMap
    triple: MultilinearMap
    alpha: LinearMap
    beta: LinearMap
    kind = "bihom-akivis-algebra"

    def __post_init__(self):
        _check_common(
            self.bracket.dim,
            {"alpha": self.alpha, "beta": self.beta},
            {"bracket": (self.bracket, 2), "triple": (self.triple, 3)},
        )
        w = _first_noncommuting(self.alpha, self.beta)
        if w is not None:
            raise NotCommuting(f"alpha and beta do not commute (entry {w} of αβ − βα is nonzero)")
        ops = self.ops()
        x, y = basis_batches(self.dim, 2)
        skew = ops.br(ops.b(x), ops.a(y)) + ops.br(ops.b(y), ops.a(x))
        w = _first_nonzero(skew, self.dim, 2)
        if w is not None:
            raise InvariantError(f"bracket is not BiHom-skew-symmetric at basis pair {w}")

    @property
    def dim(self) -> int:
        return self.bracket.dim

    @cached_property
    def regular(self) -> bool:
        return _is_invertible(self.alpha) and _is_invertible(self.beta)

    @cached_property
    def multiplicative(self) -> bool:
        return all(
            _endomorphism_witness(f, t) is None for f in (self.alpha, self.beta) for t in (self.bracket, self.triple)
        )

    def ops(self) -> Ops:
        return Ops(self.dim, self.alpha, self.beta, bracket=self.bracket, triple=self.triple)


@dataclass
class ValidationReport:
    commuting: bool
    regular: bool
    multiplicative: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.commuting and self.regular and self.multiplicative


def validate_bihom(mu, alpha: LinearMap | None = None, beta: LinearMap | None = None) -> ValidationReport:
    """Flags of a candidate (μ, α, β); accepts a BiHomAlgebra or raw pieces.

    Failing flags carry a witness: the first non-commuting matrix entry, the
    singular map's name, or the first basis pair violating multiplicativity.
    """
    if isinstance(mu, BiHomAlgebra):
        mu, alpha, beta = mu.mu, mu.alpha, mu.beta
    _check_common(mu.dim, {"alpha": alpha, "beta": beta}, {"mu": (mu, 2)})
    witnesses = {}
    w = _first_noncommuting(alpha, beta)
    if w is not None:
        witnesses["commuting"] = w
    singular = [name for name, f in (("alpha", alpha), ("beta", beta)) if not _is_invertible(f)]
    if singular:
        witnesses["regular"] = tuple(singular)
    for name, f in (("alpha", alpha), ("beta", beta)):
        w = _endomorphism_witness(f, mu)
        if w is not None:
            witnesses["multiplicative"] = (name, w)
            break
    return ValidationReport(
        commuting="commuting" not in witnesses,
        regular="regular" not in witnesses,
        multiplicative="multiplicative" not in witnesses,
        witnesses=witnesses,
    )


def yau_twist(mu: MultilinearMap, alpha: LinearMap, beta: LinearMap) -> BiHomAlgebra:
    """(A, μ∘(α⊗β), α, β)."""
    if isinstance(mu, BiHomAlgebra):
        mu = mu.mu
    _check_common(mu.dim, {"alpha": alpha, "beta": beta}, {"mu": (mu, 2)})
    ops = Ops(mu.dim, alpha, beta, mu=mu)
    twisted = materialize(mu.dim, 2, lambda x, y: ops.mul(ops.a(x), ops.b(y)))
    return BiHomAlgebra(twisted, alpha, beta)


def bihom_associator(A: BiHomAlgebra) -> MultilinearMap:
    ops = A.ops()
    return materialize(A.dim, 3, ops.ass)


def _require_regular(A):
    if not A.regular:
        raise NotRegular("the twisting maps must be bijective")


def bihom_commutator(A: BiHomAlgebra) -> MultilinearMap:
    """[x,y] = μ(x,y) − μ(α⁻¹β(y), αβ⁻¹(x))."""
    _require_regular(A)
    return materialize(A.dim, 2, A.ops().comm)


def commutator_algebra(A: BiHomAlgebra) -> BiHomAlgebra:
    """(A, [-,-], α, β) with the BiHom-commutator as product."""
    return BiHomAlgebra(bihom_commutator(A), A.alpha, A.beta)


def _associated(A: BiHomAlgebra) -> BiHomAkivisAlgebra:
    ops = A.ops()
    bracket = materialize(A.dim, 2, ops.comm)
    triple = materialize(A.dim, 3, ops.assoc_triple)
    return BiHomAkivisAlgebra(bracket, triple, A.alpha, A.beta)


def associated_akivis(A: BiHomAlgebra) -> BiHomAkivisAlgebra:
    """BiHom-commutator / BiHom-associator algebra of a multiplicative regular A."""
    _require_regular(A)
    if not A.multiplicative:
        raise NotMultiplicative("alpha and beta must be endomorphisms of the product")
    return _associated(A)


def _morphism_failure(f: LinearMap, K) -> str | None:
    from .identities import check_morphism

    report = check_morphism(f, K, K)
    if report.verdict == "pass":
        return None
    return f"{report.notes} at {report.witness}"


def akivis_to_bihom(K: AkivisAlgebra, alpha: LinearMap, beta: LinearMap) -> BiHomAkivisAlgebra:
    """([α(x), β(y)], αβ²∘[x,y,z], α, β) from an Akivis algebra and two
    commuting endomorphisms."""
    for name, f in (("alpha", alpha), ("beta", beta)):
        why = _morphism_failure(f, K)
        if why is not None:
            raise NotEndomorphism(f"{name} is not an endomorphism of the Akivis algebra: {why}")
    w = _first_noncommuting(alpha, beta)
    if w is not None:
        raise NotCommuting(f"alpha and beta do not commute (entry {w})")
    ops = Ops(K.dim, alpha, beta, bracket=K.bracket, triple=K.triple)
    bracket = materialize(K.dim, 2, lambda x, y: ops.br(ops.a(x), ops.b(y)))
    triple = materialize(K.dim, 3, lambda x, y, z: ops.tw(1, 2, ops.tri(x, y, z)))
    return BiHomAkivisAlgebra(bracket, triple, alpha, beta)


def twist_bihom_akivis(K: BiHomAkivisAlgebra, phi: LinearMap, psi: LinearMap) -> BiHomAkivisAlgebra:
    """([φ(x), ψ(y)], φψ²∘[x,y,z], φα, ψβ).

    φ and ψ must be self-morphisms of K that commute with each other and with
    both twisting maps of K.
    """
    for name, f in (("phi", phi), ("psi", psi)):
        why = _morphism_failure(f, K)
        if why is not None:
            raise NotMorphism(f"{name} is not a self-morphism: {why}")
    for (n1, f), (n2, g) in (
        (("phi", phi), ("psi", psi)),
        (("phi", phi), ("alpha", K.alpha)),
        (("phi", phi), ("beta", K.beta)),
        (("psi", psi), ("alpha", K.alpha)),
        (("psi", psi), ("beta", K.beta)),
    ):
        w = _first_noncommuting(f, g)
        if w is not None:
            raise NotCommuting(f"{n1} and {n2} do not commute (entry {w})")
    ops = Ops(K.dim, phi, psi, bracket=K.bracket, triple=K.triple)
    bracket = materialize(K.dim, 2, lambda x, y: ops.br(ops.a(x), ops.b(y)))
    triple = materialize(K.dim, 3, lambda x, y, z: ops.tw(1, 2, ops.tri(x, y, z)))
    return BiHomAkivisAlgebra(bracket, triple, lm_compose(phi, K.alpha), lm_compose(psi, K.beta))


def bihom_jacobiator(bracket: MultilinearMap, alpha: LinearMap, beta: LinearMap) -> MultilinearMap:
    """Cyclic sum of [β²(x), [β(y), α(z)]]."""
    _check_common(bracket.dim, {"alpha": alpha, "beta": beta}, {"bracket": (bracket, 2)})
    ops = Ops(bracket.dim, alpha, beta, bracket=bracket)
    return materialize(bracket.dim, 3, ops.jac)


def bruck_kleinfeld(A: BiHomAlgebra) -> MultilinearMap:
    _require_regular(A)
    return materialize(A.dim, 4, A.ops().bk)
