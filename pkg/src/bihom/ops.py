"""Evaluation context shared by constructions and identity checks.

An :class:`Ops` binds a product, bracket and/or triple product together with
the two twisting maps.  Every method accepts either plain :class:`Vector`
arguments (evaluated with Fraction arithmetic, the oracle route) or
:class:`Batch` arguments (evaluated through the integer kernels, the route
used for basis enumeration).
"""
from __future__ import annotations

from .errors import NotRegular, SingularMap
from ._kernels import Batch, apply_linear, apply_multilinear
from .linear import LinearMap, MultilinearMap, Vector, ml_eval


def apply(m, *args):
    if isinstance(m, LinearMap):
        (x,) = args
        if isinstance(x, Batch):
            return apply_linear(m, x)
        return x if m.is_identity else m(x)
    if isinstance(args[0], Batch):
        return apply_multilinear(m, *args)
    return ml_eval(m, args)


def cyclic(x, y, z):
    return ((x, y, z), (y, z, x), (z, x, y))


class Ops:
    def __init__(
        self,
        dim: int,
        alpha: LinearMap,
        beta: LinearMap,
        mu: MultilinearMap | None = None,
        bracket: MultilinearMap | None = None,
        triple: MultilinearMap | None = None,
    ):
        self.dim = dim
        self.alpha = alpha
        self.beta = beta
        self.mu = mu
        self.bracket = bracket
        self.triple = triple
        self._maps: dict[tuple[int, int], LinearMap] = {}

    def untwisted(self) -> Ops:
        eye = LinearMap.identity(self.dim)
        return Ops(self.dim, eye, eye, self.mu, self.bracket, self.triple)

    def twist(self, p: int, q: int) -> LinearMap:
        """The map ``α^p β^q`` (the maps commute, so order is irrelevant)."""
        key = (p, q)
        if key not in self._maps:
            try:
                self._maps[key] = self.alpha.power(p) @ self.beta.power(q)
            except SingularMap as exc:
                raise NotRegular(f"α^{p}β^{q} needs an inverse that does not exist") from exc
        return self._maps[key]

    def tw(self, p: int, q: int, x):
        if p == 0 and q == 0:
            return x
        return apply(self.twist(p, q), x)

    def a(self, x):
        return self.tw(1, 0, x)

    def b(self, x):
        return self.tw(0, 1, x)

    def mul(self, x, y):
        return apply(self.mu, x, y)

    def br(self, x, y):
        return apply(self.bracket, x, y)

    def tri(self, x, y, z):
        return apply(self.triple, x, y, z)

    def ass(self, x, y, z):
        """μ(μ(x,y), β(z)) − μ(α(x), μ(y,z))."""
        return self.mul(self.mul(x, y), self.b(z)) - self.mul(self.a(x), self.mul(y, z))

    def comm(self, x, y):
        """μ(x,y) − μ(α⁻¹β(y), αβ⁻¹(x)); needs both maps invertible."""
        return self.mul(x, y) - self.mul(self.tw(-1, 1, y), self.tw(1, -1, x))

    def assoc_triple(self, x, y, z):
        """as(α⁻¹β²(x), β(y), α(z))."""
        return self.ass(self.tw(-1, 2, x), self.b(y), self.a(z))

    def jac(self, x, y, z):
        """Cyclic sum of [β²(x), [β(y), α(z)]] over the bound bracket."""
        total = None
        for u, v, w in cyclic(x, y, z):
            term = self.br(self.tw(0, 2, u), self.br(self.b(v), self.a(w)))
            total = term if total is None else total + term
        return total

    def cyc_triple(self, x, y, z):
        total = None
        for u, v, w in cyclic(x, y, z):
            term = self.tri(u, v, w)
            total = term if total is None else total + term
        return total

    def bk(self, w, x, y, z):
        """Bruck–Kleinfeld function of the bound product (needs β⁻¹)."""
        t = self.tw
        first = self.ass(self.mul(t(0, 2, w), t(1, 1, x)), t(2, 1, y), t(3, 0, z))
        second = self.mul(self.ass(t(0, 2, x), t(1, 1, y), t(2, 0, z)), t(3, 1, w))
        third = self.mul(t(2, 2, x), self.ass(t(1, 1, w), t(2, 0, y), t(3, -1, z)))
        return first - second - third


def zero_like(x):
    if isinstance(x, Batch):
        return Batch(x.num * 0)
    return Vector.zero(x.dim)
