"""Batched exact evaluation.

A :class:`Batch` is a block of ``B`` vectors stored as an integer numerator
array of shape ``(dim, B)`` over one positive common denominator.  Identity
checks evaluate their formulas on a batch holding every basis tuple at once,
so the hot work is two contractions: a dense matrix times a batch and a
sparse structure-constant tensor applied to ``k`` batches.

Those contractions run on int64 through the compiled ``_ckernels`` module when
it was built, otherwise through the numpy module ``_pykernels``.  Either one
signals possible overflow with OverflowError, and the work is redone on
Python integers, so results never depend on the backend.  Setting
``BIHOM_PURE_PYTHON=1`` forces the numpy backend.
"""
from __future__ import annotations

import math
import os
from fractions import Fraction
from functools import reduce

import numpy as np

from . import _pykernels
from .errors import DimensionMismatch
from .linear import INT64_SAFE, LinearMap, MultilinearMap, Vector

try:
    if os.environ.get("BIHOM_PURE_PYTHON"):
        raise ImportError("pure-Python backend requested")
    from . import _ckernels as _impl

    BACKEND = "cython"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"


def use_backend(name: str) -> None:
    """Switch kernels at runtime (benchmarks and backend-equivalence tests)."""
    global _impl, BACKEND
    if name == "cython":
        from . import _ckernels

        _impl = _ckernels
    elif name == "python":
        _impl = _pykernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name


def available_backends() -> list[str]:
    names = ["python"]
    try:
        from . import _ckernels  # noqa: F401

        names.insert(0, "cython")
    except ImportError:
        pass
    return names


def _maxabs(a) -> int:
    return int(np.abs(a).max()) if a.size else 0


def _shrink(num):
    """Return int64 storage when every numerator fits comfortably."""
    if num.dtype == object and _maxabs(num) < INT64_SAFE:
        return num.astype(np.int64)
    return num


def _as_object(a):
    return a if a.dtype == object else a.astype(object)


class Batch:
    """``num / den`` with ``num`` of shape (dim, B); canonical (reduced) form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den: int = 1):
        den = int(den)
        if den <= 0:
            raise ValueError("denominator must be positive")
        if den != 1:
            flat = num.ravel()
            g = math.gcd(den, int(np.gcd.reduce(flat))) if flat.size else den
            if g > 1:
                num = num // g
                den //= g
        self.num = _shrink(num)
        self.den = den

    @property
    def dim(self) -> int:
        return self.num.shape[0]

    @property
    def size(self) -> int:
        return self.num.shape[1]

    @classmethod
    def from_vectors(cls, vectors) -> Batch:
        vectors = list(vectors)
        den = reduce(math.lcm, (c.denominator for v in vectors for c in v.coords), 1)
        cols = [[c.numerator * (den // c.denominator) for c in v.coords] for v in vectors]
        num = np.array(cols, dtype=object).T.reshape(len(vectors[0]), len(vectors))
        return cls(num, den)

    def vectors(self) -> list[Vector]:
        return [self.column(b) for b in range(self.size)]

    def column(self, b: int) -> Vector:
        return Vector(tuple(Fraction(int(v), self.den) for v in self.num[:, b]))

    def is_zero(self) -> bool:
        return not self.num.any()

    def _combine(self, other: Batch, sign: int) -> Batch:
        if not isinstance(other, Batch):
            return NotImplemented
        if self.num.shape != other.num.shape:
            raise DimensionMismatch(f"batch shapes {self.num.shape} and {other.num.shape}")
        den = math.lcm(self.den, other.den)
        f1, f2 = den // self.den, den // other.den
        a, b = self.num, other.num
        if a.dtype == object or b.dtype == object or _maxabs(a) * f1 + _maxabs(b) * f2 >= INT64_SAFE:
            a, b = _as_object(a), _as_object(b)
        num = a * f1 + b * f2 if sign > 0 else a * f1 - b * f2
        return Batch(num, den)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return Batch(-self.num, self.den)

    def __mul__(self, scalar):
        s = Fraction(scalar)
        num = self.num
        if num.dtype == object or _maxabs(num) * abs(s.numerator) >= INT64_SAFE:
            num = _as_object(num)
        return Batch(num * s.numerator, self.den * s.denominator)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Batch(dim={self.dim}, size={self.size}, den={self.den})"


def basis_batches(dim: int, nslots: int) -> list[Batch]:
    """One batch per slot enumerating every basis tuple in lexicographic order.

    Column ``b`` of slot ``s`` is ``e_t`` where ``t`` is digit ``s`` of ``b``
    written in base ``dim`` with ``nslots`` digits (slot 0 most significant).
    """
    total = dim**nslots
    digits = np.indices((dim,) * nslots).reshape(nslots, total)
    eye = np.eye(dim, dtype=np.int64)
    return [Batch(eye[:, digits[s]]) for s in range(nslots)]


def apply_linear(f: LinearMap, x: Batch) -> Batch:
    if f.dim != x.dim:
        raise DimensionMismatch(f"map of dim {f.dim} applied to batch of dim {x.dim}")
    if f.is_identity:
        return x
    m, mden = f.scaled
    if m.dtype != object and x.num.dtype != object:
        try:
            return Batch(_impl.linear_apply(m, x.num), mden * x.den)
        except OverflowError:
            pass
    return Batch(_as_object(m).dot(_as_object(x.num)), mden * x.den)


def apply_multilinear(t: MultilinearMap, *xs: Batch) -> Batch:
    if len(xs) != t.arity:
        raise DimensionMismatch(f"expected {t.arity} arguments, got {len(xs)}")
    for x in xs:
        if x.dim != t.dim:
            raise DimensionMismatch(f"batch of dim {x.dim} for map of dim {t.dim}")
    idx, vals, tden = t.scaled
    den = tden
    for x in xs:
        den *= x.den
    if vals.dtype != object and all(x.num.dtype != object for x in xs):
        stack = np.stack([x.num for x in xs])
        try:
            return Batch(_impl.multilinear_apply(idx, vals, stack, t.dim), den)
        except OverflowError:
            pass
    stack = np.stack([_as_object(x.num) for x in xs])
    return Batch(_pykernels.contract(idx, _as_object(vals), stack, t.dim, dtype=object), den)


def materialize(dim: int, arity: int, fn) -> MultilinearMap:
    """Structure constants of the multilinear map ``fn`` (batches in, batch out)."""
    result = fn(*basis_batches(dim, arity))
    num = result.num.reshape((dim,) + (dim,) * arity)
    nz = np.argwhere(num)
    entries = []
    for pos in nz:
        out, inputs = int(pos[0]), tuple(int(i) for i in pos[1:])
        entries.append((inputs, out, Fraction(int(num[tuple(pos)]), result.den)))
    return MultilinearMap(dim, arity, tuple(entries))


def materialize_linear(dim: int, fn) -> LinearMap:
    result = fn(basis_batches(dim, 1)[0])
    return LinearMap(tuple(tuple(Fraction(int(v), result.den) for v in row) for row in result.num))
