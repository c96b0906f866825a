"""Exact rational vectors, linear maps and multilinear structure-constant tensors.

Scalars are :class:`fractions.Fraction`, which keeps every value in lowest
terms with a positive denominator.  Linear maps use the column convention:
entry ``(r, c)`` is the coefficient of ``e_r`` in the image of ``e_c``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from itertools import product
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DimensionMismatch, SingularMap

Rational = Fraction

MAX_DIM = 16
# numerators at or above this bound are kept as Python ints (object arrays)
INT64_SAFE = 2**62


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: they would silently import rounding error.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _scale_to_ints(values: Sequence[Fraction]):
    """Common-denominator form: returns (numerators as Python ints, den)."""
    den = reduce(math.lcm, (v.denominator for v in values), 1)
    return [v.numerator * (den // v.denominator) for v in values], den


def int_array(values, shape):
    """int64 array when every entry is small enough, object array otherwise."""
    arr = np.array(values, dtype=object).reshape(shape)
    if arr.size == 0 or max(abs(v) for v in values) < INT64_SAFE:
        return arr.astype(np.int64)
    return arr


@dataclass(frozen=True)
class Vector:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(to_rational(c) for c in self.coords))

    @classmethod
    def zero(cls, dim: int) -> Vector:
        return cls((Fraction(0),) * dim)

    @classmethod
    def basis(cls, dim: int, i: int) -> Vector:
        if not 0 <= i < dim:
            raise DimensionMismatch(f"basis index {i} outside [0, {dim})")
        return cls(tuple(Fraction(int(k == i)) for k in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionMismatch(f"vector dims {self.dim} and {other.dim}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Vector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Vector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Vector(tuple(-a for a in self.coords))

    def __mul__(self, scalar):
        s = to_rational(scalar)
        return Vector(tuple(s * a for a in self.coords))

    __rmul__ = __mul__

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __repr__(self):
        return "Vector([" + ", ".join(format_rational(c) for c in self.coords) + "])"


@dataclass(frozen=True)
class LinearMap:
    """Square rational matrix acting on column vectors."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(to_rational(v) for v in row) for row in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("linear map must be a non-empty square matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, dim: int) -> LinearMap:
        return cls(tuple(tuple(Fraction(int(r == c)) for c in range(dim)) for r in range(dim)))

    @classmethod
    def from_columns(cls, columns) -> LinearMap:
        columns = [list(c) for c in columns]
        return cls(tuple(zip(*columns)))

    @classmethod
    def diagonal(cls, values) -> LinearMap:
        values = list(values)
        n = len(values)
        return cls(tuple(tuple(values[r] if r == c else 0 for c in range(n)) for r in range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def column(self, c: int) -> Vector:
        return Vector(tuple(row[c] for row in self.rows))

    @cached_property
    def is_identity(self) -> bool:
        return self == LinearMap.identity(self.dim)

    def __call__(self, v: Vector) -> Vector:
        if v.dim != self.dim:
            raise DimensionMismatch(f"map of dim {self.dim} applied to vector of dim {v.dim}")
        return Vector(tuple(sum((a * x for a, x in zip(row, v.coords)), Fraction(0)) for row in self.rows))

    def __matmul__(self, other: LinearMap) -> LinearMap:
        return lm_compose(self, other)

    def __add__(self, other: LinearMap) -> LinearMap:
        return LinearMap(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: LinearMap) -> LinearMap:
        return LinearMap(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __mul__(self, scalar) -> LinearMap:
        s = to_rational(scalar)
        return LinearMap(tuple(tuple(s * a for a in row) for row in self.rows))

    __rmul__ = __mul__

    def transpose(self) -> LinearMap:
        return LinearMap(tuple(zip(*self.rows)))

    def power(self, k: int) -> LinearMap:
        """``self**k``; negative powers go through the exact inverse."""
        base = self if k >= 0 else lm_invert(self)
        result = LinearMap.identity(self.dim)
        for _ in range(abs(k)):
            result = base @ result
        return result

    def determinant(self) -> Fraction:
        return _gauss_jordan(self)[0]

    @cached_property
    def scaled(self):
        """(integer numerator matrix, common denominator) for the kernels."""
        flat = [v for row in self.rows for v in row]
        nums, den = _scale_to_ints(flat)
        return int_array(nums, (self.dim, self.dim)), den

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(v) for v in row) for row in self.rows)
        return f"LinearMap([{body}])"


def lm_compose(f: LinearMap, g: LinearMap) -> LinearMap:
    """``f∘g``: apply ``g`` first, then ``f``."""
    if f.dim != g.dim:
        raise DimensionMismatch(f"cannot compose maps of dims {f.dim} and {g.dim}")
    cols = list(zip(*g.rows))
    return LinearMap(
        tuple(tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols) for row in f.rows)
    )


def _gauss_jordan(f: LinearMap):
    """Returns (determinant, inverse rows or None)."""
    n = f.dim
    a = [list(row) + [Fraction(int(r == c)) for c in range(n)] for r, row in enumerate(f.rows)]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0), None
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det *= p
        a[col] = [v / p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return det, tuple(tuple(row[n:]) for row in a)


def lm_invert(f: LinearMap) -> LinearMap:
    det, inv = _gauss_jordan(f)
    if inv is None:
        raise SingularMap(f"map is singular (determinant 0): {f!r}")
    return LinearMap(inv)


def lm_commute(f: LinearMap, g: LinearMap) -> bool:
    if f.dim != g.dim:
        raise DimensionMismatch(f"maps of dims {f.dim} and {g.dim}")
    return lm_compose(f, g) == lm_compose(g, f)


@dataclass(frozen=True)
class MultilinearMap:
    """Sparse structure constants of a k-linear map ``V^k -> V``.

    ``entries`` holds ``(inputs, out, value)`` triples, sorted, nonzero, with at
    most one triple per ``(inputs, out)``; anything absent is zero.
    """

    dim: int
    arity: int
    entries: tuple[tuple[tuple[int, ...], int, Fraction], ...] = ()

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionMismatch("dimension must be positive")
        if self.arity < 1:
            raise DimensionMismatch("arity must be positive")
        seen = {}
        for inputs, out, value in self.entries:
            inputs = tuple(int(i) for i in inputs)
            out = int(out)
            if len(inputs) != self.arity:
                raise DimensionMismatch(f"entry {inputs} does not have arity {self.arity}")
            if not all(0 <= i < self.dim for i in inputs + (out,)):
                raise DimensionMismatch(f"entry index out of range in {inputs} -> {out}")
            if (inputs, out) in seen:
                raise ValueError(f"duplicate structure constant for {inputs} -> {out}")
            value = to_rational(value)
            if value:
                seen[(inputs, out)] = value
        object.__setattr__(self, "entries", tuple((k[0], k[1], v) for k, v in sorted(seen.items())))

    @classmethod
    def zero(cls, dim: int, arity: int) -> MultilinearMap:
        return cls(dim, arity, ())

    @classmethod
    def from_table(cls, dim: int, arity: int, table: Mapping) -> MultilinearMap:
        """Build from ``{inputs: {out: value}}`` or ``{inputs: Vector}``."""
        entries = []
        for inputs, image in table.items():
            if isinstance(image, Vector):
                image = dict(enumerate(image.coords))
            for out, value in image.items():
                entries.append((tuple(inputs), out, value))
        return cls(dim, arity, tuple(entries))

    @cached_property
    def table(self) -> dict:
        t: dict = {}
        for inputs, out, value in self.entries:
            t.setdefault(inputs, {})[out] = value
        return t

    def image(self, *indices: int) -> Vector:
        coords = [Fraction(0)] * self.dim
        for out, value in self.table.get(tuple(indices), {}).items():
            coords[out] = value
        return Vector(tuple(coords))

    def is_zero(self) -> bool:
        return not self.entries

    def __call__(self, *args: Vector) -> Vector:
        return ml_eval(self, args)

    def __add__(self, other: MultilinearMap) -> MultilinearMap:
        return self._combine(other, 1)

    def __sub__(self, other: MultilinearMap) -> MultilinearMap:
        return self._combine(other, -1)

    def _combine(self, other, sign):
        if (other.dim, other.arity) != (self.dim, self.arity):
            raise DimensionMismatch("multilinear maps differ in dimension or arity")
        acc = {(i, o): v for i, o, v in self.entries}
        for i, o, v in other.entries:
            acc[(i, o)] = acc.get((i, o), Fraction(0)) + sign * v
        return MultilinearMap(self.dim, self.arity, tuple((k[0], k[1], v) for k, v in acc.items()))

    def __mul__(self, scalar) -> MultilinearMap:
        s = to_rational(scalar)
        return MultilinearMap(self.dim, self.arity, tuple((i, o, s * v) for i, o, v in self.entries))

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    @cached_property
    def scaled(self):
        """(index array ``[out, i_1..i_k]`` sorted by out, integer values, den)."""
        order = sorted(self.entries, key=lambda e: (e[1], e[0]))
        idx = np.array([(o,) + i for i, o, _ in order], dtype=np.int64).reshape(len(order), self.arity + 1)
        nums, den = _scale_to_ints([v for _, _, v in order])
        return idx, int_array(nums, (len(order),)), den

    def __repr__(self):
        parts = [f"{i}->{o}:{format_rational(v)}" for i, o, v in self.entries]
        return f"MultilinearMap(dim={self.dim}, arity={self.arity}, [{', '.join(parts)}])"


def ml_eval(m: MultilinearMap, args: Iterable[Vector]) -> Vector:
    """Evaluate ``m`` on vectors by expanding each argument in the basis."""
    args = tuple(args)
    if len(args) != m.arity:
        raise DimensionMismatch(f"expected {m.arity} arguments, got {len(args)}")
    for a in args:
        if a.dim != m.dim:
            raise DimensionMismatch(f"argument of dim {a.dim} for map of dim {m.dim}")
    out = [Fraction(0)] * m.dim
    supports = [[(i, c) for i, c in enumerate(a.coords) if c] for a in args]
    table = m.table
    for combo in product(*supports):
        image = table.get(tuple(i for i, _ in combo))
        if not image:
            continue
        coeff = Fraction(1)
        for _, c in combo:
            coeff *= c
        for o, v in image.items():
            out[o] += coeff * v
    return Vector(tuple(out))
