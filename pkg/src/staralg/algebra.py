"""Finite-dimensional algebras given by structural constants.

An algebra of dimension ``n`` over the rationals (``Field.REAL``) or the
Gaussian rationals (``Field.COMPLEX``) is fixed by a dense table
``c[i][j][k]`` with ``e_i * e_j = sum_k c[i][j][k] e_k``.  Elements are
plain tuples of coordinates relative to ``e_0, ..., e_{n-1}``.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .scalars import GaussianRational, as_gaussian, as_rational

Element = tuple


class Field(enum.Enum):
    REAL = "REAL"
    COMPLEX = "COMPLEX"

    def coerce(self, value):
        if self is Field.REAL:
            return as_rational(value)
        g = as_gaussian(value)
        return g

    @property
    def zero(self):
        return Fraction(0) if self is Field.REAL else GaussianRational(0)

    @property
    def one(self):
        return Fraction(1) if self is Field.REAL else GaussianRational(1)


class StructureConstants:
    """Dense multiplication table of an algebra.

    ``table`` is any nested ``n x n x n`` sequence of exact values; entries
    are converted to the field's canonical scalar type.
    """

    __slots__ = ("dim", "field", "c", "_scaled")

    def __init__(self, table, field: Field = Field.REAL):
        n = len(table)
        if n == 0:
            raise ValueError("algebra dimension must be positive")
        rows = []
        for i, plane in enumerate(table):
            if len(plane) != n or any(len(line) != n for line in plane):
                raise ValueError(f"structural constants must be {n}x{n}x{n} (bad slice {i})")
            rows.append(tuple(tuple(field.coerce(v) for v in line) for line in plane))
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "c", tuple(rows))
        object.__setattr__(self, "_scaled", _scaled_table(self.c, field))

    def __setattr__(self, name, value):
        raise AttributeError("StructureConstants is immutable")

    @classmethod
    def from_entries(cls, dim: int, entries, field: Field = Field.REAL):
        """Build from ``{(i, j, k): value}`` or an iterable of ``(i, j, k, value)``."""
        if dim <= 0:
            raise ValueError("algebra dimension must be positive")
        table = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
        items = entries.items() if hasattr(entries, "items") else (((i, j, k), v) for i, j, k, v in entries)
        for (i, j, k), v in items:
            for idx in (i, j, k):
                if not 0 <= idx < dim:
                    raise IndexError(f"index {idx} out of range for dim {dim}")
            table[i][j][k] = v
        return cls(table, field)

    def __eq__(self, other):
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return self.field is other.field and self.c == other.c

    def __hash__(self):
        return hash((self.field, self.c))

    def __repr__(self):
        return f"StructureConstants(dim={self.dim}, field={self.field.name})"

    def nonzero_entries(self):
        """Yield ``(i, j, k, value)`` for the nonzero constants in index order."""
        for i, j, k in itertools.product(range(self.dim), repeat=3):
            v = self.c[i][j][k]
            if v:
                yield i, j, k, v

    def basis(self, i: int) -> Element:
        zero, one = self.field.zero, self.field.one
        return tuple(one if t == i else zero for t in range(self.dim))

    def zero(self) -> Element:
        return (self.field.zero,) * self.dim

    def element(self, coords: Sequence) -> Element:
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return tuple(self.field.coerce(v) for v in coords)

    def product(self, i: int, j: int) -> Element:
        """Coordinates of ``e_i * e_j``."""
        return self.c[i][j]

    def multiply(self, x: Sequence, y: Sequence) -> Element:
        return multiply(self, x, y)


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of a structural check.

    ``witness`` holds the first failing basis indices (lexicographic order),
    ``lhs``/``rhs`` the two products that differ there.
    """

    holds: bool
    witness: Optional[tuple] = None
    lhs: Optional[Element] = None
    rhs: Optional[Element] = None

    def __post_init__(self):
        if self.holds == (self.witness is not None):
            raise ValueError("witness must be present exactly when the property fails")

    def __bool__(self):
        return self.holds


PASS = PropertyReport(True)


def _parts(v):
    if isinstance(v, GaussianRational):
        return v.re, v.im
    return v, 0


def _scaled_table(c, field: Field):
    """Nonzero constants as integers over one common denominator.

    Returns ``(den, [(i, j, [(k, re, im), ...]), ...])``; ``im`` is 0 for
    real algebras.
    """
    entries = [(i, j, k, *_parts(v)) for i, plane in enumerate(c)
               for j, line in enumerate(plane) for k, v in enumerate(line) if v]
    den = 1
    for *_, re_, im_ in entries:
        den = math.lcm(den, Fraction(re_).denominator, Fraction(im_).denominator)
    grouped = {}
    for i, j, k, re_, im_ in entries:
        grouped.setdefault((i, j), []).append(
            (k, int(re_ * den), int(im_ * den))
        )
    return den, [(i, j, tuple(terms)) for (i, j), terms in grouped.items()]


def _scaled_vector(x):
    parts = [_parts(v) for v in x]
    den = 1
    for re_, im_ in parts:
        den = math.lcm(den, Fraction(re_).denominator, Fraction(im_).denominator)
    return [int(re_ * den) for re_, _ in parts], [int(im_ * den) for _, im_ in parts], den


def multiply(A: StructureConstants, x: Sequence, y: Sequence) -> Element:
    """Bilinear product; exact, computed on integers over a common denominator."""
    n = A.dim
    if len(x) != n or len(y) != n:
        raise ValueError(f"operands must have length {n}")
    dc, table = A._scaled
    xr, xi, dx = _scaled_vector(x)
    yr, yi, dy = _scaled_vector(y)
    den = dc * dx * dy
    acc_r = [0] * n
    if A.field is Field.REAL:
        if any(xi) or any(yi):
            raise ValueError("complex coordinates in a real algebra")
        for i, j, terms in table:
            w = xr[i] * yr[j]
            if w:
                for k, cr, _ in terms:
                    acc_r[k] += w * cr
        return tuple(Fraction(a, den) for a in acc_r)
    acc_i = [0] * n
    for i, j, terms in table:
        wr = xr[i] * yr[j] - xi[i] * yi[j]
        wi = xr[i] * yi[j] + xi[i] * yr[j]
        if wr or wi:
            for k, cr, ci in terms:
                acc_r[k] += wr * cr - wi * ci
                acc_i[k] += wr * ci + wi * cr
    return tuple(GaussianRational(Fraction(a, den), Fraction(b, den)) for a, b in zip(acc_r, acc_i))


def add(x: Sequence, y: Sequence) -> Element:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def sub(x: Sequence, y: Sequence) -> Element:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def scale(a, x: Sequence) -> Element:
    return tuple(a * v for v in x)


def is_associative(A: StructureConstants) -> PropertyReport:
    for i, j, k in itertools.product(range(A.dim), repeat=3):
        left = multiply(A, A.product(i, j), A.basis(k))
        right = multiply(A, A.basis(i), A.product(j, k))
        if left != right:
            return PropertyReport(False, (i, j, k), left, right)
    return PASS


def is_commutative(A: StructureConstants) -> PropertyReport:
    for i, j in itertools.product(range(A.dim), repeat=2):
        if A.c[i][j] != A.c[j][i]:
            return PropertyReport(False, (i, j), A.c[i][j], A.c[j][i])
    return PASS


def find_unit(A: StructureConstants) -> Optional[Element]:
    """Two-sided unit, found by solving ``u e_j = e_j = e_j u`` exactly."""
    n = A.dim
    rows, rhs = [], []
    for j in range(n):
        for k in range(n):
            target = A.field.one if j == k else A.field.zero
            rows.append([A.c[i][j][k] for i in range(n)])
            rhs.append(target)
            rows.append([A.c[j][i][k] for i in range(n)])
            rhs.append(target)
    u = linalg.solve(rows, rhs)
    if u is None:
        return None
    return tuple(A.field.coerce(v) for v in u)
