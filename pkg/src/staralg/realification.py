"""View a complex algebra of dimension n as a real algebra of dimension 2n.

The real basis is fiber indexed: ``f(i, 0) = e_i`` and ``f(i, 1) = i*e_i``,
flattened fiber-major to index ``2*i + s``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Element, Field, StructureConstants
from .scalars import GaussianRational


def flat_index(fiber: int, slot: int) -> int:
    if slot not in (0, 1):
        raise ValueError("slot must be 0 or 1")
    return 2 * fiber + slot


def fiber_slot(index: int) -> tuple[int, int]:
    return divmod(index, 2)


@dataclass(frozen=True)
class RealifiedConstants:
    source_dim: int
    real: StructureConstants

    def __post_init__(self):
        if self.real.dim != 2 * self.source_dim or self.real.field is not Field.REAL:
            raise ValueError("realified algebra must be real of twice the source dimension")

    @property
    def index_map(self) -> dict[tuple[int, int], int]:
        return {(i, s): flat_index(i, s) for i in range(self.source_dim) for s in (0, 1)}


def _require_complex(B: StructureConstants):
    if B.field is not Field.COMPLEX:
        raise ValueError("expected structural constants over the complex field")


def split_constants(B: StructureConstants):
    """Real and imaginary parts ``(p, q)`` of the complex constants."""
    _require_complex(B)
    p = tuple(tuple(tuple(v.re for v in line) for line in plane) for plane in B.c)
    q = tuple(tuple(tuple(v.im for v in line) for line in plane) for plane in B.c)
    return p, q


def realify(B: StructureConstants) -> RealifiedConstants:
    _require_complex(B)
    n = B.dim
    p, q = split_constants(B)
    table = [[[Fraction(0)] * (2 * n) for _ in range(2 * n)] for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                pk, qk = p[i][j][k], q[i][j][k]
                if not (pk or qk):
                    continue
                r0, r1 = 2 * k, 2 * k + 1
                # e_i e_j = sum (p + q i) e_k
                table[2 * i][2 * j][r0] = pk
                table[2 * i][2 * j][r1] = qk
                # i commutes with everything, so one factor of i multiplies by i
                for a, b in ((2 * i, 2 * j + 1), (2 * i + 1, 2 * j)):
                    table[a][b][r0] = -qk
                    table[a][b][r1] = pk
                table[2 * i + 1][2 * j + 1][r0] = -pk
                table[2 * i + 1][2 * j + 1][r1] = -qk
    return RealifiedConstants(n, StructureConstants(table, Field.REAL))


def embed_coords(R: RealifiedConstants | int, x: Sequence) -> Element:
    """Real coordinates ``(re x^0, im x^0, re x^1, ...)`` of a complex element."""
    n = R.source_dim if isinstance(R, RealifiedConstants) else R
    if len(x) != n:
        raise ValueError(f"expected {n} complex coordinates, got {len(x)}")
    out = []
    for v in x:
        g = v if isinstance(v, GaussianRational) else GaussianRational(v)
        out.extend((g.re, g.im))
    return tuple(out)


def extract_coords(y: Sequence) -> Element:
    """Inverse of :func:`embed_coords`."""
    if len(y) % 2:
        raise ValueError("real coordinate vector must have even length")
    return tuple(GaussianRational(y[2 * i], y[2 * i + 1]) for i in range(len(y) // 2))
