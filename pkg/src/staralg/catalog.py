"""Small algebras used by the demos and the test-suite."""
from __future__ import annotations

import itertools

from .algebra import Field, StructureConstants
from .cstar import matrix2x2_algebra
from .quaternion import quaternion_constants


def complex_as_real() -> StructureConstants:
    """C over R on the basis (1, i)."""
    return StructureConstants.from_entries(
        2, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): -1}, Field.REAL
    )


def complex_line() -> StructureConstants:
    """C as a one-dimensional complex algebra."""
    return StructureConstants.from_entries(1, {(0, 0, 0): 1}, Field.COMPLEX)


def complex_diagonal(n: int = 2) -> StructureConstants:
    """Direct sum of n copies of C: ``e_i e_i = e_i``, other products 0."""
    return StructureConstants.from_entries(n, {(i, i, i): 1 for i in range(n)}, Field.COMPLEX)


def cross_product() -> StructureConstants:
    """R^3 with the vector cross product."""
    entries = {}
    for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        entries[(a, b, c)] = 1
        entries[(b, a, c)] = -1
    return StructureConstants.from_entries(3, entries, Field.REAL)


def unit_with_idempotent() -> StructureConstants:
    """Span of 1 and an idempotent ``e_1 e_1 = e_1``."""
    return StructureConstants.from_entries(
        2, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 1): 1}, Field.REAL
    )


def matrix_units_real(n: int = 2) -> StructureConstants:
    """Real n x n matrices on matrix units, row-major."""
    entries = {}
    for i, j, q in itertools.product(range(n), repeat=3):
        entries[(n * i + j, n * j + q, n * i + q)] = 1
    return StructureConstants.from_entries(n * n, entries, Field.REAL)


DEMOS = {
    "complex": complex_as_real,
    "quaternion": quaternion_constants,
    "matrix2x2": matrix2x2_algebra,
}
