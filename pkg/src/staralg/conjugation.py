"""Rings with conjugation.

The basis must start with the unit, ``e_0 = 1``.  The scalar part of ``x``
is ``x^0 e_0``, the vector part is the rest, and conjugation is
``x* = scalar - vector``, i.e. the matrix ``diag(1, -1, ..., -1)``.
"""
from __future__ import annotations

import itertools
from typing import Sequence

from .algebra import (
    Element,
    Field,
    PASS,
    PropertyReport,
    StructureConstants,
    find_unit,
    multiply,
    sub,
)
from .maps import MapMatrix, apply_map


class ConjugationSpec:
    """Scalar/vector split of a real algebra whose basis begins with 1."""

    __slots__ = ("algebra", "matrix")

    def __init__(self, algebra: StructureConstants):
        if algebra.field is not Field.REAL:
            raise ValueError("conjugation specs are defined for real algebras")
        if find_unit(algebra) != algebra.basis(0):
            raise ValueError("basis vector e_0 must be the unit of the algebra")
        self.algebra = algebra
        self.matrix = MapMatrix.diagonal([1] + [-1] * (algebra.dim - 1))

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def __repr__(self):
        return f"ConjugationSpec({self.algebra!r})"


def _check_len(spec: ConjugationSpec, x: Sequence):
    if len(x) != spec.dim:
        raise ValueError(f"expected {spec.dim} coordinates, got {len(x)}")


def split_element(spec: ConjugationSpec, x: Sequence) -> tuple[Element, Element]:
    _check_len(spec, x)
    x = spec.algebra.element(x)
    scalar = (x[0],) + spec.algebra.zero()[1:]
    return scalar, sub(x, scalar)


def conjugate(spec: ConjugationSpec, x: Sequence) -> Element:
    _check_len(spec, x)
    return apply_map(spec.matrix, x)


def check_conjugation(spec: ConjugationSpec) -> PropertyReport:
    """Antiautomorphism law ``(e_i e_j)* = e_j* e_i*`` on basis pairs."""
    A = spec.algebra
    for i, j in itertools.product(range(A.dim), repeat=2):
        lhs = conjugate(spec, A.product(i, j))
        rhs = multiply(A, conjugate(spec, A.basis(j)), conjugate(spec, A.basis(i)))
        if lhs != rhs:
            return PropertyReport(False, (i, j), lhs, rhs)
    return PASS


def right_mul_map(spec: ConjugationSpec, b: Sequence) -> MapMatrix:
    """Matrix of ``x -> x b``."""
    A = spec.algebra
    b = A.element(b)
    return MapMatrix.from_columns([multiply(A, A.basis(i), b) for i in range(A.dim)])


def antilinear_right_mul_map(spec: ConjugationSpec, b: Sequence) -> MapMatrix:
    """Matrix of ``x -> x* b``."""
    return right_mul_map(spec, b) @ spec.matrix


def is_dstar_linear(spec: ConjugationSpec, M: MapMatrix) -> PropertyReport:
    """``f(d x) = d f(x)`` for all basis ``d, x``; witness is ``(d, x)``."""
    A = spec.algebra
    images = [apply_map(M, A.basis(x)) for x in range(A.dim)]
    for d, x in itertools.product(range(A.dim), repeat=2):
        lhs = apply_map(M, A.product(d, x))
        rhs = multiply(A, A.basis(d), images[x])
        if lhs != rhs:
            return PropertyReport(False, (d, x), lhs, rhs)
    return PASS


def is_dstar_antilinear(spec: ConjugationSpec, M: MapMatrix) -> PropertyReport:
    """``f(x d) = d* f(x)`` for all basis ``x, d``; witness is ``(x, d)``."""
    A = spec.algebra
    images = [apply_map(M, A.basis(x)) for x in range(A.dim)]
    for x, d in itertools.product(range(A.dim), repeat=2):
        lhs = apply_map(M, A.product(x, d))
        rhs = multiply(A, conjugate(spec, A.basis(d)), images[x])
        if lhs != rhs:
            return PropertyReport(False, (x, d), lhs, rhs)
    return PASS
