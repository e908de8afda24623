"""Quaternions and their linear automorphisms."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .algebra import Element, Field, StructureConstants, multiply, sub
from .maps import MapMatrix, apply_map

# basis order 1, i, j, k
_HAMILTON = {
    (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
    (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
}


def quaternion_constants() -> StructureConstants:
    entries = {}
    for a in range(4):
        entries[(0, a, a)] = 1
        entries[(a, 0, a)] = 1
    for a in (1, 2, 3):
        entries[(a, a, 0)] = -1
    for (a, b), (sign, c) in _HAMILTON.items():
        entries[(a, b, c)] = sign
    return StructureConstants.from_entries(4, entries, Field.REAL)


H = quaternion_constants()


def qmul(x: Sequence, y: Sequence) -> Element:
    return multiply(H, x, y)


def qconj(x: Sequence) -> Element:
    return (x[0], -x[1], -x[2], -x[3])


def qnorm(x: Sequence) -> Fraction:
    """Squared Euclidean norm, ``x x*``."""
    return sum((Fraction(v) * v for v in x), Fraction(0))


def qinverse(x: Sequence) -> Element:
    n = qnorm(x)
    if n == 0:
        raise ZeroDivisionError("zero quaternion has no inverse")
    return tuple(v / n for v in qconj(x))


@dataclass(frozen=True)
class AutomorphismReport:
    is_automorphism: bool
    residual_witness: Optional[tuple] = None
    determinant_of_vector_block: Fraction = Fraction(0)
    reason: str = ""

    def __post_init__(self):
        if self.is_automorphism == (self.residual_witness is not None):
            raise ValueError("witness must be present exactly when the check fails")

    def __bool__(self):
        return self.is_automorphism


def verify_automorphism(M: MapMatrix) -> AutomorphismReport:
    """Invertible, fixes 1, and multiplicative on all 16 basis pairs.

    On failure ``residual_witness`` is ``((i, j), f(e_i e_j) - f(e_i) f(e_j))``;
    a singular map or one that moves 1 reports the pair ``(0, 0)``.
    """
    if M.shape != (4, 4):
        raise ValueError(f"quaternion maps are 4x4, got {M.shape}")
    e = M.entries
    det_block = linalg.det([row[1:] for row in e[1:]])
    one = H.basis(0)
    if linalg.det(e) == 0:
        return AutomorphismReport(False, ((0, 0), H.zero()), det_block, "singular")
    image_one = apply_map(M, one)
    if image_one != one:
        return AutomorphismReport(False, ((0, 0), sub(image_one, one)), det_block, "moves unit")
    images = [apply_map(M, H.basis(a)) for a in range(4)]
    for a, b in itertools.product(range(4), repeat=2):
        residual = sub(apply_map(M, H.product(a, b)), qmul(images[a], images[b]))
        if any(residual):
            return AutomorphismReport(False, ((a, b), residual), det_block, "not multiplicative")
    return AutomorphismReport(True, None, det_block)


def signed_perm_candidates():
    """All 48 maps fixing 1 whose vector block is a signed permutation."""
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1, -1), repeat=3):
            m = linalg.zeros(4, 4)
            m[0][0] = Fraction(1)
            for col, (row, s) in enumerate(zip(perm, signs)):
                m[row + 1][col + 1] = Fraction(s)
            yield MapMatrix(m)


def enumerate_signed_perm_automorphisms() -> list[MapMatrix]:
    return [m for m in signed_perm_candidates() if verify_automorphism(m)]


def inner_automorphism(q: Sequence) -> MapMatrix:
    """Matrix of ``x -> q x q^-1``."""
    q = H.element(q)
    if not any(q):
        raise ValueError("inner automorphism needs a nonzero quaternion")
    q_inv = qinverse(q)
    return MapMatrix.from_columns([qmul(qmul(q, H.basis(a)), q_inv) for a in range(4)])
