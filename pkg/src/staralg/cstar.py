"""Normed algebras, involutions and the 2x2 complex matrix C*-algebra.

Everything except the norm computations is exact.  The 2x2 matrices are
laid out as ``vec(a) = (a11, a12, a21, a22)``, which is also the order of
the matrix-unit basis ``e11, e12, e21, e22``.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .algebra import Field, StructureConstants, multiply
from .conjugation import ConjugationSpec, is_dstar_linear
from .maps import Basis, MapMatrix, apply_map, cauchy_riemann_violation, to_real_basis
from .realification import realify


class NormKind(enum.Enum):
    COORDINATE_EUCLIDEAN = "COORDINATE_EUCLIDEAN"
    OPERATOR_2X2 = "OPERATOR_2X2"


@dataclass(frozen=True)
class NormedAlgebra:
    algebra: StructureConstants
    norm_kind: NormKind = NormKind.COORDINATE_EUCLIDEAN
    basis_norms: tuple = ()

    def __post_init__(self):
        norms = tuple(float(v) for v in self.basis_norms) or (1.0,) * self.algebra.dim
        if len(norms) != self.algebra.dim:
            raise ValueError("one norm per basis vector required")
        if any(not math.isfinite(v) or v <= 0 for v in norms):
            raise ValueError("basis norms must be positive and finite")
        object.__setattr__(self, "basis_norms", norms)

    def is_normal(self, tol: float = 1e-12) -> bool:
        return all(abs(v - 1.0) <= tol for v in self.basis_norms)


def normalize_basis(N: NormedAlgebra) -> NormedAlgebra:
    """Rescale to the basis ``e_i / |e_i|``.

    With ``g_i = e_i / n_i`` the new constants are ``c[i][j][k] * n_k / (n_i n_j)``.
    Norms are converted to fractions exactly, so integral or dyadic norms
    give exact constants.
    """
    A = N.algebra
    n = [Fraction(v) for v in N.basis_norms]
    table = [
        [[A.c[i][j][k] * n[k] / (n[i] * n[j]) for k in range(A.dim)] for j in range(A.dim)]
        for i in range(A.dim)
    ]
    return NormedAlgebra(StructureConstants(table, A.field), N.norm_kind, (1.0,) * A.dim)


@dataclass(frozen=True)
class InvolutionReport:
    antilinear_ok: bool
    antimultiplicative_ok: bool
    involutive_ok: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.antilinear_ok and self.antimultiplicative_ok and self.involutive_ok

    def __bool__(self):
        return self.holds


def check_involution(
    A: StructureConstants, M: MapMatrix, spec: Optional[ConjugationSpec] = None
) -> InvolutionReport:
    """Verify that ``M`` is an antilinear, antimultiplicative, involutive star.

    Complex algebras are checked on their realification: ``M`` may be a
    complex-basis matrix (with ``conjugate_input`` for antilinear action)
    or already a real ``2n x 2n`` matrix.  Real algebras need ``spec``;
    antilinearity then means ``x -> M(x*)`` is D*-linear.
    """
    witnesses = {}
    if A.field is Field.COMPLEX:
        R = realify(A).real
        star = to_real_basis(M)
        if star.shape != (R.dim, R.dim):
            raise ValueError(f"involution of shape {M.shape} does not fit dim {A.dim}")
        bad = cauchy_riemann_violation(star, antilinear=True)
        if bad is not None:
            witnesses["antilinear"] = bad
    else:
        if spec is None:
            raise ValueError("real algebras need a ConjugationSpec to define antilinearity")
        R, star = A, M
        if star.shape != (R.dim, R.dim):
            raise ValueError(f"involution of shape {M.shape} does not fit dim {A.dim}")
        lin = is_dstar_linear(spec, star @ spec.matrix)
        if not lin:
            witnesses["antilinear"] = lin.witness

    images = [apply_map(star, R.basis(i)) for i in range(R.dim)]
    for i, j in itertools.product(range(R.dim), repeat=2):
        if apply_map(star, R.product(i, j)) != multiply(R, images[j], images[i]):
            witnesses["antimultiplicative"] = (i, j)
            break
    for i in range(R.dim):
        if apply_map(star, images[i]) != R.basis(i):
            witnesses["involutive"] = (i,)
            break
    return InvolutionReport(
        "antilinear" not in witnesses,
        "antimultiplicative" not in witnesses,
        "involutive" not in witnesses,
        witnesses,
    )


def _unit_index(i: int, j: int) -> int:
    """Flat index of the matrix unit with a 1 at row i, column j (0-based)."""
    return 2 * i + j


def matrix2x2_algebra() -> StructureConstants:
    """Complex 2x2 matrices on matrix units: ``e_ij e_pq = [j == p] e_iq``."""
    entries = {}
    for i, j, q in itertools.product(range(2), repeat=3):
        entries[(_unit_index(i, j), _unit_index(j, q), _unit_index(i, q))] = 1
    return StructureConstants.from_entries(4, entries, Field.COMPLEX)


def vec2x2(a) -> tuple:
    (a11, a12), (a21, a22) = a
    return (a11, a12, a21, a22)


def unvec2x2(v: Sequence) -> tuple:
    if len(v) != 4:
        raise ValueError("vec of a 2x2 matrix has 4 entries")
    return ((v[0], v[1]), (v[2], v[3]))


_SWAP = [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]


def transpose_operator() -> MapMatrix:
    """``vec(a) -> vec(a^T)``; a C-linear permutation."""
    return MapMatrix(_SWAP, Basis.COMPLEX)


def conjugate_transpose_involution() -> MapMatrix:
    """``vec(a) -> vec(a^H)``: conjugate the entries, then transpose."""
    return MapMatrix(_SWAP, Basis.COMPLEX, conjugate_input=True)


def operator_norm_2x2(a) -> float:
    """Largest singular value from the closed form of the 2x2 SVD."""
    a = np.asarray(a, dtype=complex)
    frob = float(np.sum(np.abs(a) ** 2))
    d = abs(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])
    disc = max(frob * frob - 4.0 * d * d, 0.0)
    return math.sqrt((frob + math.sqrt(disc)) / 2.0)


def cstar_identity_check(a) -> tuple[float, float, float]:
    """``(|a* a|, |a|^2, relative gap)`` in the operator norm."""
    a = np.asarray(a, dtype=complex)
    if a.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    lhs = operator_norm_2x2(a.conj().T @ a)
    rhs = operator_norm_2x2(a) ** 2
    gap = abs(lhs - rhs) / max(rhs, np.finfo(float).tiny)
    return lhs, rhs, gap
