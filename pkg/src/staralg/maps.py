"""Additive maps as exact matrices.

A :class:`MapMatrix` acts on coordinate tuples.  Relative to a real basis
of a realified complex space it is classified with the Cauchy-Riemann block
conditions; relative to a complex basis it may carry ``conjugate_input`` so
that it acts as ``y = M conj(x)`` (an antilinear map).
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .algebra import Element, Field, PropertyReport, PASS, StructureConstants, multiply
from .scalars import GaussianRational, as_gaussian, as_rational, conj_scalar


class Basis(enum.Enum):
    REAL = "REAL_BASIS"
    COMPLEX = "COMPLEX_BASIS"


class MapMatrix:
    """Immutable exact matrix of an additive map."""

    __slots__ = ("entries", "basis", "conjugate_input")

    def __init__(self, entries, basis: Basis = Basis.REAL, conjugate_input: bool = False):
        coerce = as_rational if basis is Basis.REAL else as_gaussian
        rows = tuple(tuple(coerce(v) for v in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("map matrix must be non-empty")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged map matrix")
        if conjugate_input and basis is Basis.REAL:
            raise ValueError("conjugate_input only makes sense relative to a complex basis")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "conjugate_input", bool(conjugate_input))

    def __setattr__(self, name, value):
        raise AttributeError("MapMatrix is immutable")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @classmethod
    def identity(cls, n: int, basis: Basis = Basis.REAL):
        return cls(linalg.identity(n), basis)

    @classmethod
    def zero(cls, rows: int, cols: int, basis: Basis = Basis.REAL):
        return cls(linalg.zeros(rows, cols), basis)

    @classmethod
    def diagonal(cls, values, basis: Basis = Basis.REAL):
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], basis)

    @classmethod
    def from_columns(cls, columns, basis: Basis = Basis.REAL):
        return cls([list(r) for r in zip(*columns)], basis)

    def column(self, j: int) -> Element:
        return tuple(row[j] for row in self.entries)

    def _like(self, entries, conjugate_input=None):
        flag = self.conjugate_input if conjugate_input is None else conjugate_input
        return MapMatrix(entries, self.basis, flag)

    def _check_same(self, other):
        if not isinstance(other, MapMatrix):
            return False
        if self.shape != other.shape or self.basis is not other.basis:
            raise ValueError("incompatible map matrices")
        return True

    def __add__(self, other):
        if not self._check_same(other):
            return NotImplemented
        return self._like([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not self._check_same(other):
            return NotImplemented
        return self._like([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __neg__(self):
        return self._like([[-a for a in r] for r in self.entries])

    def __mul__(self, scalar):
        if isinstance(scalar, MapMatrix):
            return NotImplemented
        return self._like([[scalar * a for a in r] for r in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other):
        """Plain matrix product (composition ``self`` after ``other``).

        Conjugation flags are not composed; use :func:`compose` for that.
        """
        if not isinstance(other, MapMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot compose {self.shape} with {other.shape}")
        return MapMatrix(linalg.matmul(self.entries, other.entries), self.basis)

    def __eq__(self, other):
        if not isinstance(other, MapMatrix):
            return NotImplemented
        return (
            self.entries == other.entries
            and self.basis is other.basis
            and self.conjugate_input == other.conjugate_input
        )

    def __hash__(self):
        return hash((self.entries, self.basis, self.conjugate_input))

    def __repr__(self):
        flag = ", conjugate_input=True" if self.conjugate_input else ""
        return f"MapMatrix({[[str(v) for v in r] for r in self.entries]}, {self.basis.name}{flag})"


def compose(f: MapMatrix, g: MapMatrix) -> MapMatrix:
    """Matrix of ``f o g`` honouring antilinear semantics on a complex basis."""
    if f.basis is not g.basis:
        raise ValueError("cannot compose maps relative to different kinds of basis")
    if f.cols != g.rows:
        raise ValueError(f"cannot compose {f.shape} with {g.shape}")
    # f(g(x)) = F conj^a (G conj^b x) = F conj^a(G) conj^(a+b) x
    g_entries = g.entries
    if f.conjugate_input:
        g_entries = [[conj_scalar(v) for v in row] for row in g_entries]
    return MapMatrix(
        linalg.matmul(f.entries, g_entries),
        f.basis,
        f.conjugate_input != g.conjugate_input,
    )


def apply_map(M: MapMatrix, x: Sequence) -> Element:
    if len(x) != M.cols:
        raise ValueError(f"map expects {M.cols} coordinates, got {len(x)}")
    if M.conjugate_input:
        x = [conj_scalar(v) for v in x]
    return tuple(linalg.matvec(M.entries, x))


def complex_structure(n: int) -> MapMatrix:
    """Multiplication by ``i`` on ``n`` fibers: blocks ``[[0, -1], [1, 0]]``."""
    m = linalg.zeros(2 * n, 2 * n)
    for f in range(n):
        m[2 * f][2 * f + 1] = Fraction(-1)
        m[2 * f + 1][2 * f] = Fraction(1)
    return MapMatrix(m)


def fiber_conjugation(n: int) -> MapMatrix:
    """Coordinatewise complex conjugation on ``n`` fibers: ``diag(1, -1, ...)``."""
    return MapMatrix.diagonal([(-1) ** s for _ in range(n) for s in (0, 1)])


def to_real_basis(M: MapMatrix) -> MapMatrix:
    """Real ``2m x 2n`` matrix of a complex-basis map (linear or antilinear)."""
    if M.basis is Basis.REAL:
        return M
    m = linalg.zeros(2 * M.rows, 2 * M.cols)
    for r, row in enumerate(M.entries):
        for c, z in enumerate(row):
            a, b = z.re, z.im
            if M.conjugate_input:
                block = ((a, b), (b, -a))
            else:
                block = ((a, -b), (b, a))
            for s in (0, 1):
                for t in (0, 1):
                    m[2 * r + s][2 * c + t] = block[s][t]
    return MapMatrix(m)


def _real_even(M: MapMatrix) -> MapMatrix:
    M = to_real_basis(M)
    if M.rows % 2 or M.cols % 2:
        raise ValueError(f"Cauchy-Riemann blocks need even dimensions, got {M.shape}")
    return M


def _blocks(M: MapMatrix):
    e = M.entries
    for r in range(M.rows // 2):
        for c in range(M.cols // 2):
            yield r, c, (e[2 * r][2 * c], e[2 * r][2 * c + 1], e[2 * r + 1][2 * c], e[2 * r + 1][2 * c + 1])


def cauchy_riemann_violation(M: MapMatrix, antilinear: bool = False) -> Optional[tuple[int, int]]:
    """First fiber block ``(row, col)`` breaking the (anti)linear pattern, or None."""
    M = _real_even(M)
    for r, c, (a, b, c_, d) in _blocks(M):
        ok = (a == -d and b == c_) if antilinear else (a == d and b == -c_)
        if not ok:
            return r, c
    return None


def is_c_linear(M: MapMatrix) -> bool:
    """Every 2x2 fiber block has the form ``[[a, -b], [b, a]]``."""
    return cauchy_riemann_violation(M) is None


def is_antilinear(M: MapMatrix) -> bool:
    """Every 2x2 fiber block has the form ``[[a, b], [b, -a]]``."""
    return cauchy_riemann_violation(M, antilinear=True) is None


def decompose_additive(M: MapMatrix) -> tuple[MapMatrix, MapMatrix]:
    """Unique split ``M = L + A`` into C-linear ``L`` and antilinear ``A``."""
    M = _real_even(M)
    twisted = complex_structure(M.rows // 2) @ M @ complex_structure(M.cols // 2)
    half = Fraction(1, 2)
    return (M - twisted) * half, (M + twisted) * half


class MapKind(enum.Enum):
    C_LINEAR = "C_LINEAR"
    ANTILINEAR = "ANTILINEAR"
    NEITHER = "NEITHER"


@dataclass(frozen=True)
class Classification:
    tag: MapKind
    complex_form: Optional[MapMatrix] = None

    def __post_init__(self):
        if (self.complex_form is None) != (self.tag is MapKind.NEITHER):
            raise ValueError("complex_form must be present exactly for (anti)linear maps")


def complex_form(M: MapMatrix) -> Classification:
    """Read the complex-basis matrix off the fiber blocks.

    The zero map is reported as C-linear.  For antilinear maps the returned
    matrix carries ``conjugate_input`` so that it acts as ``y = F conj(x)``.
    """
    M = _real_even(M)
    if is_c_linear(M):
        kind, flag = MapKind.C_LINEAR, False
    elif is_antilinear(M):
        kind, flag = MapKind.ANTILINEAR, True
    else:
        return Classification(MapKind.NEITHER)
    grid = [[None] * (M.cols // 2) for _ in range(M.rows // 2)]
    for r, c, (a, _, b, _) in _blocks(M):
        grid[r][c] = GaussianRational(a, b)
    return Classification(kind, MapMatrix(grid, Basis.COMPLEX, flag))


def _check_map_fits(M: MapMatrix, A1: StructureConstants, A2: StructureConstants):
    if A1.field is not A2.field:
        raise ValueError("algebras are over different fields")
    if M.cols != A1.dim or M.rows != A2.dim:
        raise ValueError(f"map of shape {M.shape} does not go from dim {A1.dim} to dim {A2.dim}")
    expected = Basis.REAL if A1.field is Field.REAL else Basis.COMPLEX
    if M.basis is not expected:
        raise ValueError(f"map must be relative to a {expected.value} for {A1.field.name} algebras")


def _scan_pairs(f, A1: StructureConstants, A2: StructureConstants, reverse: bool = False) -> PropertyReport:
    images = [f(A1.basis(i)) for i in range(A1.dim)]
    for i, j in itertools.product(range(A1.dim), repeat=2):
        lhs = f(A1.product(i, j))
        rhs = multiply(A2, images[j], images[i]) if reverse else multiply(A2, images[i], images[j])
        if lhs != rhs:
            return PropertyReport(False, (i, j), lhs, rhs)
    return PASS


def is_homomorphism(M: MapMatrix, A1: StructureConstants, A2: StructureConstants) -> PropertyReport:
    """``f(e_i e_j) = f(e_i) f(e_j)`` on every basis pair.

    By bilinearity of both products this is equivalent to multiplicativity
    on all elements.
    """
    _check_map_fits(M, A1, A2)
    return _scan_pairs(lambda x: apply_map(M, x), A1, A2)


def structure_relation_holds(M: MapMatrix, A1: StructureConstants, A2: StructureConstants) -> bool:
    """Homomorphism condition written on the constants directly.

    ``sum_k M[l][k] C1[i][j][k] == sum_{p,q} M[p][i] M[q][j] C2[p][q][l]``
    for all ``i, j, l``; an independent route to :func:`is_homomorphism`
    for linear maps.
    """
    _check_map_fits(M, A1, A2)
    if M.conjugate_input:
        raise ValueError("the constant relation is stated for linear maps")
    r = M.entries
    n1, n2 = A1.dim, A2.dim
    for i, j, l in itertools.product(range(n1), range(n1), range(n2)):
        left = sum((r[l][k] * A1.c[i][j][k] for k in range(n1)), Fraction(0))
        right = sum(
            (r[p][i] * r[q][j] * A2.c[p][q][l] for p in range(n2) for q in range(n2)),
            Fraction(0),
        )
        if left != right:
            return False
    return True


@dataclass(frozen=True)
class AntilinearHomReport:
    """Both orientations of the antilinear multiplicativity check.

    ``forward``: ``g(ab) = g(a) g(b)``; ``reversed``: ``g(ab) = g(b) g(a)``.
    """

    forward: PropertyReport
    reversed: PropertyReport

    @property
    def holds(self) -> bool:
        return self.forward.holds

    def __bool__(self):
        return self.holds


def _star_map(M: MapMatrix, A1: StructureConstants, spec):
    """The antilinear action ``x -> M x*`` used by the antilinear checks."""
    if A1.field is Field.COMPLEX:
        entries = M.entries
        return lambda x: tuple(linalg.matvec(entries, [conj_scalar(v) for v in x]))
    if spec is None:
        raise ValueError("a conjugation spec is required for antilinear maps of real algebras")
    if spec.algebra != A1:
        raise ValueError("conjugation spec belongs to a different algebra")
    composite = M @ spec.matrix
    return lambda x: apply_map(composite, x)


def is_antilinear_homomorphism(
    M: MapMatrix, A1: StructureConstants, A2: StructureConstants, spec=None
) -> AntilinearHomReport:
    """Check ``g(x) = M x*`` against products in both orders.

    Over the complex field ``x*`` conjugates each coordinate and any
    ``conjugate_input`` flag on ``M`` is ignored.  For real algebras ``spec``
    (a :class:`~staralg.conjugation.ConjugationSpec` of ``A1``) supplies the
    ring conjugation.
    """
    _check_map_fits(M, A1, A2)
    if M.conjugate_input:
        M = MapMatrix(M.entries, M.basis)
    g = _star_map(M, A1, spec)
    return AntilinearHomReport(_scan_pairs(g, A1, A2), _scan_pairs(g, A1, A2, reverse=True))


def precompose_conjugation(M: MapMatrix, conj) -> MapMatrix:
    """Matrix of ``x -> M(x*)``.

    ``conj`` is a ConjugationSpec or the conjugation matrix itself (for a
    realified complex algebra use :func:`fiber_conjugation`).
    """
    matrix = conj if isinstance(conj, MapMatrix) else conj.matrix
    if matrix.rows != M.cols:
        raise ValueError(f"conjugation of dim {matrix.rows} does not fit map with {M.cols} columns")
    return M @ matrix
