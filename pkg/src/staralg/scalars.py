"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals.

Real structural constants and coordinates are stored as ``Fraction``.
Complex ones are stored as :class:`GaussianRational`, a pair of fractions
``re + im*i``.  Both are immutable and compare structurally.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

__all__ = [
    "Fraction",
    "GaussianRational",
    "I",
    "Scalar",
    "as_rational",
    "as_gaussian",
    "conj_scalar",
    "is_zero",
    "parse_scalar",
    "format_scalar",
]


def as_rational(value) -> Fraction:
    """Coerce ints, fractions and exact-looking strings to ``Fraction``.

    Floats are refused: silently accepting them would smuggle binary
    rounding into exact computations.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, GaussianRational):
        if value.im:
            raise ValueError(f"{value} is not real")
        return value.re
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


class GaussianRational:
    """Complex number ``re + im*i`` with rational parts."""

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        self._re = as_rational(re)
        self._im = as_rational(im)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    def __setattr__(self, name, value):
        if hasattr(self, "_im"):
            raise AttributeError("GaussianRational is immutable")
        object.__setattr__(self, name, value)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, bool):
            return None
        if isinstance(other, (int, Rational)):
            return GaussianRational(other)
        return None

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self._re, -self._im)

    def norm(self) -> Fraction:
        """Squared modulus ``re**2 + im**2``."""
        return self._re * self._re + self._im * self._im

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self._re * o._re - self._im * o._im,
            self._re * o._im + self._im * o._re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num._re / n, num._im / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (1 / self) ** -exponent
        result = GaussianRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._re == o._re and self._im == o._im

    def __hash__(self):
        # equal to a real Fraction must mean equal hash
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __complex__(self):
        return complex(float(self._re), float(self._im))

    def __repr__(self):
        return f"GaussianRational({self._re!s}, {self._im!s})"

    def __str__(self):
        return format_scalar(self)


I = GaussianRational(0, 1)

Scalar = Union[Fraction, GaussianRational]


def as_gaussian(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, str):
        return parse_scalar(value, complex_allowed=True)
    return GaussianRational(value)


def conj_scalar(c):
    """Complex conjugate; rationals are their own conjugates."""
    if isinstance(c, GaussianRational):
        return c.conjugate()
    return c


def is_zero(c) -> bool:
    return not c


_RAT = r"\d+(?:/\d+)?"
_GAUSS_RE = re.compile(
    rf"""^\s*
    (?:(?P<re>[+-]?{_RAT})(?![\d/]*i))?       # real part, not followed by i
    \s*
    (?:(?P<im>[+-]?(?:{_RAT})?)\s*i)?          # imaginary part with trailing i
    \s*$""",
    re.VERBOSE,
)


def parse_scalar(text: str, complex_allowed: bool = True) -> Scalar:
    """Parse ``p``, ``p/q``, ``p/q+r/si``, ``-i``, ``3i`` and similar.

    Returns a ``Fraction`` for purely real text and a
    :class:`GaussianRational` when an imaginary part is written.
    """
    src = text.strip().replace(" ", "")
    if not src:
        raise ValueError("empty scalar")
    m = _GAUSS_RE.match(src)
    if m is None or (m.group("re") is None and m.group("im") is None):
        raise ValueError(f"malformed scalar {text!r}")
    real = Fraction(m.group("re")) if m.group("re") is not None else Fraction(0)
    im_text = m.group("im")
    if im_text is None:
        return real
    if not complex_allowed:
        raise ValueError(f"complex value {text!r} not allowed here")
    if im_text in ("", "+"):
        imag = Fraction(1)
    elif im_text == "-":
        imag = Fraction(-1)
    else:
        imag = Fraction(im_text)
    return GaussianRational(real, imag)


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(c) -> str:
    """Inverse of :func:`parse_scalar`; canonical and deterministic."""
    if isinstance(c, GaussianRational):
        if c.im == 0:
            return _fmt_rat(c.re)
        if c.im == 1:
            im = "i"
        elif c.im == -1:
            im = "-i"
        else:
            im = _fmt_rat(c.im) + "i"
        if c.re == 0:
            return im
        sign = "" if im.startswith("-") else "+"
        return f"{_fmt_rat(c.re)}{sign}{im}"
    return _fmt_rat(as_rational(c))
