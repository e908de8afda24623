"""Independent reference computations used to freeze expected values."""
from fractions import Fraction

from staralg.scalars import GaussianRational


def hamilton(p, q):
    """Quaternion product from the explicit Hamilton formula, basis (1, i, j, k)."""
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def matmul2(a, b, zero=GaussianRational(0)):
    return tuple(
        tuple(sum((a[i][t] * b[t][j] for t in range(2)), zero) for j in range(2))
        for i in range(2)
    )


def conj_transpose2(a):
    return tuple(tuple(a[j][i].conjugate() for j in range(2)) for i in range(2))


def complex_mul_on_pairs(c, xy):
    """Multiply real coordinate pairs (re, im) fiberwise by the complex scalar c."""
    out = []
    for f in range(len(xy) // 2):
        z = GaussianRational(xy[2 * f], xy[2 * f + 1]) * c
        out.extend((z.re, z.im))
    return tuple(out)


def conj_pairs(xy):
    return tuple(v if s == 0 else -v for idx, v in enumerate(xy) for s in [idx % 2])


def det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


ZERO = Fraction(0)
