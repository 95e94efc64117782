"""Transition matrices of the twists and their word products.

``M_1`` and ``M_3`` are the transition matrices of the positive twists, ``M_2``
that of the inverse middle twist.  Each is a transvection, so powers have the
closed form ``I + k*(M - I)``.  Matrices are tuples of row tuples of Python
ints; entries grow exponentially with the word and must not overflow.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cfrac import dilatation, normalized_eigenvector
from .errors import BadIndex
from .quad import QuadExt, Ordering, cmp
from .words import ParamWord

__all__ = [
    "Mat3",
    "IDENTITY",
    "generator",
    "generator_power",
    "matmul",
    "matvec",
    "det",
    "word_matrix",
    "block_matrix",
    "char_poly",
    "eval_poly",
    "split_char_poly",
    "verify_eigenpair",
    "compare_13",
    "is_positive",
]

Mat3 = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]

IDENTITY: Mat3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))

_GENERATORS: dict[int, Mat3] = {
    1: ((1, 1, 0), (0, 1, 0), (0, 0, 1)),
    2: ((1, 0, 0), (1, 1, 1), (0, 0, 1)),
    3: ((1, 0, 0), (0, 1, 0), (0, 1, 1)),
}


def generator(i: int) -> Mat3:
    try:
        return _GENERATORS[i]
    except KeyError:
        raise BadIndex(f"generator index must be 1, 2 or 3, got {i!r}") from None


def generator_power(i: int, k: int) -> Mat3:
    """``M_i ** k`` for ``k >= 0``; (M - I)**2 = 0 so this is I + k(M - I)."""
    if k < 0:
        raise ValueError("negative powers are not in the semigroup")
    g = generator(i)
    return tuple(
        tuple(IDENTITY[r][s] + k * (g[r][s] - IDENTITY[r][s]) for s in range(3))
        for r in range(3)
    )


def matmul(A: Mat3, B: Mat3) -> Mat3:
    return tuple(
        tuple(sum(A[r][k] * B[k][s] for k in range(3)) for s in range(3))
        for r in range(3)
    )


def matvec(A: Mat3, v: Sequence) -> tuple:
    zero = QuadExt(0) if any(isinstance(x, QuadExt) for x in v) else 0
    return tuple(sum((A[r][k] * v[k] for k in range(3)), zero) for r in range(3))


def det(A: Mat3) -> int:
    (a, b, c), (d, e, f), (g, h, i) = A
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def block_matrix(p: int, pp: int, q: int) -> Mat3:
    """``M_1^p M_3^p' M_2^q``."""
    return matmul(matmul(generator_power(1, p), generator_power(3, pp)), generator_power(2, q))


def word_matrix(w: ParamWord) -> Mat3:
    M = IDENTITY
    for p, pp, q in w.triples:
        M = matmul(M, block_matrix(p, pp, q))
    return M


def is_positive(A: Mat3) -> bool:
    return all(x > 0 for row in A for x in row)


def char_poly(A: Mat3) -> tuple[int, int, int, int]:
    """Monic ``det(t I - A)`` as ``(1, c2, c1, c0)``."""
    tr = A[0][0] + A[1][1] + A[2][2]
    minors = (
        A[0][0] * A[1][1] - A[0][1] * A[1][0]
        + A[0][0] * A[2][2] - A[0][2] * A[2][0]
        + A[1][1] * A[2][2] - A[1][2] * A[2][1]
    )
    return (1, -tr, minors, -det(A))


def eval_poly(coeffs: Sequence[int], x):
    acc = QuadExt(0) if isinstance(x, QuadExt) else 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    return [k for k in range(1, n + 1) if n % k == 0] if n else [0]


def split_char_poly(A: Mat3) -> tuple[Fraction, tuple[int, int, int]]:
    """Factor the characteristic polynomial as ``(t - r) * (t^2 + b t + c)``.

    ``r`` is located among the signed divisors of the constant term; raises
    ``ValueError`` when the cubic has no rational root.
    """
    poly = char_poly(A)
    for k in _divisors(poly[3]):
        for r in (k, -k):
            if eval_poly(poly, r) == 0:
                # synthetic division by (t - r)
                b = poly[1] + r
                c = poly[2] + r * b
                assert poly[3] + r * c == 0
                return Fraction(r), (1, b, c)
    raise ValueError(f"no rational root of {poly}")


def verify_eigenpair(w: ParamWord) -> bool:
    """Exact check of ``M_p v = lambda v`` and of ``chi(lambda) = 0``.

    Also confirms that ``lambda`` dominates the other two roots in modulus.
    """
    M = word_matrix(w)
    v = normalized_eigenvector(w)
    lam = dilatation(w)
    if any(x <= 0 for x in v):
        return False
    if matvec(M, v) != tuple(lam * x for x in v):
        return False
    if eval_poly(char_poly(M), lam) != 0:
        return False
    r, quad = split_char_poly(M)
    if eval_poly(quad, lam) != 0:
        return False
    other = lam.conjugate()
    return lam > 1 and abs(other) < lam and abs(QuadExt.coerce(r)) < lam


def compare_13(p: int, pp: int, q: int, x: Sequence[QuadExt]) -> Ordering:
    """Order of coordinates 1 and 3 of ``M_1^p M_3^p' M_2^q x``."""
    if q < 1:
        raise ValueError("q >= 1 required")
    y = matvec(block_matrix(p, pp, q), x)
    return cmp(y[0], y[2])
