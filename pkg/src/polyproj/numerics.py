"""Exact rational scalars, vectors and matrices.

Scalars are ``gmpy2.mpq`` values (always reduced, sign carried by the
numerator).  Vectors are tuples of scalars and matrices are tuples of row
tuples; both are immutable, so they can be shared and hashed freely.
"""
import re
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

import gmpy2
from gmpy2 import mpq

Rational = type(mpq())
QVector = Tuple[Rational, ...]
QMatrix = Tuple[QVector, ...]

ZERO = mpq(0)
ONE = mpq(1)

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def q(value) -> Rational:
    """Convert an int, Fraction, mpq or rational string to an exact scalar."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, float):
        raise TypeError("floating point input is not accepted; pass an int, Fraction or string")
    return mpq(value)


def parse_rational(token: str) -> Rational:
    """Parse ``-3`` or ``5/2``; the denominator must be a positive integer."""
    token = token.strip()
    if not _RATIONAL_RE.match(token):
        raise ValueError(f"malformed rational {token!r}")
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {token!r}")
        return mpq(int(num), int(den))
    return mpq(int(token))


def format_rational(x) -> str:
    return str(q(x))


def vector(values: Iterable) -> QVector:
    return tuple(q(v) for v in values)


def matrix(rows: Iterable[Iterable]) -> QMatrix:
    out = tuple(vector(r) for r in rows)
    if out and len({len(r) for r in out}) != 1:
        raise ValueError("ragged matrix")
    return out


def zeros(n: int) -> QVector:
    return (ZERO,) * n


def identity(n: int) -> QMatrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def transpose(M: Sequence[Sequence], ncols: int = None) -> QMatrix:
    if not M:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*M))


def dot(u: Sequence, v: Sequence):
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def matvec(M: Sequence[Sequence], v: Sequence) -> QVector:
    return tuple(dot(row, v) for row in M)


def matmul(A: Sequence[Sequence], B: Sequence[Sequence], ncols: int = None) -> QMatrix:
    """Product ``A @ B``; ``ncols`` gives the column count when ``B`` has no rows."""
    if not B:
        return tuple(zeros(ncols or 0) for _ in A)
    Bt = tuple(zip(*B))
    return tuple(tuple(dot(row, col) for col in Bt) for row in A)


def add(u: Sequence, v: Sequence) -> QVector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> QVector:
    return tuple(a - b for a, b in zip(u, v))


def scale(t, v: Sequence) -> QVector:
    return tuple(t * a for a in v)


def neg(v: Sequence) -> QVector:
    return tuple(-a for a in v)


def is_zero(v: Sequence) -> bool:
    return not any(v)


def primitive(v: Sequence) -> QVector:
    """Positive multiple of ``v`` with coprime integer entries (zero stays zero)."""
    nums = [q(a) for a in v]
    lcm = gmpy2.mpz(1)
    for a in nums:
        if a:
            lcm = gmpy2.lcm(lcm, a.denominator)
    ints = [a.numerator * (lcm // a.denominator) for a in nums]
    g = gmpy2.mpz(0)
    for a in ints:
        g = gmpy2.gcd(g, a)
    if g == 0:
        return tuple(ZERO for _ in nums)
    return tuple(mpq(a // g) for a in ints)


def primitive_positive(v: Sequence) -> QVector:
    """Like :func:`primitive`, then flipped so the first nonzero entry is positive."""
    p = primitive(v)
    for a in p:
        if a:
            return p if a > 0 else neg(p)
    return p


def rref(M: Sequence[Sequence], ncols: int = None):
    """Reduced row echelon form.

    Returns ``(R, pivots, rank)`` where ``R`` keeps the row count of ``M``
    (zero rows last) and ``pivots`` lists the pivot columns in increasing order.
    """
    rows = [list(map(q, r)) for r in M]
    n = len(rows[0]) if rows else (ncols or 0)
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [a / piv for a in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in rows), pivots, len(pivots)


def rank(M: Sequence[Sequence], ncols: int = None) -> int:
    return rref(M, ncols)[2]


def nullspace_basis(M: Sequence[Sequence], ncols: int = None) -> List[QVector]:
    """Basis of ``{v : M v = 0}``.

    Vectors are scaled to coprime integers with positive first nonzero entry.
    ``ncols`` is required when ``M`` has no rows.
    """
    n = len(M[0]) if M else ncols
    if n is None:
        raise ValueError("ncols is required for a matrix without rows")
    R, pivots, _ = rref(M, n)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [ZERO] * n
        v[free] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][free]
        basis.append(primitive_positive(v))
    return basis


def solve_square(M: Sequence[Sequence], rhs: Sequence) -> QVector:
    """Unique solution of ``M v = rhs`` for nonsingular square ``M``."""
    n = len(M)
    aug = [list(map(q, row)) + [q(b)] for row, b in zip(M, rhs)]
    R, pivots, rk = rref(aug)
    if rk != n or pivots[-1] == n:
        raise ValueError("singular system")
    return tuple(R[i][n] for i in range(n))
