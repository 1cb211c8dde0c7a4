"""Exact linear algebra over ZZ and QQ on plain tuple-of-tuples matrices.

Matrices are row-major ``tuple[tuple[...], ...]``. Entries are ``int`` when
integral and :class:`fractions.Fraction` otherwise; :func:`norm` collapses a
Fraction with denominator 1 back to ``int`` so that integer matrices stay
integer matrices after rational computations.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Matrix = tuple  # tuple[tuple[int | Fraction, ...], ...]


def norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def parse_number(x) -> int | Fraction:
    """Accept ints, Fractions and strings such as ``"3"`` or ``"-1/2"``."""
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return norm(x)
    if isinstance(x, str):
        return norm(Fraction(x.strip()))
    if isinstance(x, float):
        if x != int(x):
            raise TypeError(f"non-integral float {x!r}; pass an exact 'p/q' string")
        return int(x)
    raise TypeError(f"cannot interpret {x!r} as an exact number")


def matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(parse_number(x) for x in row) for row in rows)


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(m: int, n: int) -> Matrix:
    return tuple((0,) * n for _ in range(m))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(norm(sum(x * y for x, y in zip(row, col))) for col in bt) for row in a)


def mat_vec(a: Matrix, v: Sequence) -> tuple:
    return tuple(norm(sum(x * y for x, y in zip(row, v))) for row in a)


def vec_mat(v: Sequence, a: Matrix) -> tuple:
    return mat_vec(transpose(a), v)


def dot(u: Sequence, v: Sequence):
    return norm(sum(x * y for x, y in zip(u, v)))


def scale(c, v: Sequence) -> tuple:
    return tuple(norm(c * x) for x in v)


def vadd(u: Sequence, v: Sequence) -> tuple:
    return tuple(norm(x + y) for x, y in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> tuple:
    return tuple(norm(x - y) for x, y in zip(u, v))


def column(a: Matrix, j: int) -> tuple:
    return tuple(row[j] for row in a)


def from_columns(cols: Sequence[Sequence]) -> Matrix:
    return transpose(tuple(tuple(c) for c in cols))


def is_integral(a) -> bool:
    if isinstance(a, (tuple, list)):
        return all(is_integral(x) for x in a)
    return isinstance(a, int) or (isinstance(a, Fraction) and a.denominator == 1)


def to_int(a):
    if isinstance(a, (tuple, list)):
        return tuple(to_int(x) for x in a)
    if isinstance(a, Fraction):
        if a.denominator != 1:
            raise ValueError(f"{a} is not an integer")
        return int(a.numerator)
    return int(a)


def is_skew(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == -a[j][i] for i in range(n) for j in range(n))


def is_symmetric(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(n))


def _rref(a: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    rows = [[Fraction(x) for x in row] for row in a]
    m, n = shape(a)
    pivots: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows, pivots


def rank(a: Matrix) -> int:
    return len(_rref(a)[1]) if a else 0


def det(a: Matrix):
    n = len(a)
    rows = [[Fraction(x) for x in row] for row in a]
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        d *= rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / rows[c][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return norm(d)


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = tuple(tuple(row) + ident for row, ident in zip(a, identity(n)))
    rows, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(norm(x) for x in row[n:]) for row in rows[:n])


def solve(a: Matrix, b: Sequence) -> tuple | None:
    """One particular solution of ``a x = b`` (free variables set to 0), or None."""
    m, n = shape(a)
    aug = tuple(tuple(row) + (b[i],) for i, row in enumerate(a))
    rows, pivots = _rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x[c] = rows[r][n]
    return tuple(norm(v) for v in x)


def rational_kernel(a: Matrix) -> list[tuple]:
    """Basis of the right kernel over QQ, one vector per free column."""
    m, n = shape(a)
    if m == 0:
        return [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    rows, pivots = _rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -rows[r][f]
        basis.append(tuple(norm(x) for x in v))
    return basis


def vec_gcd(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on the same ray."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = vec_gcd(ints)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def _column_reduce(a: list[list[int]], u: list[list[int]]) -> int:
    """Unimodular column operations bringing integer ``a`` to column echelon form.

    ``u`` (a list of columns) records the operations. Returns the number of
    nonzero pivot columns; the remaining columns of ``u`` span the kernel.
    """
    m = len(a[0]) if a else 0
    ncols = len(a)
    p = 0
    for r in range(m):
        if p >= ncols:
            break
        while True:
            nz = [j for j in range(p, ncols) if a[j][r] != 0]
            if not nz:
                break
            j = min(nz, key=lambda j: abs(a[j][r]))
            a[p], a[j] = a[j], a[p]
            u[p], u[j] = u[j], u[p]
            done = True
            for k in range(p + 1, ncols):
                if a[k][r] != 0:
                    q = a[k][r] // a[p][r]
                    a[k] = [x - q * y for x, y in zip(a[k], a[p])]
                    u[k] = [x - q * y for x, y in zip(u[k], u[p])]
                    if a[k][r] != 0:
                        done = False
            if done:
                p += 1
                break
    return p


def integer_kernel(a: Matrix) -> list[tuple[int, ...]]:
    """A ZZ-basis of ``{x in ZZ^n : a x = 0}`` for an integer matrix ``a``."""
    m, n = shape(a)
    cols = [list(to_int(column(a, j))) for j in range(n)]
    u = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    p = _column_reduce(cols, u)
    return [tuple(c) for c in u[p:]]


def complete_to_basis(v: Sequence[int]) -> Matrix:
    """Unimodular integer matrix whose first column is the primitive vector ``v``."""
    n = len(v)
    row = [[int(x)] for x in v]
    u = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    _column_reduce(row, u)
    # now v^T C = (g, 0, ..., 0) with C = from_columns(u)
    c = from_columns(u)
    g = sum(int(x) * y for x, y in zip(v, column(c, 0)))
    if abs(g) != 1:
        raise ValueError("vector is not primitive")
    q = transpose(inverse(c))
    if g == -1:
        q = transpose((tuple(-x for x in column(q, 0)),) + tuple(column(q, j) for j in range(1, n)))
    return to_int(q)
