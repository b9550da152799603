# coxeter2d/gf2/services.py
from typing import Sequence

from coxeter2d.core.exceptions import InvalidInputError
from coxeter2d.gf2.models import GF2Matrix, MAX_DIMENSION


def _check_dimension(n: int) -> None:
    if not 1 <= n <= MAX_DIMENSION:
        raise InvalidInputError(f"dimension must lie in [1, {MAX_DIMENSION}], got {n}")


def identity(n: int) -> GF2Matrix:
    _check_dimension(n)
    return GF2Matrix._trusted(n, tuple(1 << i for i in range(n)))


def zero(n: int) -> GF2Matrix:
    _check_dimension(n)
    return GF2Matrix._trusted(n, (0,) * n)


def from_rows(rows: Sequence[Sequence[int]]) -> GF2Matrix:
    """Build a matrix from its row-major 0/1 text form."""
    n = len(rows)
    _check_dimension(n)
    packed = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InvalidInputError(f"row {i + 1} has {len(row)} entries, expected {n}")
        value = 0
        for j, bit in enumerate(row):
            if bit not in (0, 1):
                raise InvalidInputError(f"entry ({i + 1},{j + 1}) is {bit!r}, expected 0 or 1")
            value |= bit << j
        packed.append(value)
    return GF2Matrix._trusted(n, tuple(packed))


def to_rows(a: GF2Matrix) -> list:
    return a.to_rows()


def mat_mul(a: GF2Matrix, b: GF2Matrix) -> GF2Matrix:
    if a.n != b.n:
        raise InvalidInputError(f"dimension mismatch: {a.n} vs {b.n}")
    return a.multiply(b)


def transpose(a: GF2Matrix) -> GF2Matrix:
    n = a.n
    cols = []
    for j in range(n):
        value = 0
        for i, row in enumerate(a.rows):
            value |= ((row >> j) & 1) << i
        cols.append(value)
    return GF2Matrix._trusted(n, tuple(cols))


def rank(a: GF2Matrix) -> int:
    rows = list(a.rows)
    n = a.n
    r = 0
    for col in range(n):
        bit = 1 << col
        pivot = next((k for k in range(r, n) if rows[k] & bit), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for k in range(n):
            if k != r and rows[k] & bit:
                rows[k] ^= rows[r]
        r += 1
    return r


def is_invertible(a: GF2Matrix) -> bool:
    return rank(a) == a.n


def inverse(a: GF2Matrix) -> GF2Matrix:
    """Gauss-Jordan elimination carrying the identity alongside."""
    n = a.n
    rows = list(a.rows)
    inv = [1 << i for i in range(n)]
    for col in range(n):
        bit = 1 << col
        pivot = next((k for k in range(col, n) if rows[k] & bit), None)
        if pivot is None:
            raise InvalidInputError("matrix is singular over F_2")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        for k in range(n):
            if k != col and rows[k] & bit:
                rows[k] ^= rows[col]
                inv[k] ^= inv[col]
    return GF2Matrix._trusted(n, tuple(inv))


def elementary(n: int, i: int, j: int) -> GF2Matrix:
    """
    Return I_n + E_{i,j} with 1-based row ``i`` and column ``j``.
    """
    _check_dimension(n)
    if not (1 <= i <= n and 1 <= j <= n):
        raise InvalidInputError(f"indices ({i},{j}) out of range for dimension {n}")
    if i == j:
        raise InvalidInputError(f"elementary matrix needs i != j, got i = j = {i}")
    rows = [1 << k for k in range(n)]
    rows[i - 1] |= 1 << (j - 1)
    return GF2Matrix._trusted(n, tuple(rows))


def gl_order(k: int) -> int:
    """|GL_k(F_2)| = prod_{i<k} (2^k - 2^i); gl_order(0) == 1."""
    if k < 0:
        raise InvalidInputError(f"dimension must be non-negative, got {k}")
    order = 1
    full = 1 << k
    for i in range(k):
        order *= full - (1 << i)
    return order
