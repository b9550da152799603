# coxeter2d/gf2/models.py
from typing import Iterable, Tuple

from coxeter2d.core.exceptions import InvalidInputError

MAX_DIMENSION = 32


class GF2Matrix:
    """
    Square matrix over F_2 with one machine-word bitmask per row.

    Bit ``j`` of ``rows[i]`` is the entry in row ``i``, column ``j``
    (0-based). Packing is canonical, so equality and hashing go by value.
    Instances are immutable.
    """

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Iterable[int]):
        rows = tuple(rows)
        if not 1 <= n <= MAX_DIMENSION:
            raise InvalidInputError(f"dimension must lie in [1, {MAX_DIMENSION}], got {n}")
        if len(rows) != n:
            raise InvalidInputError(f"expected {n} rows, got {len(rows)}")
        limit = 1 << n
        for row in rows:
            if not 0 <= row < limit:
                raise InvalidInputError(f"row {row:#x} does not fit {n} columns")
        self._set(n, rows)

    def _set(self, n: int, rows: Tuple[int, ...]) -> None:
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", hash((n, rows)))

    @classmethod
    def _trusted(cls, n: int, rows: Tuple[int, ...]) -> "GF2Matrix":
        # hot path: callers guarantee the invariants
        obj = cls.__new__(cls)
        obj._set(n, rows)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GF2Matrix is immutable")

    def __reduce__(self):
        return (GF2Matrix, (self.n, self.rows))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __matmul__(self, other: "GF2Matrix") -> "GF2Matrix":
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        if other.n != self.n:
            raise InvalidInputError(f"dimension mismatch: {self.n} vs {other.n}")
        return self.multiply(other)

    def multiply(self, other: "GF2Matrix") -> "GF2Matrix":
        b_rows = other.rows
        out = []
        for row in self.rows:
            acc = 0
            j = 0
            while row:
                if row & 1:
                    acc ^= b_rows[j]
                row >>= 1
                j += 1
            out.append(acc)
        return GF2Matrix._trusted(self.n, tuple(out))

    def entry(self, i: int, j: int) -> int:
        """0-based entry lookup."""
        return (self.rows[i] >> j) & 1

    def to_rows(self) -> list:
        return [[(row >> j) & 1 for j in range(self.n)] for row in self.rows]

    def __repr__(self) -> str:
        body = ",".join("".join(str(bit) for bit in row) for row in self.to_rows())
        return f"GF2Matrix({self.n}, [{body}])"
