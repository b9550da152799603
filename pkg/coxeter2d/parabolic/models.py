# coxeter2d/parabolic/models.py
from dataclasses import dataclass
from typing import FrozenSet, Tuple

from coxeter2d.core.exceptions import InvalidInputError


@dataclass(frozen=True)
class Decomposition:
    """
    Ordered sequence of positive parts summing to n+1.

    Part order matters: (2,1) and (1,2) give different block patterns.
    """

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise InvalidInputError("a decomposition needs at least one part")
        for part in parts:
            if not isinstance(part, int) or isinstance(part, bool) or part < 1:
                raise InvalidInputError(f"decomposition parts must be positive integers, got {parts}")

    @classmethod
    def parse(cls, text: str) -> "Decomposition":
        """Read the comma separated text form, e.g. ``"2,1,1"``."""
        pieces = [piece.strip() for piece in text.split(",")]
        if not text.strip() or any(not piece for piece in pieces):
            raise InvalidInputError(f"cannot parse decomposition {text!r}")
        try:
            parts = tuple(int(piece) for piece in pieces)
        except ValueError:
            raise InvalidInputError(f"cannot parse decomposition {text!r}")
        return cls(parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def last(self) -> int:
        return self.parts[-1]

    @property
    def stopovers(self) -> FrozenSet[int]:
        """Proper partial sums: {λ1, λ1+λ2, ..., λ1+...+λ_{l-1}}."""
        sums = []
        running = 0
        for part in self.parts[:-1]:
            running += part
            sums.append(running)
        return frozenset(sums)

    def without_last(self) -> Tuple[int, ...]:
        return self.parts[:-1]

    def shrink_last(self, k: int) -> Tuple[int, ...]:
        """Subtract ``k`` from the last part, dropping it when it hits zero."""
        if not 0 <= k <= self.last:
            raise InvalidInputError(f"cannot remove {k} from last part {self.last}")
        head, last = self.parts[:-1], self.last - k
        return head + (last,) if last else head

    def refine_last(self) -> "Decomposition":
        """μ' = (μ1, ..., μ_m - 1, 1); needs μ_m >= 2."""
        if self.last < 2:
            raise InvalidInputError(f"cannot split last part of {self}: it is 1")
        return Decomposition(self.parts[:-1] + (self.last - 1, 1))

    def block_of(self, index: int) -> int:
        """Block number (0-based) containing 0-based row/column ``index``."""
        running = 0
        for block, part in enumerate(self.parts):
            running += part
            if index < running:
                return block
        raise InvalidInputError(f"index {index} outside total {self.total}")

    def __str__(self) -> str:
        return ",".join(str(part) for part in self.parts)
