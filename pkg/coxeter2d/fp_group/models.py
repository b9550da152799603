# coxeter2d/fp_group/models.py
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from coxeter2d.core.exceptions import InvalidInputError


@dataclass(frozen=True)
class Word:
    """
    Finite product of generator symbols, read left to right.

    Every generator is an involution, so no inverse letters exist.
    """

    letters: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    @classmethod
    def of(cls, *letters: str) -> "Word":
        return cls(tuple(letters))

    @classmethod
    def parse(cls, text: str) -> "Word":
        """``"y2 x2 y1"`` or ``"y2,x2,y1"``; ``"e"`` and ``""`` are the empty word."""
        cleaned = text.replace(",", " ").split()
        if cleaned == ["e"]:
            return cls()
        return cls(tuple(cleaned))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            raise InvalidInputError("negative powers are not supported")
        return Word(self.letters * k)

    def reversed(self) -> "Word":
        return Word(self.letters[::-1])

    def check_alphabet(self, alphabet: Iterable[str]) -> None:
        allowed = set(alphabet)
        for letter in self.letters:
            if letter not in allowed:
                raise InvalidInputError(f"letter {letter!r} is not a generator of the system")

    def __str__(self) -> str:
        return " ".join(self.letters) if self.letters else "e"


@dataclass(frozen=True)
class CosetTable:
    """
    Completed, standardised Todd-Coxeter table.

    Coset 0 is the subgroup H itself; ``action[c][k]`` is the image of
    coset ``c`` under ``generators[k]``.
    """

    generators: Tuple[str, ...]
    action: Tuple[Tuple[int, ...], ...]
    complete: bool = True

    @property
    def num_cosets(self) -> int:
        return len(self.action)

    def column(self, generator: str) -> int:
        try:
            return self.generators.index(generator)
        except ValueError:
            raise InvalidInputError(f"{generator!r} is not a generator of the table")

    def image(self, coset: int, generator: str) -> int:
        return self.action[coset][self.column(generator)]

    def trace(self, word: Sequence[str], start: int = 0) -> int:
        """Coset reached from ``start`` by applying the letters of ``word``."""
        coset = start
        for letter in word:
            coset = self.action[coset][self.column(letter)]
        return coset

    def to_csv_rows(self):
        yield ("coset", "generator", "image")
        for coset, row in enumerate(self.action):
            for generator, image in zip(self.generators, row):
                yield (coset, generator, image)
