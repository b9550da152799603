# coxeter2d/coxeter/models.py
import re
from dataclasses import dataclass, field
from itertools import combinations
from types import MappingProxyType
from typing import FrozenSet, Iterable, Iterator, Mapping, Optional, Tuple

from coxeter2d.core.exceptions import InvalidInputError

_INDEXED = re.compile(r"^([xy])([1-9][0-9]*)$")


def parse_generator(symbol: str) -> Optional[Tuple[str, int]]:
    """Split ``"x3"`` into ``("x", 3)``; opaque names give ``None``."""
    match = _INDEXED.match(symbol)
    if not match:
        return None
    return match.group(1), int(match.group(2))


def generator_name(kind: str, index: int) -> str:
    return f"{kind}{index}"


@dataclass(frozen=True, eq=False)
class TwoDimCoxeterSystem:
    """
    Triple (X, f, g): generators plus pair labels and triple labels.

    ``f`` must name every 2-subset of the generators. ``g`` is sparse and
    missing triples read as 0. Keys are frozensets, so labels do not
    depend on argument order.
    """

    generators: Tuple[str, ...]
    f: Mapping[FrozenSet[str], int]
    g: Mapping[FrozenSet[str], int] = field(default_factory=dict)

    def __post_init__(self):
        generators = tuple(self.generators)
        if len(set(generators)) != len(generators):
            raise InvalidInputError(f"duplicate generators in {generators}")
        known = set(generators)

        f = {}
        for key, label in self.f.items():
            key = frozenset(key)
            if len(key) != 2 or not key <= known:
                raise InvalidInputError(f"f is defined on {sorted(key)}, not a pair of generators")
            if label < 0:
                raise InvalidInputError(f"f{sorted(key)} = {label} is negative")
            f[key] = label
        for a, b in combinations(generators, 2):
            if frozenset((a, b)) not in f:
                raise InvalidInputError(f"f({a},{b}) is missing; pair labels must be explicit")

        g = {}
        for key, label in self.g.items():
            key = frozenset(key)
            if len(key) != 3 or not key <= known:
                raise InvalidInputError(f"g is defined on {sorted(key)}, not a triple of generators")
            if label < 0:
                raise InvalidInputError(f"g{sorted(key)} = {label} is negative")
            if label:
                g[key] = label

        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "f", MappingProxyType(f))
        object.__setattr__(self, "g", MappingProxyType(g))
        object.__setattr__(self, "_position", {gen: k for k, gen in enumerate(generators)})

    @classmethod
    def empty(cls) -> "TwoDimCoxeterSystem":
        return cls(generators=(), f={}, g={})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwoDimCoxeterSystem):
            return NotImplemented
        return (
            self.generators == other.generators
            and dict(self.f) == dict(other.f)
            and dict(self.g) == dict(other.g)
        )

    def __len__(self) -> int:
        return len(self.generators)

    def position(self, generator: str) -> int:
        try:
            return self._position[generator]
        except KeyError:
            raise InvalidInputError(f"{generator!r} is not a generator of the system")

    def sort_key(self, generators: Iterable[str]) -> Tuple[str, ...]:
        return tuple(sorted(generators, key=self.position))

    def pair_label(self, a: str, b: str) -> int:
        return self.f[frozenset((a, b))]

    def triple_label(self, a: str, b: str, c: str) -> int:
        key = frozenset((a, b, c))
        if len(key) != 3:
            raise InvalidInputError(f"({a},{b},{c}) is not a triple of distinct generators")
        for gen in key:
            self.position(gen)
        return self.g.get(key, 0)

    def pairs(self) -> Iterator[Tuple[str, str, int]]:
        """All pairs in generator-position order with their f label."""
        for a, b in combinations(self.generators, 2):
            yield a, b, self.f[frozenset((a, b))]

    def triples(self) -> Iterator[Tuple[str, str, str, int]]:
        """All triples in generator-position order with their g label (0 included)."""
        for a, b, c in combinations(self.generators, 3):
            yield a, b, c, self.g.get(frozenset((a, b, c)), 0)

    def labelled_triples(self) -> Iterator[Tuple[str, str, str, int]]:
        for a, b, c, label in self.triples():
            if label:
                yield a, b, c, label


@dataclass(frozen=True)
class GeneratorSubset:
    members: FrozenSet[str]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))

    @classmethod
    def of(cls, *members: str) -> "GeneratorSubset":
        return cls(frozenset(members))

    def __contains__(self, generator: str) -> bool:
        return generator in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)
