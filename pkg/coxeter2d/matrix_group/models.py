# coxeter2d/matrix_group/models.py
from dataclasses import dataclass
from typing import Dict, Iterator, Tuple

from coxeter2d.gf2.models import GF2Matrix


@dataclass(frozen=True)
class MatrixGroupClosure:
    """
    Explicit finite matrix group. ``elements`` keeps discovery order and
    gives O(1) membership.
    """

    dimension: int
    generators: Tuple[GF2Matrix, ...]
    elements: Dict[GF2Matrix, int]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, matrix: GF2Matrix) -> bool:
        return matrix in self.elements

    def __iter__(self) -> Iterator[GF2Matrix]:
        return iter(self.elements)

    def element_set(self) -> frozenset:
        return frozenset(self.elements)
