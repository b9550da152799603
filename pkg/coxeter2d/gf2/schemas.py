# coxeter2d/gf2/schemas.py
from pydantic import BaseModel
from typing import List

from coxeter2d.gf2.models import GF2Matrix


class MatrixOut(BaseModel):
    n: int
    rows: List[List[int]]

    @classmethod
    def from_matrix(cls, matrix: GF2Matrix) -> "MatrixOut":
        return cls(n=matrix.n, rows=matrix.to_rows())
