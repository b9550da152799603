# coxeter2d/fp_group/schemas.py
from pydantic import BaseModel
from typing import List


class CosetRepReport(BaseModel):
    distinct: bool
    covering: bool
    count: int
    index: int
    landed: List[int]

    @property
    def ok(self) -> bool:
        return self.distinct and self.covering
