# coxeter2d/coxeter/schemas.py
from pydantic import BaseModel
from typing import List


class EdgeOut(BaseModel):
    a: str
    b: str
    f: int


class FacetOut(BaseModel):
    a: str
    b: str
    c: str
    g: int


class DiagramOut(BaseModel):
    vertices: List[str]
    edges: List[EdgeOut]
    facets: List[FacetOut]
