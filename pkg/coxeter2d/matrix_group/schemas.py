# coxeter2d/matrix_group/schemas.py
from pydantic import BaseModel
from typing import Optional

from coxeter2d.gf2.schemas import MatrixOut


class HomomorphismReport(BaseModel):
    n: int
    relators_checked: int
    ok: bool
    failing_relator: Optional[str] = None
    failing_image: Optional[MatrixOut] = None
