# coxeter2d/parabolic/schemas.py
from pydantic import BaseModel, Field
from typing import List, Literal, Optional

from coxeter2d.core import config


class VerificationOptions(BaseModel):
    run_presentation: bool = True
    run_bruteforce: bool = True
    run_image: bool = True
    max_cosets: int = Field(default_factory=lambda: config.MAX_COSETS, gt=0)
    element_limit: int = Field(default_factory=lambda: config.ELEMENT_LIMIT, gt=0)
    enumeration_cap: int = Field(default_factory=lambda: config.ENUMERATION_CAP, gt=0)


class OrdersOut(BaseModel):
    recursive: Optional[int] = None
    bruteforce: Optional[int] = None
    presentation: Optional[int] = None
    closure: Optional[int] = None

    def computed(self) -> List[int]:
        values = (self.recursive, self.bruteforce, self.presentation, self.closure)
        return [value for value in values if value is not None]


class VerificationReport(BaseModel):
    lambda_: List[int] = Field(alias="lambda")
    mu: List[int]
    orders: OrdersOut
    image_check: Optional[bool] = None
    verdict: Literal["pass", "fail", "skipped"]
    reason: Optional[str] = None

    class Config:
        populate_by_name = True

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_document(self) -> dict:
        return self.model_dump(by_alias=True, exclude_none=True)


class CosetsOut(BaseModel):
    lambda_: List[int] = Field(alias="lambda")
    mu: List[int]
    case: str
    expected_index: int
    representatives: List[str]
    distinct: bool
    covering: bool
    count: int
    index: int

    class Config:
        populate_by_name = True

    def to_document(self) -> dict:
        return self.model_dump(by_alias=True)


class OrderReport(BaseModel):
    lambda_: List[int] = Field(alias="lambda")
    mu: List[int]
    method: Literal["recursion", "bruteforce", "presentation", "closure", "all"]
    orders: OrdersOut
    agree: bool

    class Config:
        populate_by_name = True

    def to_document(self) -> dict:
        return self.model_dump(by_alias=True, exclude_none=True)
