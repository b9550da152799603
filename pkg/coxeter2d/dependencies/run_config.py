# coxeter2d/dependencies/run_config.py
import argparse
from pydantic import BaseModel, Field, ValidationError
from typing import Literal, Optional

from coxeter2d.core import config
from coxeter2d.core.exceptions import InvalidInputError
from coxeter2d.parabolic.schemas import VerificationOptions


class RunConfig(BaseModel):
    command: str
    lambda_: Optional[str] = Field(default=None, alias="lambda")
    mu: Optional[str] = None
    n: Optional[int] = None
    format: Literal["json", "text", "dot"] = "json"
    max_cosets: int = Field(default=config.MAX_COSETS, gt=0)
    element_limit: int = Field(default=config.ELEMENT_LIMIT, gt=0)
    enumeration_cap: int = Field(default=config.ENUMERATION_CAP, gt=0)
    workers: int = Field(default=config.WORKERS, gt=0)
    output: Optional[str] = None

    class Config:
        populate_by_name = True

    def verification_options(self, **flags) -> VerificationOptions:
        return VerificationOptions(
            max_cosets=self.max_cosets,
            element_limit=self.element_limit,
            enumeration_cap=self.enumeration_cap,
            **flags,
        )


def get_run_config(args: argparse.Namespace) -> RunConfig:
    """
    Merge parsed flags over the environment defaults.
    Flags left unset keep the COXETER2D_* values.
    """
    values = {"command": args.command}
    for name in ("lambda_", "mu", "n", "format", "max_cosets", "element_limit",
                 "enumeration_cap", "workers", "output"):
        value = getattr(args, name, None)
        if value is not None:
            values[name] = value
    try:
        return RunConfig(**values)
    except ValidationError as exc:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in error['loc'])}: {error['msg']}" for error in exc.errors()
        )
        raise InvalidInputError(f"invalid run configuration: {problems}")
