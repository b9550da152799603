# coxeter2d/dependencies/decompositions.py
from typing import Optional, Tuple

from coxeter2d.core.exceptions import InvalidInputError
from coxeter2d.dependencies.run_config import RunConfig
from coxeter2d.parabolic.models import Decomposition


def get_decomposition(text: Optional[str], flag: str) -> Decomposition:
    if text is None:
        raise InvalidInputError(f"{flag} is required")
    return Decomposition.parse(text)


def get_decomposition_pair(run: RunConfig) -> Tuple[Decomposition, Decomposition]:
    """
    Parse --lambda/--mu and insist they decompose the same n+1.
    """
    lam = get_decomposition(run.lambda_, "--lambda")
    mu = get_decomposition(run.mu, "--mu")
    if lam.total != mu.total:
        raise InvalidInputError(
            f"--lambda {lam} sums to {lam.total} but --mu {mu} sums to {mu.total}"
        )
    return lam, mu
