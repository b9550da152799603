# coxeter2d/matrix_group/services.py
import logging
from collections import deque
from typing import Optional, Sequence

from coxeter2d.core import config
from coxeter2d.core.exceptions import InvalidInputError, ResourceLimitError
from coxeter2d.coxeter.models import TwoDimCoxeterSystem, generator_name, parse_generator
from coxeter2d.coxeter.services import relators
from coxeter2d.fp_group.models import Word
from coxeter2d.gf2.models import GF2Matrix
from coxeter2d.gf2.schemas import MatrixOut
from coxeter2d.gf2.services import elementary, identity, is_invertible
from coxeter2d.matrix_group.models import MatrixGroupClosure
from coxeter2d.matrix_group.schemas import HomomorphismReport

logger = logging.getLogger(__name__)


def phi(gen: str, n: int) -> GF2Matrix:
    """
    φ(x_j) = I_{n+1} + E_{j+1,j} (lower), φ(y_j) = I_{n+1} + E_{j,j+1} (upper).
    """
    parsed = parse_generator(gen)
    if parsed is None:
        raise InvalidInputError(f"{gen!r} is not of the form x_j or y_j")
    kind, j = parsed
    if not 1 <= j <= n:
        raise InvalidInputError(f"index {j} of {gen} out of range 1..{n}")
    if kind == "x":
        return elementary(n + 1, j + 1, j)
    return elementary(n + 1, j, j + 1)


def eval_word(word: Word, n: int) -> GF2Matrix:
    result = identity(n + 1)
    cache = {}
    for letter in word:
        matrix = cache.get(letter)
        if matrix is None:
            matrix = cache[letter] = phi(letter, n)
        result = result.multiply(matrix)
    return result


def check_homomorphism(system: TwoDimCoxeterSystem, n: int) -> HomomorphismReport:
    """Evaluate every defining relator under φ; report the first that is not I."""
    unit = identity(n + 1)
    words = relators(system)
    for word in words:
        image = eval_word(word, n)
        if image != unit:
            logger.info("relator %s does not map to the identity", word)
            return HomomorphismReport(
                n=n,
                relators_checked=len(words),
                ok=False,
                failing_relator=str(word),
                failing_image=MatrixOut.from_matrix(image),
            )
    return HomomorphismReport(n=n, relators_checked=len(words), ok=True)


def closure(
    gens: Sequence[GF2Matrix],
    element_limit: Optional[int] = None,
    dimension: Optional[int] = None,
) -> MatrixGroupClosure:
    """
    Breadth-first closure from the identity under right multiplication by
    ``gens``. Finite groups are closed under this alone.
    """
    element_limit = element_limit or config.ELEMENT_LIMIT
    gens = tuple(gens)
    if dimension is None:
        dimension = gens[0].n if gens else 1
    for gen in gens:
        if gen.n != dimension:
            raise InvalidInputError(f"generator of dimension {gen.n} in a closure of dimension {dimension}")
        if not is_invertible(gen):
            raise InvalidInputError(f"generator {gen!r} is not invertible")

    start = identity(dimension)
    elements = {start: 0}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for gen in gens:
            product = current.multiply(gen)
            if product not in elements:
                if len(elements) >= element_limit:
                    raise ResourceLimitError(
                        f"matrix closure exceeded {element_limit} elements; "
                        f"raise the element limit"
                    )
                elements[product] = len(elements)
                queue.append(product)
    logger.debug("closure of %d generators has %d elements", len(gens), len(elements))
    return MatrixGroupClosure(dimension=dimension, generators=gens, elements=elements)


def contains(group: MatrixGroupClosure, matrix: GF2Matrix) -> bool:
    if matrix.n != group.dimension:
        raise InvalidInputError(f"dimension mismatch: {matrix.n} vs {group.dimension}")
    return matrix in group


def chain_word(kind: str, i: int, j: int) -> Word:
    """
    Word in x_i..x_j mapping to I + E_{j+1,i} (or in y_i..y_j mapping to
    I + E_{i,j+1}), built from ((I+E_{a,b})(I+E_{b,c}))^2 = I + E_{a,c}.
    """
    if kind not in ("x", "y"):
        raise InvalidInputError(f"chain kind must be 'x' or 'y', got {kind!r}")
    if not 1 <= i <= j:
        raise InvalidInputError(f"chain needs 1 <= i <= j, got ({i},{j})")
    word = Word.of(generator_name(kind, j))
    for k in range(j - 1, i - 1, -1):
        letter = Word.of(generator_name(kind, k))
        word = (word * letter) ** 2 if kind == "x" else (letter * word) ** 2
    return word


def transpose_word(word: Word) -> Word:
    """Reverse and swap x_j <-> y_j, so the image is the transposed matrix."""
    letters = []
    for letter in reversed(word.letters):
        parsed = parse_generator(letter)
        if parsed is None:
            raise InvalidInputError(f"{letter!r} is not of the form x_j or y_j")
        kind, index = parsed
        letters.append(generator_name("y" if kind == "x" else "x", index))
    return Word(tuple(letters))
