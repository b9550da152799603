# coxeter2d/fp_group/services.py
import csv
import logging
from typing import List, Optional, Sequence

from coxeter2d.core import config
from coxeter2d.core.exceptions import InvalidInputError, ResourceLimitError
from coxeter2d.coxeter.models import GeneratorSubset, TwoDimCoxeterSystem
from coxeter2d.coxeter.services import relators
from coxeter2d.fp_group.models import CosetTable, Word
from coxeter2d.fp_group.schemas import CosetRepReport

logger = logging.getLogger(__name__)

UNDEFINED = -1
_PROGRESS_EVERY = 100_000


class CosetEnumerator:
    """
    HLT coset enumeration for presentations whose generators are all
    involutions, so one table column per generator serves as its own
    inverse column.

    Coincidences are merged through a union-find ``parent`` array and a
    queue; relators are scanned in ``relators()`` order and cosets in
    creation order, so identical inputs give identical tables.
    """

    def __init__(
        self,
        system: TwoDimCoxeterSystem,
        subgroup_gens: Sequence[Word],
        max_cosets: Optional[int] = None,
    ):
        if not system.generators and any(len(word) for word in subgroup_gens):
            raise InvalidInputError("subgroup words given for a system without generators")
        for word in subgroup_gens:
            word.check_alphabet(system.generators)
        self.system = system
        self.max_cosets = max_cosets or config.MAX_COSETS
        self.num_gens = len(system.generators)
        column = {gen: k for k, gen in enumerate(system.generators)}
        self.relators = [tuple(column[l] for l in word) for word in relators(system) if len(word)]
        self.subgroup = [tuple(column[l] for l in word) for word in subgroup_gens if len(word)]
        self.table: List[List[int]] = []
        self.parent: List[int] = []

    # -- table primitives -------------------------------------------------

    def _new_coset(self) -> int:
        coset = len(self.table)
        if coset >= self.max_cosets:
            raise ResourceLimitError(
                f"coset enumeration defined more than {self.max_cosets} cosets; "
                f"retry with a larger max_cosets"
            )
        self.table.append([UNDEFINED] * self.num_gens)
        self.parent.append(coset)
        if coset and coset % _PROGRESS_EVERY == 0:
            logger.debug("defined %d cosets", coset)
        return coset

    def _define(self, coset: int, x: int) -> None:
        beta = self._new_coset()
        self.table[coset][x] = beta
        self.table[beta][x] = coset

    def _rep(self, coset: int) -> int:
        parent = self.parent
        root = coset
        while parent[root] != root:
            root = parent[root]
        while parent[coset] != root:
            parent[coset], coset = root, parent[coset]
        return root

    def _merge(self, a: int, b: int, queue: List[int]) -> None:
        a, b = self._rep(a), self._rep(b)
        if a == b:
            return
        low, high = (a, b) if a < b else (b, a)
        self.parent[high] = low
        queue.append(high)

    def _coincidence(self, a: int, b: int) -> None:
        table = self.table
        queue: List[int] = []
        self._merge(a, b, queue)
        head = 0
        while head < len(queue):
            gamma = queue[head]
            head += 1
            row = table[gamma]
            for x in range(self.num_gens):
                delta = row[x]
                if delta == UNDEFINED:
                    continue
                table[delta][x] = UNDEFINED
                mu, nu = self._rep(gamma), self._rep(delta)
                if table[mu][x] != UNDEFINED:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][x] != UNDEFINED:
                    self._merge(mu, table[nu][x], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x] = mu

    def _scan_and_fill(self, alpha: int, word: Sequence[int]) -> None:
        table = self.table
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j:
                nxt = table[f][word[i]]
                if nxt == UNDEFINED:
                    break
                f, i = nxt, i + 1
            if i > j:
                if f != b:
                    self._coincidence(f, b)
                return
            while j >= i:
                nxt = table[b][word[j]]
                if nxt == UNDEFINED:
                    break
                b, j = nxt, j - 1
            if j < i:
                self._coincidence(f, b)
                return
            if i == j:
                # deduction
                table[f][word[i]] = b
                table[b][word[i]] = f
                return
            self._define(f, word[i])

    # -- driver -----------------------------------------------------------

    def _live(self, coset: int) -> bool:
        return self.parent[coset] == coset

    def _incomplete(self) -> bool:
        return any(
            UNDEFINED in row for coset, row in enumerate(self.table) if self._live(coset)
        )

    def _hlt_pass(self) -> None:
        alpha = 0
        while alpha < len(self.table):
            if self._live(alpha):
                for word in self.relators:
                    self._scan_and_fill(alpha, word)
                    if not self._live(alpha):
                        break
                if self._live(alpha):
                    row = self.table[alpha]
                    for x in range(self.num_gens):
                        if row[x] == UNDEFINED:
                            self._define(alpha, x)
            alpha += 1

    def run(self) -> CosetTable:
        self.table, self.parent = [], []
        self._new_coset()
        for word in self.subgroup:
            self._scan_and_fill(0, word)
        self._hlt_pass()
        while self._incomplete():
            self._hlt_pass()
        table = self._standardize()
        logger.debug(
            "enumeration closed: %d cosets after %d definitions", table.num_cosets, len(self.table)
        )
        return table

    def _standardize(self) -> CosetTable:
        """Renumber live cosets in breadth-first order from the subgroup coset."""
        number = {self._rep(0): 0}
        order = [self._rep(0)]
        for coset in order:
            for x in range(self.num_gens):
                image = self._rep(self.table[coset][x])
                if image not in number:
                    number[image] = len(order)
                    order.append(image)
        action = tuple(
            tuple(number[self._rep(self.table[coset][x])] for x in range(self.num_gens))
            for coset in order
        )
        return CosetTable(generators=self.system.generators, action=action, complete=True)


def coset_enumerate(
    system: TwoDimCoxeterSystem,
    subgroup_gens: Sequence[Word],
    max_cosets: Optional[int] = None,
) -> CosetTable:
    return CosetEnumerator(system, subgroup_gens, max_cosets).run()


def _subset_words(system: TwoDimCoxeterSystem, subset: GeneratorSubset) -> List[Word]:
    for member in subset:
        system.position(member)
    return [Word.of(gen) for gen in system.generators if gen in subset]


def group_order(system: TwoDimCoxeterSystem, max_cosets: Optional[int] = None) -> int:
    return coset_enumerate(system, [], max_cosets).num_cosets


def subgroup_index(
    system: TwoDimCoxeterSystem,
    subset: GeneratorSubset,
    max_cosets: Optional[int] = None,
) -> int:
    return coset_enumerate(system, _subset_words(system, subset), max_cosets).num_cosets


def verify_coset_reps(
    system: TwoDimCoxeterSystem,
    h_subset: GeneratorSubset,
    reps: Sequence[Word],
    max_cosets: Optional[int] = None,
) -> CosetRepReport:
    """Trace each representative from the subgroup coset and compare with the index."""
    if not reps:
        raise InvalidInputError("at least one coset representative is required")
    for word in reps:
        word.check_alphabet(system.generators)
    table = coset_enumerate(system, _subset_words(system, h_subset), max_cosets)
    landed = [table.trace(word) for word in reps]
    hit = set(landed)
    return CosetRepReport(
        distinct=len(hit) == len(landed),
        covering=len(hit) == table.num_cosets,
        count=len(reps),
        index=table.num_cosets,
        landed=landed,
    )


def dump_table_csv(table: CosetTable, path: str) -> None:
    with open(path, "w", newline="") as handle:
        csv.writer(handle).writerows(table.to_csv_rows())
