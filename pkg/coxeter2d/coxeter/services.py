# coxeter2d/coxeter/services.py
import logging
from typing import List

from coxeter2d.core.exceptions import InvalidInputError
from coxeter2d.coxeter.models import (
    GeneratorSubset,
    TwoDimCoxeterSystem,
    generator_name,
    parse_generator,
)
from coxeter2d.coxeter.schemas import DiagramOut, EdgeOut, FacetOut
from coxeter2d.fp_group.models import Word
from coxeter2d.parabolic.models import Decomposition

logger = logging.getLogger(__name__)

DIAGRAM_FORMATS = ("dot", "json")


def a2n(n: int) -> TwoDimCoxeterSystem:
    """
    The 2n-generator system A_{2,n}: 4 along each chain, 3 on the rungs,
    2 elsewhere; triple labels 3 on the squares and 4 on chain triples.
    """
    if n < 1:
        raise InvalidInputError(f"A_2,n needs n >= 1, got {n}")
    xs = [generator_name("x", i) for i in range(1, n + 1)]
    ys = [generator_name("y", i) for i in range(1, n + 1)]
    generators = tuple(xs + ys)

    f = {}
    for a_pos, a in enumerate(generators):
        for b in generators[a_pos + 1:]:
            f[frozenset((a, b))] = 2
    for i in range(n):
        f[frozenset((xs[i], ys[i]))] = 3
        if i + 1 < n:
            f[frozenset((xs[i], xs[i + 1]))] = 4
            f[frozenset((ys[i], ys[i + 1]))] = 4

    g = {}
    for i in range(n - 1):
        for triple in (
            (xs[i], xs[i + 1], ys[i]),
            (xs[i], xs[i + 1], ys[i + 1]),
            (xs[i], ys[i], ys[i + 1]),
            (xs[i + 1], ys[i], ys[i + 1]),
        ):
            g[frozenset(triple)] = 3
    for i in range(n - 2):
        g[frozenset(xs[i:i + 3])] = 4
        g[frozenset(ys[i:i + 3])] = 4

    return TwoDimCoxeterSystem(generators=generators, f=f, g=g)


def restrict(system: TwoDimCoxeterSystem, subset: GeneratorSubset) -> TwoDimCoxeterSystem:
    """Restrict f and g to the pairs and triples inside ``subset``."""
    for member in subset:
        system.position(member)
    kept = tuple(gen for gen in system.generators if gen in subset)
    keep = set(kept)
    f = {key: label for key, label in system.f.items() if key <= keep}
    g = {key: label for key, label in system.g.items() if key <= keep}
    return TwoDimCoxeterSystem(generators=kept, f=f, g=g)


def stopovers(decomposition: Decomposition) -> frozenset:
    return decomposition.stopovers


def generator_subset(lam: Decomposition, mu: Decomposition) -> GeneratorSubset:
    """S_{λ|μ}: x_i for i outside s(λ), y_j for j outside s(μ)."""
    if lam.total != mu.total:
        raise InvalidInputError(f"decompositions {lam} and {mu} have different totals")
    if lam.total < 2:
        raise InvalidInputError("S_{λ|μ} needs n+1 >= 2")
    n = lam.total - 1
    skip_x, skip_y = lam.stopovers, mu.stopovers
    members = {generator_name("x", i) for i in range(1, n + 1) if i not in skip_x}
    members |= {generator_name("y", j) for j in range(1, n + 1) if j not in skip_y}
    return GeneratorSubset(frozenset(members))


def presentation_system(lam: Decomposition, mu: Decomposition) -> TwoDimCoxeterSystem:
    """A_{2,n}(S_{λ|μ}); for n+1 = 1 there are no generators at all."""
    if lam.total != mu.total:
        raise InvalidInputError(f"decompositions {lam} and {mu} have different totals")
    if lam.total == 1:
        return TwoDimCoxeterSystem.empty()
    return restrict(a2n(lam.total - 1), generator_subset(lam, mu))


def relators(system: TwoDimCoxeterSystem) -> List[Word]:
    """
    z^2 for each generator, then (zt)^f per pair, then (ztv)^g per
    labelled triple; generator-position order throughout. Zero labels
    impose nothing and are skipped.
    """
    words = [Word.of(z, z) for z in system.generators]
    for a, b, label in system.pairs():
        if label:
            words.append(Word.of(a, b) ** label)
    for a, b, c, label in system.labelled_triples():
        words.append(Word.of(a, b, c) ** label)
    return words


def swap_xy(system: TwoDimCoxeterSystem) -> TwoDimCoxeterSystem:
    """Rename x_i <-> y_i, keeping x before y in the generator order."""
    rename = {}
    for gen in system.generators:
        parsed = parse_generator(gen)
        if parsed is None:
            raise InvalidInputError(f"generator {gen!r} carries no x/y index")
        kind, index = parsed
        rename[gen] = generator_name("y" if kind == "x" else "x", index)
    order = sorted(rename.values(), key=lambda gen: (gen[0], parse_generator(gen)[1]))
    f = {frozenset(rename[gen] for gen in key): label for key, label in system.f.items()}
    g = {frozenset(rename[gen] for gen in key): label for key, label in system.g.items()}
    return TwoDimCoxeterSystem(generators=tuple(order), f=f, g=g)


def presentation_depth(system: TwoDimCoxeterSystem) -> int:
    """
    Widest index span among relators other than x^2 and commutations.
    """
    def index(gen: str) -> int:
        parsed = parse_generator(gen)
        if parsed is None:
            raise InvalidInputError(f"generator {gen!r} carries no index")
        return parsed[1]

    depth = 0
    for a, b, label in system.pairs():
        if label and label != 2:
            span = {index(a), index(b)}
            depth = max(depth, max(span) - min(span) + 1)
    for a, b, c, _ in system.labelled_triples():
        span = {index(a), index(b), index(c)}
        depth = max(depth, max(span) - min(span) + 1)
    return depth


def is_local(system: TwoDimCoxeterSystem, depth: int) -> bool:
    return presentation_depth(system) <= depth


def diagram_document(system: TwoDimCoxeterSystem) -> DiagramOut:
    return DiagramOut(
        vertices=list(system.generators),
        edges=[EdgeOut(a=a, b=b, f=label) for a, b, label in system.pairs()],
        facets=[FacetOut(a=a, b=b, c=c, g=label) for a, b, c, label in system.labelled_triples()],
    )


# edge drawing: dotted commutes, plain line for 3, doubled line for 4
_EDGE_STYLE = {
    2: 'style=dotted',
    3: 'style=solid',
    4: 'style=bold, color="black:invis:black"',
}

# triples below this label are left to the JSON document
DOT_MIN_FACET_LABEL = 3


def _dot_id(name: str) -> str:
    return '"' + name.replace('"', '\\"') + '"'


def _to_dot(system: TwoDimCoxeterSystem) -> str:
    lines = ["graph coxeter {", "    node [shape=point, xlabel=\"\\N\"];"]
    for gen in system.generators:
        lines.append(f"    {_dot_id(gen)};")
    for a, b, label in system.pairs():
        style = _EDGE_STYLE.get(label, f'style=solid, label="{label}"')
        lines.append(f"    {_dot_id(a)} -- {_dot_id(b)} [{style}];")
    for a, b, c, label in system.labelled_triples():
        if label < DOT_MIN_FACET_LABEL:
            continue
        facet = _dot_id(f"facet_{a}_{b}_{c}")
        lines.append(f'    {facet} [shape=triangle, width=0.3, label="{label}", xlabel=""];')
        for vertex in (a, b, c):
            lines.append(f"    {facet} -- {_dot_id(vertex)} [style=dashed, color=gray];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_diagram(system: TwoDimCoxeterSystem, fmt: str) -> str:
    """Render the labelled simplicial complex as DOT or JSON text."""
    if fmt == "json":
        return diagram_document(system).model_dump_json(indent=2) + "\n"
    if fmt == "dot":
        return _to_dot(system)
    raise InvalidInputError(f"unsupported diagram format {fmt!r}; choose one of {DIAGRAM_FORMATS}")
