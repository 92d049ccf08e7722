"""Concept enumeration, lattice order, covering edges, ideals and filters.

Enumeration is Close-by-One: depth-first over attributes in lexicographic
order, closing one added attribute at a time and keeping a branch only
when the closure introduces no attribute smaller than the one added (the
canonicity test). Each closed set is therefore produced exactly once.
The quadratic brute-force twin lives in :mod:`semlat.oracle`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from ._fmt import brace_set
from .context import FormalContext, SemanticField
from .errors import LatticeSizeError, SemlatError

DEFAULT_MAX_CONCEPTS = 100000


@dataclass(frozen=True)
class Concept:
    """An (extent, intent) pair where each side derives exactly the other."""

    extent: frozenset[str]
    intent: frozenset[str]
    extent_pct: float = field(compare=False)

    def sort_key(self):
        return (-len(self.extent), tuple(sorted(self.intent)))

    def label(self) -> str:
        return brace_set(self.intent)


@dataclass(frozen=True)
class ConceptLattice:
    """All concepts of a context plus the covering (Hasse) edges.

    Concepts are sorted by extent size descending, ties broken by intent
    lexicographically, so index 0 is always the top. Edges point from the
    more general concept (upper) to the more specific one (lower).
    """

    concepts: tuple[Concept, ...]
    top_index: int
    bottom_index: int
    edges: tuple[tuple[int, int], ...]

    @property
    def top(self) -> Concept:
        return self.concepts[self.top_index]

    @property
    def bottom(self) -> Concept:
        return self.concepts[self.bottom_index]

    def __len__(self) -> int:
        return len(self.concepts)

    def index_of(self, concept: Concept) -> int:
        for i, c in enumerate(self.concepts):
            if c == concept:
                return i
        raise SemlatError(f"concept with intent {brace_set(concept.intent)} is not in the lattice")

    def find_by_intent(self, intent: Iterable[str]) -> Concept | None:
        wanted = frozenset(intent)
        for c in self.concepts:
            if c.intent == wanted:
                return c
        return None

    def upper_covers(self, index: int) -> list[int]:
        return [u for u, l in self.edges if l == index]

    def lower_covers(self, index: int) -> list[int]:
        return [l for u, l in self.edges if u == index]


def enumerate_concepts(
    ctx: FormalContext, max_concepts: int = DEFAULT_MAX_CONCEPTS
) -> ConceptLattice:
    """Enumerate every concept of the context and the covering relation.

    Raises :class:`LatticeSizeError` when the concept count exceeds
    ``max_concepts``; a smaller semantic field keeps the lattice tractable.
    """
    kernel = ctx.kernel
    n_attrs = ctx.n_attributes
    pairs: list[tuple[int, int]] = []

    ext0, int0 = kernel.close(0)
    stack = [(ext0, int0, 0)]
    while stack:
        extent, intent, min_attr = stack.pop()
        pairs.append((extent, intent))
        if len(pairs) > max_concepts:
            raise LatticeSizeError(
                f"more than {max_concepts} concepts; restrict the semantic field "
                f"or raise max_concepts"
            )
        for j in range(min_attr, n_attrs):
            if intent >> j & 1:
                continue
            new_ext, new_int = kernel.close_step(extent, j)
            below = (1 << j) - 1
            if new_int & below == intent & below:
                stack.append((new_ext, new_int, j + 1))

    n_objects = ctx.n_objects
    concepts = [
        Concept(
            extent=ctx.objects_from_mask(ext),
            intent=ctx.attributes_from_mask(itt),
            extent_pct=ext.bit_count() / n_objects,
        )
        for ext, itt in pairs
    ]
    order = sorted(range(len(concepts)), key=lambda i: concepts[i].sort_key())
    concepts = [concepts[i] for i in order]
    masks = [pairs[i] for i in order]

    edges = _covering_edges(ctx, masks)

    index_by_extent = {ext: i for i, (ext, _) in enumerate(masks)}
    top_index = 0
    bottom_index = index_by_extent[kernel.extent(kernel.attribute_universe)]
    return ConceptLattice(
        concepts=tuple(concepts),
        top_index=top_index,
        bottom_index=bottom_index,
        edges=tuple(sorted(edges)),
    )


def _covering_edges(ctx, masks):
    """Upper covers of each concept via closures of extent plus one object.

    The concept generated by extent + {g} has intent = intent & row(g)
    (the shared attributes of an object set are always a closed set), so
    each candidate costs a single AND. Keeping the maximal candidate
    intents keeps exactly the minimal extents, i.e. the upper covers.
    """
    kernel = ctx.kernel
    universe = kernel.object_universe
    index_by_intent = {itt: i for i, (_, itt) in enumerate(masks)}
    edges = []
    for li, (ext, itt) in enumerate(masks):
        if ext == universe:
            continue  # the top has no upper neighbours
        candidates = kernel.upper_candidate_intents(ext, itt)
        for cand in candidates:
            if any(other != cand and other & cand == cand for other in candidates):
                continue  # a bigger candidate intent sits strictly between
            edges.append((index_by_intent[cand], li))
    return edges


def order_leq(c1: Concept, c2: Concept) -> bool:
    """True when c1 is at most as general as c2 (extent containment)."""
    return c1.extent <= c2.extent


def order_ideal(lattice: ConceptLattice, concept: Concept) -> list[Concept]:
    """Every concept below or equal to the given one, in lattice order."""
    _require_member(lattice, concept)
    return [c for c in lattice.concepts if c.extent <= concept.extent]


def order_filter(lattice: ConceptLattice, concept: Concept) -> list[Concept]:
    """Every concept above or equal to the given one, in lattice order."""
    _require_member(lattice, concept)
    return [c for c in lattice.concepts if concept.extent <= c.extent]


def ideal_filter_field(lattice: ConceptLattice, concept: Concept) -> SemanticField:
    """The semantic field spanned by a concept's ideal and filter together.

    The union of the intents over ideal plus filter is returned as a new
    field named after the concept's intent.
    """
    _require_member(lattice, concept)
    keywords: set[str] = set()
    for c in order_ideal(lattice, concept):
        keywords |= c.intent
    for c in order_filter(lattice, concept):
        keywords |= c.intent
    return SemanticField(name=brace_set(concept.intent), keywords=tuple(sorted(keywords)))


def lattice_to_dict(lattice: ConceptLattice) -> dict:
    """Plain-data form: concepts (ids and attributes sorted), top, bottom, edges."""
    return {
        "concepts": [
            {
                "extent": sorted(c.extent),
                "intent": sorted(c.intent),
                "extent_pct": round(c.extent_pct, 4),
            }
            for c in lattice.concepts
        ],
        "top": lattice.top_index,
        "bottom": lattice.bottom_index,
        "edges": [list(edge) for edge in lattice.edges],
    }


def lattice_to_json(lattice: ConceptLattice) -> str:
    return json.dumps(lattice_to_dict(lattice), ensure_ascii=False, indent=2) + "\n"


def _require_member(lattice: ConceptLattice, concept: Concept):
    if concept not in lattice.concepts:
        raise SemlatError(
            f"concept with intent {brace_set(concept.intent)} is not in the lattice"
        )
