"""Hasse-diagram export in DOT format.

Nodes are named c0..cN in lattice order and grouped into ranks by their
longest path from the top, so every covering edge points downward when
rendered. Labels show the full intent or, in reduced mode, only the
attributes introduced at that concept (lower levels then read as
combinations of the labels above them).
"""

from __future__ import annotations

from .lattice import ConceptLattice
from ._fmt import brace_set

LABELINGS = ("full", "reduced")


def lattice_to_dot(
    lattice: ConceptLattice,
    *,
    labeling: str = "full",
    show_extent_pct: bool = False,
    hide_empty_bottom: bool = False,
) -> str:
    """Render the covering relation as a DOT digraph (edges upper -> lower)."""
    if labeling not in LABELINGS:
        raise ValueError(f"labeling must be one of {LABELINGS}, got {labeling!r}")

    hidden = None
    if hide_empty_bottom and not lattice.bottom.extent:
        hidden = lattice.bottom_index

    depths = _depths_from_top(lattice)
    own = _own_attributes(lattice) if labeling == "reduced" else None

    lines = ["digraph lattice {", "  rankdir=TB;", "  node [shape=box];"]

    by_depth: dict[int, list[int]] = {}
    for i in range(len(lattice.concepts)):
        if i == hidden:
            continue
        by_depth.setdefault(depths[i], []).append(i)
    for depth in sorted(by_depth):
        members = "; ".join(f"c{i}" for i in by_depth[depth])
        lines.append(f"  {{ rank=same; {members}; }}")

    for i, concept in enumerate(lattice.concepts):
        if i == hidden:
            continue
        if labeling == "full":
            parts = [brace_set(concept.intent)]
        else:
            parts = [brace_set(own[i])] if own[i] else []
        if show_extent_pct:
            parts.append(f"{concept.extent_pct:.2%}")
        label = "\\n".join(_escape(p) for p in parts)
        lines.append(f'  c{i} [label="{label}"];')

    for upper, lower in lattice.edges:
        if hidden in (upper, lower):
            continue
        lines.append(f"  c{upper} -> c{lower};")

    lines.append("}")
    return "\n".join(lines) + "\n"


def _depths_from_top(lattice: ConceptLattice) -> list[int]:
    """Longest-path depth of each concept below the top.

    Lattice order (extent size descending) is a topological order of the
    covering DAG, so one forward pass suffices.
    """
    depths = [0] * len(lattice.concepts)
    for upper, lower in sorted(lattice.edges):
        depths[lower] = max(depths[lower], depths[upper] + 1)
    return depths


def _own_attributes(lattice: ConceptLattice) -> list[set[str]]:
    """For each concept, the attributes whose topmost occurrence it is."""
    own: list[set[str]] = [set() for _ in lattice.concepts]
    all_attrs = lattice.bottom.intent
    for attr in all_attrs:
        best = None
        for i, concept in enumerate(lattice.concepts):
            if attr in concept.intent:
                if best is None or len(concept.extent) > len(
                    lattice.concepts[best].extent
                ):
                    best = i
        own[best].add(attr)
    return own


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')
