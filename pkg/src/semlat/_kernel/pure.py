"""Pure-Python bitset kernel.

Incidence columns are arbitrary-width Python integers, one bit per object.
Bitwise AND on big ints runs inside the interpreter's C core, so this
fallback stays usable even on contexts with thousands of objects.

Derivations work column-wise only:
  extent(B) = AND of the columns of the attributes in B
  intent(E) = the attributes j with E a subset of column j

The empty-set conventions fall out for free: an AND over no columns is the
full object universe, and the empty extent is a subset of every column.
"""

from __future__ import annotations

from typing import Sequence


class PureKernel:
    """Derivation primitives over a packed boolean incidence matrix."""

    backend = "pure"

    __slots__ = (
        "n_objects",
        "n_attributes",
        "rows",
        "cols",
        "object_universe",
        "attribute_universe",
    )

    def __init__(self, rows: Sequence[int], n_objects: int, n_attributes: int):
        self.n_objects = n_objects
        self.n_attributes = n_attributes
        self.object_universe = (1 << n_objects) - 1
        self.attribute_universe = (1 << n_attributes) - 1
        self.rows = list(rows)
        cols = [0] * n_attributes
        for i, row in enumerate(self.rows):
            bit = 1 << i
            m = row
            while m:
                low = m & -m
                cols[low.bit_length() - 1] |= bit
                m ^= low
        self.cols = cols

    def extent(self, intent_mask: int) -> int:
        """Objects having every attribute in the mask (all objects for 0)."""
        ext = self.object_universe
        m = intent_mask
        while m:
            low = m & -m
            ext &= self.cols[low.bit_length() - 1]
            m ^= low
        return ext

    def intent(self, extent_mask: int) -> int:
        """Attributes shared by every object in the mask (all attributes for 0)."""
        out = 0
        bit = 1
        for col in self.cols:
            if extent_mask & ~col == 0:
                out |= bit
            bit <<= 1
        return out

    def close(self, intent_mask: int) -> tuple[int, int]:
        """Extent of the mask plus the closure of the mask."""
        ext = self.extent(intent_mask)
        return ext, self.intent(ext)

    def close_step(self, extent_mask: int, attr: int) -> tuple[int, int]:
        """Closure after narrowing an extent by one more attribute."""
        ext = extent_mask & self.cols[attr]
        return ext, self.intent(ext)

    def extent_count(self, intent_mask: int) -> int:
        """Support count of an attribute set."""
        return self.extent(intent_mask).bit_count()

    def upper_candidate_intents(self, extent_mask: int, intent_mask: int) -> list[int]:
        """Distinct intents reachable by adding one outside object.

        The shared attributes of an object set are always a closed set, so
        intent & row(g) is directly the intent of the concept generated by
        extent + {g}; no closure pass is needed.
        """
        out = set()
        missing = self.object_universe & ~extent_mask
        while missing:
            low = missing & -missing
            missing ^= low
            out.add(intent_mask & self.rows[low.bit_length() - 1])
        return list(out)
