"""Formal contexts over a semantic field, with the two derivation maps.

A context records which messages (objects) contain which field keywords
(attributes) as a boolean incidence matrix. The derivation maps connect
the two sides: an object set derives the attributes they all share, an
attribute set derives the objects having them all. Composing the two
yields the closure operator everything downstream is built on.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from ._kernel import make_kernel
from .corpus import Message, is_normalized_lexeme
from .errors import (
    EmptyContextError,
    FieldError,
    UnknownAttributeError,
    UnknownObjectError,
)

_NAME_LINE_RE = re.compile(r"name:\s*(.*)")


@dataclass(frozen=True)
class SemanticField:
    """A named, ordered set of keywords delimiting the attribute universe."""

    name: str
    keywords: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "keywords", tuple(self.keywords))
        if not self.keywords:
            raise FieldError(f"semantic field {self.name!r} has no keywords")
        seen = set()
        for kw in self.keywords:
            if not is_normalized_lexeme(kw):
                raise FieldError(f"keyword {kw!r} is not a normalized lexeme")
            if kw in seen:
                raise FieldError(f"duplicate keyword {kw!r}")
            seen.add(kw)


class FormalContext:
    """Boolean incidence between message ids and field keywords.

    Objects keep input order; attributes are sorted lexicographically.
    Every object row has at least one incidence (empty rows are excluded
    when the context is built). Immutable once constructed; all queries
    are answered by a bitset kernel shared read-only.
    """

    __slots__ = ("objects", "attributes", "_rows", "_obj_index", "_attr_index", "_kernel")

    def __init__(
        self,
        objects: Sequence[str],
        attributes: Sequence[str],
        rows: Sequence[int],
        *,
        backend: str | None = None,
    ):
        # rows[i] is a bitmask over attribute indices; callers go through
        # build_context / from_bools which enforce the invariants.
        objects = tuple(objects)
        attributes = tuple(attributes)
        if not objects:
            raise EmptyContextError("empty context: no objects")
        if not attributes:
            raise FieldError("context needs at least one attribute")
        if len(set(objects)) != len(objects):
            dup = _first_duplicate(objects)
            raise ValueError(f"duplicate object id {dup!r}")
        if len(set(attributes)) != len(attributes):
            dup = _first_duplicate(attributes)
            raise ValueError(f"duplicate attribute {dup!r}")
        if list(attributes) != sorted(attributes):
            raise ValueError("attributes must be sorted lexicographically")
        if len(rows) != len(objects):
            raise ValueError("one incidence row required per object")
        for obj, row in zip(objects, rows):
            if row == 0:
                raise ValueError(f"object {obj!r} has an all-false incidence row")
        self.objects = objects
        self.attributes = attributes
        self._rows = tuple(rows)
        self._obj_index = {obj: i for i, obj in enumerate(objects)}
        self._attr_index = {attr: j for j, attr in enumerate(attributes)}
        self._kernel = make_kernel(self._rows, len(objects), len(attributes), backend)

    @classmethod
    def from_bools(
        cls,
        objects: Sequence[str],
        attributes: Sequence[str],
        rows: Sequence[Sequence[bool]],
        *,
        backend: str | None = None,
    ) -> "FormalContext":
        """Build from an explicit boolean matrix.

        Attributes may come in any order (they are sorted, and columns are
        permuted to match); objects with all-false rows are dropped, as at
        build time.
        """
        attributes = tuple(attributes)
        order = sorted(range(len(attributes)), key=lambda j: attributes[j])
        sorted_attrs = tuple(attributes[j] for j in order)
        kept_objects = []
        masks = []
        for obj, row in zip(objects, rows):
            if len(row) != len(attributes):
                raise ValueError(f"row for object {obj!r} has wrong width")
            mask = 0
            for new_j, old_j in enumerate(order):
                if row[old_j]:
                    mask |= 1 << new_j
            if mask == 0:
                continue
            kept_objects.append(obj)
            masks.append(mask)
        if not kept_objects:
            raise EmptyContextError("empty context: every object row is all-false")
        return cls(kept_objects, sorted_attrs, masks, backend=backend)

    # -- index/mask plumbing ------------------------------------------------

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    @property
    def kernel(self):
        return self._kernel

    def object_mask(self, ids: Iterable[str]) -> int:
        mask = 0
        for obj in ids:
            idx = self._obj_index.get(obj)
            if idx is None:
                raise UnknownObjectError(f"unknown object id {obj!r}")
            mask |= 1 << idx
        return mask

    def attribute_mask(self, attrs: Iterable[str]) -> int:
        mask = 0
        for attr in attrs:
            idx = self._attr_index.get(attr)
            if idx is None:
                raise UnknownAttributeError(f"unknown attribute {attr!r}")
            mask |= 1 << idx
        return mask

    def objects_from_mask(self, mask: int) -> frozenset[str]:
        return frozenset(self.objects[i] for i in _iter_bits(mask))

    def attributes_from_mask(self, mask: int) -> frozenset[str]:
        return frozenset(self.attributes[j] for j in _iter_bits(mask))

    def row_mask(self, i: int) -> int:
        return self._rows[i]

    def bool_rows(self) -> list[tuple[bool, ...]]:
        """The incidence matrix as plain booleans (row-major)."""
        n = self.n_attributes
        return [tuple(bool(row >> j & 1) for j in range(n)) for row in self._rows]

    def __repr__(self) -> str:
        return (
            f"FormalContext({self.n_objects} objects x {self.n_attributes} attributes)"
        )


def build_context(
    messages: Sequence[Message],
    field: SemanticField,
    *,
    backend: str | None = None,
) -> FormalContext:
    """Cross messages with field keywords into a formal context.

    A cell is true iff the keyword occurs among the message's tokens.
    Messages containing no field keyword are excluded; keywords missing
    from every message keep their (all-false) column.
    """
    attributes = tuple(sorted(field.keywords))
    attr_index = {attr: j for j, attr in enumerate(attributes)}
    objects = []
    masks = []
    for msg in messages:
        mask = 0
        for tok in set(msg.tokens):
            j = attr_index.get(tok)
            if j is not None:
                mask |= 1 << j
        if mask == 0:
            continue
        objects.append(msg.id)
        masks.append(mask)
    if not objects:
        raise EmptyContextError(
            f"empty context: no message contains a keyword of field {field.name!r}"
        )
    return FormalContext(objects, attributes, masks, backend=backend)


def derive_intent(ctx: FormalContext, extent: Iterable[str]) -> frozenset[str]:
    """Attributes shared by every object in ``extent`` (all, when empty)."""
    mask = ctx.object_mask(extent)
    return ctx.attributes_from_mask(ctx.kernel.intent(mask))


def derive_extent(ctx: FormalContext, intent: Iterable[str]) -> frozenset[str]:
    """Objects possessing every attribute in ``intent`` (all, when empty)."""
    mask = ctx.attribute_mask(intent)
    return ctx.objects_from_mask(ctx.kernel.extent(mask))


def close_attributes(ctx: FormalContext, attrs: Iterable[str]) -> frozenset[str]:
    """The closure of an attribute set: derive its extent, then that extent's intent."""
    mask = ctx.attribute_mask(attrs)
    _, closed = ctx.kernel.close(mask)
    return ctx.attributes_from_mask(closed)


# -- serialization ----------------------------------------------------------


def context_to_dict(ctx: FormalContext) -> dict:
    """Plain-data form: objects, attributes, and '0'/'1' row strings."""
    n = ctx.n_attributes
    rows = [
        "".join("1" if row >> j & 1 else "0" for j in range(n))
        for row in (ctx.row_mask(i) for i in range(ctx.n_objects))
    ]
    return {
        "objects": list(ctx.objects),
        "attributes": list(ctx.attributes),
        "rows": rows,
    }


def context_from_dict(doc: dict, *, backend: str | None = None) -> FormalContext:
    """Inverse of :func:`context_to_dict`."""
    try:
        objects = list(doc["objects"])
        attributes = list(doc["attributes"])
        row_strings = list(doc["rows"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"context document is missing field: {exc}") from exc
    masks = []
    for obj, bits in zip(objects, row_strings):
        if len(bits) != len(attributes) or set(bits) - {"0", "1"}:
            raise ValueError(f"bad incidence row for object {obj!r}")
        masks.append(sum(1 << j for j, ch in enumerate(bits) if ch == "1"))
    return FormalContext(objects, attributes, masks, backend=backend)


def context_to_json(ctx: FormalContext) -> str:
    return json.dumps(context_to_dict(ctx), ensure_ascii=False, indent=2) + "\n"


def context_from_json(text: str, *, backend: str | None = None) -> FormalContext:
    return context_from_dict(json.loads(text), backend=backend)


# -- semantic-field files ---------------------------------------------------


def parse_field(text: str, default_name: str = "field") -> SemanticField:
    """Parse a field file: one keyword per line.

    A line starting with '#' counts as a keyword only when it is a single
    hashtag token; otherwise it is a comment. An optional first line
    ``name: <label>`` names the field. Keywords are lowercased.
    """
    name = default_name
    keywords: list[str] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        entry = line.strip()
        if lineno == 1:
            m = _NAME_LINE_RE.fullmatch(entry)
            if m:
                name = m.group(1).strip() or default_name
                continue
        if not entry:
            continue
        entry = entry.lower()
        if entry.startswith("#"):
            if not is_normalized_lexeme(entry):
                continue  # comment, not a single hashtag token
        elif not is_normalized_lexeme(entry):
            raise FieldError(f"line {lineno}: invalid keyword {entry!r}")
        if entry not in keywords:
            keywords.append(entry)
    if not keywords:
        raise FieldError("field file contains no keywords")
    return SemanticField(name, tuple(keywords))


def load_field(path: str | Path) -> SemanticField:
    path = Path(path)
    return parse_field(path.read_text(encoding="utf-8"), default_name=path.stem)


def _first_duplicate(items: Sequence[str]) -> str:
    seen = set()
    for item in items:
        if item in seen:
            return item
        seen.add(item)
    return ""


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
