"""Brute-force reference implementations, used as independent test oracles.

Everything here works on plain Python sets and exhaustive scans over the
boolean incidence matrix. Nothing is shared with the optimized engine
beyond the read-only context accessors, so golden values and equivalence
tests exercise a genuinely separate path.
"""

from __future__ import annotations

from itertools import combinations

from .context import FormalContext


def object_attribute_sets(ctx: FormalContext) -> dict[str, frozenset[str]]:
    """Map each object id to the set of attributes it has."""
    attrs = ctx.attributes
    out = {}
    for obj, row in zip(ctx.objects, ctx.bool_rows()):
        out[obj] = frozenset(a for a, cell in zip(attrs, row) if cell)
    return out


def derive_intent_bruteforce(ctx, extent) -> frozenset[str]:
    rows = object_attribute_sets(ctx)
    result = set(ctx.attributes)
    for obj in extent:
        result &= rows[obj]
    return frozenset(result)


def derive_extent_bruteforce(ctx, intent) -> frozenset[str]:
    intent = set(intent)
    rows = object_attribute_sets(ctx)
    return frozenset(obj for obj, attrs in rows.items() if intent <= attrs)


def close_attributes_bruteforce(ctx, attrs) -> frozenset[str]:
    return derive_intent_bruteforce(ctx, derive_extent_bruteforce(ctx, attrs))


def concepts_bruteforce(
    ctx: FormalContext,
) -> set[tuple[frozenset[str], frozenset[str]]]:
    """Every (extent, intent) pair, found by closing all attribute subsets."""
    attrs = list(ctx.attributes)
    found = set()
    for size in range(len(attrs) + 1):
        for subset in combinations(attrs, size):
            extent = derive_extent_bruteforce(ctx, subset)
            intent = derive_intent_bruteforce(ctx, extent)
            found.add((extent, intent))
    return found


def covering_edges_bruteforce(
    concepts,
) -> set[tuple[frozenset[str], frozenset[str]]]:
    """Covering pairs as (upper extent, lower extent), by pairwise checks."""
    extents = [ext for ext, _ in concepts]
    edges = set()
    for lower in extents:
        for upper in extents:
            if not (lower < upper):
                continue
            if any(lower < mid < upper for mid in extents):
                continue
            edges.add((upper, lower))
    return edges


def itemsets_bruteforce(
    ctx: FormalContext,
    theta: int,
    min_size: int,
    max_size: int,
    strict: bool = False,
) -> dict[frozenset[str], int]:
    """All attribute sets within the size bounds meeting the support threshold."""
    attrs = list(ctx.attributes)
    out = {}
    for size in range(min_size, min(max_size, len(attrs)) + 1):
        for subset in combinations(attrs, size):
            count = len(derive_extent_bruteforce(ctx, subset))
            if count > theta if strict else count >= theta:
                out[frozenset(subset)] = count
    return out


def rules_bruteforce(
    ctx: FormalContext,
    itemsets: dict[frozenset[str], int],
    min_supp: float,
    min_conf: float,
) -> set[tuple[frozenset[str], frozenset[str], float, float]]:
    """Every (antecedent, consequent, support, confidence) from itemset splits."""
    n = ctx.n_objects
    out = set()
    for items, joint in itemsets.items():
        if len(items) < 2:
            continue
        members = sorted(items)
        for k in range(1, len(members)):
            for left in combinations(members, k):
                antecedent = frozenset(left)
                consequent = items - antecedent
                supp = joint / n
                conf = joint / len(derive_extent_bruteforce(ctx, antecedent))
                if supp > min_supp and conf > min_conf:
                    out.add((antecedent, consequent, supp, conf))
    return out
