"""Frequent attribute itemsets and association rules over a context.

Mining is level-wise: size-k candidates are joined from frequent (k-1)
sets sharing a prefix, pruned by the anti-monotone property, and counted
against the context. Rules come from splitting each frequent set into a
nonempty antecedent/consequent pair; both thresholds are strict, so a
rule must exceed the minima, not merely reach them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, groupby
from typing import Iterable, Sequence

from ._fmt import brace_set, format_pct
from .context import FormalContext
from .errors import MiningError


@dataclass(frozen=True)
class MiningParams:
    """Thresholds for itemset mining and rule generation.

    ``theta`` is an absolute support count; a set is frequent when its
    extent reaches it (``strict_theta`` switches the comparison to
    strictly-greater). ``min_supp`` and ``min_conf`` are fractions and
    always strict.
    """

    theta: int = 10
    min_size: int = 2
    max_size: int = 5
    min_supp: float = 0.0
    min_conf: float = 0.0
    strict_theta: bool = False

    def __post_init__(self):
        if self.theta < 1:
            raise ValueError(f"theta must be >= 1, got {self.theta}")
        if not 1 <= self.min_size <= self.max_size:
            raise ValueError(
                f"need 1 <= min_size <= max_size, got {self.min_size}..{self.max_size}"
            )
        if not 0.0 <= self.min_supp <= 1.0:
            raise ValueError(f"min_supp must be within [0, 1], got {self.min_supp}")
        if not 0.0 <= self.min_conf <= 1.0:
            raise ValueError(f"min_conf must be within [0, 1], got {self.min_conf}")

    def meets_theta(self, count: int) -> bool:
        return count > self.theta if self.strict_theta else count >= self.theta


@dataclass(frozen=True)
class Itemset:
    """A frequent attribute set with its exact support count."""

    items: frozenset[str]
    support_count: int

    def sort_key(self):
        return (len(self.items), tuple(sorted(self.items)))


@dataclass(frozen=True)
class AssociationRule:
    """antecedent -> consequent with support and confidence fractions."""

    antecedent: frozenset[str]
    consequent: frozenset[str]
    support: float
    confidence: float
    joint_count: int
    antecedent_count: int

    def __post_init__(self):
        if not self.antecedent or not self.consequent:
            raise ValueError("antecedent and consequent must be nonempty")
        if self.antecedent & self.consequent:
            raise ValueError("antecedent and consequent must be disjoint")

    def sort_key(self):
        return (
            -self.confidence,
            -self.support,
            tuple(sorted(self.antecedent)),
            tuple(sorted(self.consequent)),
        )


def mine_frequent_itemsets(
    ctx: FormalContext, params: MiningParams
) -> list[Itemset]:
    """All attribute sets within the size bounds meeting the theta threshold.

    Level-wise generation with anti-monotone pruning; support counts are
    exact extent sizes. Output is sorted by size, then lexicographically.
    """
    kernel = ctx.kernel
    n = ctx.n_attributes

    def mask_of(idx_tuple):
        m = 0
        for j in idx_tuple:
            m |= 1 << j
        return m

    frequent: dict[tuple[int, ...], int] = {}
    level = []
    for j in range(n):
        count = kernel.extent_count(1 << j)
        if params.meets_theta(count):
            level.append((j,))
            frequent[(j,)] = count

    k = 2
    while level and k <= params.max_size:
        prev = set(level)
        candidates = []
        for _, group in groupby(level, key=lambda t: t[:-1]):
            members = list(group)
            for a, b in combinations(members, 2):
                cand = a + (b[-1],)
                if all(
                    cand[:i] + cand[i + 1 :] in prev for i in range(len(cand) - 2)
                ):
                    candidates.append(cand)
        next_level = []
        for cand in candidates:
            count = kernel.extent_count(mask_of(cand))
            if params.meets_theta(count):
                next_level.append(cand)
                frequent[cand] = count
        level = sorted(next_level)
        k += 1

    attrs = ctx.attributes
    out = [
        Itemset(frozenset(attrs[j] for j in idx), count)
        for idx, count in frequent.items()
        if params.min_size <= len(idx) <= params.max_size
    ]
    out.sort(key=Itemset.sort_key)
    return out


def support(ctx: FormalContext, antecedent: Iterable[str], consequent: Iterable[str]) -> float:
    """Fraction of all objects containing both sides of a rule."""
    a, b = frozenset(antecedent), frozenset(consequent)
    if a & b:
        raise MiningError(f"antecedent and consequent overlap on {brace_set(a & b)}")
    union = a | b
    if not union:
        raise MiningError("support of an empty attribute set is undefined")
    joint = ctx.kernel.extent_count(ctx.attribute_mask(union))
    return joint / ctx.n_objects


def confidence(ctx: FormalContext, antecedent: Iterable[str], consequent: Iterable[str]) -> float:
    """Fraction of antecedent objects that also contain the consequent."""
    a, b = frozenset(antecedent), frozenset(consequent)
    if not a:
        raise MiningError("confidence needs a nonempty antecedent")
    if a & b:
        raise MiningError(f"antecedent and consequent overlap on {brace_set(a & b)}")
    a_count = ctx.kernel.extent_count(ctx.attribute_mask(a))
    if a_count == 0:
        raise MiningError(f"undefined confidence: no object contains {brace_set(a)}")
    joint = ctx.kernel.extent_count(ctx.attribute_mask(a | b))
    return joint / a_count


def generate_rules(
    ctx: FormalContext,
    itemsets: Sequence[Itemset],
    params: MiningParams,
) -> list[AssociationRule]:
    """Split every frequent set into all antecedent/consequent pairs.

    A rule survives only when its support and confidence strictly exceed
    the configured minima. Output is sorted by confidence, then support,
    both descending, then antecedent and consequent lexicographically.
    """
    n = ctx.n_objects
    kernel = ctx.kernel
    a_counts: dict[frozenset[str], int] = {}
    seen: set[tuple[frozenset[str], frozenset[str]]] = set()
    out: list[AssociationRule] = []
    for itemset in itemsets:
        if len(itemset.items) < 2:
            continue
        joint = itemset.support_count
        supp = joint / n
        if not supp > params.min_supp:
            continue
        members = sorted(itemset.items)
        for k in range(1, len(members)):
            for left in combinations(members, k):
                antecedent = frozenset(left)
                consequent = itemset.items - antecedent
                a_count = a_counts.get(antecedent)
                if a_count is None:
                    a_count = kernel.extent_count(ctx.attribute_mask(antecedent))
                    a_counts[antecedent] = a_count
                conf = joint / a_count
                if not conf > params.min_conf:
                    continue
                pair = (antecedent, consequent)
                if pair in seen:
                    continue
                seen.add(pair)
                out.append(
                    AssociationRule(
                        antecedent=antecedent,
                        consequent=consequent,
                        support=supp,
                        confidence=conf,
                        joint_count=joint,
                        antecedent_count=a_count,
                    )
                )
    out.sort(key=AssociationRule.sort_key)
    return out


def is_implication(rule: AssociationRule) -> bool:
    """True when the rule always holds (confidence exactly 1)."""
    return rule.joint_count == rule.antecedent_count


def itemsets_to_tsv(itemsets: Sequence[Itemset]) -> str:
    """One ``{item, item}<TAB>count`` line per itemset."""
    return "".join(
        f"{brace_set(s.items)}\t{s.support_count}\n" for s in itemsets
    )


def rules_to_table(rules: Sequence[AssociationRule]) -> str:
    """Tab-separated rule table with an implication flag column."""
    lines = ["antecedent\tconsequent\tsupport\tconfidence\timplication"]
    for r in rules:
        lines.append(
            "\t".join(
                (
                    brace_set(r.antecedent),
                    brace_set(r.consequent),
                    format_pct(r.support),
                    format_pct(r.confidence),
                    "yes" if is_implication(r) else "no",
                )
            )
        )
    return "\n".join(lines) + "\n"
