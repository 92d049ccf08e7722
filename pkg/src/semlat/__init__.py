"""semlat: concept lattices, frequent itemsets and association rules
over microblog corpora.

The pipeline: parse and tokenize messages, build and filter a frequency
dictionary, cross the surviving messages with a semantic field into a
formal context, then enumerate the concept lattice and mine association
rules on top of it. A compiled bitset kernel accelerates the set-algebra
core when available; a pure-Python twin is selected otherwise.
"""

from ._kernel import HAVE_NATIVE, available_backends, default_backend
from .corpus import (
    CorpusConfig,
    DEFAULT_STOP_WORDS,
    FrequencyDictionary,
    Message,
    build_dictionary,
    filter_dictionary,
    filter_messages,
    load_stop_words,
    parse_messages,
    tokenize,
)
from .context import (
    FormalContext,
    SemanticField,
    build_context,
    close_attributes,
    context_from_dict,
    context_from_json,
    context_to_dict,
    context_to_json,
    derive_extent,
    derive_intent,
    load_field,
    parse_field,
)
from .dot import lattice_to_dot
from .errors import (
    EmptyContextError,
    FieldError,
    LatticeSizeError,
    MiningError,
    ParseError,
    SemlatError,
    UnknownAttributeError,
    UnknownObjectError,
)
from .lattice import (
    Concept,
    ConceptLattice,
    DEFAULT_MAX_CONCEPTS,
    enumerate_concepts,
    ideal_filter_field,
    lattice_to_dict,
    lattice_to_json,
    order_filter,
    order_ideal,
    order_leq,
)
from .rules import (
    AssociationRule,
    Itemset,
    MiningParams,
    confidence,
    generate_rules,
    is_implication,
    itemsets_to_tsv,
    mine_frequent_itemsets,
    rules_to_table,
    support,
)

__version__ = "0.1.0"

__all__ = [
    "AssociationRule",
    "Concept",
    "ConceptLattice",
    "CorpusConfig",
    "DEFAULT_MAX_CONCEPTS",
    "DEFAULT_STOP_WORDS",
    "EmptyContextError",
    "FieldError",
    "FormalContext",
    "FrequencyDictionary",
    "HAVE_NATIVE",
    "Itemset",
    "LatticeSizeError",
    "Message",
    "MiningError",
    "MiningParams",
    "ParseError",
    "SemanticField",
    "SemlatError",
    "UnknownAttributeError",
    "UnknownObjectError",
    "available_backends",
    "build_context",
    "build_dictionary",
    "close_attributes",
    "confidence",
    "context_from_dict",
    "context_from_json",
    "context_to_dict",
    "context_to_json",
    "default_backend",
    "derive_extent",
    "derive_intent",
    "enumerate_concepts",
    "filter_dictionary",
    "filter_messages",
    "generate_rules",
    "ideal_filter_field",
    "is_implication",
    "itemsets_to_tsv",
    "lattice_to_dict",
    "lattice_to_dot",
    "lattice_to_json",
    "load_field",
    "load_stop_words",
    "mine_frequent_itemsets",
    "order_filter",
    "order_ideal",
    "order_leq",
    "parse_field",
    "parse_messages",
    "rules_to_table",
    "support",
    "tokenize",
]
