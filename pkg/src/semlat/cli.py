"""Command-line pipeline with deterministic file outputs.

Subcommands: dict, itemsets, lattice, rules, ideal-filter. Every option
can also come from a flat ``key = value`` config file; explicit flags win
over the file, the file wins over defaults. Output files are written to
a temp name and renamed into place, so failures leave nothing partial.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

import click

from . import __version__
from .context import FormalContext, SemanticField, build_context, close_attributes, load_field
from .corpus import (
    CorpusConfig,
    DEFAULT_STOP_WORDS,
    build_dictionary,
    filter_dictionary,
    filter_messages,
    load_stop_words,
    parse_messages,
)
from .dot import lattice_to_dot
from .errors import EmptyContextError, SemlatError
from .lattice import (
    ConceptLattice,
    DEFAULT_MAX_CONCEPTS,
    enumerate_concepts,
    ideal_filter_field,
    lattice_to_json,
    order_filter,
    order_ideal,
)
from .rules import (
    MiningParams,
    generate_rules,
    is_implication,
    itemsets_to_tsv,
    mine_frequent_itemsets,
    rules_to_table,
)
from ._fmt import brace_set


@dataclass
class PipelineConfig:
    """Resolved settings for one command invocation."""

    input_path: Path | None
    fmt: str
    stopwords: Path | None
    field: Path | None
    out_dir: Path
    corpus: CorpusConfig
    mining: MiningParams
    dot: bool
    labeling: str
    hide_empty_bottom: bool
    show_extent_pct: bool
    max_concepts: int


_INT_KEYS = {"min_count", "max_count", "min_tokens", "theta", "min_size", "max_size", "max_concepts"}
_FLOAT_KEYS = {"min_supp", "min_conf"}
_BOOL_KEYS = {"strict_theta", "dot", "hide_empty_bottom", "show_extent_pct"}
_STR_KEYS = {"input", "format", "stopwords", "field", "out_dir", "seed_keyword", "labeling"}
_FILE_KEY_TO_PARAM = {"input": "input_path", "format": "fmt"}


def _parse_config_file(path: Path) -> dict:
    """Flat ``key = value`` document; '#' lines are comments."""
    values = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        entry = line.strip()
        if not entry or entry.startswith("#"):
            continue
        if "=" not in entry:
            raise SemlatError(f"{path}: line {lineno}: expected 'key = value'")
        key, _, raw = entry.partition("=")
        key = key.strip().replace("-", "_")
        raw = raw.strip()
        if key in _INT_KEYS:
            value = int(raw)
        elif key in _FLOAT_KEYS:
            value = float(raw)
        elif key in _BOOL_KEYS:
            lowered = raw.lower()
            if lowered in ("1", "true", "yes", "on"):
                value = True
            elif lowered in ("0", "false", "no", "off"):
                value = False
            else:
                raise SemlatError(f"{path}: line {lineno}: bad boolean {raw!r}")
        elif key in _STR_KEYS:
            value = raw
        else:
            raise SemlatError(f"{path}: line {lineno}: unknown key {key!r}")
        values[_FILE_KEY_TO_PARAM.get(key, key)] = value
    return values


_PIPELINE_OPTIONS = [
    click.option("--input", "input_path", type=Path, default=None, help="Corpus file (JSONL or plain lines)."),
    click.option("--format", "fmt", type=click.Choice(["jsonl", "lines"]), default="jsonl", help="Corpus format."),
    click.option("--stopwords", type=Path, default=None, help="Stop-word file (default: built-in English list)."),
    click.option("--field", type=Path, default=None, help="Semantic field file (one keyword per line)."),
    click.option("--out-dir", type=Path, default=Path("."), help="Directory for output files."),
    click.option("--min-count", type=int, default=10, help="Minimum dictionary count."),
    click.option("--max-count", type=int, default=4000, help="Maximum dictionary count."),
    click.option("--min-tokens", type=int, default=5, help="Minimum retained tokens per message."),
    click.option("--seed-keyword", type=str, default="", help="Keyword every message must contain (empty: off)."),
    click.option("--theta", type=int, default=10, help="Absolute support threshold for itemsets."),
    click.option("--min-size", type=int, default=2, help="Smallest itemset size."),
    click.option("--max-size", type=int, default=5, help="Largest itemset size."),
    click.option("--min-supp", type=float, default=0.0, help="Strict support minimum for rules."),
    click.option("--min-conf", type=float, default=0.0, help="Strict confidence minimum for rules."),
    click.option("--strict-theta", is_flag=True, default=False, help="Require counts strictly above theta."),
    click.option("--dot", is_flag=True, default=False, help="Also write a DOT Hasse diagram."),
    click.option("--labeling", type=click.Choice(["full", "reduced"]), default="full", help="DOT node labels."),
    click.option("--hide-empty-bottom", is_flag=True, default=False, help="Omit the bottom concept when its extent is empty."),
    click.option("--show-extent-pct", is_flag=True, default=False, help="Append extent percentages to DOT labels."),
    click.option("--max-concepts", type=int, default=DEFAULT_MAX_CONCEPTS, help="Abort enumeration beyond this many concepts."),
    click.option("--config", "config_path", type=Path, default=None, help="Flat key = value config file (flags win)."),
]


def pipeline_options(fn):
    for opt in reversed(_PIPELINE_OPTIONS):
        fn = opt(fn)
    return fn


def _resolve(ctx: click.Context, params: dict) -> PipelineConfig:
    merged = dict(params)
    config_path = merged.pop("config_path", None)
    if config_path is not None:
        _require_file(config_path)
        for name, value in _parse_config_file(config_path).items():
            if ctx.get_parameter_source(name) != click.core.ParameterSource.COMMANDLINE:
                merged[name] = value

    for key in ("input_path", "stopwords", "field", "out_dir"):
        if isinstance(merged.get(key), str):
            merged[key] = Path(merged[key])

    for key in ("input_path", "stopwords", "field"):
        if merged.get(key) is not None:
            _require_file(merged[key])

    stop_words = (
        load_stop_words(merged["stopwords"])
        if merged["stopwords"] is not None
        else DEFAULT_STOP_WORDS
    )
    corpus_cfg = CorpusConfig(
        seed_keyword=merged["seed_keyword"],
        min_count=merged["min_count"],
        max_count=merged["max_count"],
        min_tokens_per_message=merged["min_tokens"],
        stop_words=stop_words,
    )
    mining = MiningParams(
        theta=merged["theta"],
        min_size=merged["min_size"],
        max_size=merged["max_size"],
        min_supp=merged["min_supp"],
        min_conf=merged["min_conf"],
        strict_theta=merged["strict_theta"],
    )
    return PipelineConfig(
        input_path=merged["input_path"],
        fmt=merged["fmt"],
        stopwords=merged["stopwords"],
        field=merged["field"],
        out_dir=merged["out_dir"],
        corpus=corpus_cfg,
        mining=mining,
        dot=merged["dot"],
        labeling=merged["labeling"],
        hide_empty_bottom=merged["hide_empty_bottom"],
        show_extent_pct=merged["show_extent_pct"],
        max_concepts=merged["max_concepts"],
    )


def _require_file(path: Path):
    if not Path(path).is_file():
        raise SemlatError(f"cannot read {path}: no such file")


def _write_text(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8", newline="\n")
    os.replace(tmp, path)


def _read_messages(cfg: PipelineConfig):
    if cfg.input_path is None:
        raise SemlatError("an input corpus is required (--input)")
    with open(cfg.input_path, "rb") as handle:
        return parse_messages(handle, cfg.fmt, cfg.corpus)


def _prepare(cfg: PipelineConfig):
    """Parse, count, filter: the shared front half of every pipeline."""
    messages = _read_messages(cfg)
    retained = filter_dictionary(build_dictionary(messages), cfg.corpus)
    kept = filter_messages(messages, retained, cfg.corpus)
    return retained, kept


def _build_context(cfg: PipelineConfig, *, field_required: bool = True) -> FormalContext | None:
    retained, kept = _prepare(cfg)
    if cfg.field is not None:
        field = load_field(cfg.field)
    elif field_required:
        raise SemlatError("this command needs a semantic field (--field)")
    else:
        if not len(retained):
            return None
        field = SemanticField("dictionary", tuple(sorted(retained.lexemes())))
    return build_context(kept, field)


# -- command bodies (plain functions, testable without click) ---------------


def cmd_dict(cfg: PipelineConfig) -> list[str]:
    """Write the filtered frequency dictionary; report the lexeme count."""
    messages = _read_messages(cfg)
    dictionary = filter_dictionary(build_dictionary(messages), cfg.corpus)
    path = cfg.out_dir / "dictionary.tsv"
    _write_text(path, dictionary.to_tsv())
    lines = [f"{len(dictionary)} lexemes -> {path}"]
    if len(dictionary):
        lines.append(f"top: {dictionary.preview()}")
    return lines


def cmd_itemsets(cfg: PipelineConfig) -> list[str]:
    """Mine frequent itemsets (over the field, or the whole dictionary)."""
    try:
        context = _build_context(cfg, field_required=False)
    except EmptyContextError:
        context = None
    itemsets = mine_frequent_itemsets(context, cfg.mining) if context else []
    path = cfg.out_dir / "itemsets.tsv"
    _write_text(path, itemsets_to_tsv(itemsets))
    return [f"{len(itemsets)} frequent itemsets -> {path}"]


def cmd_lattice(cfg: PipelineConfig) -> list[str]:
    """Enumerate the concept lattice; write JSON and optionally DOT."""
    context = _build_context(cfg)
    lattice = enumerate_concepts(context, cfg.max_concepts)
    json_path = cfg.out_dir / "lattice.json"
    _write_text(json_path, lattice_to_json(lattice))
    lines = [f"{len(lattice)} concepts, {len(lattice.edges)} edges -> {json_path}"]
    if cfg.dot:
        dot_path = cfg.out_dir / "lattice.dot"
        _write_text(
            dot_path,
            lattice_to_dot(
                lattice,
                labeling=cfg.labeling,
                show_extent_pct=cfg.show_extent_pct,
                hide_empty_bottom=cfg.hide_empty_bottom,
            ),
        )
        lines.append(f"dot -> {dot_path}")
    return lines


def cmd_rules(cfg: PipelineConfig) -> list[str]:
    """Full pipeline through rule generation; write the rule table."""
    context = _build_context(cfg)
    itemsets = mine_frequent_itemsets(context, cfg.mining)
    rules = generate_rules(context, itemsets, cfg.mining)
    path = cfg.out_dir / "rules.tsv"
    _write_text(path, rules_to_table(rules))
    implications = sum(1 for r in rules if is_implication(r))
    return [f"{len(rules)} rules ({implications} implications) -> {path}"]


def cmd_ideal_filter(cfg: PipelineConfig, attributes: tuple[str, ...]) -> list[str]:
    """Resolve a concept from attributes; report its ideal, filter and field."""
    if not attributes:
        raise SemlatError("give at least one attribute to resolve a concept")
    context = _build_context(cfg)
    lattice = enumerate_concepts(context, cfg.max_concepts)
    closed = close_attributes(context, attributes)
    concept = lattice.find_by_intent(closed)
    if concept is None:  # closure always lands on a concept intent
        raise SemlatError(f"no concept with intent {brace_set(closed)}")
    report = _ideal_filter_report(lattice, concept)
    path = cfg.out_dir / "ideal_filter.txt"
    _write_text(path, report)
    return report.splitlines() + [f"-> {path}"]


def _ideal_filter_report(lattice: ConceptLattice, concept) -> str:
    ideal = order_ideal(lattice, concept)
    filt = order_filter(lattice, concept)
    field = ideal_filter_field(lattice, concept)
    lines = [
        f"concept: {brace_set(concept.intent)}",
        f"extent: {len(concept.extent)} objects ({concept.extent_pct:.2%})",
        "",
        f"order ideal ({len(ideal)} concepts):",
    ]
    lines += [f"  {brace_set(c.intent)}  {c.extent_pct:.2%}" for c in ideal]
    lines.append("")
    lines.append(f"order filter ({len(filt)} concepts):")
    lines += [f"  {brace_set(c.intent)}  {c.extent_pct:.2%}" for c in filt]
    lines.append("")
    lines.append(
        f"semantic field ({len(field.keywords)} keywords): {', '.join(field.keywords)}"
    )
    return "\n".join(lines) + "\n"


# -- click wiring ------------------------------------------------------------


def _execute(fn, ctx, params, *extra):
    try:
        cfg = _resolve(ctx, params)
        lines = fn(cfg, *extra)
    except (SemlatError, OSError, ValueError) as exc:
        raise click.ClickException(str(exc))
    for line in lines:
        click.echo(line)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(version=__version__, prog_name="semlat")
def main():
    """Mine microblog corpora into concept lattices and association rules."""


@main.command("dict")
@pipeline_options
@click.pass_context
def dict_command(ctx, **params):
    """Build and filter the frequency dictionary."""
    _execute(cmd_dict, ctx, params)


@main.command("itemsets")
@pipeline_options
@click.pass_context
def itemsets_command(ctx, **params):
    """Mine frequent attribute itemsets."""
    _execute(cmd_itemsets, ctx, params)


@main.command("lattice")
@pipeline_options
@click.pass_context
def lattice_command(ctx, **params):
    """Enumerate the concept lattice (JSON, optionally DOT)."""
    _execute(cmd_lattice, ctx, params)


@main.command("rules")
@pipeline_options
@click.pass_context
def rules_command(ctx, **params):
    """Mine association rules with support/confidence thresholds."""
    _execute(cmd_rules, ctx, params)


@main.command("ideal-filter")
@click.argument("attributes", nargs=-1)
@pipeline_options
@click.pass_context
def ideal_filter_command(ctx, attributes, **params):
    """Show the order ideal, order filter and spanned field of a concept."""
    _execute(cmd_ideal_filter, ctx, params, tuple(attributes))
