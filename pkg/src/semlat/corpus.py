"""Message ingestion, tokenization and frequency-dictionary filtering.

The pipeline starts here: raw microblog posts come in as JSONL or plain
lines, are normalized into lowercase lexemes (hashtags keep their '#',
mentions their '@'), counted into a frequency dictionary, and the message
array is cut down to the lexemes and messages worth analysing.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import BinaryIO, Iterable, Mapping

from .errors import ParseError

_URL_RE = re.compile(r"https?://\S*")
_TOKEN_RE = re.compile(r"[#@]?\w+")
_NORMALIZED_RE = re.compile(r"[#@]?\w+\Z")

# Minimal English list shipped as the default; real runs usually pass a
# corpus-specific stop-word file on top of or instead of this.
DEFAULT_STOP_WORDS = frozenset(
    """
    a an and are as at be but by for from had has have he her his i if in
    into is it its me my no not of on or our she so that the their them
    they this to was we were will with you your
    """.split()
)


def is_normalized_lexeme(token: str) -> bool:
    """True when a string is a legal normalized token.

    Legal means: nonempty, no uppercase, and either '#'- or '@'-prefixed
    word characters or word characters alone.
    """
    return bool(token) and token == token.lower() and bool(_NORMALIZED_RE.match(token))


@dataclass(frozen=True)
class Message:
    """One microblog post with its normalized token list."""

    id: str
    raw_text: str
    tokens: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        for tok in self.tokens:
            if not is_normalized_lexeme(tok):
                raise ValueError(f"token {tok!r} is not a normalized lexeme")


@dataclass(frozen=True)
class CorpusConfig:
    """Filter settings for dictionary building and message preparation.

    ``seed_keyword`` is the lexeme every analysed message must contain;
    empty disables the check. The count bounds and the per-message token
    minimum default to the values used throughout this toolkit's reference
    runs (10, 4000 and 5).
    """

    seed_keyword: str = ""
    min_count: int = 10
    max_count: int = 4000
    min_tokens_per_message: int = 5
    stop_words: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "stop_words", frozenset(self.stop_words))
        if self.min_count < 1:
            raise ValueError(f"min_count must be >= 1, got {self.min_count}")
        if self.max_count < self.min_count:
            raise ValueError(
                f"max_count ({self.max_count}) must be >= min_count ({self.min_count})"
            )
        if self.min_tokens_per_message < 0:
            raise ValueError("min_tokens_per_message must be >= 0")


class FrequencyDictionary:
    """Lexeme occurrence counts, iterated in descending-count order.

    Ties are broken lexicographically so every report is reproducible.
    """

    __slots__ = ("_items", "_counts")

    def __init__(self, counts: Mapping[str, int] | Iterable[tuple[str, int]]):
        items = dict(counts)
        for lexeme, count in items.items():
            if count < 1:
                raise ValueError(f"count for {lexeme!r} must be >= 1, got {count}")
        self._items = sorted(items.items(), key=lambda kv: (-kv[1], kv[0]))
        self._counts = dict(self._items)

    def items(self) -> list[tuple[str, int]]:
        return list(self._items)

    def lexemes(self) -> list[str]:
        return [lexeme for lexeme, _ in self._items]

    def total(self) -> int:
        """Total token mass: the sum of all counts."""
        return sum(self._counts.values())

    def preview(self, n: int = 10) -> str:
        """The top entries in ``lexeme (count)`` listing style."""
        return ", ".join(f"{lex} ({cnt})" for lex, cnt in self._items[:n])

    def to_tsv(self) -> str:
        """One ``lexeme<TAB>count`` line per entry, descending by count."""
        return "".join(f"{lex}\t{cnt}\n" for lex, cnt in self._items)

    def __getitem__(self, lexeme: str) -> int:
        return self._counts[lexeme]

    def get(self, lexeme: str, default=None):
        return self._counts.get(lexeme, default)

    def __contains__(self, lexeme: str) -> bool:
        return lexeme in self._counts

    def __len__(self) -> int:
        return len(self._counts)

    def __iter__(self):
        return iter(self.lexemes())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FrequencyDictionary):
            return NotImplemented
        return self._counts == other._counts

    def __repr__(self) -> str:
        return f"FrequencyDictionary({len(self._counts)} lexemes)"


def tokenize(raw_text: str, config: CorpusConfig) -> list[str]:
    """Normalize a message into lexemes.

    Lowercases, strips URLs (anything from ``http://`` or ``https://`` up
    to whitespace), keeps '#'/'@' only when they lead a token, treats all
    other punctuation as separators, and drops tokens whose core (prefix
    excluded) is shorter than two characters as well as stop words.
    """
    text = _URL_RE.sub(" ", raw_text.lower())
    out = []
    for match in _TOKEN_RE.finditer(text):
        token = match.group()
        core = token[1:] if token[0] in "#@" else token
        if len(core) < 2:
            continue
        if token in config.stop_words:
            continue
        out.append(token)
    return out


def parse_messages(
    stream: BinaryIO | bytes,
    fmt: str = "jsonl",
    config: CorpusConfig | None = None,
) -> list[Message]:
    """Read messages from a byte stream.

    ``jsonl``: one ``{"id": ..., "text": ...}`` object per nonempty line.
    ``lines``: one message per line, id = 1-based line number.
    Blank lines are skipped (but still counted for line numbering).
    """
    if config is None:
        config = CorpusConfig()
    data = stream if isinstance(stream, bytes) else stream.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not valid UTF-8: {exc}") from exc

    messages: list[Message] = []
    if fmt == "jsonl":
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"line {lineno}: invalid JSON: {exc.msg}") from exc
            if not isinstance(obj, dict) or "id" not in obj or "text" not in obj:
                raise ParseError(
                    f'line {lineno}: expected an object with "id" and "text" fields'
                )
            msg_id, msg_text = obj["id"], obj["text"]
            if isinstance(msg_id, int) and not isinstance(msg_id, bool):
                msg_id = str(msg_id)
            if not isinstance(msg_id, str) or not isinstance(msg_text, str):
                raise ParseError(f'line {lineno}: "id" and "text" must be strings')
            messages.append(Message(msg_id, msg_text, tuple(tokenize(msg_text, config))))
    elif fmt == "lines":
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            messages.append(Message(str(lineno), line, tuple(tokenize(line, config))))
    else:
        raise ValueError(f"unknown input format {fmt!r} (expected 'jsonl' or 'lines')")
    return messages


def build_dictionary(messages: Iterable[Message]) -> FrequencyDictionary:
    """Count every token occurrence across all messages.

    A lexeme repeated inside one message counts once per occurrence.
    """
    counts: Counter[str] = Counter()
    for msg in messages:
        counts.update(msg.tokens)
    return FrequencyDictionary(counts)


def filter_dictionary(
    dictionary: FrequencyDictionary, config: CorpusConfig
) -> FrequencyDictionary:
    """Keep lexemes with min_count <= count <= max_count, minus stop words."""
    return FrequencyDictionary(
        {
            lex: cnt
            for lex, cnt in dictionary.items()
            if config.min_count <= cnt <= config.max_count
            and lex not in config.stop_words
        }
    )


def filter_messages(
    messages: Iterable[Message],
    retained: FrequencyDictionary,
    config: CorpusConfig,
) -> list[Message]:
    """Restrict messages to retained lexemes and drop the ones too thin.

    Token order is preserved; a message is dropped when its restricted
    token count falls below the configured minimum or, with a nonempty
    seed keyword, when the message does not contain that keyword.
    """
    out = []
    for msg in messages:
        if config.seed_keyword and config.seed_keyword not in msg.tokens:
            continue
        kept = tuple(tok for tok in msg.tokens if tok in retained)
        if len(kept) < config.min_tokens_per_message:
            continue
        out.append(Message(msg.id, msg.raw_text, kept))
    return out


def load_stop_words(path: str | Path) -> frozenset[str]:
    """Read a stop-word file: one lexeme per line, '#' lines are comments."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        entry = line.strip()
        if not entry or entry.startswith("#"):
            continue
        words.add(entry.lower())
    return frozenset(words)
