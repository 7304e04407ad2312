"""AFINN valence lexicon loading and lexicon-based text scoring."""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

MIN_VALENCE = -5
MAX_VALENCE = 5

# \w minus "_" is exactly letters and digits; "_" is blanked out before matching
_TOKEN_RE = re.compile(r"[\w']+")


class LexiconError(ValueError):
    """Raised when a lexicon source is malformed."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def tokenize(text: str) -> list[str]:
    """Lowercase `text` and split it on anything that is not a letter,
    digit or apostrophe.

    >>> tokenize("Good, GOOD!")
    ['good', 'good']
    >>> tokenize("can't stop")
    ["can't", 'stop']
    """
    text = text.lower().replace("_", " ")
    if "’" in text:
        text = text.replace("’", "'")
    return _TOKEN_RE.findall(text)


@dataclass(frozen=True, slots=True)
class SentimentScore:
    positive: int = 0
    negative: int = 0
    matched_tokens: int = 0

    @property
    def net(self) -> int:
        return self.positive - self.negative

    def __add__(self, other: SentimentScore) -> SentimentScore:
        return SentimentScore(
            self.positive + other.positive,
            self.negative + other.negative,
            self.matched_tokens + other.matched_tokens,
        )


class Lexicon:
    """Immutable term -> integer valence map.

    Terms that tokenize to a single token are used for unigram scoring.
    Multi-token terms ("can't stand", "does not work", "cover-up") are only
    reachable in phrase mode, keyed by their token sequence.
    """

    __slots__ = ("_entries", "_unigrams", "_phrases", "_max_phrase_len")

    def __init__(self, entries: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        table: dict[str, int] = {}
        for term, valence in items:
            term = term.lower()
            if not term.strip():
                raise LexiconError("empty term")
            if term in table:
                raise LexiconError(f"duplicate term {term!r}")
            _check_valence(valence, term)
            table[term] = valence

        unigrams: dict[str, int] = {}
        phrases: dict[tuple[str, ...], int] = {}
        owner: dict[tuple[str, ...], str] = {}
        for term, valence in table.items():
            key = tuple(tokenize(term))
            if not key:
                continue
            if key in owner:
                raise LexiconError(
                    f"terms {owner[key]!r} and {term!r} are identical after tokenization"
                )
            owner[key] = term
            if len(key) == 1:
                unigrams[key[0]] = valence
            else:
                phrases[key] = valence

        self._entries = MappingProxyType(table)
        self._unigrams = unigrams
        self._phrases = phrases
        self._max_phrase_len = max(map(len, phrases), default=1)

    @property
    def entries(self) -> Mapping[str, int]:
        return self._entries

    @property
    def phrase_count(self) -> int:
        return len(self._phrases)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, term: object) -> bool:
        return isinstance(term, str) and term.lower() in self._entries

    def __getitem__(self, term: str) -> int:
        return self._entries[term.lower()]

    def get(self, term: str, default: int | None = None) -> int | None:
        return self._entries.get(term.lower(), default)

    def __repr__(self) -> str:
        return f"Lexicon({len(self)} terms, {self.phrase_count} phrases)"

    def __reduce__(self):
        return (Lexicon, (dict(self._entries),))

    def score_tokens(self, tokens: Sequence[str], phrases: bool = False) -> SentimentScore:
        """Score an already tokenized text; see :func:`score_text`."""
        unigrams = self._unigrams
        pos = neg = matched = 0
        if not phrases or not self._phrases:
            for tok in tokens:
                v = unigrams.get(tok)
                if v is not None:
                    matched += 1
                    if v > 0:
                        pos += v
                    else:
                        neg -= v
            return SentimentScore(pos, neg, matched)

        table = self._phrases
        longest = self._max_phrase_len
        i, n = 0, len(tokens)
        while i < n:
            width, v = 1, None
            for size in range(min(longest, n - i), 1, -1):
                v = table.get(tuple(tokens[i:i + size]))
                if v is not None:
                    width = size
                    break
            if v is None:
                v = unigrams.get(tokens[i])
            if v is not None:
                matched += width
                if v > 0:
                    pos += v
                else:
                    neg -= v
            i += width
        return SentimentScore(pos, neg, matched)


def _check_valence(valence: object, term: str) -> None:
    if not isinstance(valence, int) or isinstance(valence, bool):
        raise LexiconError(f"valence for {term!r} must be an integer")
    if not MIN_VALENCE <= valence <= MAX_VALENCE:
        raise LexiconError(
            f"valence {valence} for {term!r} outside [{MIN_VALENCE}, {MAX_VALENCE}]"
        )


def parse_lexicon(lines: Iterable[str]) -> Lexicon:
    """Build a :class:`Lexicon` from ``term<TAB>valence`` lines.

    Blank lines are skipped. Errors carry the 1-based line number.
    """
    entries: dict[str, int] = {}
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\r\n")
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconError("expected exactly one tab between term and valence", lineno)
        term, raw = parts[0].strip().lower(), parts[1].strip()
        if not term:
            raise LexiconError("empty term", lineno)
        try:
            valence = int(raw)
        except ValueError:
            raise LexiconError(f"valence {raw!r} is not an integer", lineno) from None
        if not MIN_VALENCE <= valence <= MAX_VALENCE:
            raise LexiconError(f"valence {valence} outside [{MIN_VALENCE}, {MAX_VALENCE}]", lineno)
        if term in entries:
            raise LexiconError(f"duplicate term {term!r}", lineno)
        entries[term] = valence
    try:
        return Lexicon(entries)
    except LexiconError as exc:
        raise LexiconError(str(exc)) from None


def load_lexicon(source: str | os.PathLike | Iterable[str]) -> Lexicon:
    """Load an AFINN-format lexicon.

    `source` is either a path-like object naming a UTF-8 file, a string
    holding the file contents, or an iterable of lines.
    """
    if isinstance(source, os.PathLike):
        with open(source, encoding="utf-8") as fh:
            return parse_lexicon(fh)
    if isinstance(source, str):
        return parse_lexicon(source.split("\n"))
    return parse_lexicon(source)


@lru_cache(maxsize=1)
def afinn111() -> Lexicon:
    """The unmodified AFINN-111 word list bundled with the package."""
    text = resources.files("tweetcast.fixtures").joinpath("AFINN-111.txt").read_text("utf-8")
    return load_lexicon(text)


def score_text(lexicon: Lexicon, text: str, phrases: bool = False) -> SentimentScore:
    """Sum the lexicon valences found in `text`.

    Positive valences accumulate in ``positive`` and the magnitudes of
    negative ones in ``negative``. With ``phrases=True`` multi-word entries
    are matched greedily, longest first, before falling back to single
    tokens. Unknown tokens contribute nothing.
    """
    return lexicon.score_tokens(tokenize(text), phrases)


def _score_chunk(args: tuple[Lexicon, Sequence[str], bool]) -> list[SentimentScore]:
    lexicon, texts, phrases = args
    return [lexicon.score_tokens(tokenize(t), phrases) for t in texts]


def score_texts(
    lexicon: Lexicon,
    texts: Sequence[str],
    phrases: bool = False,
    workers: int = 1,
    chunksize: int = 20_000,
) -> list[SentimentScore]:
    """Score many texts, optionally across worker processes.

    Output order always matches input order, so results do not depend on
    `workers`.
    """
    if workers <= 1 or len(texts) <= chunksize:
        return _score_chunk((lexicon, texts, phrases))
    from concurrent.futures import ProcessPoolExecutor

    chunks = [(lexicon, texts[i:i + chunksize], phrases) for i in range(0, len(texts), chunksize)]
    out: list[SentimentScore] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_score_chunk, chunks):
            out.extend(part)
    return out
