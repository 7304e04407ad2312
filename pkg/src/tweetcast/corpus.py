"""Tweet ingestion, candidate attribution and daily sentiment series."""

from __future__ import annotations

import csv
import io
import json
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from datetime import date, datetime, timezone
from typing import Iterable, Sequence, TextIO

from .lexicon import Lexicon, tokenize

log = logging.getLogger(__name__)

BOTH_POLICIES = ("full", "drop")
TIMESERIES_HEADER = ("date", "candidate", "positive", "negative", "tweet_count")


class IngestError(ValueError):
    pass


class EmptyCorpusError(IngestError):
    pass


@dataclass(frozen=True)
class CandidateSpec:
    candidate_id: int
    match_terms: tuple[str, ...]

    def __post_init__(self):
        terms = tuple(self.match_terms)
        if not terms:
            raise ValueError(f"candidate {self.candidate_id} has no match terms")
        for term in terms:
            if tokenize(term) != [term]:
                raise ValueError(f"match term {term!r} must be a single lowercase token")
        object.__setattr__(self, "match_terms", terms)


def check_specs(specs: Sequence[CandidateSpec]) -> None:
    ids = [s.candidate_id for s in specs]
    if sorted(ids) != [1, 2]:
        raise ValueError(f"need exactly candidates 1 and 2, got {ids}")
    a, b = (set(s.match_terms) for s in specs)
    if a & b:
        raise ValueError(f"candidates share match terms: {sorted(a & b)}")


def default_specs() -> tuple[CandidateSpec, CandidateSpec]:
    return (CandidateSpec(1, ("obama",)), CandidateSpec(2, ("romney",)))


@dataclass(frozen=True)
class Tweet:
    id: str
    timestamp: datetime
    text: str
    lang: str | None = None

    @property
    def day(self) -> date:
        return self.timestamp.date()


@dataclass
class IngestStats:
    read: int = 0
    kept: int = 0
    deduped: int = 0
    non_english: int = 0
    unmatched: int = 0
    unparseable: int = 0
    missing_lang: int = 0  # kept records without a lang field; informational

    def as_dict(self) -> dict[str, int]:
        return dict(self.__dict__)


@dataclass
class Corpus:
    tweets: list[Tweet] = field(default_factory=list)
    stats: IngestStats = field(default_factory=IngestStats)

    def __len__(self) -> int:
        return len(self.tweets)

    def __iter__(self):
        return iter(self.tweets)


def parse_timestamp(value: str) -> datetime:
    """Parse an RFC 3339 timestamp into an aware UTC datetime."""
    if not isinstance(value, str):
        raise ValueError("created_at must be a string")
    s = value.strip()
    if s[-1:] in ("Z", "z"):
        s = s[:-1] + "+00:00"
    ts = datetime.fromisoformat(s)
    if ts.tzinfo is None:
        raise ValueError(f"timestamp {value!r} has no UTC offset")
    return ts.astimezone(timezone.utc)


def parse_record(line: str) -> Tweet:
    rec = json.loads(line)
    if not isinstance(rec, dict):
        raise ValueError("record is not a JSON object")
    tid = rec.get("id")
    if isinstance(tid, int) and not isinstance(tid, bool):
        tid = str(tid)
    if not isinstance(tid, str) or not tid:
        raise ValueError("missing or empty id")
    text = rec.get("text")
    if not isinstance(text, str) or not text.strip():
        raise ValueError("missing or empty text")
    lang = rec.get("lang")
    if lang is not None and not isinstance(lang, str):
        raise ValueError("lang must be a string")
    return Tweet(tid, parse_timestamp(rec.get("created_at")), text, lang)


def match_candidates(tweet: Tweet | str, specs: Sequence[CandidateSpec]) -> frozenset[int]:
    """Candidates whose match terms occur as whole tokens of the tweet."""
    text = tweet if isinstance(tweet, str) else tweet.text
    return _match_tokens(set(tokenize(text)), specs)


def _match_tokens(tokens: set[str], specs: Sequence[CandidateSpec]) -> frozenset[int]:
    return frozenset(s.candidate_id for s in specs if not tokens.isdisjoint(s.match_terms))


def ingest_tweets(
    lines: Iterable[str],
    specs: Sequence[CandidateSpec],
    english_only: bool = True,
    strict: bool = False,
    allow_empty: bool = False,
) -> Corpus:
    """Read JSON Lines tweet records into a cleaned, ordered :class:`Corpus`.

    Blank lines are not records. Every other line lands in exactly one of
    the stats buckets: kept, deduped, non_english, unmatched or unparseable.
    Deduplication is by id over parsed records, first occurrence wins, and
    happens before the language and candidate filters. Records without a
    ``lang`` field survive the English filter.

    The result is sorted by (timestamp, id).
    """
    check_specs(specs)
    stats = IngestStats()
    seen: set[str] = set()
    kept: list[Tweet] = []
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        stats.read += 1
        try:
            tweet = parse_record(line)
        except (ValueError, TypeError, AttributeError) as exc:
            if strict:
                raise IngestError(f"line {lineno}: {exc}") from exc
            stats.unparseable += 1
            log.debug("line %d skipped: %s", lineno, exc)
            continue
        if tweet.id in seen:
            stats.deduped += 1
            continue
        seen.add(tweet.id)
        if english_only and tweet.lang is not None and tweet.lang != "en":
            stats.non_english += 1
            continue
        if not match_candidates(tweet, specs):
            stats.unmatched += 1
            continue
        if tweet.lang is None:
            stats.missing_lang += 1
        kept.append(tweet)

    kept.sort(key=lambda t: (t.timestamp, t.id))
    stats.kept = len(kept)
    if not kept and not allow_empty:
        raise EmptyCorpusError(f"empty corpus after filters: {stats.as_dict()}")
    return Corpus(kept, stats)


def read_tweets(path, specs, **kwargs) -> Corpus:
    with open(path, encoding="utf-8") as fh:
        return ingest_tweets(fh, specs, **kwargs)


@dataclass(frozen=True)
class DailySentiment:
    date: date
    candidate_id: int
    positive: int
    negative: int
    tweet_count: int


def _bucket_chunk(args) -> dict[tuple[date, int], list[int]]:
    tweets, lexicon, specs, phrases, both = args
    sums: dict[tuple[date, int], list[int]] = defaultdict(lambda: [0, 0, 0])
    for tweet in tweets:
        tokens = tokenize(tweet.text)
        who = _match_tokens(set(tokens), specs)
        if not who or (both == "drop" and len(who) > 1):
            continue
        score = lexicon.score_tokens(tokens, phrases)
        day = tweet.timestamp.date()
        for cid in who:
            acc = sums[(day, cid)]
            acc[0] += score.positive
            acc[1] += score.negative
            acc[2] += 1
    return dict(sums)


def bucket_by_day(
    corpus: Corpus | Sequence[Tweet],
    lexicon: Lexicon,
    specs: Sequence[CandidateSpec],
    phrases: bool = False,
    both: str = "full",
    workers: int = 1,
    chunksize: int = 50_000,
) -> list[DailySentiment]:
    """Per-(UTC day, candidate) sums of tweet sentiment.

    A tweet naming both candidates counts fully for each under
    ``both="full"`` and for neither under ``both="drop"``. Rows are sorted
    by (date, candidate); days without tweets do not appear.
    """
    if both not in BOTH_POLICIES:
        raise ValueError(f"both must be one of {BOTH_POLICIES}")
    tweets = list(corpus.tweets if isinstance(corpus, Corpus) else corpus)
    if workers <= 1 or len(tweets) <= chunksize:
        parts = [_bucket_chunk((tweets, lexicon, specs, phrases, both))]
    else:
        from concurrent.futures import ProcessPoolExecutor

        jobs = [
            (tweets[i:i + chunksize], lexicon, tuple(specs), phrases, both)
            for i in range(0, len(tweets), chunksize)
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_bucket_chunk, jobs))

    total: dict[tuple[date, int], list[int]] = defaultdict(lambda: [0, 0, 0])
    for part in parts:
        for key, (p, n, c) in part.items():
            acc = total[key]
            acc[0] += p
            acc[1] += n
            acc[2] += c
    return [DailySentiment(d, cid, *total[(d, cid)]) for d, cid in sorted(total)]


def write_daily_csv(rows: Iterable[DailySentiment], fh: TextIO) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(TIMESERIES_HEADER)
    for r in rows:
        w.writerow([r.date.isoformat(), r.candidate_id, r.positive, r.negative, r.tweet_count])


def daily_csv(rows: Iterable[DailySentiment]) -> str:
    buf = io.StringIO()
    write_daily_csv(rows, buf)
    return buf.getvalue()


def read_daily_csv(fh: TextIO) -> list[DailySentiment]:
    out = []
    for row in csv.DictReader(fh):
        out.append(DailySentiment(
            date.fromisoformat(row["date"]),
            int(row["candidate"]),
            int(row["positive"]),
            int(row["negative"]),
            int(row["tweet_count"]),
        ))
    return out


def plot_daily_svg(rows: Sequence[DailySentiment], path, labels: dict[int, str] | None = None) -> None:
    """Line chart of positive and negative sentiment per candidate, as SVG."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = labels or {1: "candidate 1", 2: "candidate 2"}
    plt.rcParams["svg.hashsalt"] = "tweetcast"
    fig, ax = plt.subplots(figsize=(10, 4.5))
    for cid, color in ((1, "tab:blue"), (2, "tab:red")):
        sub = [r for r in rows if r.candidate_id == cid]
        days = [r.date for r in sub]
        ax.plot(days, [r.positive for r in sub], color=color, label=f"{labels[cid]} positive")
        ax.plot(days, [r.negative for r in sub], color=color, linestyle="--",
                label=f"{labels[cid]} negative")
    ax.set_ylabel("summed valence")
    ax.legend(loc="upper left", fontsize="small")
    fig.autofmt_xdate()
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
