"""Synthetic tweet corpora with a planted twitter-support split, and a
deliberately naive reference pipeline that serves as an oracle."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from datetime import date, datetime, timedelta, timezone
from typing import Iterable, Sequence

import numpy as np

from .corpus import CandidateSpec
from .lexicon import Lexicon

RNG_ALGORITHM = "numpy.random.PCG64"

POSITIVE_VOCAB = ("good", "great", "love", "win", "hope", "support", "best", "strong")
NEGATIVE_VOCAB = ("bad", "hate", "fail", "worst", "wrong", "terrible", "weak", "liar")
FILLERS = (
    "watching the debate tonight",
    "on the campaign trail",
    "rally in ohio",
    "news about",
    "election2012",
    "what do you think of",
)


class SynthError(ValueError):
    pass


@dataclass(frozen=True)
class SynthSpec:
    planted_e: tuple[float, float] = (0.5, 0.5)
    n_tweets: int = 1000
    start: date = date(2012, 8, 12)
    end: date = date(2012, 10, 31)
    seed: int = 0
    positive_vocab: tuple[str, ...] = POSITIVE_VOCAB
    negative_vocab: tuple[str, ...] = NEGATIVE_VOCAB
    candidate_names: tuple[str, str] = ("Obama", "Romney")
    positive_rate: float = 0.5

    def __post_init__(self):
        e1, e2 = self.planted_e
        if not (0.0 < e1 < 1.0 and 0.0 < e2 < 1.0) or abs(e1 + e2 - 1.0) > 1e-12:
            raise SynthError(f"planted_e {self.planted_e} must be in (0, 1) and sum to 1")
        if not isinstance(self.n_tweets, int) or self.n_tweets < 0:
            raise SynthError(f"n_tweets must be a nonnegative integer, got {self.n_tweets!r}")
        if self.end < self.start:
            raise SynthError("end date precedes start date")
        if not 0 <= self.seed < 2**64:
            raise SynthError("seed must fit in 64 bits")
        if not 0.0 < self.positive_rate < 1.0:
            raise SynthError("positive_rate must be in (0, 1)")
        if not self.positive_vocab or not self.negative_vocab:
            raise SynthError("vocabularies must be nonempty")

    @classmethod
    def from_dict(cls, d: dict) -> SynthSpec:
        d = dict(d)
        known = set(cls.__dataclass_fields__)
        unknown = set(d) - known
        if unknown:
            raise SynthError(f"unknown synth spec keys {sorted(unknown)}")
        for key in ("start", "end"):
            if key in d and isinstance(d[key], str):
                d[key] = date.fromisoformat(d[key])
        for key in ("planted_e", "positive_vocab", "negative_vocab", "candidate_names"):
            if key in d:
                d[key] = tuple(d[key])
        if "planted_e" in d and len(d["planted_e"]) == 1:
            d["planted_e"] = (d["planted_e"][0], 1.0 - d["planted_e"][0])
        try:
            return cls(**d)
        except TypeError as exc:
            raise SynthError(str(exc)) from None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["start"], d["end"] = self.start.isoformat(), self.end.isoformat()
        return {k: list(v) if isinstance(v, tuple) else v for k, v in d.items()}

    def candidate_specs(self) -> tuple[CandidateSpec, CandidateSpec]:
        return tuple(CandidateSpec(j + 1, (name.lower(),))
                     for j, name in enumerate(self.candidate_names))


def check_vocab(spec: SynthSpec, lexicon: Lexicon) -> None:
    for words, sign in ((spec.positive_vocab, 1), (spec.negative_vocab, -1)):
        for w in words:
            v = lexicon.get(w)
            if v is None:
                raise SynthError(f"vocabulary token {w!r} not in lexicon")
            if v * sign <= 0:
                raise SynthError(f"vocabulary token {w!r} has valence {v}, wrong sign")


def metadata(spec: SynthSpec) -> dict:
    return {"rng": RNG_ALGORITHM, "seed": spec.seed, "planted_e": list(spec.planted_e),
            "n_tweets": spec.n_tweets, "spec": spec.to_dict()}


def generate_corpus(spec: SynthSpec, lexicon: Lexicon) -> str:
    """JSON Lines tweets naming exactly one candidate each.

    Every tweet carries one lexicon word. Positive tweets go to candidate 1
    with probability ``planted_e[0]``; negative tweets are split evenly.
    Since both candidates draw positive words from the same distribution,
    the positive-share estimate converges to the planted split.

    Only uniform doubles are drawn from the generator, so output depends on
    the PCG64 stream alone and is identical across platforms.
    """
    check_vocab(spec, lexicon)
    n = spec.n_tweets
    if n == 0:
        return ""
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    u = rng.random((n, 5))
    e1 = spec.planted_e[0]
    t0 = datetime(spec.start.year, spec.start.month, spec.start.day, tzinfo=timezone.utc)
    span = ((spec.end - spec.start).days + 1) * 86400
    pos_v, neg_v = spec.positive_vocab, spec.negative_vocab
    names = spec.candidate_names

    lines = []
    for i in range(n):
        positive = u[i, 0] < spec.positive_rate
        who = 0 if u[i, 1] < (e1 if positive else 0.5) else 1
        vocab = pos_v if positive else neg_v
        word = vocab[min(int(u[i, 2] * len(vocab)), len(vocab) - 1)]
        ts = t0 + timedelta(seconds=min(int(u[i, 3] * span), span - 1))
        filler = FILLERS[min(int(u[i, 4] * len(FILLERS)), len(FILLERS) - 1)]
        lines.append(json.dumps({
            "id": f"synth-{spec.seed}-{i:08d}",
            "created_at": ts.strftime("%Y-%m-%dT%H:%M:%SZ"),
            "text": f"{filler} {names[who]} {word}",
            "lang": "en",
        }, ensure_ascii=False))
    return "\n".join(lines) + "\n"


# --- reference pipeline -------------------------------------------------
# Shares no code with lexicon/corpus/model on purpose.

def _ref_tokens(text: str) -> list[str]:
    out, cur = [], []
    for ch in text.lower():
        if ch == "’":
            ch = "'"
        if ch.isalnum() or ch == "'":
            cur.append(ch)
        elif cur:
            out.append("".join(cur))
            cur = []
    if cur:
        out.append("".join(cur))
    return out


def _ref_valid(rec) -> bool:
    if not isinstance(rec, dict):
        return False
    tid = rec.get("id")
    if not ((isinstance(tid, str) and tid) or (type(tid) is int)):
        return False
    text = rec.get("text")
    if not isinstance(text, str) or text.strip() == "":
        return False
    lang = rec.get("lang")
    if lang is not None and not isinstance(lang, str):
        return False
    ts = rec.get("created_at")
    if not isinstance(ts, str):
        return False
    ts = ts.strip()
    if ts.endswith(("Z", "z")):
        ts = ts[:-1] + "+00:00"
    try:
        parsed = datetime.fromisoformat(ts)
    except ValueError:
        return False
    return parsed.utcoffset() is not None


def reference_pipeline(
    tweets: str | Iterable[str],
    lexicon: Lexicon,
    specs: Sequence[CandidateSpec],
    strategy: str = "positive-share",
    smoothing: bool = True,
    english_only: bool = True,
    phrases: bool = False,
    both: str = "full",
) -> tuple[float, float]:
    """Twitter support straight from raw JSON Lines, in one naive pass."""
    lines = tweets.split("\n") if isinstance(tweets, str) else tweets
    single: dict[str, int] = {}
    multi: list[tuple[list[str], int]] = []
    for term, valence in lexicon.entries.items():
        toks = _ref_tokens(term)
        if len(toks) == 1:
            single[toks[0]] = valence
        elif toks:
            multi.append((toks, valence))
    longest = max((len(t) for t, _ in multi), default=1)
    terms = {s.candidate_id: list(s.match_terms) for s in specs}

    pos = {1: 0, 2: 0}
    neg = {1: 0, 2: 0}
    vol = {1: 0, 2: 0}
    seen_ids: set[str] = set()
    for line in lines:
        if line.strip() == "":
            continue
        try:
            rec = json.loads(line)
        except ValueError:
            continue
        if not _ref_valid(rec):
            continue
        tid = str(rec["id"])
        if tid in seen_ids:
            continue
        seen_ids.add(tid)
        if english_only and rec.get("lang") is not None and rec["lang"] != "en":
            continue
        toks = _ref_tokens(rec["text"])
        who = [j for j in (1, 2) if any(t in toks for t in terms[j])]
        if not who or (both == "drop" and len(who) == 2):
            continue

        p = n = 0
        i = 0
        while i < len(toks):
            hit, width = None, 1
            if phrases:
                for size in range(longest, 1, -1):
                    for ptoks, v in multi:
                        if len(ptoks) == size and toks[i:i + size] == ptoks:
                            hit, width = v, size
                            break
                    if hit is not None:
                        break
            if hit is None:
                hit = single.get(toks[i])
            if hit is not None:
                if hit > 0:
                    p += hit
                else:
                    n += -hit
            i += width
        for j in who:
            pos[j] += p
            neg[j] += n
            vol[j] += 1

    if strategy == "positive-share":
        a, b = pos[1], pos[2]
    elif strategy == "net-share":
        a, b = max(pos[1] - neg[1], 0), max(pos[2] - neg[2], 0)
    elif strategy == "volume-share":
        a, b = vol[1], vol[2]
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    if smoothing:
        return (1 + a) / (2 + a + b), (1 + b) / (2 + a + b)
    if a + b == 0:
        raise ValueError("no signal for either candidate; enable smoothing or supply data")
    return a / (a + b), b / (a + b)


def main_pipeline(
    tweets: str | Iterable[str],
    lexicon: Lexicon,
    specs: Sequence[CandidateSpec],
    strategy: str = "positive-share",
    smoothing: bool = True,
    english_only: bool = True,
    phrases: bool = False,
    both: str = "full",
    workers: int = 1,
):
    """The production path (ingest, bucket, estimate) for the same inputs."""
    from .corpus import bucket_by_day, ingest_tweets
    from .model import estimate_twitter_support

    lines = tweets.split("\n") if isinstance(tweets, str) else tweets
    corpus = ingest_tweets(lines, specs, english_only=english_only, allow_empty=True)
    daily = bucket_by_day(corpus, lexicon, specs, phrases=phrases, both=both, workers=workers)
    return estimate_twitter_support(daily, strategy, smoothing)
