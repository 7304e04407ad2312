"""Census-corrected twitter support models.

Each state's electorate is split into twitter users, internet users who
do not use twitter, and everyone else. Model 1 lets twitter sentiment speak
for the whole online population; model 2 confines it to twitter users and
gives every other segment its prior party support.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, Mapping, Sequence

from .census import StateProfile, StateTable
from .corpus import DailySentiment

STRATEGIES = ("positive-share", "net-share", "volume-share")
WEIGHT_MODES = ("normalized", "literal")
MODELS = (1, 2)
TIE_EPS = 1e-12
DEFAULT_ALIGNMENT: Mapping[int, str] = {1: "dem", 2: "rep"}


class ModelError(ValueError):
    pass


@dataclass(frozen=True)
class TwitterSupport:
    e: tuple[float, float]
    strategy: str = "positive-share"
    smoothing: bool = True
    counts: tuple[int, int] | None = None

    def __getitem__(self, candidate: int) -> float:
        return self.e[candidate - 1]

    @classmethod
    def fixed(cls, e1: float) -> TwitterSupport:
        """Support given directly rather than estimated from tweets."""
        if not 0.0 <= e1 <= 1.0:
            raise ModelError(f"E_1 = {e1} outside [0, 1]")
        return cls((e1, 1.0 - e1), strategy="fixed", smoothing=False)


def support_from_counts(counts: Sequence[int], strategy: str = "positive-share",
                        smoothing: bool = True) -> TwitterSupport:
    a, b = counts
    if a < 0 or b < 0:
        raise ModelError(f"negative counts {counts}")
    if smoothing:
        total = 2 + a + b
        e = ((1 + a) / total, (1 + b) / total)
    else:
        total = a + b
        if total == 0:
            raise ModelError(
                f"no {strategy} signal for either candidate; enable smoothing or supply data"
            )
        e = (a / total, b / total)
    return TwitterSupport(e, strategy, smoothing, (a, b))


def strategy_counts(daily: Iterable[DailySentiment], strategy: str) -> tuple[int, int]:
    """Campaign totals per candidate for the chosen strategy."""
    if strategy not in STRATEGIES:
        raise ModelError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    pos = [0, 0]
    neg = [0, 0]
    vol = [0, 0]
    for row in daily:
        if row.candidate_id not in (1, 2):
            raise ModelError(f"unknown candidate {row.candidate_id}")
        k = row.candidate_id - 1
        pos[k] += row.positive
        neg[k] += row.negative
        vol[k] += row.tweet_count
    if strategy == "positive-share":
        return pos[0], pos[1]
    if strategy == "net-share":
        return max(pos[0] - neg[0], 0), max(pos[1] - neg[1], 0)
    return vol[0], vol[1]


def estimate_twitter_support(daily: Iterable[DailySentiment], strategy: str = "positive-share",
                             smoothing: bool = True) -> TwitterSupport:
    """Share of twitter support per candidate from campaign-total sentiment.

    positive-share uses summed positive valence, net-share the positive part
    of (positive - negative), volume-share the tweet counts. Add-one
    smoothing puts one pseudo-count on each side.
    """
    return support_from_counts(strategy_counts(daily, strategy), strategy, smoothing)


@dataclass(frozen=True)
class StateForecast:
    state: str
    share: tuple[float, float]
    winner: int  # 0 marks a tie

    @property
    def margin(self) -> float:
        return abs(self.share[0] - self.share[1])

    @classmethod
    def from_shares(cls, state: str, s1: float, s2: float) -> StateForecast:
        return cls(state, (s1, s2), _winner(s1, s2))


def _winner(s1: float, s2: float) -> int:
    if abs(s1 - s2) < TIE_EPS:
        return 0
    return 1 if s1 > s2 else 2


def _check_support(e: TwitterSupport) -> None:
    if abs(e.e[0] + e.e[1] - 1.0) > 1e-12 or not all(0.0 <= x <= 1.0 for x in e.e):
        raise ModelError(f"twitter support {e.e} is not a normalized pair")


def segment_share(model_id: int, weight_mode: str, twitter: float, internet: float,
                  e: float, prior: float) -> float:
    """One candidate's support in one state.

    normalized mode keeps the three segments summing to one; literal mode
    uses (1 - internet) for the offline segment exactly as the formulas are
    usually written, so a state's two shares add up to 1 + twitter.
    """
    if model_id == 1:
        if weight_mode == "literal":
            return twitter * e + internet * e + (1.0 - internet) * prior
        online = twitter + internet
        return online * e + (1.0 - online) * prior
    if model_id == 2:
        if weight_mode == "literal":
            return twitter * e + internet * prior + (1.0 - internet) * prior
        return twitter * e + (1.0 - twitter) * prior
    raise ModelError(f"unknown model {model_id!r}; choose from {MODELS}")


def state_support(profile: StateProfile, e: TwitterSupport, model_id: int = 2,
                  weight_mode: str = "normalized",
                  alignment: Mapping[int, str] = DEFAULT_ALIGNMENT) -> StateForecast:
    if weight_mode not in WEIGHT_MODES:
        raise ModelError(f"unknown weight mode {weight_mode!r}; choose from {WEIGHT_MODES}")
    if model_id not in MODELS:
        raise ModelError(f"unknown model {model_id!r}; choose from {MODELS}")
    _check_support(e)
    s1, s2 = (
        segment_share(model_id, weight_mode, profile.twitter_frac,
                      profile.internet_not_twitter_frac, e[j],
                      profile.prior_share[alignment[j]])
        for j in (1, 2)
    )
    return StateForecast.from_shares(profile.state, s1, s2)


def electoral_college(states: Sequence[StateForecast], table: StateTable | Mapping[str, int]):
    """Winner-take-all allocation.

    Returns ``(counts, shares, tied_ev)``. Votes of tied states go to
    nobody; shares are over all electoral votes in `table`.
    """
    if isinstance(table, StateTable):
        ev = {p.state: p.electoral_votes for p in table}
    else:
        ev = dict(table)
    missing = [s.state for s in states if s.state not in ev]
    if missing:
        raise ModelError(f"states missing from apportionment: {missing}")
    counts = [0, 0]
    tied = 0
    for s in states:
        if s.winner == 0:
            tied += ev[s.state]
        else:
            counts[s.winner - 1] += ev[s.state]
    total = sum(ev.values())
    shares = (counts[0] / total, counts[1] / total) if total else (0.0, 0.0)
    return (counts[0], counts[1]), shares, tied


@dataclass
class Forecast:
    model_id: int | str
    weight_mode: str
    states: list[StateForecast]
    popular_vote: tuple[float, float]
    electoral_votes: tuple[int, int]
    electoral_share: tuple[float, float]
    tied_ev: int
    total_ev: int
    support: TwitterSupport | None = None
    notes: list[str] = field(default_factory=list)

    def shares(self, candidate: int = 1) -> dict[str, float]:
        return {s.state: s.share[candidate - 1] for s in self.states}

    def to_dict(self) -> dict:
        sup = self.support
        return {
            "model_id": self.model_id,
            "weight_mode": self.weight_mode,
            "e_strategy": sup.strategy if sup else None,
            "smoothing": sup.smoothing if sup else None,
            "e": list(sup.e) if sup else None,
            "states": [
                {"state": s.state, "share_1": s.share[0], "share_2": s.share[1],
                 "winner": s.winner, "margin": s.margin}
                for s in self.states
            ],
            "popular_vote": list(self.popular_vote),
            "electoral_votes": list(self.electoral_votes),
            "electoral_share": list(self.electoral_share),
            "tied_ev": self.tied_ev,
            "total_ev": self.total_ev,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        """Table in the layout of the published state tables, percentages
        rounded half-up to two decimals."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["state", "share_1_pct", "share_2_pct", "winner", "margin_pct"])
        for s in self.states:
            w.writerow([s.state, pct(s.share[0]), pct(s.share[1]), s.winner, pct(s.margin)])
        w.writerow(["Popular Vote", pct(self.popular_vote[0]), pct(self.popular_vote[1]), "", ""])
        w.writerow(["Electoral Vote", pct(self.electoral_share[0]),
                    pct(self.electoral_share[1]), "", ""])
        return buf.getvalue()


def pct(x: float) -> str:
    """Fraction -> percent string with two decimals, rounding half up."""
    d = Decimal(repr(round(x * 100.0, 9)))
    return str(d.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def aggregate(states: list[StateForecast], table: StateTable, model_id, weight_mode: str,
              support: TwitterSupport | None = None) -> Forecast:
    weights = {p.state: p.turnout_weight for p in table}
    wsum = math.fsum(weights[s.state] for s in states)
    if wsum <= 0:
        raise ModelError("turnout weights sum to zero")
    popular = tuple(
        math.fsum(weights[s.state] * s.share[j] for s in states) / wsum for j in (0, 1)
    )
    counts, shares, tied = electoral_college(states, table)
    notes = []
    if table.equal_weights:
        notes.append("popular vote uses equal state weights (no turnout weights supplied)")
    if weight_mode == "literal":
        notes.append("literal segment weights: state shares sum to 1 + twitter_frac")
    return Forecast(model_id, weight_mode, states, popular, counts, shares, tied,
                    table.total_electoral_votes, support, notes)


def forecast(table: StateTable, e: TwitterSupport, model_id: int = 2,
             weight_mode: str = "normalized",
             alignment: Mapping[int, str] = DEFAULT_ALIGNMENT) -> Forecast:
    """Run one model over every state and aggregate.

    The popular vote is the turnout-weighted mean of state shares.
    """
    states = [state_support(p, e, model_id, weight_mode, alignment) for p in table]
    return aggregate(states, table, model_id, weight_mode, e)


def baseline_forecast(table: StateTable,
                      alignment: Mapping[int, str] = DEFAULT_ALIGNMENT) -> Forecast:
    """Prior support carried over unchanged, aggregated like a model."""
    states = [
        StateForecast.from_shares(p.state, p.prior_share[alignment[1]],
                                  p.prior_share[alignment[2]])
        for p in table
    ]
    return aggregate(states, table, "baseline", "normalized")


def two_party_share(a: float, b: float) -> tuple[float, float]:
    """Renormalize two raw vote shares so they sum to one."""
    if a < 0 or b < 0:
        raise ModelError(f"shares must be nonnegative, got ({a}, {b})")
    total = a + b
    if total <= 0:
        raise ModelError("shares sum to zero")
    return a / total, b / total
